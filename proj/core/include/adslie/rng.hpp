#ifndef ADSLIE_RNG_HPP
#define ADSLIE_RNG_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>

namespace adslie {

/// Deterministic splitmix64 stream with Box-Muller gaussians.
///
/// Every sampler in the library takes an explicit seed so that parallel
/// suites can derive independent streams via derive() without shared state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller; stdlib-distribution-free for
  /// run-to-run reproducibility of emitted reports.
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  Eigen::VectorXd gaussian_vector(int m) {
    Eigen::VectorXd v(m);
    for (int i = 0; i < m; ++i) v[i] = gaussian();
    return v;
  }

  Eigen::VectorXcd gaussian_cvector(int m) {
    Eigen::VectorXcd v(m);
    for (int i = 0; i < m; ++i) v[i] = std::complex<double>(gaussian(), gaussian());
    return v;
  }

  /// Fold extra words into a seed to derive a child stream.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
    Rng r(seed ^ (a * 0x9e3779b97f4a7c15ull) ^ (b * 0xc2b2ae3d27d4eb4full) ^
          (c * 0x165667b19e3779f9ull));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace adslie

#endif
