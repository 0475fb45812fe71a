#include "adslie/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace adslie {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using std::complex;

constexpr complex<double> kI(0.0, 1.0);

}  // namespace

std::string root_to_string(AlgebraTag tag, RootLabel r) {
  std::ostringstream os;
  if (tag == AlgebraTag::SU1n || tag == AlgebraTag::U1n) {
    if (r.c1 == 1) os << "alpha";
    else if (r.c1 == -1) os << "-alpha";
    else os << r.c1 << "alpha";
    return os.str();
  }
  auto term = [&](int c, const char* name, bool first) {
    if (c == 0) return std::string();
    std::ostringstream t;
    if (c < 0) t << "-";
    else if (!first) t << "+";
    if (std::abs(c) != 1) t << std::abs(c);
    t << name;
    return t.str();
  };
  std::string s = term(r.c1, "a1", true);
  s += term(r.c2, "a2", s.empty());
  return s.empty() ? "0" : s;
}

const RootSpace& RootDecomposition::space(RootLabel label) const {
  for (const RootSpace& s : spaces)
    if (s.label == label) return s;
  throw ArgumentError("RootDecomposition: unknown root " + root_to_string(tag, label));
}

bool RootDecomposition::has_root(RootLabel label) const {
  for (const RootSpace& s : spaces)
    if (s.label == label) return true;
  return false;
}

std::vector<RootLabel> RootDecomposition::positive_roots() const {
  std::vector<RootLabel> out;
  for (const RootSpace& s : spaces)
    if (s.label.c1 > 0 || (s.label.c1 == 0 && s.label.c2 > 0)) out.push_back(s.label);
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement so2n_flat_element(double a, double b, int n) {
  const int d = n + 2;
  MatrixXcd m = MatrixXcd::Zero(d, d);
  m(0, 2) = a;
  m(2, 0) = a;
  m(1, 3) = b;
  m(3, 1) = b;
  return AlgebraElement(AlgebraTag::SO2n, n, m);
}

namespace {

AlgebraElement su1n_flat_element(AlgebraTag tag, int n) {
  const int d = n + 1;
  MatrixXcd m = MatrixXcd::Zero(d, d);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return AlgebraElement(tag, n, m);
}

}  // namespace

std::vector<AlgebraElement> maximal_flat(AlgebraTag tag, int n) {
  switch (tag) {
    case AlgebraTag::SO2n:
      return {so2n_flat_element(1, 0, n), so2n_flat_element(0, 1, n)};
    case AlgebraTag::SU1n:
      return {su1n_flat_element(tag, n)};
    default:
      throw TagError("maximal_flat: unsupported algebra");
  }
}

namespace {

// Values of the simple roots on the stored flat basis. For so(2,n):
// alpha1(H_{a,b}) = -a+b, alpha2(H_{a,b}) = a, evaluated on H_{1,0}, H_{0,1}.
MatrixXd simple_root_values(AlgebraTag tag) {
  if (tag == AlgebraTag::SO2n) {
    MatrixXd m(2, 2);
    m << -1, 1,   // alpha1 on (H1, H2)
          1, 0;   // alpha2 on (H1, H2)
    return m.transpose();  // rows: flat element, cols: simple root
  }
  MatrixXd m(1, 1);
  m << 1;  // alpha on the e1 generator
  return m;
}

struct Cluster {
  VectorXd flat_values;
  std::vector<int> members;
};

std::shared_ptr<const RootDecomposition> compute_root_decomposition(AlgebraTag tag, int n,
                                                                    double tol) {
  if (tag == AlgebraTag::SO2n && n < 3)
    throw ArgumentError("root_decomposition: so(2,n) needs n >= 3");
  if (tag == AlgebraTag::SU1n && n < 2)
    throw ArgumentError("root_decomposition: su(1,n) needs n >= 2");
  if (tag == AlgebraTag::U1n)
    throw TagError("root_decomposition: use su(1,n); u(1,n) adds only the center");

  const std::vector<AlgebraElement> flat = maximal_flat(tag, n);
  // Irrational ratio so all eight B2 eigenvalues stay separated.
  const AlgebraElement h_generic =
      tag == AlgebraTag::SO2n ? so2n_flat_element(1.0, std::sqrt(2.0), n) : flat[0];

  const std::vector<AlgebraElement> basis = standard_basis(tag, n);
  const int dim = static_cast<int>(basis.size());

  // ad(H) is symmetric in a Frobenius-orthonormal basis (H is hermitian),
  // so the eigenvectors come out btheta-orthonormal up to one global scale.
  auto coords = [&](const MatrixXcd& m) {
    VectorXd c(dim);
    for (int i = 0; i < dim; ++i)
      c[i] = (m.cwiseProduct(basis[i].mat.conjugate())).sum().real();
    return c;
  };
  auto assemble = [&](const VectorXd& c) {
    MatrixXcd m = MatrixXcd::Zero(basis[0].mat.rows(), basis[0].mat.cols());
    for (int i = 0; i < dim; ++i) m += c[i] * basis[i].mat;
    return m;
  };
  auto ad_matrix = [&](const AlgebraElement& h) {
    MatrixXd ad(dim, dim);
    for (int i = 0; i < dim; ++i)
      ad.col(i) = coords(h.mat * basis[i].mat - basis[i].mat * h.mat);
    return ad;
  };

  const MatrixXd ad_gen = ad_matrix(h_generic);
  if ((ad_gen - ad_gen.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw NumericError("root_decomposition: ad matrix lost symmetry");
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(ad_gen);

  // cluster eigenvalues at absolute tolerance tol
  std::vector<Cluster> clusters;
  std::vector<double> values;
  for (int i = 0; i < dim; ++i) {
    const double ev = es.eigenvalues()[i];
    bool placed = false;
    for (size_t c = 0; c < values.size(); ++c)
      if (std::abs(ev - values[c]) <= tol) {
        clusters[c].members.push_back(i);
        placed = true;
        break;
      }
    if (!placed) {
      values.push_back(ev);
      clusters.push_back({VectorXd(), {i}});
    }
  }
  // inter-cluster gap guard
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (size_t c = 1; c < sorted.size(); ++c)
    if (sorted[c] - sorted[c - 1] < 1e3 * tol)
      throw DegeneracyError("root_decomposition: eigenvalue clusters too close");

  const std::vector<MatrixXd> flat_ads = [&] {
    std::vector<MatrixXd> ads;
    for (const AlgebraElement& h : flat) ads.push_back(ad_matrix(h));
    return ads;
  }();
  const MatrixXd simple_vals = simple_root_values(tag);

  auto out = std::make_shared<RootDecomposition>();
  out->tag = tag;
  out->n = n;
  out->flat = flat;

  for (size_t c = 0; c < clusters.size(); ++c) {
    std::vector<AlgebraElement> cluster_basis;
    for (int idx : clusters[c].members)
      cluster_basis.emplace_back(tag, n, assemble(es.eigenvectors().col(idx)));

    // covector values on the flat, recovered from the first eigenvector
    VectorXd lam(static_cast<int>(flat.size()));
    {
      const VectorXd v = es.eigenvectors().col(clusters[c].members[0]);
      for (size_t f = 0; f < flat_ads.size(); ++f)
        lam[static_cast<int>(f)] = v.dot(flat_ads[f] * v);  // Rayleigh quotient, |v| = 1
    }

    if (std::abs(values[c]) <= tol) {
      // zero space: theta preserves it, so split each vector and
      // orthonormalize the k-parts into k0 (the eigensolver basis may mix
      // k0 and the flat)
      std::vector<MatrixXcd> k_parts;
      for (const AlgebraElement& x : cluster_basis) {
        auto [k_part, p_part] = cartan_split(x);
        (void)p_part;
        MatrixXcd m = k_part.mat;
        for (const MatrixXcd& b : k_parts)
          m -= (m.cwiseProduct(b.conjugate())).sum().real() * b;
        const double norm = std::sqrt((m.cwiseProduct(m.conjugate())).sum().real());
        if (norm > 1e-7) k_parts.push_back(m / norm);
      }
      for (const MatrixXcd& m : k_parts) out->k0.emplace_back(tag, n, m);
      const int a_dim = static_cast<int>(clusters[c].members.size() - k_parts.size());
      if (a_dim != static_cast<int>(flat.size()))
        throw DegeneracyError("root_decomposition: centralizer does not split as k0 + a");
      continue;
    }

    // integer coordinates in the simple-root basis by least squares
    const VectorXd coeffs = simple_vals.colPivHouseholderQr().solve(lam);
    RootLabel label;
    label.c1 = static_cast<int>(std::lround(coeffs[0]));
    label.c2 = coeffs.size() > 1 ? static_cast<int>(std::lround(coeffs[1])) : 0;
    VectorXd rounded(coeffs.size());
    rounded[0] = label.c1;
    if (coeffs.size() > 1) rounded[1] = label.c2;
    if ((simple_vals * rounded - lam).cwiseAbs().maxCoeff() > 1e-6)
      throw DegeneracyError("root_decomposition: root is not integral in the simple basis");

    RootSpace space;
    space.label = label;
    space.flat_values = lam;
    space.basis = std::move(cluster_basis);
    out->spaces.push_back(std::move(space));
  }

  std::sort(out->spaces.begin(), out->spaces.end(),
            [](const RootSpace& a, const RootSpace& b) { return a.label < b.label; });

  int total = out->zero_dim();
  for (const RootSpace& s : out->spaces) total += s.multiplicity();
  if (total != dim)
    throw NumericError("root_decomposition: dimensions do not add up");
  return out;
}

}  // namespace

const RootDecomposition& root_decomposition(AlgebraTag tag, int n, double tol) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const RootDecomposition>> memo;
  const std::pair<int, int> key{static_cast<int>(tag), n};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  auto dec = compute_root_decomposition(tag, n, tol);  // possibly redundant, never blocking
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = memo.emplace(key, std::move(dec));
  return *it->second;
}

namespace {

// (2|2|n-2) block pattern generators of the positive so(2,n) root spaces.
AlgebraElement so2n_alpha1_generator(int n) {
  const int d = n + 2;
  MatrixXcd m = MatrixXcd::Zero(d, d);
  m(0, 1) = 1;  m(1, 0) = -1;
  m(0, 3) = -1; m(1, 2) = -1;
  m(2, 1) = -1; m(3, 0) = -1;
  m(2, 3) = 1;  m(3, 2) = -1;
  return AlgebraElement(AlgebraTag::SO2n, n, m);
}

AlgebraElement so2n_alpha2_generator(int n, int j) {
  const int d = n + 2;
  const int col = 4 + j;
  MatrixXcd m = MatrixXcd::Zero(d, d);
  m(0, col) = 1; m(col, 0) = 1;
  m(2, col) = 1; m(col, 2) = -1;
  return AlgebraElement(AlgebraTag::SO2n, n, m);
}

AlgebraElement so2n_alpha1_plus_alpha2_generator(int n, int j) {
  const int d = n + 2;
  const int col = 4 + j;
  MatrixXcd m = MatrixXcd::Zero(d, d);
  m(1, col) = 1; m(col, 1) = 1;
  m(3, col) = 1; m(col, 3) = -1;
  return AlgebraElement(AlgebraTag::SO2n, n, m);
}

AlgebraElement so2n_alpha1_plus_2alpha2_generator(int n) {
  const int d = n + 2;
  MatrixXcd m = MatrixXcd::Zero(d, d);
  m(0, 1) = 1;  m(1, 0) = -1;
  m(0, 3) = -1; m(1, 2) = 1;
  m(2, 1) = 1;  m(3, 0) = -1;
  m(2, 3) = -1; m(3, 2) = 1;
  return AlgebraElement(AlgebraTag::SO2n, n, m);
}

// g_alpha of su(1,n): parametrized by v in C^{n-1} sitting on coordinates
// e2..en, with the paired entries in row/column 1.
AlgebraElement su1n_alpha_generator(int n, int j, bool imaginary) {
  const int d = n + 1;
  const int col = 2 + j;
  const complex<double> v = imaginary ? kI : complex<double>(1.0, 0.0);
  MatrixXcd m = MatrixXcd::Zero(d, d);
  m(0, col) = std::conj(v);
  m(col, 0) = v;
  m(1, col) = std::conj(v);
  m(col, 1) = -v;
  return AlgebraElement(AlgebraTag::SU1n, n, m);
}

AlgebraElement su1n_2alpha_generator(int n) {
  const int d = n + 1;
  MatrixXcd m = MatrixXcd::Zero(d, d);
  m(0, 0) = kI;
  m(0, 1) = -kI;
  m(1, 0) = kI;
  m(1, 1) = -kI;
  return AlgebraElement(AlgebraTag::SU1n, n, m);
}

}  // namespace

std::vector<AlgebraElement> closed_form_root_space(AlgebraTag tag, int n, RootLabel root) {
  const bool negative = root.c1 < 0 || (root.c1 == 0 && root.c2 < 0);
  if (negative) {
    std::vector<AlgebraElement> pos = closed_form_root_space(tag, n, root.negated());
    for (AlgebraElement& x : pos) x = cartan_theta(x);
    return pos;
  }
  if (tag == AlgebraTag::SO2n) {
    if (root == so_alpha1()) return {so2n_alpha1_generator(n)};
    if (root == so_alpha1_plus_2alpha2()) return {so2n_alpha1_plus_2alpha2_generator(n)};
    if (root == so_alpha2()) {
      std::vector<AlgebraElement> out;
      for (int j = 0; j < n - 2; ++j) out.push_back(so2n_alpha2_generator(n, j));
      return out;
    }
    if (root == so_alpha1_plus_alpha2()) {
      std::vector<AlgebraElement> out;
      for (int j = 0; j < n - 2; ++j) out.push_back(so2n_alpha1_plus_alpha2_generator(n, j));
      return out;
    }
    throw ArgumentError("closed_form_root_space: unknown so(2,n) root " +
                        root_to_string(tag, root));
  }
  if (tag == AlgebraTag::SU1n) {
    if (root == su_alpha()) {
      std::vector<AlgebraElement> out;
      for (int j = 0; j < n - 1; ++j) {
        out.push_back(su1n_alpha_generator(n, j, false));
        out.push_back(su1n_alpha_generator(n, j, true));
      }
      return out;
    }
    if (root == su_2alpha()) return {su1n_2alpha_generator(n)};
    throw ArgumentError("closed_form_root_space: unknown su(1,n) root " +
                        root_to_string(tag, root));
  }
  throw TagError("closed_form_root_space: unsupported algebra");
}

IwasawaParts iwasawa_parts(const RootDecomposition& dec) {
  std::vector<AlgebraElement> nil;
  for (const RootLabel& label : dec.positive_roots()) {
    const RootSpace& s = dec.space(label);
    nil.insert(nil.end(), s.basis.begin(), s.basis.end());
  }
  return IwasawaParts{Subalgebra(dec.tag, dec.n, dec.k0),
                      Subalgebra(dec.tag, dec.n, dec.flat),
                      Subalgebra(dec.tag, dec.n, nil)};
}

int nilpotency_degree(const Subalgebra& s, double tol) {
  // lower central series by bracket spans; each stage is pruned to an
  // independent subset so the term count stays bounded
  const double scale = [&] {
    double m = 0.0;
    for (const AlgebraElement& x : s.basis()) m = std::max(m, flatten(x.mat).norm());
    return std::max(m, 1.0);
  }();
  std::vector<AlgebraElement> current = s.basis();
  int step = 1;
  const int max_steps = s.dim() + 1;
  while (!current.empty() && step <= max_steps) {
    std::vector<AlgebraElement> next;
    Eigen::MatrixXd span;
    for (const AlgebraElement& x : s.basis())
      for (const AlgebraElement& y : current) {
        AlgebraElement b = bracket(x, y);
        Eigen::VectorXd f = flatten(b.mat);
        if (f.norm() <= tol * scale) continue;
        if (!next.empty() && span_residual(span, f) <= 1e-9) continue;
        next.push_back(std::move(b));
        span.conservativeResize(f.size(), static_cast<int>(next.size()));
        span.col(static_cast<int>(next.size()) - 1) = f;
      }
    if (next.empty()) return step;
    current = std::move(next);
    ++step;
  }
  throw NotNilpotentError("nilpotency_degree: lower central series does not vanish");
}

}  // namespace adslie
