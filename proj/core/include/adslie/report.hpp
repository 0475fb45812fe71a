#ifndef ADSLIE_REPORT_HPP
#define ADSLIE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace adslie {

struct SuiteConfig {
  std::string suite;
  std::vector<int> n_range;     // empty = suite default
  int samples = 100;
  std::uint64_t seed = 1;
  double tol = 0.0;             // 0 = per-check defaults
  std::string format = "text";  // "text" | "json"
};

struct CheckResult {
  enum class Status { Pass, Fail, Error };

  std::string name;
  Status status = Status::Pass;
  std::string observed;
  std::string expected;
  double max_err = 0.0;
};

struct Report {
  SuiteConfig config;
  std::vector<CheckResult> checks;

  bool overall() const {
    for (const CheckResult& c : checks)
      if (c.status != CheckResult::Status::Pass) return false;
    return true;
  }
};

/// Serialize with stable key order; floats carry 17 significant digits so
/// reports are byte-identical for a fixed config.
std::string emit_report_json(const Report& report);
std::string emit_report_text(const Report& report);
std::string emit_report(const Report& report, const std::string& format);

/// Format a double with 17 significant digits.
std::string format_double(double x);

}  // namespace adslie

#endif
