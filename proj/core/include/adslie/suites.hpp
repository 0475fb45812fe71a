#ifndef ADSLIE_SUITES_HPP
#define ADSLIE_SUITES_HPP

#include <string>
#include <utility>
#include <vector>

#include "adslie/report.hpp"

namespace adslie {

/// Named verification suites over the structure theory: each one packages
/// the numerical checks of one family of claims (root systems, closed-form
/// exponentials, orbit splits, foliations, parabolic structure, angles).
///
/// Unknown suite names raise UsageError. Reports are deterministic per
/// config.
Report run_suite(const SuiteConfig& config);

/// (name, what it verifies) for every suite.
std::vector<std::pair<std::string, std::string>> suite_catalog();

/// Default n values used when the config leaves n_range empty.
std::vector<int> suite_default_n(const std::string& suite);

}  // namespace adslie

#endif
