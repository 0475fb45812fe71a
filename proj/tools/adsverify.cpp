// adsverify: run the named verification suites and emit machine-readable
// reports. Exit code 0 = all checks pass, 1 = some check failed, 2 = usage.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "adslie/errors.hpp"
#include "adslie/suites.hpp"

namespace {

// "3", "3..6" or "3,4,6"
std::vector<int> parse_n_spec(const std::string& spec) {
  std::vector<int> out;
  if (spec.empty()) return out;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(spec.substr(0, dots));
    const int hi = std::stoi(spec.substr(dots + 2));
    if (hi < lo) throw adslie::UsageError("--n range is empty");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  size_t pos = 0;
  while (pos < spec.size()) {
    const auto comma = spec.find(',', pos);
    const std::string tok = spec.substr(pos, comma == std::string::npos ? spec.size() - pos
                                                                        : comma - pos);
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification CLI for Lie-theoretic orbit structure on anti-de Sitter quadrics"};
  app.require_subcommand(1);

  std::string suite;
  std::string n_spec;
  int samples = 100;
  std::uint64_t seed = 1;
  double tol = 0.0;
  std::string format = "text";

  CLI::App* verify = app.add_subcommand("verify", "run one verification suite");
  verify->add_option("--suite", suite, "suite name (see list-suites)")->required();
  verify->add_option("--n", n_spec, "dimension parameter: int, a..b range, or comma list");
  verify->add_option("--samples", samples, "random samples per sampled check");
  verify->add_option("--seed", seed, "base seed for all derived random streams");
  verify->add_option("--tol", tol, "override tolerance for residual checks (0 = defaults)");
  verify->add_option("--format", format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* list = app.add_subcommand("list-suites", "print the available suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // CLI11 prints the message
    return 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& [name, what] : adslie::suite_catalog())
        std::printf("%-22s %s\n", name.c_str(), what.c_str());
      return 0;
    }

    adslie::SuiteConfig cfg;
    cfg.suite = suite;
    cfg.n_range = parse_n_spec(n_spec);
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.tol = tol;
    cfg.format = format;

    const adslie::Report report = adslie::run_suite(cfg);
    std::cout << adslie::emit_report(report, format);
    if (format == "json") std::cout << "\n";
    return report.overall() ? 0 : 1;
  } catch (const adslie::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
