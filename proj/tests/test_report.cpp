#include <doctest.h>

#include <json.hpp>

#include "adslie/errors.hpp"
#include "adslie/report.hpp"
#include "adslie/suites.hpp"

using namespace adslie;

TEST_CASE("report overall status and emission") {
  Report r;
  r.config.suite = "demo";
  r.config.n_range = {3};
  r.config.seed = 42;
  CHECK(r.overall());  // no checks = pass

  CheckResult pass;
  pass.name = "alpha";
  pass.observed = "1";
  pass.expected = "1";
  r.checks.push_back(pass);
  CHECK(r.overall());

  CheckResult fail = pass;
  fail.name = "beta";
  fail.status = CheckResult::Status::Fail;
  r.checks.push_back(fail);
  CHECK_FALSE(r.overall());

  const std::string text = emit_report_text(r);
  CHECK(text.find("overall: fail") != std::string::npos);
  CHECK_THROWS_AS(emit_report(r, "yaml"), UsageError);
}

TEST_CASE("json output parses and keeps a stable key order") {
  Report r;
  r.config.suite = "demo";
  r.config.n_range = {3, 4};
  r.config.samples = 7;
  r.config.seed = 99;
  r.config.tol = 0.5;
  CheckResult c;
  c.name = "gamma \"quoted\"";
  c.observed = "0.25";
  c.expected = "<= 1";
  c.max_err = 0.25;
  r.checks.push_back(c);

  const std::string js = emit_report_json(r);
  const nlohmann::json parsed = nlohmann::json::parse(js);
  CHECK(parsed["suite"] == "demo");
  CHECK(parsed["n"] == std::vector<int>{3, 4});
  CHECK(parsed["seed"] == 99);
  CHECK(parsed["checks"].size() == 1);
  CHECK(parsed["checks"][0]["status"] == "pass");
  CHECK(parsed["checks"][0]["max_err"] == doctest::Approx(0.25));
  CHECK(parsed["overall"] == "pass");

  // parse-emit-parse fixpoint through a generic parser
  CHECK(nlohmann::json::parse(parsed.dump()) == parsed);

  // key order is stable: suite, n, seed, samples, tol, checks, overall
  CHECK(js.find("\"suite\"") < js.find("\"n\""));
  CHECK(js.find("\"n\"") < js.find("\"seed\""));
  CHECK(js.find("\"seed\"") < js.find("\"samples\""));
  CHECK(js.find("\"samples\"") < js.find("\"tol\""));
  CHECK(js.find("\"tol\"") < js.find("\"checks\""));
  CHECK(js.find("\"checks\"") < js.find("\"overall\""));
}

TEST_CASE("seventeen significant digits survive a round trip") {
  const double x = 0.1234567890123456789;
  const std::string s = format_double(x);
  CHECK(std::stod(s) == x);
}

TEST_CASE("suite reports are byte-identical per config") {
  SuiteConfig cfg;
  cfg.suite = "kaehler";
  cfg.n_range = {4};
  cfg.samples = 10;
  cfg.seed = 2718;
  const std::string a = emit_report_json(run_suite(cfg));
  const std::string b = emit_report_json(run_suite(cfg));
  CHECK(a == b);
  // a different seed changes the random draws but not the schema
  cfg.seed = 3141;
  const nlohmann::json parsed = nlohmann::json::parse(emit_report_json(run_suite(cfg)));
  CHECK(parsed["overall"] == "pass");
}

TEST_CASE("unknown suites raise a usage error") {
  SuiteConfig cfg;
  cfg.suite = "no-such-suite";
  CHECK_THROWS_AS(run_suite(cfg), UsageError);
}
