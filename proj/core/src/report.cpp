#include "adslie/report.hpp"

#include <cstdio>
#include <sstream>

#include "adslie/errors.hpp"

namespace adslie {

namespace {

const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass: return "pass";
    case CheckResult::Status::Fail: return "fail";
    case CheckResult::Status::Error: return "error";
  }
  return "?";
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string emit_report_json(const Report& r) {
  std::ostringstream os;
  os << "{";
  os << "\"suite\":\"" << json_escape(r.config.suite) << "\",";
  os << "\"n\":[";
  for (size_t i = 0; i < r.config.n_range.size(); ++i)
    os << (i ? "," : "") << r.config.n_range[i];
  os << "],";
  os << "\"seed\":" << r.config.seed << ",";
  os << "\"samples\":" << r.config.samples << ",";
  os << "\"tol\":" << format_double(r.config.tol) << ",";
  os << "\"checks\":[";
  for (size_t i = 0; i < r.checks.size(); ++i) {
    const CheckResult& c = r.checks[i];
    os << (i ? "," : "") << "{";
    os << "\"name\":\"" << json_escape(c.name) << "\",";
    os << "\"status\":\"" << status_name(c.status) << "\",";
    os << "\"observed\":\"" << json_escape(c.observed) << "\",";
    os << "\"expected\":\"" << json_escape(c.expected) << "\",";
    os << "\"max_err\":" << format_double(c.max_err);
    os << "}";
  }
  os << "],";
  os << "\"overall\":\"" << (r.overall() ? "pass" : "fail") << "\"";
  os << "}";
  return os.str();
}

std::string emit_report_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.config.suite << " (seed=" << r.config.seed
     << ", samples=" << r.config.samples << ")\n";
  size_t width = 4;
  for (const CheckResult& c : r.checks) width = std::max(width, c.name.size());
  for (const CheckResult& c : r.checks) {
    os << "  " << c.name;
    os << std::string(width - c.name.size() + 2, ' ');
    os << status_name(c.status);
    if (!c.observed.empty() || !c.expected.empty())
      os << "  observed=" << c.observed << " expected=" << c.expected;
    if (c.max_err != 0.0) os << "  max_err=" << format_double(c.max_err);
    os << "\n";
  }
  os << "overall: " << (r.overall() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") return emit_report_json(r);
  if (format == "text") return emit_report_text(r);
  throw UsageError("emit_report: unknown format '" + format + "'");
}

}  // namespace adslie
