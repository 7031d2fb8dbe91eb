#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace spinrep::cli {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "info";
}

bool Report::passed() const { return count(Status::Fail) == 0; }

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [s](const CheckRecord& c) { return c.status == s; }));
}

Json to_json(const Mat4r& m) {
  Json rows = Json::array();
  for (int i = 0; i < kDim; ++i) {
    Json row = Json::array();
    for (int j = 0; j < kDim; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

// Complex entries as [re, im] pairs.
Json to_json(const MatrixElem& m) {
  Json rows = Json::array();
  for (int i = 0; i < kDim; ++i) {
    Json row = Json::array();
    for (int j = 0; j < kDim; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Report& r) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["command"] = r.command;
  j["seed"] = r.seed;
  j["metric"] = {{"name", r.metric_name}, {"matrix", to_json(r.metric)}};
  j["tolerances"] = r.tolerances;
  j["samples"] = r.samples;
  j["suites"] = r.suites;
  Json skipped = Json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"name", s.name}, {"reason", s.reason}});
  j["skipped"] = skipped;

  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["suite"] = c.suite;
    cj["name"] = c.name;
    cj["status"] = status_name(c.status);
    cj["residual"] = c.residual;
    if (c.threshold > 0) {
      cj["threshold"] = c.threshold;
      cj["comparison"] = c.lower_bound ? ">" : "<";
    }
    cj["samples"] = c.samples;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (!c.values.is_null()) cj["values"] = c.values;
    if (!c.replay.is_null()) cj["replay"] = c.replay;
    cj["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["summary"] = {{"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"info", r.count(Status::Info)},
                  {"status", r.passed() ? "pass" : "fail"}};
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "seed " << r.seed << ", metric " << r.metric_name << ", samples " << r.samples << "\n";
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.suite.size() + 1 + c.name.size());
  for (const auto& c : r.checks) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "INFO";
    std::string id = c.suite + "/" + c.name;
    id.resize(width, ' ');
    char buf[96];
    std::snprintf(buf, sizeof buf, "  residual %.3e", c.residual);
    out << "[" << tag << "] " << id << buf;
    if (c.threshold > 0) {
      std::snprintf(buf, sizeof buf, " (%c %.0e)", c.lower_bound ? '>' : '<', c.threshold);
      out << buf;
    }
    out << "  n=" << c.samples;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  for (const auto& s : r.skipped) out << "[SKIP] " << s.name << ": " << s.reason << "\n";
  out << r.count(Status::Pass) << " passed, " << r.count(Status::Fail) << " failed, "
      << r.count(Status::Info) << " info\n";
  return out.str();
}

}  // namespace spinrep::cli
