#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spinrep/common.hpp"

namespace spinrep::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "spinrep-report/1";
inline constexpr const char* kVersion = "1.0.0";

enum class Status { Pass, Fail, Info };

const char* status_name(Status s);

struct CheckRecord {
  std::string suite;
  std::string name;
  Status status = Status::Info;
  double residual = 0.0;
  double threshold = 0.0;  // 0 when the check has no numeric threshold
  bool lower_bound = false;  // residual must exceed the threshold instead
  int samples = 0;
  std::string detail;
  Json values;             // computed tables, e.g. per-grade signs
  Json replay;             // offending inputs, only filled on failure
  double elapsed_ms = 0.0;
};

struct SkippedSuite {
  std::string name;
  std::string reason;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::string metric_name;
  Mat4r metric = Mat4r::Zero();
  Json tolerances = Json::object();
  int samples = 0;
  std::vector<std::string> suites;
  std::vector<SkippedSuite> skipped;
  std::vector<CheckRecord> checks;
  double elapsed_ms = 0.0;

  bool passed() const;
  int count(Status s) const;
};

Json to_json(const Mat4r& m);
Json to_json(const MatrixElem& m);
Json to_json(const Report& r);

// One line per check plus a summary.
std::string to_text(const Report& r);

}  // namespace spinrep::cli
