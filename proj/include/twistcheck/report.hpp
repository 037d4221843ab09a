#pragma once

// Verification records and their JSON form. Field order is fixed and no
// wall-clock data is written unless asked for, so reports diff cleanly.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace twistcheck {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum class Status { Pass, Fail, Indeterminate };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "indeterminate";
  }
}

using Json = nlohmann::ordered_json;

struct CheckRecord {
  std::string name;
  std::string claim;  // the statement being checked
  Status status = Status::Pass;
  Json witness = Json::object();
};

struct ClosureStats {
  std::string label;
  std::size_t order = 0;
  bool cap_exceeded = false;
  double seconds = 0;
};

struct VerificationReport {
  int genus = 0;
  bool theorem_scope = true;
  std::vector<std::string> warnings;
  Json convention = Json::object();
  std::vector<CheckRecord> checks;
  std::vector<ClosureStats> closures;
  Json searches = Json::object();

  Status overall() const {
    bool indeterminate = false;
    for (const auto& c : checks) {
      if (c.status == Status::Fail) return Status::Fail;
      if (c.status == Status::Indeterminate) indeterminate = true;
    }
    return indeterminate ? Status::Indeterminate : Status::Pass;
  }
};

/// FNV-1a, used for the convention fingerprint.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xF];
  return s;
}

inline Json to_json(const VerificationReport& r, bool with_timings = false) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["genus"] = r.genus;
  j["theorem_scope"] = r.theorem_scope;
  j["warnings"] = r.warnings;
  j["convention"] = r.convention;
  j["overall"] = to_string(r.overall());
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json x;
    x["name"] = c.name;
    x["claim"] = c.claim;
    x["status"] = to_string(c.status);
    x["witness"] = c.witness;
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  Json closures = Json::array();
  for (const auto& c : r.closures) {
    Json x;
    x["label"] = c.label;
    x["order"] = c.order;
    x["cap_exceeded"] = c.cap_exceeded;
    if (with_timings) x["seconds"] = c.seconds;
    closures.push_back(std::move(x));
  }
  j["closures"] = std::move(closures);
  j["searches"] = r.searches;
  return j;
}

}  // namespace twistcheck
