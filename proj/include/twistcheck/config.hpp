#pragma once

// Plain-text model configuration: one record per line,
//   <record-type> key=value key=value ...
// '#' starts a comment. The first record must be `version value=N`.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "twistcheck/error.hpp"

namespace twistcheck {

struct ConfigRecord {
  std::string type;
  std::map<std::string, std::string> fields;
  int line = 0;

  const std::string& get(const std::string& key) const {
    auto it = fields.find(key);
    if (it == fields.end())
      throw Error(ErrorCode::BadConfig,
                  "line " + std::to_string(line) + ": missing field '" + key + "'");
    return it->second;
  }
  std::string get_or(const std::string& key, const std::string& fallback) const {
    auto it = fields.find(key);
    return it == fields.end() ? fallback : it->second;
  }
};

struct ModelConfig {
  int version = 0;
  std::vector<ConfigRecord> records;
};

inline ModelConfig parse_config(std::istream& in) {
  ModelConfig cfg;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    ConfigRecord rec;
    rec.line = lineno;
    if (!(ls >> rec.type)) continue;
    std::string kv;
    while (ls >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0)
        throw Error(ErrorCode::BadConfig, "line " + std::to_string(lineno) + ": expected key=value, got '" + kv + "'");
      rec.fields[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (rec.type == "version") {
      cfg.version = std::stoi(rec.get("value"));
      continue;
    }
    if (cfg.version == 0)
      throw Error(ErrorCode::BadConfig, "version record must come first");
    cfg.records.push_back(std::move(rec));
  }
  if (cfg.version != 1) throw Error(ErrorCode::BadConfig, "unsupported config version");
  return cfg;
}

inline ModelConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadConfig, "cannot open " + path);
  return parse_config(in);
}

}  // namespace twistcheck
