// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jetchow/version.hpp"

// Machine-readable run reports. Emission is deterministic: records are
// sorted by check name, the JSON field order is fixed, and no timestamps
// or timings are recorded, so identical inputs produce byte-identical
// output. The schema carries a version number, currently 1.

namespace jetchow::cli {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

struct CheckRecord {
  std::string name;
  std::string citation;  // anchor label, or "plumbing" for artifact checks
  std::string status;    // "pass" | "fail" | "info"
  Json values = Json::object();

  friend bool operator==(const CheckRecord& a, const CheckRecord& b) {
    return a.name == b.name && a.citation == b.citation &&
           a.status == b.status && a.values == b.values;
  }
};

struct Report {
  std::string command;
  std::string engine = engine_version;
  std::vector<CheckRecord> checks;

  friend bool operator==(const Report& a, const Report& b);
};

inline std::vector<CheckRecord> sorted_checks(const Report& report) {
  std::vector<CheckRecord> out = report.checks;
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return a.name < b.name;
                   });
  return out;
}

inline bool operator==(const Report& a, const Report& b) {
  return a.command == b.command && a.engine == b.engine &&
         sorted_checks(a) == sorted_checks(b);
}

inline int count_status(const Report& report, const std::string& status) {
  int n = 0;
  for (const CheckRecord& c : report.checks) {
    if (c.status == status) ++n;
  }
  return n;
}

// Exit status is a pure function of the failure count.
inline int exit_code_for(const Report& report) {
  return count_status(report, "fail") > 0 ? 1 : 0;
}

inline Json to_json(const Report& report) {
  Json out;
  out["schema_version"] = report_schema_version;
  out["engine_version"] = report.engine;
  out["command"] = report.command;
  Json checks = Json::array();
  for (const CheckRecord& c : sorted_checks(report)) {
    Json record;
    record["name"] = c.name;
    record["citation"] = c.citation;
    record["status"] = c.status;
    record["values"] = c.values;
    checks.push_back(std::move(record));
  }
  out["checks"] = std::move(checks);
  Json summary;
  summary["pass"] = count_status(report, "pass");
  summary["fail"] = count_status(report, "fail");
  summary["info"] = count_status(report, "info");
  out["summary"] = std::move(summary);
  return out;
}

inline Report report_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("report must be a JSON object");
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != report_schema_version) {
    throw std::invalid_argument("unsupported report schema version");
  }
  Report out;
  out.engine = j.at("engine_version").get<std::string>();
  out.command = j.at("command").get<std::string>();
  for (const Json& record : j.at("checks")) {
    CheckRecord c;
    c.name = record.at("name").get<std::string>();
    c.citation = record.at("citation").get<std::string>();
    c.status = record.at("status").get<std::string>();
    c.values = record.at("values");
    out.checks.push_back(std::move(c));
  }
  return out;
}

inline std::string emit_json(const Report& report) {
  return to_json(report).dump(2) + "\n";
}

// Aligned text table with the same content as the JSON form.
inline std::string to_text(const Report& report) {
  std::vector<CheckRecord> checks = sorted_checks(report);
  std::size_t name_width = 5, status_width = 6, citation_width = 8;
  for (const CheckRecord& c : checks) {
    name_width = std::max(name_width, c.name.size());
    status_width = std::max(status_width, c.status.size());
    citation_width = std::max(citation_width, c.citation.size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::string out = "command: " + report.command +
                    "\nengine:  " + report.engine + "\n\n";
  out += pad("check", name_width) + "  " + pad("status", status_width) +
         "  " + pad("citation", citation_width) + "  values\n";
  out += std::string(name_width + status_width + citation_width + 12, '-') + "\n";
  for (const CheckRecord& c : checks) {
    out += pad(c.name, name_width) + "  " + pad(c.status, status_width) +
           "  " + pad(c.citation, citation_width) + "  " +
           c.values.dump() + "\n";
  }
  out += "\nsummary: pass=" + std::to_string(count_status(report, "pass")) +
         " fail=" + std::to_string(count_status(report, "fail")) +
         " info=" + std::to_string(count_status(report, "info")) + "\n";
  return out;
}

}  // namespace jetchow::cli
