// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jetchow/classify.hpp"
#include "jetchow/hqf.hpp"
#include "jetchow/jet_classes.hpp"
#include "jetchow/report.hpp"
#include "jetchow/verify.hpp"

// Configuration-driven front end. A RunConfig comes from command-line
// flags, a JSON configuration file, or both; flags override file values.
// run() is pure apart from the computation itself: rendering and file
// output are the caller's business, which keeps reports deterministic.

namespace jetchow::cli {

// Usage and configuration problems; callers translate this into exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string format = "text";  // "text" | "json"
  std::optional<std::string> output;
  int n_max = 8;
  bool strict = false;

  std::optional<int> m;
  std::optional<int> r;
  std::optional<std::string> preset;  // "pm-o1"
  std::optional<long long> n;
  std::optional<long long> g;
  std::optional<long long> e;
  std::optional<long long> b;
  std::optional<long long> defect;
  bool picard_rank_one = false;
  std::optional<long long> ambient_dim;
  std::optional<long long> degree;
};

inline const std::set<std::string>& known_commands() {
  static const std::set<std::string> commands = {
      "verify-identities", "scroll", "hqf", "classify",
      "conormal", "plucker", "oracle-compare"};
  return commands;
}

// Applies configuration-file values to every field not pinned by a flag.
// `overridden` holds the config keys already set on the command line.
inline void merge_config_json(RunConfig& config, const Json& file,
                              const std::set<std::string>& overridden) {
  if (!file.is_object()) throw ConfigError("configuration file must hold a JSON object");
  auto taken = [&overridden](const std::string& key) {
    return overridden.find(key) != overridden.end();
  };
  for (const auto& [key, value] : file.items()) {
    try {
      if (key == "command") {
        if (!taken(key)) config.command = value.get<std::string>();
      } else if (key == "format") {
        if (!taken(key)) config.format = value.get<std::string>();
      } else if (key == "output") {
        if (!taken(key)) config.output = value.get<std::string>();
      } else if (key == "n_max") {
        if (!taken(key)) config.n_max = value.get<int>();
      } else if (key == "strict") {
        if (!taken(key)) config.strict = value.get<bool>();
      } else if (key == "m") {
        if (!taken(key)) config.m = value.get<int>();
      } else if (key == "r") {
        if (!taken(key)) config.r = value.get<int>();
      } else if (key == "preset") {
        if (!taken(key)) config.preset = value.get<std::string>();
      } else if (key == "n") {
        if (!taken(key)) config.n = value.get<long long>();
      } else if (key == "g") {
        if (!taken(key)) config.g = value.get<long long>();
      } else if (key == "e") {
        if (!taken(key)) config.e = value.get<long long>();
      } else if (key == "b") {
        if (!taken(key)) config.b = value.get<long long>();
      } else if (key == "defect") {
        if (!taken(key)) config.defect = value.get<long long>();
      } else if (key == "picard_rank_one") {
        if (!taken(key)) config.picard_rank_one = value.get<bool>();
      } else if (key == "ambient_dim") {
        if (!taken(key)) config.ambient_dim = value.get<long long>();
      } else if (key == "degree") {
        if (!taken(key)) config.degree = value.get<long long>();
      } else {
        throw ConfigError("unknown configuration key: " + key);
      }
    } catch (const Json::exception&) {
      throw ConfigError("configuration key has the wrong type: " + key);
    }
  }
}

namespace detail_cli {

inline void require_command(const RunConfig& config) {
  if (config.command.empty()) {
    throw ConfigError("no command given (flag or configuration file)");
  }
  if (known_commands().find(config.command) == known_commands().end()) {
    throw ConfigError("unknown command: " + config.command);
  }
  if (config.format != "text" && config.format != "json") {
    throw ConfigError("format must be text or json");
  }
  if (config.n_max < 2) throw ConfigError("n-max must be at least 2");
}

template <typename T>
inline T require_param(const std::optional<T>& value, const char* flag) {
  if (!value) throw ConfigError(std::string("missing required parameter: ") + flag);
  return *value;
}

inline std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out.empty() ? "plumbing" : out;
}

inline Json outcomes_json(const classify::Classification& result) {
  Json list = Json::array();
  for (classify::Outcome o : result.outcomes) list.push_back(classify::to_string(o));
  return list;
}

inline std::optional<jets::BasePreset> parse_preset(const RunConfig& config) {
  if (!config.preset) return std::nullopt;
  if (*config.preset == "pm-o1") return jets::BasePreset::ProjectiveSpaceUnitSum;
  throw ConfigError("unknown preset: " + *config.preset + " (expected pm-o1)");
}

inline Report run_scroll(const RunConfig& config) {
  int m = require_param(config.m, "--m");
  int r = require_param(config.r, "--r");
  std::optional<jets::BasePreset> preset = parse_preset(config);
  Report report;
  report.command = "scroll";
  RingPtr ring;
  classify::Classification defect_class;
  try {
    ring = make_scroll_ring(m, r);
    defect_class = classify::scroll_defect(m, r, preset);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
  ClassExpr cn = jets::cn_closed(ring);
  report.checks.push_back({"scroll.top-jet-class", "Prop 1.1", "info",
                           {{"m", m}, {"r", r}, {"n", ring->n()}, {"cn", cn.str()}}});
  report.checks.push_back({"scroll.defect", joined(defect_class.citations), "info",
                           {{"outcomes", outcomes_json(defect_class)},
                            {"defect", defect_class.defect
                                           ? Json(*defect_class.defect)
                                           : Json(nullptr)},
                            {"notes", defect_class.notes}}});
  if (r >= m) {
    ClassExpr direct = jets::special_case_cn(ring);
    report.checks.push_back({"special-case.agreement", "Prop 1.2",
                             direct == cn ? "pass" : "fail",
                             {{"special", direct.str()}, {"closed", cn.str()}}});
  }
  Json nonzero = Json::array();
  for (const auto& [key, value] : jets::coeff_table(m, r).entries) {
    if (value != 0) {
      nonzero.push_back({{"s1", key.first}, {"s2", key.second}, {"value", value}});
    }
  }
  Json table_values = {{"nonzero_entries", nonzero},
                       {"count", nonzero.size()}};
  if (r == m - 1) {
    table_values["note"] =
        "no closed special case in this regime; entries computed from the coefficient sum";
  }
  report.checks.push_back({"scroll.coefficient-table", "Prop 1.1", "info",
                           std::move(table_values)});
  report.checks.push_back(
      {"scroll.nonnegativity", "(0.4)", "info",
       {{"claim", "cn >= 0 under ample-and-spanned hypotheses"},
        {"verified", false},
        {"note", "positivity is semantic and not decidable from formal inputs"}}});
  if (preset) {
    jets::BaseAssignment assignment = jets::assignment_for_preset(ring, *preset);
    Rational value = jets::evaluate_top(cn, assignment);
    bool expects_vanishing = false;
    for (classify::Outcome o : defect_class.outcomes) {
      if (o == classify::Outcome::PositiveAtLeastOne) expects_vanishing = true;
    }
    bool consistent = (value == Rational(0)) == expects_vanishing;
    report.checks.push_back({"scroll.preset-evaluation", "Prop 2.1 (2.1.2)",
                             consistent ? "pass" : "fail",
                             {{"cn_value", value.str()},
                              {"expects_vanishing", expects_vanishing}}});
    if (value.is_integer()) {
      classify::CodegreeReport reading = classify::codegree_report(value.as_integer());
      report.checks.push_back({"scroll.codegree-reading", joined(reading.citations),
                               "info",
                               {{"cn", reading.cn},
                                {"status", reading.status},
                                {"message", reading.message}}});
    }
  }
  return report;
}

inline Report run_hqf(const RunConfig& config) {
  hqf::HQFInput in{require_param(config.n, "--n"), require_param(config.g, "--g"),
                   require_param(config.e, "--e"), require_param(config.b, "--b")};
  hqf::ValidationReport validation = hqf::validate(in);
  if (!validation.ok()) {
    throw ConfigError("invalid hqf input: " + joined(validation.violations));
  }
  Report report;
  report.command = "hqf";
  long long closed = hqf::cn_closed(in);
  long long recursive = hqf::cn_recursion(in);
  report.checks.push_back({"hqf.closed-vs-recursion", "(1.3.1)",
                           closed == recursive ? "pass" : "fail",
                           {{"n", in.n}, {"g", in.g}, {"e", in.e}, {"b", in.b},
                            {"closed", closed}, {"recursion", recursive}}});
  report.checks.push_back({"hqf.top-jet-number", "Prop 1.3", "info",
                           {{"cn", closed}}});
  if (in.n == 4) {
    report.checks.push_back({"hqf.singular-fibers", "(1.4)", "info",
                             {{"count", hqf::singular_fiber_count(in.e, in.b)}}});
  }
  if (!validation.warnings.empty()) {
    Json warnings = Json::array();
    for (const std::string& w : validation.warnings) warnings.push_back(w);
    report.checks.push_back({"hqf.input-warnings", "plumbing",
                             config.strict ? "fail" : "info",
                             {{"warnings", warnings},
                              {"escalated", config.strict}}});
  }
  return report;
}

inline Report run_classify(const RunConfig& config) {
  long long n = require_param(config.n, "--n");
  long long k = require_param(config.defect, "--defect");
  classify::Classification result;
  try {
    result = classify::classify_by_defect(n, k, config.picard_rank_one);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
  Report report;
  report.command = "classify";
  report.checks.push_back({"classify.by-defect", joined(result.citations), "info",
                           {{"n", n}, {"defect", k},
                            {"picard_rank_one", config.picard_rank_one},
                            {"outcomes", outcomes_json(result)},
                            {"notes", result.notes}}});
  return report;
}

inline Report run_conormal(const RunConfig& config) {
  long long N = require_param(config.ambient_dim, "--ambient-dim");
  long long m = require_param(config.m, "--m");
  classify::ConormalReport result;
  try {
    result = classify::conormal_invariants(N, m);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
  Report report;
  report.command = "conormal";
  report.checks.push_back(
      {"classify.conormal", joined(result.citations), "info",
       {{"ambient_dim", result.ambient_dim}, {"m", result.base_dim},
        {"n", result.n}, {"def0", result.def0},
        {"defect", result.defect ? Json(*result.defect) : Json(nullptr)},
        {"dual_strictly_contained", result.dual_strictly_contained},
        {"notes", result.notes}}});
  return report;
}

inline Report run_plucker(const RunConfig& config) {
  long long d = require_param(config.degree, "--degree");
  jets::PluckerCodegree values;
  try {
    values = jets::plucker_codegree(d);
  } catch (const std::domain_error& err) {
    throw ConfigError(err.what());
  }
  Report report;
  report.command = "plucker";
  report.checks.push_back({"plucker.values", "Ex 2.4.3", "info",
                           {{"degree", d},
                            {"total", values.total},
                            {"dual_curve_part", values.dual_curve_part},
                            {"flex_part", values.flex_part}}});
  VerifyBounds bounds;
  bounds.plucker_d_max = d > bounds.plucker_d_max ? d : bounds.plucker_d_max;
  for (CheckRecord& record : verify_plucker(bounds)) {
    report.checks.push_back(std::move(record));
  }
  return report;
}

inline Report run_oracle_compare(const RunConfig& config) {
  int m = require_param(config.m, "--m");
  int r = require_param(config.r, "--r");
  RingPtr ring;
  try {
    ring = make_scroll_ring(m, r);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
  ClassExpr closed = jets::cn_closed(ring);
  ClassExpr expanded = jets::cn_expansion(ring);
  Report report;
  report.command = "oracle-compare";
  report.checks.push_back({"oracle.top-jet-equivalence", "Prop 1.1",
                           closed == expanded ? "pass" : "fail",
                           {{"m", m}, {"r", r},
                            {"closed", closed.str()},
                            {"expansion", expanded.str()}}});
  return report;
}

}  // namespace detail_cli

struct RunResult {
  int exit_code = 0;
  Report report;
};

// Executes a validated configuration. Throws ConfigError for usage
// problems; check failures are reported through the exit code instead.
inline RunResult run(const RunConfig& config) {
  detail_cli::require_command(config);
  Report report;
  if (config.command == "verify-identities") {
    VerifyBounds bounds;
    bounds.n_max = config.n_max;
    bounds.hqf_n_max = config.n_max;
    report.command = "verify-identities";
    report.checks = verify_all(bounds);
  } else if (config.command == "scroll") {
    report = detail_cli::run_scroll(config);
  } else if (config.command == "hqf") {
    report = detail_cli::run_hqf(config);
  } else if (config.command == "classify") {
    report = detail_cli::run_classify(config);
  } else if (config.command == "conormal") {
    report = detail_cli::run_conormal(config);
  } else if (config.command == "plucker") {
    report = detail_cli::run_plucker(config);
  } else if (config.command == "oracle-compare") {
    report = detail_cli::run_oracle_compare(config);
  }
  return {exit_code_for(report), std::move(report)};
}

}  // namespace jetchow::cli
