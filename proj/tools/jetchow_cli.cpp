// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Flags override configuration-file values;
// exit code 0 means all checks passed, 1 means some check failed,
// 2 means the invocation itself was unusable.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "jetchow/cli.hpp"
#include "jetchow/version.hpp"

namespace {

int write_rendered(const jetchow::cli::RunConfig& config,
                   const jetchow::cli::Report& report) {
  std::string rendered = config.format == "json"
                             ? jetchow::cli::emit_json(report)
                             : jetchow::cli::to_text(report);
  if (config.output) {
    std::ofstream out(*config.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file: " << *config.output << "\n";
      return 2;
    }
    out << rendered;
    return out.good() ? 0 : 2;
  }
  std::cout << rendered;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jet-class calculator for scroll-like projective bundles"};
  app.set_version_flag("--version", jetchow::engine_version);

  std::string command;
  std::string config_path;
  jetchow::cli::RunConfig config;
  int n_max = config.n_max;
  bool strict = false;
  bool picard_rank_one = false;
  std::string format = config.format;
  std::string output;
  std::string preset;
  int m = 0, r = 0;
  long long n = 0, g = 0, e = 0, b = 0, defect = 0, ambient_dim = 0, degree = 0;

  app.add_option("command", command,
                 "one of: verify-identities, scroll, hqf, classify, conormal, "
                 "plucker, oracle-compare");
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--format", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output, "write the report to this file");
  app.add_option("--n-max", n_max, "bound on n for identity sweeps");
  app.add_flag("--strict", strict, "escalate warnings to failures");
  app.add_option("--m", m, "base dimension");
  app.add_option("--r", r, "bundle rank");
  app.add_option("--preset", preset, "base-ring preset (pm-o1)");
  app.add_option("--n", n, "dimension parameter");
  app.add_option("--g", g, "base curve genus");
  app.add_option("--e", e, "normalized degree invariant");
  app.add_option("--b", b, "twisting invariant");
  app.add_option("--defect", defect, "dual defect value");
  app.add_flag("--picard-rank-one", picard_rank_one,
               "assume Picard rank one in classification");
  app.add_option("--ambient-dim", ambient_dim, "ambient projective dimension");
  app.add_option("--degree", degree, "plane curve degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForVersion& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  // Record which configuration keys the command line pinned, then let the
  // configuration file fill in the rest.
  std::set<std::string> overridden;
  if (!command.empty()) {
    config.command = command;
    overridden.insert("command");
  }
  if (app.count("--format") > 0) {
    config.format = format;
    overridden.insert("format");
  }
  if (app.count("--output") > 0) {
    config.output = output;
    overridden.insert("output");
  }
  if (app.count("--n-max") > 0) {
    config.n_max = n_max;
    overridden.insert("n_max");
  }
  if (app.count("--strict") > 0) {
    config.strict = strict;
    overridden.insert("strict");
  }
  if (app.count("--m") > 0) {
    config.m = m;
    overridden.insert("m");
  }
  if (app.count("--r") > 0) {
    config.r = r;
    overridden.insert("r");
  }
  if (app.count("--preset") > 0) {
    config.preset = preset;
    overridden.insert("preset");
  }
  if (app.count("--n") > 0) {
    config.n = n;
    overridden.insert("n");
  }
  if (app.count("--g") > 0) {
    config.g = g;
    overridden.insert("g");
  }
  if (app.count("--e") > 0) {
    config.e = e;
    overridden.insert("e");
  }
  if (app.count("--b") > 0) {
    config.b = b;
    overridden.insert("b");
  }
  if (app.count("--defect") > 0) {
    config.defect = defect;
    overridden.insert("defect");
  }
  if (app.count("--picard-rank-one") > 0) {
    config.picard_rank_one = picard_rank_one;
    overridden.insert("picard_rank_one");
  }
  if (app.count("--ambient-dim") > 0) {
    config.ambient_dim = ambient_dim;
    overridden.insert("ambient_dim");
  }
  if (app.count("--degree") > 0) {
    config.degree = degree;
    overridden.insert("degree");
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot read configuration file: " << config_path << "\n";
        return 2;
      }
      jetchow::cli::Json file;
      try {
        file = jetchow::cli::Json::parse(in);
      } catch (const jetchow::cli::Json::exception& err) {
        std::cerr << "error: configuration file is not valid JSON: " << err.what()
                  << "\n";
        return 2;
      }
      jetchow::cli::merge_config_json(config, file, overridden);
    }
    jetchow::cli::RunResult result = jetchow::cli::run(config);
    int io_code = write_rendered(config, result.report);
    return io_code != 0 ? io_code : result.exit_code;
  } catch (const jetchow::cli::ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
