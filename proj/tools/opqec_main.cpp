// Copyright 2026 The opqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end.  Each subcommand selects one experiment kind,
// optionally seeded from a JSON config file, with the common flags
// overriding whatever the file says.  The CSV document goes to --out when
// given, otherwise to stdout (summary to stderr so the data stays clean).
//
// Exit codes: 0 success, 2 configuration problem, 3 failed deterministic
// check.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "opqec/errors.hpp"
#include "opqec/experiments.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  unsigned threads = 0;
};

void add_common_flags(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--config", f.config, "JSON experiment configuration file")
      ->check(CLI::ExistingFile);
  sub->add_option("--seed", f.seed, "root seed for all random streams");
  sub->add_option("--trials", f.trials, "number of Monte Carlo trials");
  sub->add_option("--out", f.out, "write the CSV document to this path");
  sub->add_option("--threads", f.threads,
                  "worker threads (default: OPQEC_THREADS or hardware)");
}

struct KindInfo {
  const char* experiment;
  std::size_t default_trials;
};

KindInfo kind_info(const std::string& subcommand) {
  if (subcommand == "conformance") return {"code_conformance", 1};
  if (subcommand == "concat") return {"concat_threshold", 20000};
  if (subcommand == "dense") return {"dense_coding", 20000};
  if (subcommand == "qsdc") return {"qsdc", 200};
  if (subcommand == "oracle") return {"oracle_equivalence", 500};
  return {"sweep", 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-party quantum code simulator"};
  app.require_subcommand(1);

  CommonFlags flags;
  CLI::App* conformance = app.add_subcommand(
      "conformance", "check the lifted-code syndrome table against the "
                     "published reference");
  CLI::App* concat = app.add_subcommand(
      "concat", "estimate logical error rates under 3-pair concatenation");
  CLI::App* dense = app.add_subcommand(
      "dense", "run coded dense-coding rounds over a noisy ensemble");
  CLI::App* qsdc = app.add_subcommand(
      "qsdc", "run the direct-communication protocol (baseline or coded)");
  CLI::App* oracle = app.add_subcommand(
      "oracle", "compare the frame simulator against the stabilizer oracle");
  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate recursion, existence-bound, and fidelity-gate "
               "numbers over a parameter grid");
  for (CLI::App* sub : {conformance, concat, dense, qsdc, oracle, sweep})
    add_common_flags(sub, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const KindInfo info = kind_info(sub->get_name());

  try {
    opqec::ExperimentConfig cfg;
    if (!flags.config.empty()) {
      cfg = opqec::load_experiment_config(flags.config);
      if (cfg.experiment != info.experiment)
        throw opqec::ConfigError(flags.config + ": experiment \"" +
                                 cfg.experiment + "\" does not match the " +
                                 sub->get_name() + " subcommand");
    } else {
      cfg.experiment = info.experiment;
      cfg.trials = info.default_trials;
      if (cfg.experiment == "sweep")
        cfg.grid = {0.1,  0.2, 0.3,  0.4,  0.45, 0.49,
                    0.50, 0.51, 0.55, 0.6,  0.7};
    }
    if (sub->count("--seed")) cfg.seed = flags.seed;
    if (sub->count("--trials")) cfg.trials = flags.trials;
    if (sub->count("--out")) cfg.out = flags.out;
    if (sub->count("--threads")) cfg.threads = flags.threads;

    const opqec::ExperimentResult result = opqec::run_experiment(cfg);
    if (cfg.out.empty()) {
      std::cout << result.csv;
      std::cerr << result.summary << "\n";
    } else {
      std::cout << result.summary << "\n";
      std::cout << "wrote " << cfg.out << "\n";
    }
    return result.check_failed ? 3 : 0;
  } catch (const opqec::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const opqec::CheckFailure& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
