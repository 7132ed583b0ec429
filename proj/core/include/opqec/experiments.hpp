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

#ifndef OPQEC_EXPERIMENTS_HPP_
#define OPQEC_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opqec/channel.hpp"
#include "opqec/rng.hpp"

namespace opqec {

// Seeded Monte Carlo experiment runner behind the command line tool.
// Every experiment writes a CSV document whose "# " comment header records
// the seed and all parameters and documents every column, followed by the
// data rows.  Output bytes depend only on (config, seed) — never on the
// thread count — because each trial draws from a stream derived from
// (seed, trial index) and reductions read per-trial slots in index order.

/// Worker threads to use: `requested` when positive, else the OPQEC_THREADS
/// environment variable, else the hardware concurrency (at least 1).
/// Throws ConfigError when the environment variable is set but malformed.
unsigned resolve_thread_count(unsigned requested = 0);

/// Runs `body(trial, stream)` for every trial index on a pool of `threads`
/// workers, with `stream` = root.child(trial).  The body must confine its
/// writes to the trial's own result slot.  The first exception thrown by a
/// body, if any, is rethrown after the pool drains.
void parallel_trials(std::size_t trials, const RandomStream& root,
                     unsigned threads,
                     const std::function<void(std::size_t, RandomStream&)>& body);

/// Experiment selector plus the union of per-kind parameters; the loader
/// rejects keys that do not belong to the selected kind.
struct ExperimentConfig {
  std::string experiment;  // code_conformance | concat_threshold |
                           // dense_coding | qsdc | oracle_equivalence | sweep
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  unsigned threads = 0;    // 0 = resolve from environment/hardware
  std::string out;         // CSV path; empty keeps the document in memory

  // code_conformance, oracle_equivalence, dense_coding: which lifted code.
  // "621" and "hamming7" are built in; anything else is read as a code
  // definition file path.
  std::string code = "621";

  // concat_threshold and sweep.
  double q0 = 0.3;
  std::size_t rounds = 3;

  // dense_coding.
  double initial_fidelity = 1.0;
  PauliChannel channel;
  bool twirl = true;
  bool symmetrize = true;
  bool permute_pairs = false;

  // qsdc.
  std::string variant = "baseline";  // baseline | coded
  std::size_t n_blocks = 200;
  std::size_t message_bits = 0;      // 0 = the variant's natural length
  PauliChannel channel_phase2;
  double eve_eta = 0.0;
  std::optional<double> check_threshold;
  double epp_residual = 0.0;
  double epp_yield = 1.0;

  // oracle_equivalence: the state-vector cross-check corpus.
  std::size_t circuit_qubits = 4;
  std::size_t circuit_steps = 40;
  std::size_t circuit_trials = 100;

  // sweep: grid of values read both as a recursion starting rate and as a
  // correction ratio t/n, plus the code rate for the existence-bound column.
  std::vector<double> grid;
  double k_over_n = 0.0;
};

/// Parses a JSON experiment configuration.  `source` names the input in
/// error messages.  Throws ConfigError on malformed or misplaced keys.
ExperimentConfig parse_experiment_config(const std::string& text,
                                         const std::string& source);
ExperimentConfig load_experiment_config(const std::string& path);

struct ExperimentResult {
  std::string csv;       // full document, comment header + rows
  std::string summary;   // short human-readable report
  bool check_failed = false;  // a deterministic conformance check failed
};

/// Runs the configured experiment and renders its CSV document.  Writes the
/// document to cfg.out when that is nonempty.  Monte Carlo estimates carry
/// standard errors and analytic predictions where available; check_failed
/// is set only by deterministic conformance-style experiments.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace opqec

#endif  // OPQEC_EXPERIMENTS_HPP_
