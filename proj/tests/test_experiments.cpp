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

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "opqec/errors.hpp"
#include "opqec/experiments.hpp"

using namespace opqec;

namespace {

// Splits a CSV document into comment lines, the header line, and data rows.
struct CsvParts {
  std::vector<std::string> comments;
  std::string header;
  std::vector<std::string> rows;
};

CsvParts split_csv(const std::string& doc) {
  CsvParts parts;
  std::istringstream in(doc);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0 || line == "#")
      parts.comments.push_back(line);
    else if (parts.header.empty())
      parts.header = line;
    else
      parts.rows.push_back(line);
  }
  return parts;
}

std::size_t count_commas(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == ',' ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("config parsing accepts each kind and rejects misplaced keys") {
  const ExperimentConfig a = parse_experiment_config(
      R"({"experiment": "concat_threshold", "seed": 9, "trials": 50,
          "q0": 0.25, "rounds": 2})",
      "inline");
  CHECK(a.experiment == "concat_threshold");
  CHECK(a.seed == 9);
  CHECK(a.trials == 50);
  CHECK(a.q0 == 0.25);
  CHECK(a.rounds == 2);

  const ExperimentConfig b = parse_experiment_config(
      R"({"experiment": "dense_coding", "channel": {"depolarizing": 0.1},
          "initial_fidelity": 0.95, "twirl": false})",
      "inline");
  CHECK(b.channel.px == doctest::Approx(0.1 / 3));
  CHECK(b.initial_fidelity == 0.95);
  CHECK_FALSE(b.twirl);
  CHECK(b.symmetrize);  // untouched default

  // A concat key inside a dense_coding config is a config error ...
  CHECK_THROWS_AS(parse_experiment_config(
                      R"({"experiment": "dense_coding", "q0": 0.3})", "inline"),
                  ConfigError);
  // ... as are unknown keys, unknown experiments, and malformed JSON.
  CHECK_THROWS_AS(parse_experiment_config(
                      R"({"experiment": "sweep", "grdi": [0.1]})", "inline"),
                  ConfigError);
  CHECK_THROWS_AS(parse_experiment_config(
                      R"({"experiment": "warp_drive"})", "inline"),
                  ConfigError);
  CHECK_THROWS_AS(parse_experiment_config("{", "inline"), ConfigError);
  CHECK_THROWS_AS(parse_experiment_config(R"({"seed": 3})", "inline"),
                  ConfigError);
}

TEST_CASE("channel spellings") {
  auto chan = [](const std::string& channel_json) {
    return parse_experiment_config(
               R"({"experiment": "dense_coding", "channel": )" + channel_json +
                   "}",
               "inline")
        .channel;
  };
  PauliChannel c = chan(R"({"px": 0.1, "py": 0.02, "pz": 0.05})");
  CHECK(c.px == 0.1);
  CHECK(c.py == 0.02);
  CHECK(c.pz == 0.05);
  c = chan(R"({"bit_flip": 0.2})");
  CHECK(c.px == 0.2);
  CHECK(c.py == 0.0);
  c = chan(R"({"dephasing": 0.2})");
  CHECK(c.pz == 0.2);
  c = chan(R"({"werner": 0.7})");
  CHECK(c.px == doctest::Approx(0.1));
  CHECK(c.py == doctest::Approx(0.1));
  CHECK(c.pz == doctest::Approx(0.1));
  c = chan(R"({"per_type": 0.3})");
  CHECK(c.px == doctest::Approx(0.3 * 0.7));
  CHECK(c.py == doctest::Approx(0.09));
  CHECK(c.pz == doctest::Approx(0.3 * 0.7));
  CHECK_THROWS_AS(chan(R"({"bit_flip": 0.2, "pz": 0.1})"), ConfigError);
  CHECK_THROWS_AS(chan(R"({"px": 0.9, "py": 0.9, "pz": 0.9})"), ConfigError);
  CHECK_THROWS_AS(chan("0.3"), ConfigError);
}

TEST_CASE("loading a config file reports the path on errors") {
  CHECK_THROWS_AS(load_experiment_config("/nonexistent/config.json"),
                  ConfigError);
  try {
    load_experiment_config("/nonexistent/config.json");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/config.json") !=
          std::string::npos);
  }
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_thread_count(5) == 5);
  ::setenv("OPQEC_THREADS", "3", 1);
  CHECK(resolve_thread_count(0) == 3);
  CHECK(resolve_thread_count(2) == 2);  // explicit request wins
  ::setenv("OPQEC_THREADS", "zebra", 1);
  CHECK_THROWS_AS(resolve_thread_count(0), ConfigError);
  ::setenv("OPQEC_THREADS", "0", 1);
  CHECK_THROWS_AS(resolve_thread_count(0), ConfigError);
  ::unsetenv("OPQEC_THREADS");
  CHECK(resolve_thread_count(0) >= 1);
}

TEST_CASE("parallel trials cover every index exactly once") {
  const std::size_t trials = 1000;
  std::vector<std::atomic<int>> hits(trials);
  RandomStream root(4);
  parallel_trials(trials, root, 4, [&](std::size_t t, RandomStream&) {
    hits[t].fetch_add(1, std::memory_order_relaxed);
  });
  for (std::size_t t = 0; t < trials; ++t) CHECK(hits[t].load() == 1);
}

TEST_CASE("parallel trials rethrow a body exception") {
  RandomStream root(4);
  CHECK_THROWS_AS(
      parallel_trials(100, root, 4,
                      [&](std::size_t t, RandomStream&) {
                        if (t == 57) throw std::runtime_error("boom");
                      }),
      std::runtime_error);
}

TEST_CASE("trial streams are the seed's children regardless of threads") {
  RandomStream root(99);
  std::vector<std::uint64_t> serial(64), parallel(64);
  parallel_trials(64, root, 1, [&](std::size_t t, RandomStream& s) {
    serial[t] = s.next_u64();
  });
  parallel_trials(64, root, 8, [&](std::size_t t, RandomStream& s) {
    parallel[t] = s.next_u64();
  });
  CHECK(serial == parallel);
  CHECK(serial[0] == RandomStream(99).child(0).next_u64());
}

TEST_CASE("experiment output is byte-identical across thread counts") {
  for (const std::string& config :
       {std::string(R"({"experiment": "concat_threshold", "seed": 5,
                        "trials": 400, "q0": 0.3, "rounds": 2})"),
        std::string(R"({"experiment": "qsdc", "seed": 6, "trials": 8,
                        "n_blocks": 40,
                        "channel": {"px": 0.01, "py": 0, "pz": 0.01}})"),
        std::string(R"({"experiment": "dense_coding", "seed": 7,
                        "trials": 500, "initial_fidelity": 0.9,
                        "channel": {"depolarizing": 0.06}})")}) {
    ExperimentConfig cfg = parse_experiment_config(config, "inline");
    cfg.threads = 1;
    const ExperimentResult one = run_experiment(cfg);
    cfg.threads = 4;
    const ExperimentResult four = run_experiment(cfg);
    CHECK(one.csv == four.csv);
    CHECK(one.summary == four.summary);
  }
}

TEST_CASE("conformance experiment reports all sixteen classes") {
  ExperimentConfig cfg;
  cfg.experiment = "code_conformance";
  const ExperimentResult r = run_experiment(cfg);
  CHECK_FALSE(r.check_failed);
  const CsvParts parts = split_csv(r.csv);
  CHECK(parts.rows.size() == 16);
}

TEST_CASE("concat experiment stays within three standard errors") {
  ExperimentConfig cfg;
  cfg.experiment = "concat_threshold";
  cfg.seed = 12;
  cfg.trials = 4000;
  cfg.q0 = 0.3;
  cfg.rounds = 2;
  const ExperimentResult r = run_experiment(cfg);
  const CsvParts parts = split_csv(r.csv);
  REQUIRE(parts.rows.size() == 2);
  // within_3se is the last column of every row.
  for (const std::string& row : parts.rows) {
    CAPTURE(row);
    CHECK(row.back() == '1');
  }
}

TEST_CASE("oracle experiment finds no disagreements") {
  ExperimentConfig cfg;
  cfg.experiment = "oracle_equivalence";
  cfg.trials = 40;
  cfg.circuit_qubits = 3;
  cfg.circuit_steps = 15;
  cfg.circuit_trials = 10;
  const ExperimentResult r = run_experiment(cfg);
  CHECK_FALSE(r.check_failed);
}

TEST_CASE("sweep experiment records the recursion and both gates") {
  ExperimentConfig cfg;
  cfg.experiment = "sweep";
  cfg.grid = {0.3, 0.5, 0.6};
  cfg.rounds = 4;
  cfg.k_over_n = 0.2;
  const ExperimentResult r = run_experiment(cfg);
  const CsvParts parts = split_csv(r.csv);
  REQUIRE(parts.rows.size() == 3);
  // 0.5 is an exact fixed point of the recursion.
  CHECK(parts.rows[1].find(",0.5,") != std::string::npos);
  CHECK_THROWS_AS(
      [] {
        ExperimentConfig bad;
        bad.experiment = "sweep";
        bad.grid = {1.5};
        return run_experiment(bad);
      }(),
      ConfigError);
}

TEST_CASE("unknown experiment kinds are config errors") {
  ExperimentConfig cfg;
  cfg.experiment = "unheard_of";
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
}

TEST_CASE("csv documents are structurally sound") {
  ExperimentConfig cfg;
  cfg.experiment = "qsdc";
  cfg.seed = 3;
  cfg.trials = 6;
  cfg.n_blocks = 30;
  const ExperimentResult r = run_experiment(cfg);
  const CsvParts parts = split_csv(r.csv);
  REQUIRE_FALSE(parts.header.empty());
  REQUIRE_FALSE(parts.rows.empty());

  // Every column in the header is documented in the comment block, and the
  // seed is recorded.
  bool seed_line = false;
  std::vector<std::string> documented;
  for (const std::string& c : parts.comments) {
    seed_line = seed_line || c.find("seed") != std::string::npos;
    const auto colon = c.find(": ");
    if (c.rfind("#   ", 0) == 0 && colon != std::string::npos)
      documented.push_back(c.substr(4, colon - 4));
  }
  CHECK(seed_line);
  std::istringstream header(parts.header);
  std::string column;
  std::size_t columns = 0;
  while (std::getline(header, column, ',')) {
    ++columns;
    CHECK(std::find(documented.begin(), documented.end(), column) !=
          documented.end());
  }
  for (const std::string& row : parts.rows)
    CHECK(count_commas(row) == columns - 1);
}

TEST_CASE("run_experiment writes the document to the configured path") {
  ExperimentConfig cfg;
  cfg.experiment = "code_conformance";
  cfg.out = "/tmp/opqec_test_out.csv";
  const ExperimentResult r = run_experiment(cfg);
  std::ifstream in(cfg.out);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == r.csv);
  std::remove(cfg.out.c_str());

  cfg.out = "/nonexistent-dir/x.csv";
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
}
