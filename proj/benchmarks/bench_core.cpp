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

// Microbenchmarks of the hot paths: frame-side syndrome handling, the
// concatenation round, a full dense-coding trial, and the tableau oracle
// they are validated against.

#include <benchmark/benchmark.h>

#include <vector>

#include "opqec/channel.hpp"
#include "opqec/circuit.hpp"
#include "opqec/one_party.hpp"
#include "opqec/oracle.hpp"
#include "opqec/protocols.hpp"
#include "opqec/rng.hpp"

using namespace opqec;

namespace {

std::vector<PairError> random_pairs(std::size_t n, double q,
                                    RandomStream& rng) {
  std::vector<PairError> pairs(n);
  for (auto& p : pairs) p.flying = PauliOp{rng.bernoulli(q), rng.bernoulli(q)};
  return pairs;
}

}  // namespace

static void BM_ExtractSyndrome621(benchmark::State& state) {
  const OnePartyCode code = OnePartyCode::lift(ClassicalCode::repetition3());
  std::vector<PairError> errors(3);
  errors[1].flying = kPauliY;
  for (auto _ : state)
    benchmark::DoNotOptimize(code.extract_syndrome(errors));
}
BENCHMARK(BM_ExtractSyndrome621);

static void BM_DecodeAndCorrect621(benchmark::State& state) {
  const OnePartyCode code = OnePartyCode::lift(ClassicalCode::repetition3());
  std::vector<PairError> errors(3);
  errors[1].flying = kPauliY;
  const SyndromeRecord synd = code.extract_syndrome(errors);
  for (auto _ : state)
    benchmark::DoNotOptimize(code.decode_and_correct(synd));
}
BENCHMARK(BM_DecodeAndCorrect621);

static void BM_DecodeAndCorrectHamming7(benchmark::State& state) {
  const OnePartyCode code = OnePartyCode::lift(ClassicalCode::hamming7());
  std::vector<PairError> errors(7);
  errors[4].flying = kPauliY;
  const SyndromeRecord synd = code.extract_syndrome(errors);
  for (auto _ : state)
    benchmark::DoNotOptimize(code.decode_and_correct(synd));
}
BENCHMARK(BM_DecodeAndCorrectHamming7);

static void BM_ConcatRound(benchmark::State& state) {
  const std::size_t pairs = static_cast<std::size_t>(state.range(0));
  RandomStream rng(11);
  for (auto _ : state) {
    state.PauseTiming();
    std::vector<PairError> level = random_pairs(pairs, 0.3, rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(simulate_concat_round(level));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(pairs) / 3);
}
BENCHMARK(BM_ConcatRound)->Arg(27)->Arg(243)->Arg(2187);

static void BM_DenseCodingTrial(benchmark::State& state) {
  DenseCodingConfig cfg{OnePartyCode::lift(ClassicalCode::repetition3())};
  cfg.message = BitVec{1, 0};
  cfg.initial_fidelity = 0.9;
  cfg.channel = depolarizing(0.06);
  RandomStream rng(12);
  for (auto _ : state)
    benchmark::DoNotOptimize(run_dense_coding(cfg, rng));
}
BENCHMARK(BM_DenseCodingTrial);

static void BM_QsdcBaselineRun(benchmark::State& state) {
  QsdcConfig cfg;
  cfg.n_blocks = 100;
  cfg.message = BitVec(100, 1);
  cfg.channel_phase1 = PauliChannel{0.01, 0.0, 0.01};
  cfg.channel_phase2 = cfg.channel_phase1;
  cfg.check_threshold = 1.0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(run_qsdc_noiseless(cfg));
  }
}
BENCHMARK(BM_QsdcBaselineRun);

static void BM_TableauSyndromeReadout(benchmark::State& state) {
  RandomStream rng(13);
  std::vector<PairError> errors(3);
  errors[0].flying = kPauliX;
  errors[2].flying = kPauliZ;
  for (auto _ : state)
    benchmark::DoNotOptimize(measure_syndrome_circuit_621(errors, rng));
}
BENCHMARK(BM_TableauSyndromeReadout);

static void BM_OracleTrial621(benchmark::State& state) {
  const OnePartyCode code = OnePartyCode::lift(ClassicalCode::repetition3());
  RandomStream rng(14);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_equivalence(code, 1, rng));
}
BENCHMARK(BM_OracleTrial621);

BENCHMARK_MAIN();
