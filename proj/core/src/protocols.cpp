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

#include "opqec/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "opqec/errors.hpp"

namespace opqec {

namespace {

using nlohmann::json;

void push_event(ProtocolOutcome& out, const json& j) {
  out.transcript.push_back(j.dump());
}

std::string bit_string(const BitVec& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto v : bits) s.push_back(v ? '1' : '0');
  return s;
}

json index_array(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (std::size_t i : v) a.push_back(i);
  return a;
}

void validate_channel(const PauliChannel& c, const char* which) {
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(which) + ": " + e.what());
  }
}

void validate_probability(double p, const char* which) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ConfigError(std::string(which) + " outside [0,1]");
}

/// Split `from` (already sorted) into a uniformly random `count`-subset and
/// its complement, both returned in ascending order.
struct Split {
  std::vector<std::size_t> picked;
  std::vector<std::size_t> rest;
};

Split pick_split(std::size_t count, std::vector<std::size_t> from,
                 RandomStream& rng) {
  if (count > from.size())
    throw std::invalid_argument("subset larger than index pool");
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.uniform_below(from.size() - i);
    std::swap(from[i], from[j]);
  }
  Split s;
  s.picked.assign(from.begin(),
                  from.begin() + static_cast<std::ptrdiff_t>(count));
  s.rest.assign(from.begin() + static_cast<std::ptrdiff_t>(count), from.end());
  std::sort(s.picked.begin(), s.picked.end());
  std::sort(s.rest.begin(), s.rest.end());
  return s;
}

std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

PauliOp conj_if(PauliOp e, bool masked) {
  return masked ? hadamard_conjugate(e) : e;
}

/// Mismatch rate of the XOR of two independent Bernoulli components.
double xor_rate(double a, double b) { return a + b - 2.0 * a * b; }

/// Expected Z-comparison mismatch rate of a masked pair whose transmitted
/// half went through `c` once: the mask is on for half the pairs, swapping
/// which component shows up.
double masked_rate(const PauliChannel& c) {
  return 0.5 * (c.p_bit() + c.p_phase());
}

void common_qsdc_checks(const QsdcConfig& cfg) {
  if (cfg.n_blocks == 0) throw ConfigError("n_blocks must be at least 1");
  validate_channel(cfg.channel_phase1, "phase-one channel");
  validate_channel(cfg.channel_phase2, "phase-two channel");
  validate_probability(cfg.eve.intercept_probability, "intercept probability");
  if (cfg.check_threshold)
    validate_probability(*cfg.check_threshold, "check threshold");
  validate_probability(cfg.epp_residual, "purification residual rate");
  validate_probability(cfg.epp_yield, "purification yield");
}

/// Transit error on one phase-one half: channel noise, then the optional
/// interceptor.  Measuring in the Z basis and resending the outcome leaves
/// the pair dephased: a Z component with probability 1/2 per interception.
PauliOp phase_one_error(const QsdcConfig& cfg, RandomStream& rng) {
  PauliOp e = cfg.channel_phase1.sample(rng);
  if (cfg.eve.kind == EavesdropperKind::kInterceptResend &&
      rng.bernoulli(cfg.eve.intercept_probability) && rng.next_bool())
    e = e * kPauliZ;
  return e;
}

CheckStats run_check_round(ProtocolOutcome& out, std::size_t round,
                           const std::vector<std::size_t>& positions,
                           std::size_t mismatches, double threshold) {
  const CheckStats stats =
      estimate_check_error(mismatches, positions.size(), threshold);
  out.check_rounds.push_back(stats);
  push_event(out, {{"event", "check_positions"},
                   {"round", round},
                   {"positions", index_array(positions)}});
  push_event(out, {{"event", "check_result"},
                   {"round", round},
                   {"checks", stats.checks},
                   {"mismatches", stats.mismatches},
                   {"rate", stats.rate},
                   {"threshold", stats.threshold},
                   {"abort", stats.abort}});
  if (stats.abort) {
    out.aborted = true;
    out.abort_round = round;
  }
  return stats;
}

}  // namespace

CheckStats estimate_check_error(std::size_t mismatches, std::size_t checks,
                                double threshold) {
  if (checks == 0)
    throw std::invalid_argument("need at least one check pair");
  if (mismatches > checks)
    throw std::invalid_argument("more mismatches than checks");
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw std::invalid_argument("check threshold outside [0,1]");
  CheckStats s;
  s.checks = checks;
  s.mismatches = mismatches;
  s.rate = static_cast<double>(mismatches) / static_cast<double>(checks);
  s.standard_error =
      std::sqrt(s.rate * (1.0 - s.rate) / static_cast<double>(checks));
  s.threshold = threshold;
  s.abort = s.rate > threshold;
  return s;
}

double suggested_check_threshold(double expected_rate, std::size_t checks,
                                 double sigmas) {
  if (checks == 0)
    throw std::invalid_argument("need at least one check pair");
  if (!(expected_rate >= 0.0 && expected_rate <= 1.0))
    throw std::invalid_argument("expected rate outside [0,1]");
  const double sd = std::sqrt(expected_rate * (1.0 - expected_rate) /
                              static_cast<double>(checks));
  return std::min(1.0, expected_rate + sigmas * sd);
}

SuccessCondition check_success_condition(const OnePartyCode& code,
                                         const PauliChannel& channel) {
  channel.validate();
  SuccessCondition out;
  out.correction_ratio =
      static_cast<double>(code.t()) / static_cast<double>(code.n_pairs());
  out.guaranteed_regime = out.correction_ratio >= channel.p_bit() &&
                          out.correction_ratio >= channel.p_phase();
  out.fidelity_gate = channel.fidelity() >= 1.0 - 1.5 * out.correction_ratio;
  return out;
}

ProtocolOutcome run_dense_coding(const DenseCodingConfig& cfg,
                                 RandomStream& rng) {
  const OnePartyCode& code = cfg.code;
  const std::size_t n = code.n_pairs();
  const std::size_t k = code.k();
  if (cfg.message.size() != 2 * k)
    throw ConfigError("dense coding message must have 2k bits");
  validate_probability(cfg.initial_fidelity, "initial fidelity");
  validate_channel(cfg.channel, "channel");
  if (!cfg.injected.empty() && cfg.injected.size() != n)
    throw ConfigError("injected error pattern needs one entry per pair");
  if (!code.logical_readout_faithful())
    throw ConfigError(
        "dense coding needs a code with faithful logical readout");

  ProtocolOutcome out;
  std::vector<PairError> frames(n);

  // Shared ensemble of fidelity F0.  The deficit is drawn as bit flips; the
  // twirl spreads it evenly over the three types, landing on the Werner
  // distribution of the same fidelity.
  for (auto& f : frames)
    if (rng.bernoulli(1.0 - cfg.initial_fidelity)) f.flying = f.flying * kPauliX;
  if (cfg.twirl)
    for (auto& f : frames) f = twirl_frame(f, rng);

  // Logical encoding, two message bits per logical pair.
  for (std::size_t i = 0; i < k; ++i) {
    const LogicalOpKind op =
        encoding_op_for(cfg.message[2 * i] != 0, cfg.message[2 * i + 1] != 0);
    if (op == LogicalOpKind::kIdentity) continue;
    const std::vector<PairError> enc = pair_errors_of(code.logical_op(op, i));
    for (std::size_t j = 0; j < n; ++j) frames[j] = frames[j] * enc[j];
  }

  // Random per-qubit rotations, optional transmission-order permutation,
  // then the channel.  The receiver undoes each announced rotation, so a
  // transit error e on pair j lands as the conjugated sixstate_undo(e, r).
  std::vector<int> rot(n, 0);
  if (cfg.symmetrize)
    for (auto& r : rot) r = static_cast<int>(rng.uniform_below(3));
  std::vector<std::size_t> order = iota_indices(n);
  if (cfg.permute_pairs) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t j = i + rng.uniform_below(n - i);
      std::swap(order[i], order[j]);
    }
  }
  for (std::size_t slot = 0; slot < n; ++slot) {
    const std::size_t j = order[slot];
    const PauliOp e =
        cfg.injected.empty() ? cfg.channel.sample(rng) : cfg.injected[j];
    frames[j].flying = frames[j].flying * sixstate_undo(e, rot[j]);
  }
  if (cfg.permute_pairs)
    push_event(out, {{"event", "transmission_order"},
                     {"order", index_array(order)}});
  if (cfg.symmetrize) {
    json r = json::array();
    for (int v : rot) r.push_back(v);
    push_event(out, {{"event", "rotations"}, {"r", r}});
  }

  const SyndromeRecord synd = code.extract_syndrome(frames);
  const Correction corr = code.decode_and_correct(synd);
  out.syndrome_extractions = 1;
  if (!synd.trivial()) out.nonzero_syndromes = 1;
  ++out.correction_statuses[static_cast<std::size_t>(corr.status)];

  const LogicalState logical =
      code.logical_labels(code.corrected_labels(frames, corr));
  out.delivered = logical_bell_readout(logical);
  out.success = out.delivered == cfg.message;
  return out;
}

double dense_coding_success_exhaustive_621(const PauliChannel& channel) {
  channel.validate();
  // Probabilities indexed like kPaulis: I, X, Z, Y.
  const std::array<double, 4> p = {channel.p_identity(), channel.px,
                                   channel.pz, channel.py};
  double total = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        const std::array<PauliOp, 3> e = {kPaulis[a], kPaulis[b], kPaulis[c]};
        int bits = 0, phases = 0;
        for (const PauliOp& op : e) {
          bits += op.x ? 1 : 0;
          phases += op.z ? 1 : 0;
        }
        if (bits <= 1 && phases <= 1) total += p[a] * p[b] * p[c];
      }
    }
  }
  return total;
}

ProtocolOutcome run_qsdc_noiseless(const QsdcConfig& cfg) {
  common_qsdc_checks(cfg);
  const std::size_t n = cfg.n_blocks;
  if (cfg.message.size() != n)
    throw ConfigError("uncoded messaging needs one message bit per block");

  RandomStream rng(cfg.seed);
  const std::size_t total = 3 * n;
  ProtocolOutcome out;

  // Distribution phase: a random basis mask on every transmitted half, then
  // the channel and the interceptor.  A masked pair shows the conjugated
  // error once the mask comes off.
  BitVec b(total);
  for (auto& v : b) v = rng.next_bool() ? 1 : 0;
  std::vector<PauliOp> e1(total);
  for (auto& e : e1) e = phase_one_error(cfg, rng);
  push_event(out, {{"event", "receipt"}, {"phase", 1}});

  // First check round burns n of the 3n pairs.  The mask is revealed only
  // at the check positions; the sender unmasks those and both sides compare
  // Z outcomes.
  const Split s1 = pick_split(n, iota_indices(total), rng);
  BitVec b_at_checks;
  b_at_checks.reserve(n);
  for (std::size_t idx : s1.picked) b_at_checks.push_back(b[idx]);
  push_event(out, {{"event", "basis_values"},
                   {"round", 1},
                   {"scope", "check"},
                   {"bits", bit_string(b_at_checks)}});
  std::size_t mismatches = 0;
  for (std::size_t idx : s1.picked)
    if (conj_if(e1[idx], b[idx] != 0).x) ++mismatches;
  const double thr1 = cfg.check_threshold
                          ? *cfg.check_threshold
                          : suggested_check_threshold(
                                masked_rate(cfg.channel_phase1), n);
  if (run_check_round(out, 1, s1.picked, mismatches, thr1).abort) return out;

  // The sender splits the remaining 2n pairs into a second check round and
  // code pairs, encodes one message bit per code pair as XZ (= Y up to
  // phase) on her half, and returns everything through the channel.  The
  // receiver then takes his mask off, conjugating all ops accumulated since
  // he put it on; the encoding itself is mask-invariant.
  const Split s2 = pick_split(n, s1.rest, rng);
  std::vector<PauliOp> net(total, kPauliI);
  for (std::size_t idx : s1.rest) net[idx] = e1[idx];
  for (std::size_t i = 0; i < s2.rest.size(); ++i)
    if (cfg.message[i]) net[s2.rest[i]] = net[s2.rest[i]] * kPauliY;
  for (std::size_t idx : s1.rest)
    net[idx] = net[idx] * cfg.channel_phase2.sample(rng);
  push_event(out, {{"event", "receipt"}, {"phase", 2}});
  for (std::size_t idx : s1.rest) net[idx] = conj_if(net[idx], b[idx] != 0);

  mismatches = 0;
  for (std::size_t idx : s2.picked)
    if (net[idx].x) ++mismatches;
  const double thr2 =
      cfg.check_threshold
          ? *cfg.check_threshold
          : suggested_check_threshold(
                0.5 * (xor_rate(cfg.channel_phase1.p_bit(),
                                cfg.channel_phase2.p_bit()) +
                       xor_rate(cfg.channel_phase1.p_phase(),
                                cfg.channel_phase2.p_phase())),
                n);
  if (run_check_round(out, 2, s2.picked, mismatches, thr2).abort) return out;

  // Readout: the Z comparisons of a code pair differ exactly when the net
  // op on it flips the ZZ sign.
  out.delivered.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.delivered[i] = net[s2.rest[i]].x ? 1 : 0;
  out.success = out.delivered == cfg.message;
  return out;
}

ProtocolOutcome run_qsdc_one_party(const QsdcConfig& cfg) {
  common_qsdc_checks(cfg);
  const std::size_t n = cfg.n_blocks;
  const std::size_t k = cfg.message.size();
  if (k == 0) throw ConfigError("empty message");
  if (cfg.concat_rounds == 0)
    throw ConfigError("coded messaging needs at least one concatenation round");
  std::size_t code_pairs_per_bit = 1;
  for (std::size_t r = 0; r < cfg.concat_rounds; ++r) {
    code_pairs_per_bit *= 3;
    if (code_pairs_per_bit > (std::size_t{1} << 40))
      throw ConfigError("concatenation depth too large");
  }
  const std::size_t m = k * code_pairs_per_bit;
  const std::size_t survivors = static_cast<std::size_t>(
      std::floor(2.0 * static_cast<double>(n) * cfg.epp_yield));
  if (survivors < 2 * m)
    throw ConfigError(
        "purification yield leaves fewer pairs than the code needs "
        "(2 * message_bits * 3^rounds)");

  RandomStream rng(cfg.seed);
  const std::size_t total = 3 * n;
  ProtocolOutcome out;

  // Distribution phase as in the uncoded protocol, but the full mask is
  // announced after receipt, so every surviving pair is unmasked before
  // purification.
  BitVec b(total);
  for (auto& v : b) v = rng.next_bool() ? 1 : 0;
  std::vector<PauliOp> e1(total);
  for (auto& e : e1) e = phase_one_error(cfg, rng);
  push_event(out, {{"event", "receipt"}, {"phase", 1}});
  push_event(out, {{"event", "basis_values"},
                   {"round", 1},
                   {"scope", "all"},
                   {"bits", bit_string(b)}});

  const Split s1 = pick_split(n, iota_indices(total), rng);
  std::size_t mismatches = 0;
  for (std::size_t idx : s1.picked)
    if (conj_if(e1[idx], b[idx] != 0).x) ++mismatches;
  const double thr1 = cfg.check_threshold
                          ? *cfg.check_threshold
                          : suggested_check_threshold(
                                masked_rate(cfg.channel_phase1), n);
  if (run_check_round(out, 1, s1.picked, mismatches, thr1).abort) return out;

  // Purification stage, abstracted: of the 2n remaining pairs a fraction
  // epp_yield survives; the round keeps the 2m it needs, each restarting
  // with an independent per-type residual frame.
  std::vector<PairError> frames(2 * m);
  for (auto& f : frames) {
    const bool bit = rng.bernoulli(cfg.epp_residual);
    const bool phase = rng.bernoulli(cfg.epp_residual);
    f.flying = PauliOp{bit, phase};
  }
  push_event(out, {{"event", "purification"},
                   {"input", s1.rest.size()},
                   {"survivors", survivors},
                   {"used", 2 * m}});

  // Logical basis mask on the purified pairs, the sender's split into a
  // second check round and code pairs, and the top-level encoding: Y on her
  // half of every code pair in message block i (the XZ phase is dropped in
  // the frame).  The return transmission hits each purified pair once.
  BitVec bp(2 * m);
  for (auto& v : bp) v = rng.next_bool() ? 1 : 0;
  const Split s2 = pick_split(m, iota_indices(2 * m), rng);
  std::vector<PauliOp> net(2 * m, kPauliI);
  for (std::size_t i = 0; i < k; ++i) {
    if (!cfg.message[i]) continue;
    for (std::size_t g = 0; g < code_pairs_per_bit; ++g)
      net[s2.rest[i * code_pairs_per_bit + g]] = kPauliY;
  }
  for (std::size_t j = 0; j < 2 * m; ++j)
    net[j] = net[j] * cfg.channel_phase2.sample(rng);
  push_event(out, {{"event", "receipt"}, {"phase", 2}});
  push_event(out, {{"event", "logical_basis_values"},
                   {"bits", bit_string(bp)}});
  for (std::size_t j = 0; j < 2 * m; ++j)
    frames[j].flying = frames[j].flying * conj_if(net[j], bp[j] != 0);

  mismatches = 0;
  for (std::size_t idx : s2.picked)
    if (frames[idx].flying.x) ++mismatches;
  const double thr2 =
      cfg.check_threshold
          ? *cfg.check_threshold
          : suggested_check_threshold(
                xor_rate(cfg.epp_residual, masked_rate(cfg.channel_phase2)),
                m);
  if (run_check_round(out, 2, s2.picked, mismatches, thr2).abort) return out;

  // Correction rounds over the code pairs, then the Z comparison of each
  // top-level logical pair reads one message bit.
  std::vector<PairError> level;
  level.reserve(m);
  for (std::size_t idx : s2.rest) level.push_back(frames[idx]);
  ConcatRoundStats stats;
  for (std::size_t r = 0; r < cfg.concat_rounds; ++r)
    level = simulate_concat_round(level, &stats);
  out.syndrome_extractions = stats.groups;
  out.nonzero_syndromes = stats.nonzero_syndromes;
  out.correction_statuses = stats.correction_statuses;

  out.delivered.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    out.delivered[i] = level[i].flips_zz() ? 1 : 0;
  out.success = out.delivered == cfg.message;
  return out;
}

}  // namespace opqec
