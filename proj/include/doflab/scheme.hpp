// Copyright 2026 The doflab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOFLAB_SCHEME_HPP
#define DOFLAB_SCHEME_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doflab/errors.hpp"
#include "doflab/rational.hpp"
#include "doflab/regions.hpp"

namespace doflab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Inversions with a larger condition number are rejected.
inline constexpr double kMaxCondition = 1e10;
/// Noiseless decoding must reproduce every symbol to within this.
inline constexpr double kResidualTolerance = 1e-8;

/// A linear combination overheard by `observer` (0-based user) on receive
/// antenna `antenna` during global slot `slot` (0-based).
struct LcRef {
  std::size_t observer = 0;
  std::size_t slot = 0;
  std::size_t antenna = 0;

  friend auto operator<=>(const LcRef&, const LcRef&) = default;
};

/// Phase-3 slot payload. to_user1[j] is placed on transmit antenna j;
/// to_user2[j] on antenna effective_M - N2 + j. Overlapping antennas carry
/// the sum.
struct Phase3Slot {
  std::vector<LcRef> to_user1;
  std::vector<LcRef> to_user2;
};

struct SchemeSpec {
  TwoUserCase which = TwoUserCase::A;
  int M = 0, N1 = 0, N2 = 0;
  int effective_M = 0;
  std::array<std::size_t, 3> phase_lengths{};
  std::array<std::size_t, 3> symbols_per_slot{};  // fresh symbols per slot in each phase
  std::vector<Phase3Slot> lc_routing;

  std::size_t total_slots() const { return phase_lengths[0] + phase_lengths[1] + phase_lengths[2]; }
  std::size_t phase_start(std::size_t phase) const {
    std::size_t s = 0;
    for (std::size_t p = 0; p < phase; ++p) s += phase_lengths[p];
    return s;
  }
  std::array<std::size_t, 2> total_symbols() const {
    return {phase_lengths[0] * symbols_per_slot[0], phase_lengths[1] * symbols_per_slot[1]};
  }
  int rx(std::size_t user) const { return user == 0 ? N1 : N2; }
  /// Transmit antenna carrying to_user2[j] in phase 3.
  std::size_t user2_position(std::size_t j) const { return static_cast<std::size_t>(effective_M - N2) + j; }
};

namespace detail {
inline void require_two_user(int M, int N1, int N2) {
  if (N2 < 1) throw std::invalid_argument("two-user scheme needs N2 >= 1");
  AntennaConfig(M, {N1, N2});
}
}  // namespace detail

/// Case A time division: `slots_user1` slots serving min(M,N1) streams to
/// user 1, then `slots_user2` slots serving min(M,N2) streams to user 2.
inline SchemeSpec plan_time_division(int M, int N1, int N2, std::size_t slots_user1, std::size_t slots_user2) {
  detail::require_two_user(M, N1, N2);
  if (slots_user1 + slots_user2 == 0) throw std::invalid_argument("time division needs at least one slot");
  SchemeSpec s;
  s.which = TwoUserCase::A;
  s.M = M;
  s.N1 = N1;
  s.N2 = N2;
  s.effective_M = M;
  s.phase_lengths = {slots_user1, slots_user2, 0};
  s.symbols_per_slot = {static_cast<std::size_t>(std::min(M, N1)), static_cast<std::size_t>(std::min(M, N2)), 0};
  return s;
}

/// Three-phase plan for N1 < M (cases B and C), time division otherwise.
/// Phase 1: T1 = N1(Me-N2) slots of Me fresh user-1 symbols, where
/// Me = min(M, N1+N2). Phase 2: T2 = N2(Me-N1) slots for user 2. Phase 3:
/// T3 = (Me-N1)(Me-N2) slots forwarding the overheard combinations, routed
/// lexicographically by (source slot, antenna).
inline SchemeSpec plan_two_user(int M, int N1, int N2) {
  detail::require_two_user(M, N1, N2);
  const TwoUserCase which = classify(M, N1, N2);
  if (which == TwoUserCase::A) return plan_time_division(M, N1, N2, 1, 1);

  SchemeSpec s;
  s.which = which;
  s.M = M;
  s.N1 = N1;
  s.N2 = N2;
  const int me = std::min(M, N1 + N2);
  s.effective_M = me;
  const auto t1 = static_cast<std::size_t>(N1 * (me - N2));
  const auto t2 = static_cast<std::size_t>(N2 * (me - N1));
  const auto t3 = static_cast<std::size_t>((me - N1) * (me - N2));
  s.phase_lengths = {t1, t2, t3};
  s.symbols_per_slot = {static_cast<std::size_t>(me), static_cast<std::size_t>(me), 0};

  // User 2 overhears user-1 combinations on its first Me-N1 antennas during
  // phase 1; user 1 overhears user-2 combinations on its first Me-N2 antennas
  // during phase 2.
  std::vector<LcRef> for_user1, for_user2;
  for (std::size_t t = 0; t < t1; ++t)
    for (int a = 0; a < me - N1; ++a) for_user1.push_back({1, t, static_cast<std::size_t>(a)});
  for (std::size_t t = t1; t < t1 + t2; ++t)
    for (int a = 0; a < me - N2; ++a) for_user2.push_back({0, t, static_cast<std::size_t>(a)});

  s.lc_routing.resize(t3);
  for (std::size_t k = 0; k < t3; ++k) {
    auto& slot = s.lc_routing[k];
    slot.to_user1.assign(for_user1.begin() + static_cast<std::ptrdiff_t>(k * N1),
                         for_user1.begin() + static_cast<std::ptrdiff_t>((k + 1) * N1));
    slot.to_user2.assign(for_user2.begin() + static_cast<std::ptrdiff_t>(k * N2),
                         for_user2.begin() + static_cast<std::ptrdiff_t>((k + 1) * N2));
  }
  return s;
}

/// Each phase-1 slot hands user 1 exactly Me-N1 extra combinations (and each
/// phase-2 slot hands user 2 Me-N2), every combination is forwarded once, and
/// every phase-3 slot carries N1 and N2 of them.
inline bool check_lc_conservation(const SchemeSpec& s) {
  if (s.which == TwoUserCase::A) return s.lc_routing.empty() && s.phase_lengths[2] == 0;
  std::map<std::size_t, std::size_t> per_slot1, per_slot2;
  std::vector<LcRef> seen;
  for (const auto& slot : s.lc_routing) {
    if (slot.to_user1.size() != static_cast<std::size_t>(s.N1) ||
        slot.to_user2.size() != static_cast<std::size_t>(s.N2))
      return false;
    for (const auto& r : slot.to_user1) ++per_slot1[r.slot], seen.push_back(r);
    for (const auto& r : slot.to_user2) ++per_slot2[r.slot], seen.push_back(r);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  const std::size_t t1 = s.phase_lengths[0], t2 = s.phase_lengths[1];
  if (per_slot1.size() != t1 || per_slot2.size() != t2) return false;
  for (const auto& [slot, n] : per_slot1)
    if (slot >= t1 || n != static_cast<std::size_t>(s.effective_M - s.N1)) return false;
  for (const auto& [slot, n] : per_slot2)
    if (slot < t1 || slot >= t1 + t2 || n != static_cast<std::size_t>(s.effective_M - s.N2)) return false;
  return s.lc_routing.size() * s.N1 == t1 * (s.effective_M - s.N1) &&
         s.lc_routing.size() * s.N2 == t2 * (s.effective_M - s.N2);
}

/// Every combination a receiver must cancel in phase 3 is one it received
/// itself earlier: user 1 cancels user-2-destined combinations that user 1
/// observed in phase 2, and vice versa.
inline bool check_side_information(const SchemeSpec& s) {
  const std::size_t t1 = s.phase_lengths[0], t2 = s.phase_lengths[1];
  for (const auto& slot : s.lc_routing) {
    for (const auto& r : slot.to_user2)
      if (r.observer != 0 || r.slot < t1 || r.slot >= t1 + t2 || r.antenna >= static_cast<std::size_t>(s.N1))
        return false;
    for (const auto& r : slot.to_user1)
      if (r.observer != 1 || r.slot >= t1 || r.antenna >= static_cast<std::size_t>(s.N2)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

/// H[t][i] is the N_i x M channel of user i in slot t.
struct ChannelRealization {
  std::uint64_t seed = 0;
  std::vector<std::array<CMatrix, 2>> H;

  friend bool operator==(const ChannelRealization& a, const ChannelRealization& b) {
    if (a.seed != b.seed || a.H.size() != b.H.size()) return false;
    for (std::size_t t = 0; t < a.H.size(); ++t)
      for (std::size_t i = 0; i < 2; ++i)
        if (a.H[t][i] != b.H[t][i]) return false;
    return true;
  }
};

/// Standard circularly-symmetric complex Gaussian, CN(0, variance).
class ComplexGaussian {
 public:
  explicit ComplexGaussian(std::uint64_t seed) : engine_(seed) {}
  Complex operator()(double variance = 1.0) {
    const double s = std::sqrt(variance / 2.0);
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {s * re, s * im};
  }
  CMatrix matrix(Eigen::Index rows, Eigen::Index cols, double variance = 1.0) {
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = (*this)(variance);
    return m;
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// i.i.d. Rayleigh fading for every slot of the plan, reproducible from seed.
inline ChannelRealization generate_channels(const SchemeSpec& spec, std::uint64_t seed) {
  ChannelRealization ch;
  ch.seed = seed;
  ComplexGaussian g(seed);
  ch.H.resize(spec.total_slots());
  for (auto& slot : ch.H) {
    slot[0] = g.matrix(spec.N1, spec.M);
    slot[1] = g.matrix(spec.N2, spec.M);
  }
  return ch;
}

/// Fresh data symbols: user[i][k] is the vector sent in the k-th slot of
/// user i's phase.
struct SymbolSet {
  std::array<std::vector<CVector>, 2> user;
};

inline SymbolSet generate_symbols(const SchemeSpec& spec, std::uint64_t seed, double power = 1.0) {
  ComplexGaussian g(seed);
  SymbolSet s;
  for (std::size_t i = 0; i < 2; ++i) {
    s.user[i].resize(spec.phase_lengths[i]);
    for (auto& v : s.user[i]) v = g.matrix(static_cast<Eigen::Index>(spec.symbols_per_slot[i]), 1, power);
  }
  return s;
}

struct Transcript {
  SchemeSpec spec;
  ChannelRealization channels;
  SymbolSet symbols;
  /// Values the transmitter rebuilt from delayed CSI, in routing order.
  std::map<LcRef, Complex> overheard_lcs;
  std::vector<CVector> transmissions;            // X(t), length M
  std::vector<std::array<CVector, 2>> received;  // Y_i(t), noiseless
};

/// Combination seen by `r.observer` in slot r.slot, rebuilt from H and u.
inline Complex rebuild_lc(const ChannelRealization& ch, const std::vector<CVector>& x, const LcRef& r) {
  const auto& h = ch.H.at(r.slot)[r.observer];
  return (h.row(static_cast<Eigen::Index>(r.antenna)) * x.at(r.slot)).value();
}

inline Transcript run_phases(const SchemeSpec& spec, const ChannelRealization& channels, const SymbolSet& symbols) {
  const std::size_t total = spec.total_slots();
  if (channels.H.size() != total) throw std::invalid_argument("channel realization does not cover the plan");
  for (std::size_t i = 0; i < 2; ++i) {
    if (symbols.user[i].size() != spec.phase_lengths[i])
      throw std::invalid_argument("symbol slot count does not match the plan");
    for (const auto& v : symbols.user[i])
      if (static_cast<std::size_t>(v.size()) != spec.symbols_per_slot[i])
        throw std::invalid_argument("symbols per slot do not match the plan");
  }
  for (std::size_t t = 0; t < total; ++t)
    if (channels.H[t][0].rows() != spec.N1 || channels.H[t][1].rows() != spec.N2 ||
        channels.H[t][0].cols() != spec.M || channels.H[t][1].cols() != spec.M)
      throw std::invalid_argument("channel shape mismatch at slot " + std::to_string(t + 1));
  if (spec.lc_routing.size() != spec.phase_lengths[2])
    throw std::invalid_argument("routing does not cover phase 3");

  Transcript tr{spec, channels, symbols, {}, {}, {}};
  tr.transmissions.assign(total, CVector::Zero(spec.M));
  const std::size_t t1 = spec.phase_lengths[0], t2 = spec.phase_lengths[1];
  for (std::size_t k = 0; k < t1; ++k) tr.transmissions[k].head(symbols.user[0][k].size()) = symbols.user[0][k];
  for (std::size_t k = 0; k < t2; ++k) tr.transmissions[t1 + k].head(symbols.user[1][k].size()) = symbols.user[1][k];

  // Phases 1-2 go out before the transmitter learns anything; phase 3 uses
  // channels of strictly earlier slots only.
  for (std::size_t k = 0; k < spec.lc_routing.size(); ++k) {
    const std::size_t t = t1 + t2 + k;
    const auto& slot = spec.lc_routing[k];
    if (slot.to_user1.size() != static_cast<std::size_t>(spec.N1) ||
        slot.to_user2.size() != static_cast<std::size_t>(spec.N2))
      throw std::invalid_argument("routing shape mismatch in phase-3 slot " + std::to_string(t + 1));
    for (std::size_t j = 0; j < slot.to_user1.size(); ++j) {
      const auto& ref = slot.to_user1[j];
      if (ref.slot >= t) throw std::invalid_argument("routing references a future slot");
      const Complex v = rebuild_lc(channels, tr.transmissions, ref);
      tr.overheard_lcs[ref] = v;
      tr.transmissions[t](static_cast<Eigen::Index>(j)) += v;
    }
    for (std::size_t j = 0; j < slot.to_user2.size(); ++j) {
      const auto& ref = slot.to_user2[j];
      if (ref.slot >= t) throw std::invalid_argument("routing references a future slot");
      const Complex v = rebuild_lc(channels, tr.transmissions, ref);
      tr.overheard_lcs[ref] = v;
      tr.transmissions[t](static_cast<Eigen::Index>(spec.user2_position(j))) += v;
    }
  }

  tr.received.resize(total);
  for (std::size_t t = 0; t < total; ++t)
    for (std::size_t i = 0; i < 2; ++i) tr.received[t][i] = channels.H[t][i] * tr.transmissions[t];
  return tr;
}

struct UserDecoding {
  std::size_t recovered_symbols = 0;
  double max_residual = 0.0;
  std::size_t inversions = 0;
  double worst_condition = 0.0;  // largest condition number among inverted matrices
  double best_condition = std::numeric_limits<double>::infinity();
};

struct DecodingReport {
  std::array<UserDecoding, 2> users;
  std::size_t total_slots = 0;
  DoFPoint achieved_dof;  // exact: symbols / slots
  std::array<std::vector<CVector>, 2> estimates;

  double max_residual() const { return std::max(users[0].max_residual, users[1].max_residual); }
};

inline double condition_number(const CMatrix& a) {
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return std::numeric_limits<double>::infinity();
  const double lo = sv(sv.size() - 1);
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / lo;
}

namespace detail {
inline CVector checked_solve(const CMatrix& a, const CVector& b, std::size_t slot, std::size_t user,
                             UserDecoding& stats) {
  const double cond = condition_number(a);
  if (!(cond <= kMaxCondition)) throw SingularChannelError(slot + 1, user + 1, cond);
  ++stats.inversions;
  stats.worst_condition = std::max(stats.worst_condition, cond);
  stats.best_condition = std::min(stats.best_condition, cond);
  return a.partialPivLu().solve(b);
}
}  // namespace detail

/// Exact rational DoF pair: recovered symbols over total slots.
inline DoFPoint achieved_dof(const DecodingReport& report, const SchemeSpec& spec) {
  const auto total = static_cast<long>(spec.total_slots());
  return {Rational(static_cast<long>(report.users[0].recovered_symbols), total),
          Rational(static_cast<long>(report.users[1].recovered_symbols), total)};
}

/// Decodes both users using only what each receiver has: its own received
/// signals, global CSI, and the routing plan.
inline DecodingReport decode(const Transcript& tr) {
  const SchemeSpec& spec = tr.spec;
  const auto& H = tr.channels.H;
  const auto& Y = tr.received;
  const Eigen::Index me = spec.effective_M;
  const std::size_t t1 = spec.phase_lengths[0], t2 = spec.phase_lengths[1];
  DecodingReport rep;
  rep.total_slots = spec.total_slots();

  auto record = [&](std::size_t user, const CVector& est, const CVector& truth) {
    rep.users[user].recovered_symbols += static_cast<std::size_t>(est.size());
    if (est.size() > 0)
      rep.users[user].max_residual = std::max(rep.users[user].max_residual, (est - truth).cwiseAbs().maxCoeff());
    rep.estimates[user].push_back(est);
  };

  if (spec.which == TwoUserCase::A) {
    for (std::size_t i = 0; i < 2; ++i) {
      const auto s = static_cast<Eigen::Index>(spec.symbols_per_slot[i]);
      const std::size_t start = spec.phase_start(i);
      for (std::size_t k = 0; k < spec.phase_lengths[i]; ++k) {
        const std::size_t t = start + k;
        CMatrix a = H[t][i].topLeftCorner(s, s);
        CVector est = detail::checked_solve(a, Y[t][i].head(s), t, i, rep.users[i]);
        record(i, est, tr.symbols.user[i][k]);
      }
    }
    rep.achieved_dof = achieved_dof(rep, spec);
    return rep;
  }

  // Phase 3: cancel known combinations, invert the square block hitting the rest.
  std::map<LcRef, Complex> learned;  // combinations delivered to their destination
  const Eigen::Index n1 = spec.N1, n2 = spec.N2;
  const Eigen::Index pos2 = me - n2;
  for (std::size_t k = 0; k < spec.lc_routing.size(); ++k) {
    const std::size_t t = t1 + t2 + k;
    const auto& slot = spec.lc_routing[k];
    CVector known2(n2), known1(n1);
    for (Eigen::Index j = 0; j < n2; ++j) {
      const auto& r = slot.to_user2[static_cast<std::size_t>(j)];
      known2(j) = Y[r.slot][0](static_cast<Eigen::Index>(r.antenna));
    }
    for (Eigen::Index j = 0; j < n1; ++j) {
      const auto& r = slot.to_user1[static_cast<std::size_t>(j)];
      known1(j) = Y[r.slot][1](static_cast<Eigen::Index>(r.antenna));
    }
    const CVector rest1 = Y[t][0] - H[t][0].block(0, pos2, n1, n2) * known2;
    const CVector got1 = detail::checked_solve(H[t][0].leftCols(n1), rest1, t, 0, rep.users[0]);
    const CVector rest2 = Y[t][1] - H[t][1].leftCols(n1) * known1;
    const CVector got2 = detail::checked_solve(H[t][1].block(0, pos2, n2, n2), rest2, t, 1, rep.users[1]);
    for (Eigen::Index j = 0; j < n1; ++j) learned[slot.to_user1[static_cast<std::size_t>(j)]] = got1(j);
    for (Eigen::Index j = 0; j < n2; ++j) learned[slot.to_user2[static_cast<std::size_t>(j)]] = got2(j);
  }

  // Phases 1-2: own observations stacked with the forwarded ones.
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t other = 1 - i;
    const Eigen::Index own = spec.rx(i);
    const Eigen::Index extra = me - own;
    const std::size_t start = spec.phase_start(i);
    for (std::size_t k = 0; k < spec.phase_lengths[i]; ++k) {
      const std::size_t t = start + k;
      CMatrix a(me, me);
      CVector b(me);
      a.topRows(own) = H[t][i].leftCols(me);
      b.head(own) = Y[t][i];
      for (Eigen::Index j = 0; j < extra; ++j) {
        const LcRef ref{other, t, static_cast<std::size_t>(j)};
        auto it = learned.find(ref);
        if (it == learned.end()) throw std::logic_error("combination never forwarded");
        a.row(own + j) = H[t][other].row(j).head(me);
        b(own + j) = it->second;
      }
      CVector est = detail::checked_solve(a, b, t, i, rep.users[i]);
      record(i, est, tr.symbols.user[i][k]);
    }
  }
  rep.achieved_dof = achieved_dof(rep, spec);
  return rep;
}

// ---------------------------------------------------------------------------

/// splitmix64; used to derive independent per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::vector<std::uint64_t> sub_seeds(std::uint64_t seed, std::size_t count) {
  std::vector<std::uint64_t> out(count);
  std::uint64_t state = seed;
  for (auto& s : out) s = splitmix64(state);
  return out;
}

/// One noiseless trial: channels and symbols drawn from a single sub-seed.
inline DecodingReport run_trial(const SchemeSpec& spec, std::uint64_t sub_seed) {
  const auto ch = generate_channels(spec, sub_seed);
  std::uint64_t state = sub_seed ^ 0x5DEECE66DULL;
  const auto sy = generate_symbols(spec, splitmix64(state));
  return decode(run_phases(spec, ch, sy));
}

struct TrialFailure {
  std::size_t trial = 0;
  std::uint64_t sub_seed = 0;
  std::size_t slot = 0;  // 1-based, 0 when not slot-specific
  std::size_t user = 0;  // 1-based, 0 when not user-specific
  std::string message;
};

struct TrialsSummary {
  SchemeSpec spec;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;
  double worst_condition = 0.0;
  std::optional<DoFPoint> achieved_dof;  // common to every successful trial
  bool dof_consistent = true;
  std::vector<TrialFailure> failure_log;

  bool ok() const { return failures == 0 && dof_consistent && achieved_dof.has_value(); }
};

inline TrialsSummary simulate_trials(const SchemeSpec& spec, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  TrialsSummary sum;
  sum.spec = spec;
  sum.trials = trials;
  const auto seeds = sub_seeds(seed, trials);
  for (std::size_t i = 0; i < trials; ++i) {
    try {
      const auto rep = run_trial(spec, seeds[i]);
      sum.max_residual = std::max(sum.max_residual, rep.max_residual());
      for (const auto& u : rep.users) sum.worst_condition = std::max(sum.worst_condition, u.worst_condition);
      if (!(rep.max_residual() < kResidualTolerance)) {
        ++sum.failures;
        sum.failure_log.push_back({i, seeds[i], 0, 0, "residual " + std::to_string(rep.max_residual())});
        continue;
      }
      if (!sum.achieved_dof)
        sum.achieved_dof = rep.achieved_dof;
      else if (*sum.achieved_dof != rep.achieved_dof)
        sum.dof_consistent = false;
    } catch (const SingularChannelError& e) {
      ++sum.failures;
      sum.failure_log.push_back({i, seeds[i], e.slot, e.user, e.what()});
    }
  }
  return sum;
}

inline TrialsSummary simulate_trials(int M, int N1, int N2, std::size_t trials, std::uint64_t seed) {
  return simulate_trials(plan_two_user(M, N1, N2), trials, seed);
}

}  // namespace doflab

#endif  // DOFLAB_SCHEME_HPP
