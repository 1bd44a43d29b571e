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

#ifndef DOFLAB_RATE_HPP
#define DOFLAB_RATE_HPP

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doflab/errors.hpp"
#include "doflab/scheme.hpp"

namespace doflab {

/// End-to-end model seen by one receiver: y = A u + B w, with u the user's
/// i.i.d. CN(0, symbol_power) symbols and w i.i.d. CN(0, 1) receiver noise.
struct LinearModel {
  CMatrix A;
  CMatrix B;
};

struct RateCurve {
  std::vector<double> snr_db;
  std::array<std::vector<double>, 2> rate;  // bits per slot
  std::array<double, 2> slope{};            // d rate / d log2(P)

  double sum_slope() const { return slope[0] + slope[1]; }
};

namespace detail {

// Noise index of receive antenna `antenna` of the receiver in slot `slot`.
inline Eigen::Index noise_index(const SchemeSpec& spec, std::size_t user, std::size_t slot, std::size_t antenna) {
  return static_cast<Eigen::Index>(slot * static_cast<std::size_t>(spec.rx(user)) + antenna);
}

// Per-slot phase-3 gain that makes E||X(t)||^2 equal the power budget, given
// the (by then known) channels that produced the forwarded combinations.
inline double phase3_gain(const SchemeSpec& spec, const ChannelRealization& ch, const Phase3Slot& slot,
                          double power, double symbol_power) {
  double energy = 0.0;
  const Eigen::Index me = spec.effective_M;
  for (const auto* list : {&slot.to_user1, &slot.to_user2})
    for (const auto& r : *list)
      energy += ch.H[r.slot][r.observer].row(static_cast<Eigen::Index>(r.antenna)).head(me).squaredNorm();
  energy *= symbol_power;
  return energy > 0.0 ? std::sqrt(power / energy) : 0.0;
}

}  // namespace detail

/// Receiver `user`'s model for a plan at transmit power `power`. Phase-3
/// side information is the receiver's own noisy earlier observation, so the
/// cancellation leaves that noise behind with a known colouring.
inline LinearModel build_linear_model(const SchemeSpec& spec, const ChannelRealization& ch, std::size_t user,
                                      double power) {
  const std::size_t other = 1 - user;
  const Eigen::Index me = spec.effective_M;
  const Eigen::Index nr = spec.rx(user);
  const Eigen::Index per_slot = static_cast<Eigen::Index>(spec.symbols_per_slot[user]);
  const std::size_t own_slots = spec.phase_lengths[user];
  const std::size_t own_start = spec.phase_start(user);
  const double symbol_power = power / static_cast<double>(spec.N1 + spec.N2);

  const Eigen::Index rows = nr * static_cast<Eigen::Index>(own_slots + spec.phase_lengths[2]);
  LinearModel m;
  m.A = CMatrix::Zero(rows, per_slot * static_cast<Eigen::Index>(own_slots));
  m.B = CMatrix::Zero(rows, nr * static_cast<Eigen::Index>(spec.total_slots()));

  Eigen::Index row = 0;
  for (std::size_t k = 0; k < own_slots; ++k, row += nr) {
    const std::size_t t = own_start + k;
    m.A.block(row, static_cast<Eigen::Index>(k) * per_slot, nr, per_slot) = ch.H[t][user].leftCols(per_slot);
    m.B.block(row, detail::noise_index(spec, user, t, 0), nr, nr).setIdentity();
  }

  const std::size_t p3 = spec.phase_start(2);
  for (std::size_t k = 0; k < spec.lc_routing.size(); ++k, row += nr) {
    const std::size_t t = p3 + k;
    const auto& slot = spec.lc_routing[k];
    const double beta = detail::phase3_gain(spec, ch, slot, power, symbol_power);
    const CMatrix& h = ch.H[t][user];
    const auto& mine = user == 0 ? slot.to_user1 : slot.to_user2;
    const auto& theirs = user == 0 ? slot.to_user2 : slot.to_user1;
    auto position = [&](std::size_t who, std::size_t j) {
      return static_cast<Eigen::Index>(who == 0 ? j : spec.user2_position(j));
    };
    for (std::size_t j = 0; j < mine.size(); ++j) {
      const auto& r = mine[j];
      const Eigen::Index col = static_cast<Eigen::Index>(r.slot - own_start) * per_slot;
      const auto lc = ch.H[r.slot][r.observer].row(static_cast<Eigen::Index>(r.antenna)).head(me);
      m.A.block(row, col, nr, me) += beta * h.col(position(user, j)) * lc;
    }
    m.B.block(row, detail::noise_index(spec, user, t, 0), nr, nr).setIdentity();
    for (std::size_t j = 0; j < theirs.size(); ++j) {
      const auto& r = theirs[j];
      m.B.col(detail::noise_index(spec, user, r.slot, r.antenna)).segment(row, nr) -=
          beta * h.col(position(other, j));
    }
  }
  return m;
}

namespace detail {
inline double log2det_hermitian(const CMatrix& a, std::size_t user) {
  Eigen::LLT<CMatrix> llt(a);
  if (llt.info() != Eigen::Success) throw SingularChannelError(0, user + 1, std::numeric_limits<double>::infinity());
  double s = 0.0;
  const CMatrix& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i) s += std::log2(l(i, i).real());
  return 2.0 * s;
}
}  // namespace detail

/// Gaussian-input mutual information of the model, in bits per slot.
inline double gaussian_rate(const SchemeSpec& spec, const ChannelRealization& ch, std::size_t user, double power) {
  const auto m = build_linear_model(spec, ch, user, power);
  if (m.A.cols() == 0) return 0.0;
  const double symbol_power = power / static_cast<double>(spec.N1 + spec.N2);
  const CMatrix cov = m.B * m.B.adjoint();
  const double cond = condition_number(cov);
  if (!(cond <= kMaxCondition)) throw SingularChannelError(0, user + 1, cond);
  const CMatrix total = cov + symbol_power * m.A * m.A.adjoint();
  const double bits = detail::log2det_hermitian(total, user) - detail::log2det_hermitian(cov, user);
  return bits / static_cast<double>(spec.total_slots());
}

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw std::invalid_argument("slope fit needs distinct abscissae");
  return (n * sxy - sx * sy) / den;
}

inline RateCurve rate_slope_estimate(const SchemeSpec& spec, std::uint64_t seed, const std::vector<double>& snr_db) {
  if (snr_db.size() < 3) throw std::invalid_argument("rate slope fit needs at least 3 SNR points");
  const auto ch = generate_channels(spec, seed);
  RateCurve c;
  c.snr_db = snr_db;
  std::vector<double> log2p;
  for (double db : snr_db) {
    const double p = std::pow(10.0, db / 10.0);
    log2p.push_back(std::log2(p));
    for (std::size_t i = 0; i < 2; ++i) c.rate[i].push_back(gaussian_rate(spec, ch, i, p));
  }
  for (std::size_t i = 0; i < 2; ++i) c.slope[i] = fit_slope(log2p, c.rate[i]);
  return c;
}

inline std::string rate_curve_csv(const RateCurve& c) {
  std::ostringstream os;
  os.precision(17);
  os << "snr_db,rate_user1,rate_user2\n";
  for (std::size_t k = 0; k < c.snr_db.size(); ++k) os << c.snr_db[k] << "," << c.rate[0][k] << "," << c.rate[1][k] << "\n";
  return os.str();
}

}  // namespace doflab

#endif  // DOFLAB_RATE_HPP
