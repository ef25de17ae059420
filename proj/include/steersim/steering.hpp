// SPDX-License-Identifier: Apache-2.0
//
// steersim: link-level simulation of transmitter-side interference steering
// for multi-BSS MIMO WLANs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef STEERSIM_STEERING_HPP
#define STEERSIM_STEERING_HPP

#include <armadillo>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "steersim/errors.hpp"
#include "steersim/mimo.hpp"

namespace steersim {

enum class SteerMode { steer, neutralize };

/// Transmit-side solution that cancels (part of) the interference seen by
/// a victim receiver. `power` is the overhead paid out of the executing
/// AP's budget. Infeasible solutions keep their computed power for
/// diagnostics; a zero-power solution carries a zero precoder (nothing is
/// radiated).
struct SteeringSolution {
    arma::cx_vec precoder;
    double power = 0.0;
    SteerMode mode = SteerMode::steer;
    bool feasible = true;
};

/// Aggregate interference at one receiver, amplitude level (each term
/// carries its sqrt-power scaling; unit data symbols are folded out).
struct CombinedInterference {
    SpatialSignal vector;
    std::vector<int> contributors;
};

/// One interfering transmission as seen by the victim.
struct InterfererLink {
    int source_id;
    ChannelMatrix channel; // interferer AP -> victim STA
    TransmitIntent intent;
};

namespace detail {

/// Minimum-norm solve w = H^+ t with a conditioning guard. Rayleigh draws
/// can come arbitrarily close to singular; past 1e12 the solution power is
/// numerically meaningless.
inline arma::cx_vec pinv_apply(const arma::cx_mat& H, const arma::cx_vec& t,
                               double max_condition = 1e12) {
    arma::cx_mat U, V;
    arma::vec s;
    if (!arma::svd(U, s, V, H)) {
        throw singular_channel_error("svd failed on steering channel");
    }
    const arma::uword rank_needed = H.n_rows; // full row rank required
    const double smin = s(rank_needed - 1);
    if (!(smin > 0.0) || s(0) / smin > max_condition) {
        throw singular_channel_error("steering channel is rank deficient or "
                                     "near-singular (condition > 1e12)");
    }
    arma::cx_vec coeff = U.head_cols(rank_needed).t() * t;
    coeff /= arma::cx_vec(s.head(rank_needed),
                          arma::vec(rank_needed, arma::fill::zeros));
    return V.head_cols(rank_needed) * coeff;
}

inline SteeringSolution make_solution(arma::cx_vec w, SteerMode mode,
                                      double power_budget) {
    SteeringSolution sol;
    sol.power = std::pow(arma::norm(w), 2);
    sol.mode = mode;
    if (sol.power > 0.0) {
        sol.precoder = w / arma::norm(w);
    } else {
        sol.precoder = arma::cx_vec(w.n_elem, arma::fill::zeros);
    }
    sol.feasible = sol.power <= power_budget;
    return sol;
}

} // namespace detail

/// Component of v along a unit direction (idempotent Hermitian projection).
inline arma::cx_vec project_onto(const arma::cx_vec& direction,
                                 const arma::cx_vec& v) {
    if (std::abs(arma::norm(direction) - 1.0) > 1e-9) {
        throw normalization_error("projection direction must be unit-norm");
    }
    if (direction.n_elem != v.n_elem) {
        throw dimension_error("projection dimension mismatch");
    }
    return direction * arma::cdot(direction, v);
}

/// Amplitude-level aggregate of several interfering transmissions at one
/// receiver: sum over links of sqrt(P) H p. An empty list yields the zero
/// vector of length n_r and no contributors.
inline CombinedInterference combine(arma::uword n_r,
                                    std::span<const InterfererLink> interferers) {
    arma::cx_vec total(n_r, arma::fill::zeros);
    std::vector<int> ids;
    for (const InterfererLink& l : interferers) {
        if (l.channel.n_r() != n_r) {
            throw dimension_error("interferer receiver dimension mismatch");
        }
        total += std::sqrt(l.intent.power) * (l.channel.entries * l.intent.precoder);
        ids.push_back(l.source_id);
    }
    return CombinedInterference{SpatialSignal{std::move(total), SignalLabel::interference},
                                std::move(ids)};
}

/// Interference-steering solution through `steer_channel` (the channel
/// from the executing AP to the victim STA).
///
/// The target received steering signal is
///     t = -(component of the interference along the desired direction)
///         + quadrature_choice,
/// so that after superposition the residual interference at the victim is
/// orthogonal to the desired direction. quadrature_choice must itself be
/// orthogonal to the desired direction; passing the negated quadrature
/// part of the interference turns steering into full neutralization.
/// The desired direction is H_victim p_victim, normalized.
/// With quadrature_choice = 0 the overhead is power-minimal.
inline SteeringSolution steer(const BeamformPair& victim_bf,
                              const ChannelMatrix& victim_direct,
                              const ChannelMatrix& steer_channel,
                              const CombinedInterference& interference,
                              const SpatialSignal& quadrature_choice,
                              double power_budget) {
    arma::cx_vec d_s = victim_direct.entries * victim_bf.precoder;
    const double nds = arma::norm(d_s);
    if (!(nds > 0.0)) {
        throw degenerate_channel_error("victim channel maps the precoder to zero");
    }
    d_s /= nds;
    const arma::cx_vec& i = interference.vector.vector;
    const arma::cx_vec& q = quadrature_choice.vector;
    if (i.n_elem != d_s.n_elem || q.n_elem != d_s.n_elem ||
        steer_channel.n_r() != d_s.n_elem) {
        throw dimension_error("steer: receiver dimension mismatch");
    }
    const double qn = arma::norm(q);
    if (std::abs(arma::cdot(d_s, q)) > 1e-9 * std::max(1.0, qn)) {
        throw invalid_quadrature_error("quadrature choice has a component along "
                                       "the desired direction");
    }
    const arma::cx_vec target = -project_onto(d_s, i) + q;
    return detail::make_solution(detail::pinv_apply(steer_channel.entries, target),
                                 SteerMode::steer, power_budget);
}

/// Full interference neutralization through `steer_channel`: the received
/// steering signal is the exact negative of the aggregate interference.
inline SteeringSolution neutralize(const ChannelMatrix& steer_channel,
                                   const CombinedInterference& interference,
                                   double power_budget) {
    const arma::cx_vec& i = interference.vector.vector;
    if (steer_channel.n_r() != i.n_elem) {
        throw dimension_error("neutralize: receiver dimension mismatch");
    }
    return detail::make_solution(detail::pinv_apply(steer_channel.entries, -i),
                                 SteerMode::neutralize, power_budget);
}

/// Post-processing SNR of the victim once its interference has been
/// steered away: the desired signal keeps the budget minus the steering
/// overhead. An overhead above the budget means no solution exists and
/// the victim's SNR (hence SE) is accounted as zero.
inline double victim_snr(double total_power, double steering_power,
                         double principal_gain, const NoiseModel& noise) {
    if (steering_power < 0.0 || principal_gain < 0.0) {
        throw domain_error("victim_snr requires nonnegative power and gain");
    }
    if (steering_power > total_power) {
        return 0.0;
    }
    return (total_power - steering_power) * principal_gain * principal_gain /
           noise.variance;
}

/// Steering overhead when the victim's own AP executes the solution
/// through its own channel. Equals |u1^H i|^2 / lambda1^2: in the singular
/// basis of the victim channel the power-minimal target excites only the
/// principal mode, which is why this never exceeds the neutralization
/// overhead through the same channel.
inline double noncoop_overhead(const BeamformPair& victim_bf,
                               const ChannelMatrix& victim_direct,
                               const CombinedInterference& interference) {
    const SpatialSignal zero_q{
        arma::cx_vec(victim_direct.n_r(), arma::fill::zeros), SignalLabel::steering};
    return steer(victim_bf, victim_direct, victim_direct, interference, zero_q,
                 std::numeric_limits<double>::infinity())
        .power;
}

/// Steering overhead when a third-party AP (channel helper -> victim)
/// executes the same power-minimal solution.
inline double coop_overhead(const BeamformPair& victim_bf,
                            const ChannelMatrix& victim_direct,
                            const ChannelMatrix& helper_channel,
                            const CombinedInterference& interference) {
    const SpatialSignal zero_q{
        arma::cx_vec(victim_direct.n_r(), arma::fill::zeros), SignalLabel::steering};
    return steer(victim_bf, victim_direct, helper_channel, interference, zero_q,
                 std::numeric_limits<double>::infinity())
        .power;
}

/// Post-filter SINR at the STA of an AP that spends part of its budget
/// steering on behalf of somebody else's victim. The steering replica
/// leaves through the same antennas as the data and the STA's receiver is
/// not told about it, so it degrades the link twice: the data loses the
/// overhead power, and the replica lands as residual interference behind
/// the principal-mode filter. Strictly below the no-steering SNR for any
/// positive overhead; returns 0 when the overhead exceeds the budget.
inline double interferer_side_is_snr(const ChannelMatrix& interferer_direct,
                                     const TransmitIntent& own_intent,
                                     const SteeringSolution& steering_solution,
                                     const NoiseModel& noise) {
    if (steering_solution.power > own_intent.power) {
        return 0.0;
    }
    const BeamformPair bf = svd_beamform(interferer_direct);
    const double data_power = own_intent.power - steering_solution.power;
    const cx a =
        arma::cdot(bf.filter, interferer_direct.entries * own_intent.precoder);
    double leak = 0.0;
    if (steering_solution.power > 0.0) {
        const cx b = arma::cdot(bf.filter, interferer_direct.entries *
                                               steering_solution.precoder);
        leak = steering_solution.power * std::norm(b);
    }
    return data_power * std::norm(a) / (noise.variance + leak);
}

} // namespace steersim

#endif
