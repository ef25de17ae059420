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

#ifndef STEERSIM_BASELINES_HPP
#define STEERSIM_BASELINES_HPP

#include <armadillo>
#include <cmath>
#include <string>
#include <vector>

#include "steersim/errors.hpp"
#include "steersim/mimo.hpp"
#include "steersim/steering.hpp"

namespace steersim {

/// Interference-management methods under comparison.
enum class MethodLabel { IS, IN, IA, ZFBF, P2P };

inline std::string to_string(MethodLabel m) {
    switch (m) {
        case MethodLabel::IS: return "IS";
        case MethodLabel::IN: return "IN";
        case MethodLabel::IA: return "IA";
        case MethodLabel::ZFBF: return "ZFBF";
        case MethodLabel::P2P: return "P2P";
    }
    throw config_error("unknown method label");
}

inline MethodLabel method_from_string(const std::string& s) {
    if (s == "IS") return MethodLabel::IS;
    if (s == "IN") return MethodLabel::IN;
    if (s == "IA") return MethodLabel::IA;
    if (s == "ZFBF") return MethodLabel::ZFBF;
    if (s == "P2P") return MethodLabel::P2P;
    throw config_error("unknown method '" + s + "'");
}

/// Per-link spectral efficiencies of one realization under one method.
struct SeBreakdown {
    double victim_se = 0.0;
    std::vector<double> interferer_se;
    double system_se = 0.0;
    bool victim_infeasible = false; // steering overhead exceeded the budget
};

/// One victim plus M interferers, with no interference among the
/// interferers themselves. cross[m] is the channel from interferer m's AP
/// to the victim STA.
struct StarScenario {
    double power = 1.0;
    ChannelMatrix victim_direct;
    std::vector<ChannelMatrix> interferer_direct;
    std::vector<ChannelMatrix> cross;
};

/// Spectral efficiency of an interference-free beamformed link: the
/// reference every method is measured against.
inline double p2p_bf_se(const ChannelMatrix& H, double total_power,
                        const NoiseModel& noise) {
    const BeamformPair bf = svd_beamform(H);
    return shannon_se(total_power * bf.principal_gain * bf.principal_gain /
                      noise.variance);
}

/// Zero-forcing precoder for a single-antenna victim: maximum-ratio
/// transmission projected into the null space of the cross channel, so the
/// victim receives exactly nothing. If the own channel is collinear with
/// the cross channel the projection vanishes and any null-space direction
/// is returned (the link then has zero gain).
inline arma::cx_vec zfbf_precoder(const ChannelMatrix& own_channel,
                                  const ChannelMatrix& cross_channel) {
    if (own_channel.n_r() != 1 || cross_channel.n_r() != 1) {
        throw dimension_error("zfbf_precoder expects 1 x n_t row channels");
    }
    if (own_channel.n_t() < 2 || cross_channel.n_t() != own_channel.n_t()) {
        throw dimension_error("zfbf_precoder requires matching n_t >= 2");
    }
    const arma::cx_vec c = cross_channel.entries.st(); // row as column
    const double cn = arma::norm(c);
    if (!(cn > 0.0)) {
        throw degenerate_channel_error("cross channel is zero");
    }
    const arma::cx_vec u = arma::conj(c) / cn; // cross row = cn * u^H
    const arma::cx_vec mrt = own_channel.entries.t(); // h^H, MRT direction
    arma::cx_vec p = mrt - u * arma::cdot(u, mrt);
    const double pn = arma::norm(p);
    if (pn > 1e-12 * arma::norm(mrt)) {
        return p / pn;
    }
    // own channel fully inside the forbidden direction: zero-gain fallback
    arma::cx_mat basis = arma::null(cross_channel.entries);
    arma::cx_vec fb = basis.col(0);
    return fb / arma::norm(fb);
}

/// Alignment precoder for one interferer: its signal is forced to arrive
/// at the victim along the victim's second left-singular direction, the
/// receive dimension the victim's principal-mode filter ignores.
inline arma::cx_vec ia_precoder(const ChannelMatrix& cross_channel,
                                const ChannelMatrix& victim_direct) {
    if (victim_direct.n_r() < 2) {
        throw dimension_error("ia_precoder requires n_r >= 2 at the victim");
    }
    if (cross_channel.n_r() != victim_direct.n_r()) {
        throw dimension_error("ia_precoder receiver dimension mismatch");
    }
    arma::cx_mat U, V;
    arma::vec s;
    if (!arma::svd(U, s, V, victim_direct.entries)) {
        throw degenerate_channel_error("svd failed on victim channel");
    }
    const arma::cx_vec w =
        detail::pinv_apply(cross_channel.entries, U.col(1));
    return w / arma::norm(w);
}

/// Own-link SE of an interferer that switched to the alignment precoder.
/// Its STA keeps the principal-mode filter trained for the original
/// beamformed link (the alignment change is transparent to it), so the
/// effective gain is the filtered projection of the new beam.
inline double ia_interferer_se(const ChannelMatrix& own_channel,
                               const arma::cx_vec& aligned_precoder,
                               double total_power, const NoiseModel& noise) {
    const BeamformPair bf = svd_beamform(own_channel);
    const cx g = arma::cdot(bf.filter, own_channel.entries * aligned_precoder);
    return shannon_se(total_power * std::norm(g) / noise.variance);
}

/// Own-link SE of an interferer that zero-forces toward the victim.
inline double zfbf_interferer_se(const ChannelMatrix& own_channel,
                                 const arma::cx_vec& zf_precoder,
                                 double total_power, const NoiseModel& noise) {
    const cx g = arma::as_scalar(own_channel.entries * zf_precoder);
    return shannon_se(total_power * std::norm(g) / noise.variance);
}

/// System spectral efficiency of a star realization under one method.
///
///  - IS / IN: the victim's AP pays the steering overhead, every
///    interferer keeps its untouched beamformed link.
///  - IA / ZFBF: the victim becomes interference-free (full reference SE),
///    every interferer pays with a degraded own link.
///  - P2P: the interference-free upper bound for every link.
inline SeBreakdown system_se(MethodLabel method, const StarScenario& sc,
                             const NoiseModel& noise) {
    const std::size_t M = sc.interferer_direct.size();
    if (sc.cross.size() != M) {
        throw dimension_error("star scenario: cross/interferer count mismatch");
    }
    SeBreakdown out;
    switch (method) {
        case MethodLabel::P2P: {
            out.victim_se = p2p_bf_se(sc.victim_direct, sc.power, noise);
            for (std::size_t m = 0; m < M; ++m) {
                out.interferer_se.push_back(
                    p2p_bf_se(sc.interferer_direct[m], sc.power, noise));
            }
            break;
        }
        case MethodLabel::IS:
        case MethodLabel::IN: {
            const BeamformPair vbf = svd_beamform(sc.victim_direct);
            std::vector<InterfererLink> links;
            for (std::size_t m = 0; m < M; ++m) {
                links.push_back(InterfererLink{
                    static_cast<int>(m + 1), sc.cross[m],
                    TransmitIntent(sc.power,
                                   svd_beamform(sc.interferer_direct[m]).precoder)});
            }
            const CombinedInterference agg =
                combine(sc.victim_direct.n_r(), links);
            const SteeringSolution sol =
                method == MethodLabel::IS
                    ? steer(vbf, sc.victim_direct, sc.victim_direct, agg,
                            SpatialSignal{arma::cx_vec(sc.victim_direct.n_r(),
                                                       arma::fill::zeros),
                                          SignalLabel::steering},
                            sc.power)
                    : neutralize(sc.victim_direct, agg, sc.power);
            out.victim_infeasible = !sol.feasible;
            out.victim_se = shannon_se(
                victim_snr(sc.power, sol.power, vbf.principal_gain, noise));
            for (std::size_t m = 0; m < M; ++m) {
                out.interferer_se.push_back(
                    p2p_bf_se(sc.interferer_direct[m], sc.power, noise));
            }
            break;
        }
        case MethodLabel::IA: {
            out.victim_se = p2p_bf_se(sc.victim_direct, sc.power, noise);
            for (std::size_t m = 0; m < M; ++m) {
                const arma::cx_vec p = ia_precoder(sc.cross[m], sc.victim_direct);
                out.interferer_se.push_back(
                    ia_interferer_se(sc.interferer_direct[m], p, sc.power, noise));
            }
            break;
        }
        case MethodLabel::ZFBF: {
            out.victim_se = p2p_bf_se(sc.victim_direct, sc.power, noise);
            for (std::size_t m = 0; m < M; ++m) {
                const arma::cx_vec p =
                    zfbf_precoder(sc.interferer_direct[m], sc.cross[m]);
                out.interferer_se.push_back(zfbf_interferer_se(
                    sc.interferer_direct[m], p, sc.power, noise));
            }
            break;
        }
    }
    out.system_se = out.victim_se;
    for (double r : out.interferer_se) {
        out.system_se += r;
    }
    return out;
}

} // namespace steersim

#endif
