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

#ifndef STEERSIM_CONTROLLER_HPP
#define STEERSIM_CONTROLLER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "steersim/baselines.hpp"
#include "steersim/errors.hpp"
#include "steersim/mimo.hpp"
#include "steersim/netgraph.hpp"
#include "steersim/steering.hpp"

namespace steersim {

/// Per-transmission disposition produced by the central controller, after
/// cycle breaking and topologically ordered steering computation.
struct ControllerPlan {
    enum class Action { untouched, steer, blocked };

    struct Entry {
        Action action = Action::untouched;
        std::optional<SteeringSolution> solution;
    };

    std::map<int, Entry> dispositions;
    std::vector<int> order; // processing sequence over all components
    std::map<int, CombinedInterference> accumulated;
    InterferenceGraph graph;    // as built from the state
    InterferenceGraph residual; // after blocking

    std::vector<int> blocked() const {
        std::vector<int> out;
        for (const auto& [v, e] : dispositions) {
            if (e.action == Action::blocked) out.push_back(v);
        }
        return out;
    }
};

/// Evaluation of a plan: per-transmission and total spectral efficiency.
/// Blocked and power-infeasible transmissions score zero.
struct SEReport {
    std::map<int, double> per_vertex_se;
    double system_se = 0.0;
    int infeasible_count = 0;
    int steering_count = 0;
};

/// Compute the controller plan for one network state.
///
/// Pipeline: build the interference graph, split it into weakly connected
/// components, break cycles per component (deleted vertices are blocked),
/// order each residual topologically, then walk that order computing a
/// non-cooperative steering solution for every vertex that still has
/// incoming interference. A predecessor that steers contributes both its
/// (budget-reduced) data interference and its steering side effect; one
/// whose own solution was infeasible transmits plain data at full power.
/// Vertices with no incoming edge are never charged any overhead.
inline ControllerPlan plan(const NetworkState& state,
                           SteerMode mode = SteerMode::steer) {
    state.validate();
    ControllerPlan out;
    out.graph = build_graph(state);

    std::vector<int> residual_vertices;
    for (const InterferenceGraph& comp : connected_components(out.graph)) {
        const CycleBreakResult broken = break_cycles(comp);
        for (int v : broken.deleted) {
            out.dispositions[v] = {ControllerPlan::Action::blocked, std::nullopt};
        }
        const std::vector<int> comp_order = topological_order(broken.residual);
        out.order.insert(out.order.end(), comp_order.begin(), comp_order.end());
        residual_vertices.insert(residual_vertices.end(),
                                 broken.residual.vertices.begin(),
                                 broken.residual.vertices.end());
    }
    out.residual = out.graph.induced(residual_vertices);

    std::map<int, BeamformPair> bf;
    for (int v : out.order) {
        bf[v] = svd_beamform(state.channel(v, v));
    }

    for (int v : out.order) {
        const std::vector<int> preds = out.residual.predecessors(v);
        if (preds.empty()) {
            out.dispositions[v] = {ControllerPlan::Action::untouched, std::nullopt};
            continue;
        }
        arma::cx_vec total(state.channel(v, v).n_r(), arma::fill::zeros);
        for (int m : preds) {
            const arma::cx_mat& Hmv = state.channel(m, v).entries;
            double data_power = state.power;
            const auto& pred_entry = out.dispositions.at(m);
            if (pred_entry.action == ControllerPlan::Action::steer &&
                pred_entry.solution->feasible) {
                data_power = state.power - pred_entry.solution->power;
                total += std::sqrt(pred_entry.solution->power) *
                         (Hmv * pred_entry.solution->precoder);
            }
            total += std::sqrt(data_power) * (Hmv * bf.at(m).precoder);
        }
        CombinedInterference agg{
            SpatialSignal{std::move(total), SignalLabel::interference}, preds};

        const ChannelMatrix& own = state.channel(v, v);
        SteeringSolution sol =
            mode == SteerMode::steer
                ? steer(bf.at(v), own, own, agg,
                        SpatialSignal{arma::cx_vec(own.n_r(), arma::fill::zeros),
                                      SignalLabel::steering},
                        state.power)
                : neutralize(own, agg, state.power);
        out.dispositions[v] = {ControllerPlan::Action::steer, std::move(sol)};
        out.accumulated.emplace(v, std::move(agg));
    }
    return out;
}

/// Spectral efficiency of every transmission under a plan. Untouched
/// vertices run interference-free beamforming at full power; steering
/// victims keep the post-steering analytic SNR; blocked or infeasible
/// vertices contribute zero.
inline SEReport evaluate(const ControllerPlan& plan_, const NetworkState& state,
                         const NoiseModel& noise) {
    SEReport rep;
    for (const auto& [v, entry] : plan_.dispositions) {
        double se = 0.0;
        switch (entry.action) {
            case ControllerPlan::Action::blocked:
                break;
            case ControllerPlan::Action::untouched:
                se = p2p_bf_se(state.channel(v, v), state.power, noise);
                break;
            case ControllerPlan::Action::steer: {
                ++rep.steering_count;
                if (!entry.solution->feasible) {
                    ++rep.infeasible_count;
                    break;
                }
                const BeamformPair bf = svd_beamform(state.channel(v, v));
                se = shannon_se(victim_snr(state.power, entry.solution->power,
                                           bf.principal_gain, noise));
                break;
            }
        }
        rep.per_vertex_se[v] = se;
        rep.system_se += se;
    }
    return rep;
}

} // namespace steersim

#endif
