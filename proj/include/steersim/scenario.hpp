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

#ifndef STEERSIM_SCENARIO_HPP
#define STEERSIM_SCENARIO_HPP

#include <armadillo>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "steersim/baselines.hpp"
#include "steersim/errors.hpp"
#include "steersim/mimo.hpp"
#include "steersim/netgraph.hpp"
#include "steersim/rng.hpp"

namespace steersim {

/// Knobs of one Monte-Carlo experiment over random network states.
struct ScenarioConfig {
    int K = 2;            // number of BSSs
    double p_b = 0.5;     // probability of an interference-matrix entry
    int eta = 1;          // max interferers per victim
    double snr_db = 15.0; // per-link SNR, P_T / sigma^2 in dB
    long trials = 10000;
    std::uint64_t seed = 1;
    MethodLabel method = MethodLabel::IS;
    int n_t = 2;
    int n_r = 2;

    void validate() const {
        if (K < 1) throw config_error("K must be >= 1");
        if (p_b < 0.0 || p_b > 1.0) throw config_error("p_b must be in [0, 1]");
        if (eta < 1) throw config_error("eta must be >= 1");
        if (trials < 1) throw config_error("trials must be >= 1");
        if (n_r < 1 || n_t < n_r) throw config_error("need n_t >= n_r >= 1");
    }
};

/// Noise level for a target per-link SNR with the AP power normalized to 1.
inline NoiseModel noise_from_snr_db(double snr_db, double total_power = 1.0) {
    return NoiseModel(total_power / std::pow(10.0, snr_db / 10.0));
}

/// Random network state for one trial: every AP transmits, the
/// interference matrix gets i.i.d. Bernoulli(p_b) off-diagonal draws with
/// at most eta accepted per victim row (later successes in a full row are
/// discarded, so the in-degree cap holds exactly), and a fresh Rayleigh
/// realization is drawn for every hearing pair. Fully determined by
/// (seed, trial_index).
inline NetworkState generate_scenario(const ScenarioConfig& cfg,
                                      long trial_index) {
    cfg.validate();
    RngStream rng(split_seed(cfg.seed, static_cast<std::uint64_t>(trial_index)));
    const int K = cfg.K;
    NetworkState state;
    state.power = 1.0;
    state.connection.eye(K, K);
    state.transmitting.ones(K);
    for (int n = 0; n < K; ++n) {
        int accepted = 0;
        for (int m = 0; m < K; ++m) {
            if (m == n) continue;
            const bool hit = rng.bernoulli(cfg.p_b);
            if (hit && accepted < cfg.eta) {
                state.connection(n, m) = 1;
                ++accepted;
            }
        }
    }
    for (int n = 0; n < K; ++n) {
        for (int m = 0; m < K; ++m) {
            if (state.connection(n, m) == 1) {
                state.channels.emplace(std::pair{m, n},
                                       sample_rayleigh(rng, cfg.n_r, cfg.n_t));
            }
        }
    }
    return state;
}

/// One victim and M interferers with no interference among the
/// interferers. Draw order: victim own channel, then per interferer its
/// own channel followed by its cross channel to the victim.
inline StarScenario sample_star(RngStream& rng, int M, int n_r, int n_t,
                                double power = 1.0) {
    StarScenario sc{power, sample_rayleigh(rng, n_r, n_t), {}, {}};
    for (int m = 0; m < M; ++m) {
        sc.interferer_direct.push_back(sample_rayleigh(rng, n_r, n_t));
        sc.cross.push_back(sample_rayleigh(rng, n_r, n_t));
    }
    return sc;
}

/// Linear-chain network of K BSSs: AP_k disturbs STA_{k+1}, the first
/// transmission is interference-free. Vertex k is the (k+1)-th processing
/// stage of the controller.
inline NetworkState sample_chain(RngStream& rng, int K, int n_r, int n_t,
                                 double power = 1.0) {
    NetworkState state;
    state.power = power;
    state.connection.eye(K, K);
    state.transmitting.ones(K);
    for (int k = 0; k + 1 < K; ++k) {
        state.connection(k + 1, k) = 1;
    }
    for (int n = 0; n < K; ++n) {
        for (int m = 0; m < K; ++m) {
            if (state.connection(n, m) == 1) {
                state.channels.emplace(std::pair{m, n},
                                       sample_rayleigh(rng, n_r, n_t));
            }
        }
    }
    return state;
}

} // namespace steersim

#endif
