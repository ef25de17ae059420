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

#ifndef STEERSIM_JSON_IO_HPP
#define STEERSIM_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "steersim/controller.hpp"
#include "steersim/errors.hpp"
#include "steersim/netgraph.hpp"
#include "steersim/scenario.hpp"
#include "steersim/sweep.hpp"

namespace steersim {

namespace detail {

inline nlohmann::json cx_vec_to_json(const arma::cx_vec& v) {
    std::vector<double> re(v.n_elem), im(v.n_elem);
    for (arma::uword k = 0; k < v.n_elem; ++k) {
        re[k] = v(k).real();
        im[k] = v(k).imag();
    }
    return {{"re", re}, {"im", im}};
}

inline arma::cx_mat cx_mat_from_json(const nlohmann::json& j) {
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    const auto im = j.at("im").get<std::vector<std::vector<double>>>();
    if (re.empty() || re.size() != im.size()) {
        throw config_error("channel re/im parts disagree in shape");
    }
    arma::cx_mat m(re.size(), re.front().size());
    for (std::size_t r = 0; r < re.size(); ++r) {
        if (re[r].size() != m.n_cols || im[r].size() != m.n_cols) {
            throw config_error("channel rows have inconsistent lengths");
        }
        for (std::size_t c = 0; c < m.n_cols; ++c) {
            m(r, c) = cx{re[r][c], im[r][c]};
        }
    }
    return m;
}

} // namespace detail

/// Network state from its JSON description. Channel realizations may be
/// given explicitly per hearing pair; any missing ones are sampled
/// deterministically from the file's seed in row-major (victim, source)
/// order, matching the scenario generator.
inline NetworkState network_state_from_json(const nlohmann::json& j) {
    NetworkState state;
    const int K = j.at("K").get<int>();
    if (K < 1) throw config_error("K must be >= 1");
    const auto conn = j.at("connection").get<std::vector<std::vector<int>>>();
    if (conn.size() != static_cast<std::size_t>(K)) {
        throw config_error("connection must be K x K");
    }
    state.connection.set_size(K, K);
    for (int n = 0; n < K; ++n) {
        if (conn[n].size() != static_cast<std::size_t>(K)) {
            throw config_error("connection must be K x K");
        }
        for (int m = 0; m < K; ++m) {
            state.connection(n, m) = conn[n][m];
        }
    }
    state.transmitting.set_size(K);
    if (j.contains("transmitting")) {
        const auto t = j.at("transmitting").get<std::vector<int>>();
        if (t.size() != static_cast<std::size_t>(K)) {
            throw config_error("transmitting must have K entries");
        }
        for (int m = 0; m < K; ++m) state.transmitting(m) = t[m];
    } else {
        state.transmitting.ones();
    }
    state.power = j.value("power", 1.0);
    if (j.contains("channels")) {
        for (const auto& cj : j.at("channels")) {
            const int m = cj.at("m").get<int>();
            const int n = cj.at("n").get<int>();
            state.channels.emplace(std::pair{m, n},
                                   ChannelMatrix(detail::cx_mat_from_json(cj)));
        }
    }
    const int n_t = j.value("n_t", 2);
    const int n_r = j.value("n_r", 2);
    RngStream rng(j.value("seed", std::uint64_t{1}));
    for (int n = 0; n < K; ++n) {
        for (int m = 0; m < K; ++m) {
            if (state.connection(n, m) == 1 &&
                state.channels.find({m, n}) == state.channels.end()) {
                state.channels.emplace(std::pair{m, n},
                                       sample_rayleigh(rng, n_r, n_t));
            }
        }
    }
    return state;
}

inline nlohmann::json plan_to_json(const ControllerPlan& p) {
    nlohmann::json dispositions = nlohmann::json::object();
    for (const auto& [v, entry] : p.dispositions) {
        nlohmann::json d;
        switch (entry.action) {
            case ControllerPlan::Action::untouched: d["action"] = "untouched"; break;
            case ControllerPlan::Action::blocked: d["action"] = "blocked"; break;
            case ControllerPlan::Action::steer: {
                d["action"] = "steer";
                d["mode"] = entry.solution->mode == SteerMode::steer ? "IS" : "IN";
                d["power"] = entry.solution->power;
                d["feasible"] = entry.solution->feasible;
                d["precoder"] = detail::cx_vec_to_json(entry.solution->precoder);
                break;
            }
        }
        dispositions[std::to_string(v)] = std::move(d);
    }
    nlohmann::json accumulated = nlohmann::json::object();
    for (const auto& [v, agg] : p.accumulated) {
        accumulated[std::to_string(v)] = {
            {"contributors", agg.contributors},
            {"magnitude", arma::norm(agg.vector.vector)}};
    }
    return {{"order", p.order},
            {"blocked", p.blocked()},
            {"dispositions", std::move(dispositions)},
            {"accumulated_interference", std::move(accumulated)}};
}

inline nlohmann::json report_to_json(const SEReport& rep) {
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [v, se] : rep.per_vertex_se) {
        per[std::to_string(v)] = se;
    }
    return {{"per_vertex_se", std::move(per)},
            {"system_se", rep.system_se},
            {"infeasible_count", rep.infeasible_count}};
}

/// Sweep specification from a config file whose keys mirror the scenario
/// configuration exactly. The swept axis is whichever of snr_db, p_b, K,
/// eta holds an array (exactly one must); `method` is a name or a list of
/// names.
inline SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
    SweepSpec spec;
    for (const auto& [key, value] : j.items()) {
        if (key != "K" && key != "p_b" && key != "eta" && key != "snr_db" &&
            key != "trials" && key != "seed" && key != "method" &&
            key != "n_t" && key != "n_r") {
            throw config_error("unknown config field '" + key + "'");
        }
    }
    int axes = 0;
    auto take = [&](const char* name, auto&& scalar_setter) {
        if (!j.contains(name)) return;
        const auto& field = j.at(name);
        if (field.is_array()) {
            ++axes;
            spec.axis = name;
            spec.values = field.get<std::vector<double>>();
        } else {
            scalar_setter(field);
        }
    };
    take("snr_db", [&](const nlohmann::json& v) { spec.base.snr_db = v.get<double>(); });
    take("p_b", [&](const nlohmann::json& v) { spec.base.p_b = v.get<double>(); });
    take("K", [&](const nlohmann::json& v) { spec.base.K = v.get<int>(); });
    take("eta", [&](const nlohmann::json& v) { spec.base.eta = v.get<int>(); });
    if (axes != 1) {
        throw config_error("exactly one of snr_db, p_b, K, eta must be an array");
    }
    spec.base.trials = j.value("trials", long{10000});
    spec.base.seed = j.value("seed", std::uint64_t{1});
    spec.base.n_t = j.value("n_t", 2);
    spec.base.n_r = j.value("n_r", 2);
    if (j.contains("method")) {
        const auto& m = j.at("method");
        if (m.is_array()) {
            for (const auto& name : m) {
                spec.methods.push_back(method_from_string(name.get<std::string>()));
            }
        } else {
            spec.methods.push_back(method_from_string(m.get<std::string>()));
        }
    } else {
        spec.methods = {MethodLabel::IS};
    }
    spec.validate();
    return spec;
}

} // namespace steersim

#endif
