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

#ifndef STEERSIM_SWEEP_HPP
#define STEERSIM_SWEEP_HPP

#include <armadillo>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "steersim/baselines.hpp"
#include "steersim/controller.hpp"
#include "steersim/errors.hpp"
#include "steersim/scenario.hpp"
#include "steersim/steering.hpp"

namespace steersim {

/// One aggregated point of a sweep: an axis value, a curve label, the mean
/// of the per-trial quantity and its 95% confidence half-width.
struct SweepRow {
    double axis = 0.0;
    std::string method;
    double mean_se = 0.0;
    double ci95 = 0.0;
    double infeasible_rate = 0.0;
    long trials = 0;
    std::uint64_t seed = 0;
};

struct SweepResult {
    std::string name;
    std::string axis_name;
    std::vector<SweepRow> rows;
};

namespace detail {

/// Streaming mean/variance with a fixed trial-index summation order, so
/// aggregate output never depends on how trials were scheduled.
class Accumulator {
  public:
    void add(double x) {
        ++n_;
        sum_ += x;
        sumsq_ += x * x;
    }

    long count() const { return n_; }

    double mean() const { return n_ > 0 ? sum_ / static_cast<double>(n_) : 0.0; }

    double ci95() const {
        if (n_ < 2) return 0.0;
        const double n = static_cast<double>(n_);
        double var = (sumsq_ - sum_ * sum_ / n) / (n - 1.0);
        if (var < 0.0) var = 0.0;
        return 1.96 * std::sqrt(var / n);
    }

  private:
    long n_ = 0;
    double sum_ = 0.0;
    double sumsq_ = 0.0;
};

struct RateCounter {
    long events = 0;
    long attempts = 0;
    double rate() const {
        return attempts > 0 ? static_cast<double>(events) /
                                  static_cast<double>(attempts)
                            : 0.0;
    }
};

// Stream lanes of one trial. Methods sharing a lane see identical
// realizations (common random numbers); lanes keep the draw sequences of
// unrelated samplings independent of which methods actually run.
enum : std::uint64_t { lane_mimo = 0, lane_zfbf = 1, lane_helper = 2 };

} // namespace detail

/// CSV for a sweep: fixed column set, one row per (axis point, curve),
/// '.' decimal separator, bitwise reproducible for a given (config, seed).
inline std::string to_csv(const SweepResult& result) {
    std::string out = "axis,method,mean_se,ci95,infeasible_rate,trials,seed\n";
    char buf[256];
    for (const SweepRow& r : result.rows) {
        std::snprintf(buf, sizeof buf, "%g,%s,%.10g,%.10g,%.10g,%ld,%llu\n",
                      r.axis, r.method.c_str(), r.mean_se, r.ci95,
                      r.infeasible_rate, r.trials,
                      static_cast<unsigned long long>(r.seed));
        out += buf;
    }
    return out;
}

/// gnuplot companion script plotting every curve of the CSV with error
/// bars. Written next to the CSV; run with `gnuplot <name>.gp`.
inline std::string to_gnuplot(const SweepResult& result,
                              const std::string& csv_filename) {
    std::string methods;
    std::vector<std::string> seen;
    for (const SweepRow& r : result.rows) {
        bool dup = false;
        for (const auto& s : seen) dup = dup || s == r.method;
        if (!dup) {
            seen.push_back(r.method);
            if (!methods.empty()) methods += ' ';
            methods += r.method;
        }
    }
    const bool probability = result.name == "fig8";
    std::string gp;
    gp += "set datafile separator ','\n";
    gp += "set datafile missing 'NaN'\n";
    gp += "set terminal pngcairo size 900,600\n";
    gp += "set output '" + result.name + ".png'\n";
    gp += "set xlabel '" + result.axis_name + "'\n";
    gp += std::string("set ylabel '") +
          (probability ? "probability" : "mean SE (bps/Hz)") + "'\n";
    gp += "set key top left\n";
    gp += "plot for [m in \"" + methods + "\"] '" + csv_filename +
          "' every ::1 using 1:(strcol(2) eq m ? column(3) : NaN):4 "
          "with yerrorlines title m\n";
    return gp;
}

/// Mean system SE over random network states for one planner-backed
/// method at one configuration. P2P scores every link interference-free.
inline void accumulate_planned_trial(const ScenarioConfig& cfg, long trial,
                                     MethodLabel method,
                                     detail::Accumulator& acc,
                                     detail::RateCounter& infeasible) {
    const NetworkState state = generate_scenario(cfg, trial);
    const NoiseModel noise = noise_from_snr_db(cfg.snr_db, state.power);
    if (method == MethodLabel::P2P) {
        double total = 0.0;
        for (int v = 0; v < state.size(); ++v) {
            total += p2p_bf_se(state.channel(v, v), state.power, noise);
        }
        acc.add(total);
        return;
    }
    const SteerMode mode =
        method == MethodLabel::IS ? SteerMode::steer : SteerMode::neutralize;
    const ControllerPlan p = plan(state, mode);
    const SEReport rep = evaluate(p, state, noise);
    acc.add(rep.system_se);
    infeasible.events += rep.infeasible_count;
    infeasible.attempts += rep.steering_count;
}

/// A sweep specification: one axis varies, everything else comes from the
/// base configuration. Planner-backed sweeps support IS, IN and P2P; the
/// star-topology baselines (IA, ZFBF) exist only as figure presets.
struct SweepSpec {
    ScenarioConfig base;
    std::string axis; // one of: snr_db, p_b, K, eta
    std::vector<double> values;
    std::vector<MethodLabel> methods;

    void validate() const {
        base.validate();
        if (axis != "snr_db" && axis != "p_b" && axis != "K" && axis != "eta") {
            throw config_error("sweep axis must be one of snr_db, p_b, K, eta");
        }
        if (values.empty()) throw config_error("sweep axis has no values");
        if (methods.empty()) throw config_error("sweep has no methods");
        for (MethodLabel m : methods) {
            if (m == MethodLabel::IA || m == MethodLabel::ZFBF) {
                throw config_error("IA/ZFBF are star-topology figure baselines; "
                                   "sweeps support IS, IN and P2P");
            }
        }
    }
};

inline SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult out;
    out.name = "sweep";
    out.axis_name = spec.axis;
    for (double value : spec.values) {
        ScenarioConfig cfg = spec.base;
        if (spec.axis == "snr_db") {
            cfg.snr_db = value;
        } else if (spec.axis == "p_b") {
            cfg.p_b = value;
        } else if (spec.axis == "K") {
            cfg.K = static_cast<int>(value);
        } else {
            cfg.eta = static_cast<int>(value);
        }
        cfg.validate();
        for (MethodLabel method : spec.methods) {
            detail::Accumulator acc;
            detail::RateCounter infeasible;
            for (long t = 0; t < cfg.trials; ++t) {
                accumulate_planned_trial(cfg, t, method, acc, infeasible);
            }
            out.rows.push_back(SweepRow{value, to_string(method), acc.mean(),
                                        acc.ci95(), infeasible.rate(),
                                        cfg.trials, cfg.seed});
        }
    }
    return out;
}

enum class FigureName { fig5, fig6, fig7, fig8, fig11, fig12, fig13, fig14, fig15 };

inline std::string to_string(FigureName f) {
    switch (f) {
        case FigureName::fig5: return "fig5";
        case FigureName::fig6: return "fig6";
        case FigureName::fig7: return "fig7";
        case FigureName::fig8: return "fig8";
        case FigureName::fig11: return "fig11";
        case FigureName::fig12: return "fig12";
        case FigureName::fig13: return "fig13";
        case FigureName::fig14: return "fig14";
        case FigureName::fig15: return "fig15";
    }
    throw config_error("unknown figure");
}

inline FigureName figure_from_string(const std::string& s) {
    for (FigureName f : {FigureName::fig5, FigureName::fig6, FigureName::fig7,
                         FigureName::fig8, FigureName::fig11, FigureName::fig12,
                         FigureName::fig13, FigureName::fig14, FigureName::fig15}) {
        if (to_string(f) == s) return f;
    }
    throw config_error("unknown figure '" + s + "' (expected fig5, fig6, fig7, "
                       "fig8, fig11, fig12, fig13, fig14 or fig15)");
}

namespace detail {

inline const std::vector<double>& snr_grid() {
    static const std::vector<double> grid{0, 5, 10, 15, 20, 25, 30};
    return grid;
}

/// fig5: system SE of the four methods for one victim / one interferer
/// over SNR, plus the single-link interference-free reference curve.
/// IS, IN, IA and the reference share channel realizations; ZFBF runs its
/// own single-antenna-receiver realizations.
inline SweepResult figure_star_snr(std::uint64_t seed, long trials) {
    SweepResult out{"fig5", "snr_db", {}};
    for (double snr : snr_grid()) {
        const NoiseModel noise = noise_from_snr_db(snr);
        std::map<std::string, Accumulator> acc;
        std::map<std::string, RateCounter> inf;
        for (long t = 0; t < trials; ++t) {
            RngStream mimo(split_seed(seed, t, lane_mimo));
            RngStream zf(split_seed(seed, t, lane_zfbf));
            const StarScenario sc = sample_star(mimo, 1, 2, 2);
            const StarScenario sczf = sample_star(zf, 1, 1, 2);
            for (MethodLabel m : {MethodLabel::IS, MethodLabel::IN, MethodLabel::IA}) {
                const SeBreakdown b = system_se(m, sc, noise);
                acc[to_string(m)].add(b.system_se);
                if (m != MethodLabel::IA) {
                    inf[to_string(m)].attempts++;
                    inf[to_string(m)].events += b.victim_infeasible;
                }
            }
            acc["ZFBF"].add(system_se(MethodLabel::ZFBF, sczf, noise).system_se);
            acc["p2p"].add(p2p_bf_se(sc.victim_direct, sc.power, noise));
        }
        for (const char* m : {"IS", "IN", "IA", "ZFBF", "p2p"}) {
            out.rows.push_back(SweepRow{snr, m, acc[m].mean(), acc[m].ci95(),
                                        inf[m].rate(), trials, seed});
        }
    }
    return out;
}

/// fig6/fig7 over the interferer count M at 15 dB: fig6 reports system SE
/// (reference: M+1 interference-free links), fig7 the SE of a single
/// transmission pair (victim pair for IS/IN, one interfering pair for
/// IA/ZFBF, reference: one link).
inline SweepResult figure_star_m(FigureName which, std::uint64_t seed,
                                 long trials) {
    SweepResult out{to_string(which), "M", {}};
    const NoiseModel noise = noise_from_snr_db(15.0);
    for (int M = 1; M <= 4; ++M) {
        std::map<std::string, Accumulator> acc;
        std::map<std::string, RateCounter> inf;
        const bool system_view = which == FigureName::fig6;
        for (long t = 0; t < trials; ++t) {
            RngStream mimo(split_seed(seed, t, lane_mimo));
            RngStream zf(split_seed(seed, t, lane_zfbf));
            const StarScenario sc = sample_star(mimo, M, 2, 2);
            const StarScenario sczf = sample_star(zf, M, 1, 2);
            for (MethodLabel m : {MethodLabel::IS, MethodLabel::IN}) {
                const SeBreakdown b = system_se(m, sc, noise);
                acc[to_string(m)].add(system_view ? b.system_se : b.victim_se);
                inf[to_string(m)].attempts++;
                inf[to_string(m)].events += b.victim_infeasible;
            }
            const SeBreakdown bia = system_se(MethodLabel::IA, sc, noise);
            acc["IA"].add(system_view ? bia.system_se : bia.interferer_se.front());
            const SeBreakdown bz = system_se(MethodLabel::ZFBF, sczf, noise);
            acc["ZFBF"].add(system_view ? bz.system_se : bz.interferer_se.front());
            const SeBreakdown bp = system_se(MethodLabel::P2P, sc, noise);
            acc["p2p"].add(system_view ? bp.system_se : bp.victim_se);
        }
        for (const char* m : {"IS", "IN", "IA", "ZFBF", "p2p"}) {
            out.rows.push_back(SweepRow{static_cast<double>(M), m, acc[m].mean(),
                                        acc[m].ci95(), inf[m].rate(), trials,
                                        seed});
        }
    }
    return out;
}

/// fig8: probability that steering at the victim's own AP is cheaper than
/// at a third-party helper, for steering and for full neutralization.
inline SweepResult figure_overhead_probability(std::uint64_t seed, long trials) {
    SweepResult out{"fig8", "M", {}};
    for (int M = 1; M <= 4; ++M) {
        Accumulator p_is, p_in;
        for (long t = 0; t < trials; ++t) {
            RngStream mimo(split_seed(seed, t, lane_mimo));
            RngStream helper(split_seed(seed, t, lane_helper));
            const StarScenario sc = sample_star(mimo, M, 2, 2);
            const ChannelMatrix hk0 = sample_rayleigh(helper, 2, 2);
            const BeamformPair vbf = svd_beamform(sc.victim_direct);
            std::vector<InterfererLink> links;
            for (std::size_t m = 0; m < sc.cross.size(); ++m) {
                links.push_back(InterfererLink{
                    static_cast<int>(m + 1), sc.cross[m],
                    TransmitIntent(sc.power,
                                   svd_beamform(sc.interferer_direct[m]).precoder)});
            }
            const CombinedInterference agg = combine(2, links);
            const double own_is = noncoop_overhead(vbf, sc.victim_direct, agg);
            const double help_is = coop_overhead(vbf, sc.victim_direct, hk0, agg);
            const double inf_budget = std::numeric_limits<double>::infinity();
            const double own_in = neutralize(sc.victim_direct, agg, inf_budget).power;
            const double help_in = neutralize(hk0, agg, inf_budget).power;
            p_is.add(own_is < help_is ? 1.0 : 0.0);
            p_in.add(own_in < help_in ? 1.0 : 0.0);
        }
        out.rows.push_back(SweepRow{static_cast<double>(M), "IS", p_is.mean(),
                                    p_is.ci95(), 0.0, trials, seed});
        out.rows.push_back(SweepRow{static_cast<double>(M), "IN", p_in.mean(),
                                    p_in.ci95(), 0.0, trials, seed});
    }
    return out;
}

/// fig11: victim SE with the steering executed at the victim's own AP
/// versus at a third-party helper (the victim pays the overhead either
/// way), for steering and neutralization, over SNR.
inline SweepResult figure_coop_vs_noncoop(std::uint64_t seed, long trials) {
    SweepResult out{"fig11", "snr_db", {}};
    for (double snr : snr_grid()) {
        const NoiseModel noise = noise_from_snr_db(snr);
        std::map<std::string, Accumulator> acc;
        std::map<std::string, RateCounter> inf;
        for (long t = 0; t < trials; ++t) {
            RngStream mimo(split_seed(seed, t, lane_mimo));
            RngStream helper(split_seed(seed, t, lane_helper));
            const StarScenario sc = sample_star(mimo, 1, 2, 2);
            const ChannelMatrix hk0 = sample_rayleigh(helper, 2, 2);
            const BeamformPair vbf = svd_beamform(sc.victim_direct);
            std::vector<InterfererLink> links{InterfererLink{
                1, sc.cross[0],
                TransmitIntent(sc.power,
                               svd_beamform(sc.interferer_direct[0]).precoder)}};
            const CombinedInterference agg = combine(2, links);
            const double overheads[4] = {
                noncoop_overhead(vbf, sc.victim_direct, agg),
                coop_overhead(vbf, sc.victim_direct, hk0, agg),
                neutralize(sc.victim_direct, agg, sc.power).power,
                neutralize(hk0, agg, sc.power).power};
            const char* labels[4] = {"IS-noncoop", "IS-coop", "IN-noncoop",
                                     "IN-coop"};
            for (int k = 0; k < 4; ++k) {
                acc[labels[k]].add(shannon_se(victim_snr(
                    sc.power, overheads[k], vbf.principal_gain, noise)));
                inf[labels[k]].attempts++;
                inf[labels[k]].events += overheads[k] > sc.power;
            }
        }
        for (const char* m : {"IS-noncoop", "IS-coop", "IN-noncoop", "IN-coop"}) {
            out.rows.push_back(SweepRow{snr, m, acc[m].mean(), acc[m].ci95(),
                                        inf[m].rate(), trials, seed});
        }
    }
    return out;
}

/// fig12: per-stage victim SE in the 3-BSS linear chain, over SNR. Both
/// planner modes run on the same channel realizations.
inline SweepResult figure_chain_stages(std::uint64_t seed, long trials) {
    SweepResult out{"fig12", "snr_db", {}};
    for (double snr : snr_grid()) {
        const NoiseModel noise = noise_from_snr_db(snr);
        std::map<std::string, Accumulator> acc;
        std::map<std::string, RateCounter> inf;
        for (long t = 0; t < trials; ++t) {
            RngStream mimo(split_seed(seed, t, lane_mimo));
            const NetworkState state = sample_chain(mimo, 3, 2, 2);
            for (SteerMode mode : {SteerMode::steer, SteerMode::neutralize}) {
                const std::string tag =
                    mode == SteerMode::steer ? "IS" : "IN";
                const ControllerPlan p = plan(state, mode);
                const SEReport rep = evaluate(p, state, noise);
                acc[tag + "-stage2"].add(rep.per_vertex_se.at(1));
                acc[tag + "-stage3"].add(rep.per_vertex_se.at(2));
                inf[tag + "-stage2"].attempts++;
                inf[tag + "-stage3"].attempts++;
                inf[tag + "-stage2"].events += rep.per_vertex_se.at(1) == 0.0;
                inf[tag + "-stage3"].events += rep.per_vertex_se.at(2) == 0.0;
            }
        }
        for (const char* m :
             {"IS-stage2", "IS-stage3", "IN-stage2", "IN-stage3"}) {
            out.rows.push_back(SweepRow{snr, m, acc[m].mean(), acc[m].ci95(),
                                        inf[m].rate(), trials, seed});
        }
    }
    return out;
}

/// fig13/fig14/fig15: planner system SE over interference density, network
/// size and per-victim interference cap.
inline SweepResult figure_planned(FigureName which, std::uint64_t seed,
                                  long trials) {
    SweepSpec spec;
    spec.base.seed = seed;
    spec.base.trials = trials;
    spec.base.snr_db = 15.0;
    spec.methods = {MethodLabel::IS, MethodLabel::IN};
    if (which == FigureName::fig13) {
        spec.base.K = 3;
        spec.base.eta = 2;
        spec.axis = "p_b";
        spec.values = {0.3, 0.6, 0.9};
    } else if (which == FigureName::fig14) {
        spec.base.p_b = 0.9;
        spec.base.eta = 1;
        spec.axis = "K";
        spec.values = {2, 3, 4, 5};
    } else {
        spec.base.K = 5;
        spec.base.p_b = 0.9;
        spec.axis = "eta";
        spec.values = {1, 2, 3};
    }
    SweepResult out = run_sweep(spec);
    out.name = to_string(which);
    return out;
}

} // namespace detail

/// Run one of the predefined experiment presets at the library's default
/// scale (2x2 antennas, unit AP power; the single-antenna zero-forcing
/// baseline keeps its own realizations).
inline SweepResult run_figure(FigureName which, std::uint64_t seed = 1,
                              long trials = 10000) {
    if (trials < 1) throw config_error("trials must be >= 1");
    switch (which) {
        case FigureName::fig5: return detail::figure_star_snr(seed, trials);
        case FigureName::fig6:
        case FigureName::fig7: return detail::figure_star_m(which, seed, trials);
        case FigureName::fig8:
            return detail::figure_overhead_probability(seed, trials);
        case FigureName::fig11: return detail::figure_coop_vs_noncoop(seed, trials);
        case FigureName::fig12: return detail::figure_chain_stages(seed, trials);
        case FigureName::fig13:
        case FigureName::fig14:
        case FigureName::fig15: return detail::figure_planned(which, seed, trials);
    }
    throw config_error("unknown figure");
}

} // namespace steersim

#endif
