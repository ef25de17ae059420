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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "steersim/json_io.hpp"
#include "steersim/steersim.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw steersim::config_error("cannot open '" + path.string() +
                                     "' for writing");
    }
    out << content;
}

void print_rows(const steersim::SweepResult& result) {
    std::printf("%-8s %-12s %12s %10s %12s\n", result.axis_name.c_str(),
                "method", "mean", "ci95", "infeasible");
    for (const auto& r : result.rows) {
        std::printf("%-8g %-12s %12.4f %10.4f %12.4f\n", r.axis,
                    r.method.c_str(), r.mean_se, r.ci95, r.infeasible_rate);
    }
}

void emit(const steersim::SweepResult& result, const fs::path& outdir) {
    fs::create_directories(outdir);
    const fs::path csv = outdir / (result.name + ".csv");
    write_file(csv, steersim::to_csv(result));
    write_file(outdir / (result.name + ".gp"),
               steersim::to_gnuplot(result, csv.filename().string()));
    print_rows(result);
    std::printf("wrote %s and %s\n", csv.string().c_str(),
                (outdir / (result.name + ".gp")).string().c_str());
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw steersim::config_error("cannot read '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw steersim::config_error("bad JSON in '" + path + "': " + e.what());
    }
}

int cmd_figure(const std::string& name, std::uint64_t seed, long trials,
               const std::string& outdir) {
    const auto which = steersim::figure_from_string(name);
    emit(steersim::run_figure(which, seed, trials), outdir);
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& outdir) {
    const auto spec = steersim::sweep_spec_from_json(load_json(config_path));
    emit(steersim::run_sweep(spec), outdir);
    return 0;
}

int cmd_graph_analyze(const std::string& edges_path, const std::string& out) {
    std::ifstream in(edges_path);
    if (!in) {
        throw steersim::config_error("cannot read '" + edges_path + "'");
    }
    const steersim::InterferenceGraph g = steersim::parse_edge_list(in);
    std::printf("vertices: %zu  edges: %zu\n", g.vertices.size(), g.edges.size());

    const auto components = steersim::connected_components(g);
    std::printf("components: %zu\n", components.size());
    const auto cycles = steersim::detect_cycles(g);
    std::printf("cycles detected: %zu\n", cycles.size());
    for (const auto& c : cycles) {
        std::string s;
        for (int v : c) s += std::to_string(v) + " ";
        std::printf("  cycle: %s\n", s.c_str());
    }
    std::printf("feasible for steering: %s\n",
                steersim::feasible_for_is(g) ? "yes" : "no");

    steersim::InterferenceGraph residual;
    for (const auto& comp : components) {
        const auto broken = steersim::break_cycles(comp);
        if (!broken.deleted.empty()) {
            std::string s;
            for (int v : broken.deleted) s += std::to_string(v) + " ";
            std::printf("component at %d: block %s\n", comp.vertices.front(),
                        s.c_str());
        }
        const auto order = steersim::topological_order(broken.residual);
        std::string s;
        for (int v : order) s += std::to_string(v) + " ";
        std::printf("component at %d: processing order %s\n",
                    comp.vertices.front(), s.c_str());
        residual.vertices.insert(residual.vertices.end(),
                                 broken.residual.vertices.begin(),
                                 broken.residual.vertices.end());
        residual.edges.insert(residual.edges.end(),
                              broken.residual.edges.begin(),
                              broken.residual.edges.end());
    }
    std::sort(residual.vertices.begin(), residual.vertices.end());
    residual.sort_edges();
    if (!out.empty()) {
        std::ofstream os(out, std::ios::binary);
        if (!os) {
            throw steersim::config_error("cannot open '" + out + "' for writing");
        }
        steersim::write_edge_list(os, residual);
        std::printf("wrote residual graph to %s\n", out.c_str());
    }
    return 0;
}

int cmd_plan(const std::string& state_path, const std::string& method,
             double snr_db, const std::string& out) {
    const json j = load_json(state_path);
    const steersim::NetworkState state = steersim::network_state_from_json(j);
    const std::string method_name =
        !method.empty() ? method : j.value("method", std::string("IS"));
    const auto label = steersim::method_from_string(method_name);
    if (label != steersim::MethodLabel::IS && label != steersim::MethodLabel::IN) {
        throw steersim::config_error("plan supports methods IS and IN");
    }
    const auto mode = label == steersim::MethodLabel::IS
                          ? steersim::SteerMode::steer
                          : steersim::SteerMode::neutralize;
    const auto p = steersim::plan(state, mode);
    const auto rep = steersim::evaluate(
        p, state, steersim::noise_from_snr_db(snr_db, state.power));
    json doc = steersim::plan_to_json(p);
    doc["method"] = method_name;
    doc["snr_db"] = snr_db;
    doc["se"] = steersim::report_to_json(rep);
    const std::string text = doc.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file(out, text);
        std::printf("wrote plan to %s\n", out.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"link-level simulator for transmitter-side interference "
                 "steering in multi-BSS MIMO WLANs"};
    app.require_subcommand(1);

    // figure
    std::string fig_name;
    std::uint64_t fig_seed = 1;
    long fig_trials = 10000;
    std::string fig_out = ".";
    auto* figure = app.add_subcommand(
        "figure", "run a predefined experiment preset, write CSV + gnuplot");
    figure->add_option("name", fig_name,
                       "fig5|fig6|fig7|fig8|fig11|fig12|fig13|fig14|fig15")
        ->required();
    figure->add_option("--seed", fig_seed, "master seed");
    figure->add_option("--trials", fig_trials, "trials per axis point");
    figure->add_option("--out", fig_out, "output directory");

    // sweep
    std::string sweep_config;
    std::string sweep_out = ".";
    auto* sweep = app.add_subcommand("sweep", "run a sweep from a JSON config");
    sweep->add_option("--config", sweep_config, "config file")->required();
    sweep->add_option("--out", sweep_out, "output directory");

    // graph analyze
    auto* graph = app.add_subcommand("graph", "interference graph tools");
    graph->require_subcommand(1);
    std::string edges_path, graph_out;
    auto* analyze = graph->add_subcommand(
        "analyze", "components, cycles, blocking and processing order");
    analyze->add_option("--edges", edges_path, "edge list file (src dst weight)")
        ->required();
    analyze->add_option("--out", graph_out, "write the residual graph here");

    // plan
    std::string state_path, plan_method, plan_out;
    double plan_snr = 15.0;
    auto* planc = app.add_subcommand(
        "plan", "compute the controller plan for a network state file");
    planc->add_option("--state", state_path, "network state JSON")->required();
    planc->add_option("--method", plan_method, "IS or IN (default from file)");
    planc->add_option("--snr-db", plan_snr, "SNR for the SE report");
    planc->add_option("--out", plan_out, "write the plan JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (figure->parsed()) {
            return cmd_figure(fig_name, fig_seed, fig_trials, fig_out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_config, sweep_out);
        }
        if (graph->parsed()) {
            return cmd_graph_analyze(edges_path, graph_out);
        }
        if (planc->parsed()) {
            return cmd_plan(state_path, plan_method, plan_snr, plan_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
