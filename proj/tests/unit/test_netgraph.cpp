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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "steersim/netgraph.hpp"
#include "steersim/rng.hpp"
#include "steersim/scenario.hpp"

using namespace steersim;
using Catch::Approx;

namespace {

/// The six-BSS reference network: STA0 hears APs {0,1,2}, STA1 hears
/// {1,2,3}, STA3 also hears the idle AP5; APs 0..4 transmit.
NetworkState reference_state() {
    NetworkState st;
    st.power = 1.0;
    st.connection = arma::imat{{1, 1, 1, 0, 0, 0},
                               {0, 1, 1, 1, 0, 0},
                               {0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 1},
                               {0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 1}};
    st.transmitting = arma::ivec{1, 1, 1, 1, 1, 0};
    RngStream rng(5);
    for (int n = 0; n < 6; ++n) {
        for (int m = 0; m < 6; ++m) {
            if (st.connection(n, m) == 1) {
                st.channels.emplace(std::pair{m, n}, sample_rayleigh(rng, 2, 2));
            }
        }
    }
    return st;
}

InterferenceGraph graph_of(std::vector<int> vertices,
                           std::vector<InterferenceGraph::Edge> edges) {
    InterferenceGraph g;
    g.vertices = std::move(vertices);
    std::sort(g.vertices.begin(), g.vertices.end());
    g.edges = std::move(edges);
    g.sort_edges();
    return g;
}

bool edge_set_is(const InterferenceGraph& g,
                 std::vector<std::pair<int, int>> expected) {
    if (g.edges.size() != expected.size()) return false;
    std::sort(expected.begin(), expected.end());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        if (g.edges[k].src != expected[k].first ||
            g.edges[k].dst != expected[k].second) {
            return false;
        }
    }
    return true;
}

InterferenceGraph random_graph(RngStream& rng, int n, double edge_prob) {
    InterferenceGraph g;
    for (int v = 0; v < n; ++v) g.vertices.push_back(v);
    for (int s = 0; s < n; ++s) {
        for (int d = 0; d < n; ++d) {
            if (s != d && rng.bernoulli(edge_prob)) {
                g.edges.push_back({s, d, 0.1 + 1.9 * rng.uniform()});
            }
        }
    }
    g.sort_edges();
    return g;
}

/// Exhaustive oracle: scan every vertex subset, keep the ones whose
/// removal leaves the graph acyclic, order by (size, -outweight, ids).
std::vector<int> oracle_break(const InterferenceGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    bool found = false;
    std::vector<int> best;
    std::size_t best_size = 0;
    double best_weight = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> removed;
        for (int b = 0; b < n; ++b) {
            if (mask & (1u << b)) removed.push_back(g.vertices[b]);
        }
        if (!detect_cycles(g.without(removed)).empty()) continue;
        double w = 0.0;
        for (int v : removed) w += g.out_weight(v);
        const bool better =
            !found || removed.size() < best_size ||
            (removed.size() == best_size &&
             (w > best_weight + 1e-15 ||
              (std::abs(w - best_weight) <= 1e-15 && removed < best)));
        if (better) {
            found = true;
            best = removed;
            best_size = removed.size();
            best_weight = w;
        }
    }
    return best;
}

} // namespace

TEST_CASE("interference matrix of the six-BSS reference network") {
    const NetworkState st = reference_state();
    const arma::imat expected{{0, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0},
                              {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1},
                              {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}};
    REQUIRE(arma::all(arma::vectorise(adjacency(st) == expected)));
}

TEST_CASE("interference matrix vanishes without transmissions or overlaps") {
    NetworkState st = reference_state();
    st.transmitting.zeros();
    REQUIRE(arma::accu(arma::abs(adjacency(st))) == 0);

    NetworkState iso = reference_state();
    iso.connection = arma::imat(6, 6, arma::fill::eye);
    REQUIRE(arma::accu(arma::abs(adjacency(iso))) == 0);
}

TEST_CASE("graph of the reference network drops the idle AP and its edge") {
    const InterferenceGraph g = build_graph(reference_state());
    REQUIRE(g.vertices == std::vector<int>{0, 1, 2, 3, 4});
    REQUIRE(edge_set_is(g, {{1, 0}, {2, 0}, {2, 1}, {3, 1}}));
    REQUIRE(g.indegree(4) == 0);
    REQUIRE(g.outdegree(4) == 0);
}

TEST_CASE("a single BSS yields one vertex and no edges") {
    NetworkState st;
    st.connection = arma::imat(1, 1, arma::fill::eye);
    st.transmitting = arma::ivec{1};
    RngStream rng(6);
    st.channels.emplace(std::pair{0, 0}, sample_rayleigh(rng, 2, 2));
    const InterferenceGraph g = build_graph(st);
    REQUIRE(g.vertices == std::vector<int>{0});
    REQUIRE(g.edges.empty());
}

TEST_CASE("every edge of a generated graph satisfies the activity predicate") {
    ScenarioConfig cfg;
    cfg.K = 5;
    cfg.p_b = 0.6;
    cfg.eta = 3;
    cfg.seed = 99;
    for (long t = 0; t < 20; ++t) {
        NetworkState st = generate_scenario(cfg, t);
        st.transmitting(t % cfg.K) = 0; // silence one AP
        const arma::imat A = adjacency(st);
        const InterferenceGraph g = build_graph(st);
        for (const auto& e : g.edges) {
            REQUIRE(A(e.dst, e.src) == 1);
            REQUIRE(st.transmitting(e.src) == 1);
            const arma::cx_vec p =
                svd_beamform(st.channel(e.src, e.src)).precoder;
            const double w = st.power *
                std::pow(arma::norm(st.channel(e.src, e.dst).entries * p), 2);
            REQUIRE(e.weight == Approx(w).epsilon(1e-12));
        }
        // completeness: every qualifying pair is present as an edge
        int qualifying = 0;
        for (int n = 0; n < cfg.K; ++n) {
            for (int m = 0; m < cfg.K; ++m) {
                qualifying += (A(n, m) == 1 && st.transmitting(m) == 1);
            }
        }
        REQUIRE(qualifying == static_cast<int>(g.edges.size()));
    }
}

TEST_CASE("the reference graph has no cycles") {
    REQUIRE(detect_cycles(build_graph(reference_state())).empty());
    REQUIRE(feasible_for_is(build_graph(reference_state())));
}

TEST_CASE("reversing one edge of the reference graph closes a cycle") {
    const InterferenceGraph g = graph_of(
        {0, 1, 2, 3, 4},
        {{1, 0, 1.0}, {0, 2, 1.0}, {2, 1, 1.0}, {3, 1, 1.0}});
    const auto cycles = detect_cycles(g);
    REQUIRE(cycles.size() == 1);
    REQUIRE(cycles.front() == std::vector<int>{0, 2, 1});
    REQUIRE_FALSE(feasible_for_is(g));
}

TEST_CASE("mutual interference is a two-cycle") {
    const InterferenceGraph g = graph_of({0, 1}, {{0, 1, 1.0}, {1, 0, 1.0}});
    const auto cycles = detect_cycles(g);
    REQUIRE(cycles.size() == 1);
    REQUIRE(cycles.front().size() == 2);
}

TEST_CASE("break_cycles leaves acyclic graphs alone") {
    const InterferenceGraph g = build_graph(reference_state());
    const CycleBreakResult r = break_cycles(g);
    REQUIRE(r.deleted.empty());
    REQUIRE(r.residual.same_structure(g));
}

TEST_CASE("breaking a two-cycle removes the louder vertex") {
    const InterferenceGraph g = graph_of({0, 1}, {{0, 1, 0.4}, {1, 0, 2.5}});
    const CycleBreakResult r = break_cycles(g);
    REQUIRE(r.deleted == std::vector<int>{1});
    REQUIRE(r.residual.vertices == std::vector<int>{0});
    REQUIRE(detect_cycles(r.residual).empty());
}

TEST_CASE("break_cycles matches the exhaustive oracle on small graphs") {
    RngStream rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform() * 5); // 2..6
        const InterferenceGraph g = random_graph(rng, n, 0.45);
        const CycleBreakResult r = break_cycles(g);
        REQUIRE(r.deleted == oracle_break(g));
        REQUIRE(detect_cycles(r.residual).empty());
        // minimality witness: no strictly smaller set works
        if (!r.deleted.empty()) {
            const unsigned size = r.deleted.size();
            bool smaller_works = false;
            const int nv = static_cast<int>(g.vertices.size());
            for (unsigned mask = 0; mask < (1u << nv) && !smaller_works; ++mask) {
                std::vector<int> removed;
                for (int b = 0; b < nv; ++b) {
                    if (mask & (1u << b)) removed.push_back(g.vertices[b]);
                }
                if (removed.size() >= size) continue;
                smaller_works = detect_cycles(g.without(removed)).empty();
            }
            REQUIRE_FALSE(smaller_works);
        }
    }
}

TEST_CASE("break_cycles refuses graphs beyond the exact-search budget") {
    InterferenceGraph big;
    for (int v = 0; v < 21; ++v) big.vertices.push_back(v);
    for (int v = 0; v < 21; ++v) {
        big.edges.push_back({v, (v + 1) % 21, 1.0});
    }
    big.sort_edges();
    REQUIRE_THROWS_AS(break_cycles(big), budget_exceeded_error);
}

TEST_CASE("topological order of the reference graph") {
    REQUIRE(topological_order(build_graph(reference_state())) ==
            std::vector<int>{2, 3, 4, 1, 0});
}

TEST_CASE("topological order of simple shapes") {
    REQUIRE(topological_order(graph_of({3, 1, 2}, {})) ==
            std::vector<int>{1, 2, 3});
    REQUIRE(topological_order(
                graph_of({0, 1, 2}, {{0, 1, 1.0}, {1, 2, 1.0}})) ==
            std::vector<int>{0, 1, 2});
    REQUIRE_THROWS_AS(
        topological_order(graph_of({0, 1}, {{0, 1, 1.0}, {1, 0, 1.0}})),
        not_a_dag_error);
}

TEST_CASE("topological order is a permutation that respects every edge") {
    RngStream rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        const InterferenceGraph g = random_graph(rng, 6, 0.3);
        const CycleBreakResult r = break_cycles(g);
        const std::vector<int> order = topological_order(r.residual);
        REQUIRE(order.size() == r.residual.vertices.size());
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(sorted == r.residual.vertices);
        auto pos = [&](int v) {
            return std::find(order.begin(), order.end(), v) - order.begin();
        };
        for (const auto& e : r.residual.edges) {
            REQUIRE(pos(e.src) < pos(e.dst));
        }
    }
}

TEST_CASE("each nonempty residual keeps a zero-indegree vertex") {
    RngStream rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        const InterferenceGraph g = random_graph(rng, 6, 0.4);
        const CycleBreakResult r = break_cycles(g);
        if (r.residual.vertices.empty()) continue;
        bool has_root = false;
        for (int v : r.residual.vertices) {
            has_root = has_root || r.residual.indegree(v) == 0;
        }
        REQUIRE(has_root);
    }
}

TEST_CASE("components of the reference graph") {
    const auto parts = connected_components(build_graph(reference_state()));
    REQUIRE(parts.size() == 2);
    REQUIRE(parts[0].vertices == std::vector<int>{0, 1, 2, 3});
    REQUIRE(parts[1].vertices == std::vector<int>{4});
}

TEST_CASE("components of edgeless and tournament graphs") {
    const InterferenceGraph lone = graph_of({0, 1, 2, 3}, {});
    REQUIRE(connected_components(lone).size() == 4);

    InterferenceGraph tour;
    tour.vertices = {0, 1, 2, 3};
    for (int s = 0; s < 4; ++s) {
        for (int d = s + 1; d < 4; ++d) {
            tour.edges.push_back({s, d, 1.0});
        }
    }
    tour.sort_edges();
    REQUIRE(connected_components(tour).size() == 1);
}

TEST_CASE("components partition the vertex and edge sets") {
    RngStream rng(104);
    for (int trial = 0; trial < 50; ++trial) {
        const InterferenceGraph g = random_graph(rng, 7, 0.15);
        const auto parts = connected_components(g);
        std::size_t verts = 0, edges = 0;
        for (const auto& p : parts) {
            verts += p.vertices.size();
            edges += p.edges.size();
        }
        REQUIRE(verts == g.vertices.size());
        REQUIRE(edges == g.edges.size());
    }
}

TEST_CASE("edge list text round-trips graphs without isolated vertices") {
    RngStream rng(105);
    for (int trial = 0; trial < 30; ++trial) {
        InterferenceGraph g = random_graph(rng, 5, 0.5);
        // drop isolated vertices: the text format cannot carry them
        std::vector<int> connected;
        for (int v : g.vertices) {
            if (g.indegree(v) + g.outdegree(v) > 0) connected.push_back(v);
        }
        g = g.induced(connected);
        std::ostringstream os;
        write_edge_list(os, g);
        std::istringstream is(os.str());
        REQUIRE(parse_edge_list(is).same_structure(g));
    }
}

TEST_CASE("edge list parser flags malformed input") {
    std::istringstream missing("1 0\n");
    REQUIRE_THROWS_AS(parse_edge_list(missing), config_error);
    std::istringstream self_loop("2 2 1.0\n");
    REQUIRE_THROWS_AS(parse_edge_list(self_loop), config_error);
    std::istringstream duplicate("1 0 1.0\n1 0 2.0\n");
    REQUIRE_THROWS_AS(parse_edge_list(duplicate), config_error);
    std::istringstream fine("# comment\n\n1 0 1.5\n");
    REQUIRE(parse_edge_list(fine).edges.size() == 1);
}

TEST_CASE("missing channels are reported against the hearing relation") {
    NetworkState st = reference_state();
    st.channels.erase({2, 1});
    REQUIRE_THROWS_AS(st.validate(), incomplete_state_error);
}
