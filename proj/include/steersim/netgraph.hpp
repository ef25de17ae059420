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

#ifndef STEERSIM_NETGRAPH_HPP
#define STEERSIM_NETGRAPH_HPP

#include <algorithm>
#include <armadillo>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "steersim/errors.hpp"
#include "steersim/mimo.hpp"

namespace steersim {

/// Controller-side bookkeeping of one frequency channel: who hears whom
/// (connection matrix C, diagonal fixed to 1 by association), who is
/// transmitting (status vector T), and the channel realization of every
/// hearing pair. channels is keyed (m, n) = AP_m -> STA_n.
struct NetworkState {
    arma::imat connection;
    arma::ivec transmitting;
    std::map<std::pair<int, int>, ChannelMatrix> channels;
    double power = 1.0;

    int size() const { return static_cast<int>(connection.n_rows); }

    bool hears(int sta, int ap) const {
        return connection(static_cast<arma::uword>(sta),
                          static_cast<arma::uword>(ap)) != 0;
    }

    const ChannelMatrix& channel(int ap, int sta) const {
        const auto it = channels.find({ap, sta});
        if (it == channels.end()) {
            throw incomplete_state_error("missing channel realization for AP " +
                                         std::to_string(ap) + " -> STA " +
                                         std::to_string(sta));
        }
        return it->second;
    }

    void validate() const {
        const int K = size();
        if (connection.n_cols != static_cast<arma::uword>(K) ||
            transmitting.n_elem != static_cast<arma::uword>(K)) {
            throw incomplete_state_error("connection/transmitting size mismatch");
        }
        for (int n = 0; n < K; ++n) {
            if (connection(n, n) != 1) {
                throw incomplete_state_error("connection diagonal must be 1");
            }
            for (int m = 0; m < K; ++m) {
                const int c = static_cast<int>(connection(n, m));
                if (c != 0 && c != 1) {
                    throw incomplete_state_error("connection entries must be 0/1");
                }
                if (c == 1 && channels.find({m, n}) == channels.end()) {
                    throw incomplete_state_error(
                        "hearing pair AP " + std::to_string(m) + " -> STA " +
                        std::to_string(n) + " has no channel realization");
                }
            }
        }
    }
};

/// Directed weighted interference graph: vertices are active
/// transmissions, an edge m -> n means AP_m's radiation reaches STA_n,
/// weighted by the received interference power before any receive filter.
struct InterferenceGraph {
    struct Edge {
        int src;
        int dst;
        double weight;
    };

    std::vector<int> vertices; // sorted ascending
    std::vector<Edge> edges;   // sorted by (src, dst); at most one per pair

    bool has_vertex(int v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }

    std::vector<int> predecessors(int v) const {
        std::vector<int> out;
        for (const Edge& e : edges) {
            if (e.dst == v) out.push_back(e.src);
        }
        return out;
    }

    std::vector<int> successors(int v) const {
        std::vector<int> out;
        for (const Edge& e : edges) {
            if (e.src == v) out.push_back(e.dst);
        }
        return out;
    }

    int indegree(int v) const {
        int d = 0;
        for (const Edge& e : edges) d += (e.dst == v);
        return d;
    }

    int outdegree(int v) const {
        int d = 0;
        for (const Edge& e : edges) d += (e.src == v);
        return d;
    }

    double out_weight(int v) const {
        double w = 0.0;
        for (const Edge& e : edges) {
            if (e.src == v) w += e.weight;
        }
        return w;
    }

    /// Subgraph induced by keeping exactly the given vertices.
    InterferenceGraph induced(const std::vector<int>& keep) const {
        InterferenceGraph g;
        g.vertices = keep;
        std::sort(g.vertices.begin(), g.vertices.end());
        for (const Edge& e : edges) {
            if (g.has_vertex(e.src) && g.has_vertex(e.dst)) {
                g.edges.push_back(e);
            }
        }
        return g;
    }

    /// Subgraph after deleting the given vertex set.
    InterferenceGraph without(const std::vector<int>& removed) const {
        std::vector<int> keep;
        for (int v : vertices) {
            if (std::find(removed.begin(), removed.end(), v) == removed.end()) {
                keep.push_back(v);
            }
        }
        return induced(keep);
    }

    void sort_edges() {
        std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
            return std::pair{a.src, a.dst} < std::pair{b.src, b.dst};
        });
    }

    bool same_structure(const InterferenceGraph& other) const {
        if (vertices != other.vertices || edges.size() != other.edges.size()) {
            return false;
        }
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (edges[k].src != other.edges[k].src ||
                edges[k].dst != other.edges[k].dst ||
                edges[k].weight != other.edges[k].weight) {
                return false;
            }
        }
        return true;
    }
};

/// Result of exact cycle breaking: the blocked transmissions and the
/// remaining acyclic graph.
struct CycleBreakResult {
    std::vector<int> deleted; // sorted ascending
    InterferenceGraph residual;
};

/// Interference matrix A = diag(T) (C - I), exactly as defined: row n is
/// kept only while STA_n is actually being served.
inline arma::imat adjacency(const NetworkState& state) {
    const arma::uword K = state.connection.n_rows;
    arma::imat eye(K, K, arma::fill::eye);
    return arma::diagmat(state.transmitting) * (state.connection - eye);
}

/// Interference graph of a network state. A(n, m) = 1 alone is not enough
/// for an edge m -> n: an idle AP radiates nothing, so edges whose source
/// is not transmitting are dropped even though C keeps the hearing
/// relation. Edge weight is the pre-filter received interference power.
inline InterferenceGraph build_graph(const NetworkState& state) {
    const int K = state.size();
    const arma::imat A = adjacency(state);
    InterferenceGraph g;
    std::map<int, arma::cx_vec> precoder;
    for (int m = 0; m < K; ++m) {
        if (state.transmitting(m) != 0) {
            g.vertices.push_back(m);
            precoder[m] = svd_beamform(state.channel(m, m)).precoder;
        }
    }
    for (int n = 0; n < K; ++n) {
        for (int m = 0; m < K; ++m) {
            if (A(n, m) == 1 && state.transmitting(m) != 0) {
                const arma::cx_vec rx =
                    state.channel(m, n).entries * precoder.at(m);
                const double w = state.power * std::pow(arma::norm(rx), 2);
                g.edges.push_back({m, n, w});
            }
        }
    }
    g.sort_edges();
    return g;
}

namespace detail {

inline bool is_acyclic(const InterferenceGraph& g) {
    std::map<int, int> indeg;
    for (int v : g.vertices) indeg[v] = 0;
    for (const auto& e : g.edges) ++indeg[e.dst];
    std::vector<int> ready;
    for (auto& [v, d] : indeg) {
        if (d == 0) ready.push_back(v);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        ++seen;
        for (const auto& e : g.edges) {
            if (e.src == v && --indeg[e.dst] == 0) {
                ready.push_back(e.dst);
            }
        }
    }
    return seen == g.vertices.size();
}

} // namespace detail

/// Depth-first cycle detection. Returns one cycle per back edge found, as
/// the vertex sequence along the stack; the list is empty exactly when the
/// graph is acyclic. Vertices and neighbors are explored in ascending
/// order, so the output is deterministic.
inline std::vector<std::vector<int>> detect_cycles(const InterferenceGraph& g) {
    std::vector<std::vector<int>> cycles;
    std::map<int, int> color; // 0 white, 1 on stack, 2 done
    for (int v : g.vertices) color[v] = 0;
    std::vector<int> stack;

    auto dfs = [&](auto&& self, int v) -> void {
        color[v] = 1;
        stack.push_back(v);
        for (int w : g.successors(v)) { // edges sorted => ascending dst
            if (color[w] == 0) {
                self(self, w);
            } else if (color[w] == 1) {
                const auto it = std::find(stack.begin(), stack.end(), w);
                cycles.emplace_back(it, stack.end());
            }
        }
        stack.pop_back();
        color[v] = 2;
    };

    for (int v : g.vertices) {
        if (color[v] == 0) dfs(dfs, v);
    }
    return cycles;
}

/// A set of transmissions admits a stable steering solution exactly when
/// their interference graph has no cycle.
inline bool feasible_for_is(const InterferenceGraph& g) {
    return detect_cycles(g).empty();
}

/// Exact minimum vertex deletion that makes the graph acyclic.
/// Among all minimum-cardinality sets, the one whose members radiate the
/// most interference (largest summed out-edge weight) is blocked; a
/// remaining tie resolves to the lexicographically smallest id set.
/// Brute force by subset size; refuses graphs above `vertex_budget`
/// (larger networks are meant to be partitioned first).
inline CycleBreakResult break_cycles(const InterferenceGraph& g,
                                     int vertex_budget = 20) {
    const int n = static_cast<int>(g.vertices.size());
    if (n > vertex_budget) {
        throw budget_exceeded_error("break_cycles: " + std::to_string(n) +
                                    " vertices exceeds the exact-search budget of " +
                                    std::to_string(vertex_budget));
    }
    if (detail::is_acyclic(g)) {
        return CycleBreakResult{{}, g};
    }
    for (int size = 1; size <= n; ++size) {
        bool found = false;
        double best_weight = -1.0;
        std::vector<int> best;
        std::vector<int> pick(size);
        // lexicographic enumeration of all `size`-subsets of the vertex list
        auto enumerate = [&](auto&& self, int from, int depth) -> void {
            if (depth == size) {
                std::vector<int> removed;
                removed.reserve(size);
                for (int idx : pick) removed.push_back(g.vertices[idx]);
                if (!detail::is_acyclic(g.without(removed))) return;
                double w = 0.0;
                for (int v : removed) w += g.out_weight(v);
                if (!found || w > best_weight) {
                    found = true;
                    best_weight = w;
                    best = removed; // earlier = lex smaller on weight ties
                }
                return;
            }
            for (int idx = from; idx < n; ++idx) {
                pick[depth] = idx;
                self(self, idx + 1, depth + 1);
            }
        };
        enumerate(enumerate, 0, 0);
        if (found) {
            return CycleBreakResult{best, g.without(best)};
        }
    }
    // removing every vertex always yields the empty (acyclic) graph
    return CycleBreakResult{g.vertices, g.without(g.vertices)};
}

/// Kahn's algorithm in readiness rounds: every vertex whose predecessors
/// are all scheduled joins the next round, rounds are emitted in ascending
/// id order. Edges always point forward in the result.
inline std::vector<int> topological_order(const InterferenceGraph& g) {
    std::map<int, int> indeg;
    for (int v : g.vertices) indeg[v] = 0;
    for (const auto& e : g.edges) ++indeg[e.dst];
    std::vector<int> frontier;
    for (int v : g.vertices) {
        if (indeg[v] == 0) frontier.push_back(v);
    }
    std::vector<int> order;
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<int> next;
        for (int v : frontier) {
            order.push_back(v);
            for (int w : g.successors(v)) {
                if (--indeg[w] == 0) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    if (order.size() != g.vertices.size()) {
        throw not_a_dag_error("topological_order on a cyclic graph");
    }
    return order;
}

/// Weakly connected components, each as its induced subgraph, ordered by
/// smallest member id.
inline std::vector<InterferenceGraph>
connected_components(const InterferenceGraph& g) {
    std::map<int, int> parent;
    for (int v : g.vertices) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& e : g.edges) {
        parent[find(e.src)] = find(e.dst);
    }
    std::map<int, std::vector<int>> groups;
    for (int v : g.vertices) {
        groups[find(v)].push_back(v);
    }
    std::vector<std::vector<int>> parts;
    for (auto& [root, members] : groups) {
        parts.push_back(members);
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<InterferenceGraph> out;
    for (const auto& part : parts) {
        out.push_back(g.induced(part));
    }
    return out;
}

/// Parse the edge-list text format: one "src dst weight" triple per line,
/// blank lines and '#' comments ignored. Vertices are the edge endpoints.
inline InterferenceGraph parse_edge_list(std::istream& in) {
    InterferenceGraph g;
    std::set<int> verts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int src = 0, dst = 0;
        double w = 0.0;
        if (!(ls >> src)) continue; // blank
        if (!(ls >> dst >> w) || src < 0 || dst < 0 || src == dst) {
            throw config_error("edge list line " + std::to_string(lineno) +
                               ": expected 'src dst weight' with distinct "
                               "nonnegative ids");
        }
        g.edges.push_back({src, dst, w});
        verts.insert(src);
        verts.insert(dst);
    }
    g.vertices.assign(verts.begin(), verts.end());
    g.sort_edges();
    for (std::size_t k = 1; k < g.edges.size(); ++k) {
        if (g.edges[k].src == g.edges[k - 1].src &&
            g.edges[k].dst == g.edges[k - 1].dst) {
            throw config_error("duplicate edge " + std::to_string(g.edges[k].src) +
                               " -> " + std::to_string(g.edges[k].dst));
        }
    }
    return g;
}

inline void write_edge_list(std::ostream& out, const InterferenceGraph& g) {
    char buf[96];
    for (const auto& e : g.edges) {
        std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.src, e.dst, e.weight);
        out << buf;
    }
}

} // namespace steersim

#endif
