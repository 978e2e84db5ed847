// Copyright 2026 The qaga developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "qaga/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qaga {

IsingModel gen_ran1(std::shared_ptr<const SpinGraph> graph, Rng& rng) {
    if (!graph) throw std::invalid_argument("gen_ran1: null graph");
    std::vector<double> h(graph->num_vars(), 0.0);
    std::vector<double> j(graph->num_edges(), 0.0);
    for (int32_t e = 0; e < graph->num_edges(); ++e)
        if (graph->edge_functional(e)) j[e] = rng.spin();
    return IsingModel(std::move(graph), std::move(h), std::move(j));
}

IsingModel gen_ac3(std::shared_ptr<const SpinGraph> graph, Rng& rng) {
    if (!graph) throw std::invalid_argument("gen_ac3: null graph");
    if (!graph->has_tiles())
        throw std::invalid_argument("gen_ac3: graph has no tile structure");
    const SpinGraph& g = *graph;
    std::vector<double> h(g.num_vars(), 0.0);
    std::vector<double> j(g.num_edges(), 0.0);
    for (int32_t e = 0; e < g.num_edges(); ++e) {
        if (!g.edge_functional(e)) continue;
        const auto& [a, b] = g.edges()[e];
        double scale = (g.tile_of(a) == g.tile_of(b)) ? 1.0 : 3.0;
        j[e] = scale * rng.spin();
    }
    return IsingModel(std::move(graph), std::move(h), std::move(j));
}

void DclParams::validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("DclParams: alpha must be > 0");
    if (!(rung >= 1.0)) throw std::invalid_argument("DclParams: rung must be >= 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("DclParams: lambda must be > 0");
}

IsingModel gen_dcl(std::shared_ptr<const SpinGraph> graph, const DclParams& params,
                   Rng& rng, DclInfo* info) {
    params.validate();
    if (!graph) throw std::invalid_argument("gen_dcl: null graph");
    const SpinGraph& g = *graph;
    if (!g.has_tiles() || g.tile_rows() < 2 || g.tile_cols() < 2)
        throw std::invalid_argument("gen_dcl: needs a tiled graph with rows, cols >= 2");

    // Logical lattice: one variable per tile, one edge per tile pair joined by
    // at least one functional physical coupler.
    std::map<std::pair<int32_t, int32_t>, int32_t> logical_index;
    std::vector<std::pair<int32_t, int32_t>> logical_edges;
    for (int32_t e = 0; e < g.num_edges(); ++e) {
        if (!g.edge_functional(e)) continue;
        int32_t ta = g.tile_of(g.edges()[e].first);
        int32_t tb = g.tile_of(g.edges()[e].second);
        if (ta == tb) continue;
        if (ta > tb) std::swap(ta, tb);
        auto [it, fresh] = logical_index.try_emplace({ta, tb},
                                                     static_cast<int32_t>(logical_edges.size()));
        if (fresh) logical_edges.emplace_back(ta, tb);
    }

    const int32_t num_tiles = g.num_tiles();
    std::vector<std::vector<std::pair<int32_t, int32_t>>> logical_adj(num_tiles);
    for (int32_t le = 0; le < static_cast<int32_t>(logical_edges.size()); ++le) {
        auto [ta, tb] = logical_edges[le];
        logical_adj[ta].emplace_back(tb, le);
        logical_adj[tb].emplace_back(ta, le);
    }

    std::vector<uint8_t> tile_alive(num_tiles, 0);
    for (int32_t v : g.functional_nodes()) tile_alive[g.tile_of(v)] = 1;
    int32_t num_logical = static_cast<int32_t>(
        std::count(tile_alive.begin(), tile_alive.end(), uint8_t{1}));

    std::vector<int32_t> walk_starts;
    for (int32_t t = 0; t < num_tiles; ++t)
        if (logical_adj[t].size() >= 2) walk_starts.push_back(t);
    if (walk_starts.empty())
        throw std::runtime_error("gen_dcl: logical lattice has no cycles to place loops on");

    const int64_t num_loops = std::llround(params.alpha * num_logical);
    std::vector<double> accum(logical_edges.size(), 0.0);
    DclInfo local_info;
    local_info.num_logical = num_logical;

    std::vector<int32_t> seq, visit_pos(num_tiles, -1);
    std::vector<int32_t> cycle_edges;
    constexpr int64_t kMaxAttempts = 100000;
    int64_t attempts = 0;
    for (int64_t placed = 0; placed < num_loops;) {
        if (++attempts > kMaxAttempts)
            throw std::runtime_error("gen_dcl: could not place loops under the coupling cap");

        // Non-backtracking walk until the first revisit closes a cycle.
        seq.clear();
        cycle_edges.clear();
        int32_t start = walk_starts[rng.below(walk_starts.size())];
        seq.push_back(start);
        visit_pos[start] = 0;
        int32_t prev = -1, cur = start, revisit_at = -1;
        while (revisit_at < 0) {
            int32_t options = 0;
            for (const auto& [nbr, le] : logical_adj[cur])
                if (nbr != prev) ++options;
            if (options == 0) break;  // dead end (masked lattice); redraw
            int32_t pick = static_cast<int32_t>(rng.below(options));
            int32_t nxt = -1, via = -1;
            for (const auto& [nbr, le] : logical_adj[cur]) {
                if (nbr == prev) continue;
                if (pick-- == 0) { nxt = nbr; via = le; break; }
            }
            if (visit_pos[nxt] >= 0) {
                revisit_at = visit_pos[nxt];
                cycle_edges.push_back(via);
            } else {
                visit_pos[nxt] = static_cast<int32_t>(seq.size());
                seq.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
        }
        for (int32_t t : seq) visit_pos[t] = -1;
        if (revisit_at < 0) {
            ++local_info.rejected_loops;
            continue;
        }
        for (size_t i = revisit_at; i + 1 < seq.size(); ++i) {
            int32_t le = -1;
            for (const auto& [nbr, cand] : logical_adj[seq[i]])
                if (nbr == seq[i + 1]) { le = cand; break; }
            cycle_edges.push_back(le);
        }

        int32_t frustrated = static_cast<int32_t>(rng.below(cycle_edges.size()));
        bool fits = true;
        for (size_t i = 0; i < cycle_edges.size(); ++i) {
            double contrib = (static_cast<int32_t>(i) == frustrated) ? 1.0 : -1.0;
            if (std::abs(accum[cycle_edges[i]] + contrib) > params.rung + 1e-12) {
                fits = false;
                break;
            }
        }
        if (!fits) {
            ++local_info.rejected_loops;
            continue;
        }
        for (size_t i = 0; i < cycle_edges.size(); ++i)
            accum[cycle_edges[i]] += (static_cast<int32_t>(i) == frustrated) ? 1.0 : -1.0;
        local_info.loop_lengths.push_back(static_cast<int32_t>(cycle_edges.size()));
        ++placed;
    }

    std::vector<double> h(g.num_vars(), 0.0);
    std::vector<double> j(g.num_edges(), 0.0);
    for (int32_t e = 0; e < g.num_edges(); ++e) {
        if (!g.edge_functional(e)) continue;
        int32_t ta = g.tile_of(g.edges()[e].first);
        int32_t tb = g.tile_of(g.edges()[e].second);
        if (ta == tb) {
            j[e] = -params.lambda;
        } else {
            if (ta > tb) std::swap(ta, tb);
            j[e] = accum[logical_index.at({ta, tb})];
        }
    }
    if (info) *info = std::move(local_info);
    return IsingModel(std::move(graph), std::move(h), std::move(j));
}

}  // namespace qaga
