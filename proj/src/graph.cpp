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

#include "qaga/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qaga {

SpinGraph::SpinGraph(int32_t num_vars, std::vector<Edge> edges,
                     std::vector<uint8_t> node_mask, std::vector<uint8_t> edge_mask)
    : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("SpinGraph: negative num_vars");
    if (!node_mask.empty() && node_mask.size() != static_cast<size_t>(num_vars))
        throw std::invalid_argument("SpinGraph: node_mask size mismatch");
    if (!edge_mask.empty() && edge_mask.size() != edges.size())
        throw std::invalid_argument("SpinGraph: edge_mask size mismatch");

    node_mask_ = node_mask.empty() ? std::vector<uint8_t>(num_vars, 1) : std::move(node_mask);

    for (auto& [a, b] : edges) {
        if (a < 0 || a >= num_vars || b < 0 || b >= num_vars)
            throw std::invalid_argument("SpinGraph: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("SpinGraph: self loop");
        if (a > b) std::swap(a, b);
    }

    // Canonical edge order; the permutation carries any explicit edge mask along.
    std::vector<int32_t> perm(edges.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int32_t x, int32_t y) { return edges[x] < edges[y]; });

    edges_.reserve(edges.size());
    edge_mask_.reserve(edges.size());
    for (int32_t p : perm) {
        if (!edges_.empty() && edges_.back() == edges[p])
            throw std::invalid_argument("SpinGraph: duplicate edge (" +
                                        std::to_string(edges[p].first) + "," +
                                        std::to_string(edges[p].second) + ")");
        edges_.push_back(edges[p]);
        uint8_t m = edge_mask.empty() ? 1 : edge_mask[p];
        if (!node_mask_[edges[p].first] || !node_mask_[edges[p].second]) m = 0;
        edge_mask_.push_back(m);
    }

    adj_offset_.assign(num_vars + 1, 0);
    for (const auto& [a, b] : edges_) {
        ++adj_offset_[a + 1];
        ++adj_offset_[b + 1];
    }
    for (int32_t v = 0; v < num_vars; ++v) adj_offset_[v + 1] += adj_offset_[v];
    adj_.resize(edges_.size() * 2);
    std::vector<int32_t> fill(adj_offset_.begin(), adj_offset_.end() - 1);
    for (int32_t e = 0; e < num_edges(); ++e) {
        const auto& [a, b] = edges_[e];
        adj_[fill[a]++] = {b, e};
        adj_[fill[b]++] = {a, e};
    }

    for (int32_t v = 0; v < num_vars; ++v)
        if (node_mask_[v]) functional_nodes_.push_back(v);
    num_functional_nodes_ = static_cast<int32_t>(functional_nodes_.size());
    num_functional_edges_ = static_cast<int32_t>(
        std::count(edge_mask_.begin(), edge_mask_.end(), uint8_t{1}));
}

int32_t SpinGraph::find_edge(int32_t a, int32_t b) const {
    if (a > b) std::swap(a, b);
    Edge key{a, b};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int32_t>(it - edges_.begin());
}

void SpinGraph::set_tiles(std::vector<int32_t> tile_of, int32_t rows, int32_t cols) {
    if (tile_of.size() != static_cast<size_t>(num_vars_))
        throw std::invalid_argument("SpinGraph: tile map size mismatch");
    tile_of_ = std::move(tile_of);
    tile_rows_ = rows;
    tile_cols_ = cols;
    num_tiles_ = rows * cols;
}

void SpinGraph::check_var(int32_t v) const {
    if (v < 0 || v >= num_vars_)
        throw std::out_of_range("SpinGraph: variable index " + std::to_string(v) +
                                " out of range [0," + std::to_string(num_vars_) + ")");
}

}  // namespace qaga
