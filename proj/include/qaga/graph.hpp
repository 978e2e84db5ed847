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

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qaga {

struct Adjacent {
    int32_t vertex;  // neighbor
    int32_t edge;    // index into edges()
};

// Undirected interaction graph with optional hardware-style masks.
//
// Variables live in a fixed index space [0, num_vars); dead (masked) nodes
// keep their index so instances line up with physical layouts. Edges are
// stored canonically: endpoint-normalized (i < j) and sorted lexicographically,
// so edge indices are reproducible regardless of construction order. An edge
// incident to a dead node is kept in the list but marked non-functional.
class SpinGraph {
  public:
    using Edge = std::pair<int32_t, int32_t>;

    // edge_mask, if given, is aligned with `edges` as passed in (before
    // canonical sorting). Self loops, duplicate edges and out-of-range
    // endpoints throw std::invalid_argument.
    explicit SpinGraph(int32_t num_vars, std::vector<Edge> edges,
                       std::vector<uint8_t> node_mask = {},
                       std::vector<uint8_t> edge_mask = {});

    int32_t num_vars() const { return num_vars_; }
    int32_t num_edges() const { return static_cast<int32_t>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Adjacent> neighbors(int32_t v) const {
        return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
    }
    // Offset of v's adjacency row; external per-adjacency arrays align to it.
    int32_t adj_offset(int32_t v) const { return adj_offset_[v]; }

    bool node_functional(int32_t v) const { return node_mask_[v] != 0; }
    bool edge_functional(int32_t e) const { return edge_mask_[e] != 0; }
    bool fully_functional() const { return num_functional_nodes_ == num_vars_; }

    int32_t num_functional_nodes() const { return num_functional_nodes_; }
    int32_t num_functional_edges() const { return num_functional_edges_; }

    // Functional node indices, ascending. Sweeps iterate this list.
    const std::vector<int32_t>& functional_nodes() const { return functional_nodes_; }

    // Index of a canonical edge, or -1 if absent. O(log E).
    int32_t find_edge(int32_t a, int32_t b) const;

    // Tile decomposition, attached by structured-graph builders.
    bool has_tiles() const { return !tile_of_.empty(); }
    int32_t tile_of(int32_t v) const { return tile_of_[v]; }
    int32_t num_tiles() const { return num_tiles_; }
    int32_t tile_rows() const { return tile_rows_; }
    int32_t tile_cols() const { return tile_cols_; }
    void set_tiles(std::vector<int32_t> tile_of, int32_t rows, int32_t cols);

    void check_var(int32_t v) const;

  private:
    int32_t num_vars_;
    std::vector<Edge> edges_;
    std::vector<uint8_t> node_mask_;
    std::vector<uint8_t> edge_mask_;
    std::vector<int32_t> adj_offset_;
    std::vector<Adjacent> adj_;
    std::vector<int32_t> functional_nodes_;
    int32_t num_functional_nodes_ = 0;
    int32_t num_functional_edges_ = 0;
    std::vector<int32_t> tile_of_;
    int32_t num_tiles_ = 0;
    int32_t tile_rows_ = 0;
    int32_t tile_cols_ = 0;
};

}  // namespace qaga
