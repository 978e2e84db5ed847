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
#include <memory>
#include <string>
#include <vector>

#include "qaga/graph.hpp"

namespace qaga {

// Chimera lattice C(rows, cols, shore): a rows x cols grid of complete
// bipartite K_{shore,shore} tiles. Within a tile, side 0 couples to side 1;
// side-0 chains run down columns, side-1 chains run along rows.
//
// Node index: ((r * cols + c) * 2 + side) * shore + k.
struct ChimeraSpec {
    int32_t rows = 1;
    int32_t cols = 1;
    int32_t shore = 4;
    std::vector<int32_t> dead_nodes = {};  // masked out, e.g. failed qubits

    int64_t num_nodes() const { return 2ll * rows * cols * shore; }
    int64_t num_edges() const {
        return static_cast<int64_t>(rows) * cols * shore * shore +
               static_cast<int64_t>(shore) * (cols * (rows - 1) + rows * (cols - 1));
    }
    int32_t node_index(int32_t r, int32_t c, int32_t side, int32_t k) const {
        return ((r * cols + c) * 2 + side) * shore + k;
    }

    // Parses "RxCxL", e.g. "16x16x4".
    static ChimeraSpec parse(const std::string& text);

    void validate() const;  // throws std::invalid_argument
};

SpinGraph chimera(const ChimeraSpec& spec);

inline std::shared_ptr<const SpinGraph> chimera_shared(const ChimeraSpec& spec) {
    return std::make_shared<const SpinGraph>(chimera(spec));
}

}  // namespace qaga
