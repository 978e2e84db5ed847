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

#include "qaga/chimera.hpp"

#include <stdexcept>

namespace qaga {

ChimeraSpec ChimeraSpec::parse(const std::string& text) {
    ChimeraSpec spec;
    size_t a = text.find('x');
    size_t b = (a == std::string::npos) ? std::string::npos : text.find('x', a + 1);
    try {
        if (b == std::string::npos) throw std::invalid_argument("format");
        size_t used_r = 0, used_c = 0, used_l = 0;
        spec.rows = std::stoi(text.substr(0, a), &used_r);
        spec.cols = std::stoi(text.substr(a + 1, b - a - 1), &used_c);
        spec.shore = std::stoi(text.substr(b + 1), &used_l);
        if (used_r != a || used_c != b - a - 1 || used_l != text.size() - b - 1)
            throw std::invalid_argument("format");
    } catch (const std::exception&) {
        throw std::invalid_argument("ChimeraSpec: expected RxCxL, got '" + text + "'");
    }
    spec.validate();
    return spec;
}

void ChimeraSpec::validate() const {
    if (rows < 1 || cols < 1 || shore < 1)
        throw std::invalid_argument("ChimeraSpec: rows, cols, shore must be >= 1");
    for (int32_t d : dead_nodes)
        if (d < 0 || d >= num_nodes())
            throw std::invalid_argument("ChimeraSpec: dead node index out of range");
}

SpinGraph chimera(const ChimeraSpec& spec) {
    spec.validate();
    const int32_t n = static_cast<int32_t>(spec.num_nodes());
    const int32_t L = spec.shore;

    std::vector<SpinGraph::Edge> edges;
    edges.reserve(spec.num_edges());
    for (int32_t r = 0; r < spec.rows; ++r) {
        for (int32_t c = 0; c < spec.cols; ++c) {
            for (int32_t k0 = 0; k0 < L; ++k0)
                for (int32_t k1 = 0; k1 < L; ++k1)
                    edges.emplace_back(spec.node_index(r, c, 0, k0),
                                       spec.node_index(r, c, 1, k1));
            if (r + 1 < spec.rows)
                for (int32_t k = 0; k < L; ++k)
                    edges.emplace_back(spec.node_index(r, c, 0, k),
                                       spec.node_index(r + 1, c, 0, k));
            if (c + 1 < spec.cols)
                for (int32_t k = 0; k < L; ++k)
                    edges.emplace_back(spec.node_index(r, c, 1, k),
                                       spec.node_index(r, c + 1, 1, k));
        }
    }

    std::vector<uint8_t> node_mask(n, 1);
    for (int32_t d : spec.dead_nodes) node_mask[d] = 0;

    SpinGraph g(n, std::move(edges), std::move(node_mask));
    std::vector<int32_t> tile_of(n);
    for (int32_t v = 0; v < n; ++v) tile_of[v] = v / (2 * L);
    g.set_tiles(std::move(tile_of), spec.rows, spec.cols);
    return g;
}

}  // namespace qaga
