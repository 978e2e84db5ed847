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
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "qaga/model.hpp"
#include "qaga/rng.hpp"

namespace qaga::test {

// Builds a model from explicit lists. `edges` must already be in canonical
// order (i < j, sorted) so that `j` lines up with the stored edge order.
inline IsingModel make_model(int32_t num_vars, std::vector<SpinGraph::Edge> edges,
                             std::vector<double> h, std::vector<double> j,
                             std::vector<uint8_t> node_mask = {},
                             std::vector<uint8_t> edge_mask = {}) {
    auto graph = std::make_shared<const SpinGraph>(num_vars, std::move(edges),
                                                   std::move(node_mask), std::move(edge_mask));
    return IsingModel(std::move(graph), std::move(h), std::move(j));
}

// Energy evaluated straight off the definition, independent of the library's
// summation and caching. Oracle for energy(), deltas, and brute force.
inline double naive_energy(const IsingModel& model, const std::vector<int8_t>& spins) {
    double e = 0.0;
    for (int32_t v = 0; v < model.num_vars(); ++v) e += model.field(v) * spins[v];
    const auto& edges = model.graph().edges();
    for (int32_t k = 0; k < model.graph().num_edges(); ++k)
        e += model.coupling(k) * spins[edges[k].first] * spins[edges[k].second];
    return e;
}

struct NaiveGround {
    double energy = std::numeric_limits<double>::infinity();
    uint64_t degeneracy = 0;
};

// Plain 2^k enumeration over the functional variables, masked spins at +1.
// Only for small fixtures.
inline NaiveGround naive_brute_force(const IsingModel& model) {
    const auto& functional = model.graph().functional_nodes();
    const int32_t k = static_cast<int32_t>(functional.size());
    std::vector<int8_t> spins(model.num_vars(), 1);
    NaiveGround result;
    for (uint64_t word = 0; word < (uint64_t{1} << k); ++word) {
        for (int32_t b = 0; b < k; ++b)
            spins[functional[b]] = (word >> b) & 1 ? int8_t{-1} : int8_t{1};
        const double e = naive_energy(model, spins);
        if (e < result.energy - 1e-12) {
            result.energy = e;
            result.degeneracy = 1;
        } else if (e <= result.energy + 1e-12) {
            ++result.degeneracy;
        }
    }
    if (k == 0) {
        result.energy = naive_energy(model, spins);
        result.degeneracy = 1;
    }
    return result;
}

// Dense-ish random model on up to ~12 variables, mixing integral and real
// couplings and occasional dead nodes.
inline IsingModel random_small_model(int32_t num_vars, Rng& rng, bool integral,
                                     bool with_fields, double mask_rate = 0.0) {
    std::vector<SpinGraph::Edge> edges;
    std::vector<double> j;
    for (int32_t a = 0; a < num_vars; ++a)
        for (int32_t b = a + 1; b < num_vars; ++b)
            if (rng.uniform01() < 0.4) {
                edges.push_back({a, b});
                j.push_back(integral ? static_cast<double>(rng.spin())
                                     : 2.0 * rng.uniform01() - 1.0);
            }
    std::vector<double> h(num_vars, 0.0);
    if (with_fields)
        for (auto& v : h)
            v = integral ? static_cast<double>(rng.spin() * static_cast<int>(rng.below(3)))
                         : 2.0 * rng.uniform01() - 1.0;
    std::vector<uint8_t> node_mask;
    if (mask_rate > 0.0) {
        node_mask.assign(num_vars, 1);
        for (auto& m : node_mask)
            if (rng.uniform01() < mask_rate) m = 0;
    }
    return make_model(num_vars, std::move(edges), std::move(h), std::move(j),
                      std::move(node_mask));
}

}  // namespace qaga::test
