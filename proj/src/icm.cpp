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

#include "qaga/icm.hpp"

#include <stdexcept>
#include <vector>

namespace qaga {

IcmResult houdayer_move(const IsingModel& model, SpinState& a, SpinState& b, Rng& rng) {
    if (a.spins.size() != static_cast<size_t>(model.num_vars()) ||
        b.spins.size() != static_cast<size_t>(model.num_vars()))
        throw std::invalid_argument("houdayer_move: state dimension mismatch");
    ensure_energy(model, a);
    ensure_energy(model, b);

    std::vector<int32_t> differing;
    differing.reserve(64);
    std::vector<uint8_t> in_diff(model.num_vars(), 0);
    for (int32_t v : model.graph().functional_nodes()) {
        if (a.spins[v] != b.spins[v]) {
            differing.push_back(v);
            in_diff[v] = 1;
        }
    }
    if (differing.empty()) return {};

    int32_t seed = differing[rng.below(differing.size())];
    std::vector<int32_t> cluster{seed};
    std::vector<uint8_t> visited(model.num_vars(), 0);
    visited[seed] = 1;
    for (size_t head = 0; head < cluster.size(); ++head) {
        int32_t v = cluster[head];
        for (const auto& [u, e] : model.graph().neighbors(v)) {
            if (visited[u] || !in_diff[u]) continue;
            if (!model.graph().edge_functional(e)) continue;
            visited[u] = 1;
            cluster.push_back(u);
        }
    }

    // Flip order is irrelevant to the final state; per-flip deltas keep the
    // caches exact without a full recompute.
    for (int32_t v : cluster) flip(model, a, v);
    for (int32_t v : cluster) flip(model, b, v);
    return {true, static_cast<int32_t>(cluster.size())};
}

}  // namespace qaga
