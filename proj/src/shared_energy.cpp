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

#include "qaga/shared_energy.hpp"

#include <stdexcept>

namespace qaga {

static std::vector<double> shared_energies_impl(const IsingModel& model,
                                                std::span<const SpinState* const> population) {
    const SpinGraph& g = model.graph();
    for (const auto* st : population)
        if (st->spins.size() != static_cast<size_t>(g.num_vars()))
            throw std::invalid_argument("shared_energies: state dimension mismatch");

    std::vector<int32_t> field_count(g.num_vars(), 0);
    std::vector<int32_t> edge_count(g.num_edges(), 0);
    const auto& edges = g.edges();
    for (const auto* st : population) {
        const auto* s = st->spins.data();
        for (int32_t v = 0; v < g.num_vars(); ++v)
            if (model.field(v) * s[v] < 0.0) ++field_count[v];
        for (int32_t e = 0; e < g.num_edges(); ++e)
            if (model.coupling(e) * (s[edges[e].first] * s[edges[e].second]) < 0.0)
                ++edge_count[e];
    }

    std::vector<double> shared(population.size(), 0.0);
    for (size_t i = 0; i < population.size(); ++i) {
        const auto* s = population[i]->spins.data();
        double acc = 0.0;
        for (int32_t v = 0; v < g.num_vars(); ++v) {
            double term = model.field(v) * s[v];
            if (term < 0.0) acc += term / field_count[v];
        }
        for (int32_t e = 0; e < g.num_edges(); ++e) {
            double term = model.coupling(e) * (s[edges[e].first] * s[edges[e].second]);
            if (term < 0.0) acc += term / edge_count[e];
        }
        shared[i] = acc;
    }
    return shared;
}

std::vector<double> shared_energies(const IsingModel& model,
                                    std::span<const SpinState* const> population) {
    return shared_energies_impl(model, population);
}

std::vector<double> shared_energies(const IsingModel& model,
                                    std::span<const SpinState> population) {
    std::vector<const SpinState*> ptrs;
    ptrs.reserve(population.size());
    for (const auto& st : population) ptrs.push_back(&st);
    return shared_energies_impl(model, ptrs);
}

}  // namespace qaga
