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

#include "qaga/model.hpp"

#include <cmath>
#include <stdexcept>

namespace qaga {

IsingModel::IsingModel(std::shared_ptr<const SpinGraph> graph, std::vector<double> h,
                       std::vector<double> j)
    : graph_(std::move(graph)), h_(std::move(h)), j_(std::move(j)) {
    if (!graph_) throw std::invalid_argument("IsingModel: null graph");
    if (h_.size() != static_cast<size_t>(graph_->num_vars()))
        throw std::invalid_argument("IsingModel: field vector size mismatch");
    if (j_.size() != static_cast<size_t>(graph_->num_edges()))
        throw std::invalid_argument("IsingModel: coupling vector size mismatch");

    for (int32_t v = 0; v < graph_->num_vars(); ++v)
        if (!graph_->node_functional(v)) h_[v] = 0.0;
    for (int32_t e = 0; e < graph_->num_edges(); ++e)
        if (!graph_->edge_functional(e)) j_[e] = 0.0;

    adj_j_.resize(j_.size() * 2);
    for (int32_t v = 0; v < graph_->num_vars(); ++v) {
        const auto row = graph_->neighbors(v);
        int32_t base = graph_->adj_offset(v);
        for (size_t k = 0; k < row.size(); ++k) adj_j_[base + k] = j_[row[k].edge];
    }

    integral_ = true;
    for (double x : h_)
        if (x != std::floor(x)) { integral_ = false; break; }
    if (integral_)
        for (double x : j_)
            if (x != std::floor(x)) { integral_ = false; break; }
}

static void check_state(const IsingModel& model, const SpinState& state) {
    if (state.spins.size() != static_cast<size_t>(model.num_vars()))
        throw std::invalid_argument("state dimension does not match model");
}

double energy(const IsingModel& model, const SpinState& state) {
    check_state(model, state);
    const auto& h = model.fields();
    const auto& s = state.spins;
    double e = 0.0;
    for (size_t i = 0; i < h.size(); ++i) e += h[i] * s[i];
    const auto& edges = model.graph().edges();
    const auto& j = model.couplings();
    for (size_t k = 0; k < edges.size(); ++k)
        e += j[k] * (s[edges[k].first] * s[edges[k].second]);
    return e;
}

double ensure_energy(const IsingModel& model, SpinState& state) {
    if (!state.cached_energy) state.cached_energy = energy(model, state);
    return *state.cached_energy;
}

double energy_delta(const IsingModel& model, const SpinState& state, int32_t v) {
    check_state(model, state);
    model.graph().check_var(v);
    double local = model.field(v);
    const auto row = model.graph().neighbors(v);
    const auto js = model.adjacent_couplings(v);
    for (size_t k = 0; k < row.size(); ++k) local += js[k] * state.spins[row[k].vertex];
    return -2.0 * state.spins[v] * local;
}

void flip(const IsingModel& model, SpinState& state, int32_t v) {
    double d = energy_delta(model, state, v);
    state.spins[v] = static_cast<int8_t>(-state.spins[v]);
    if (state.cached_energy) *state.cached_energy += d;
}

SpinState random_state(const IsingModel& model, Rng& rng) {
    SpinState st;
    st.spins.assign(model.num_vars(), int8_t{1});
    for (int32_t v : model.graph().functional_nodes())
        st.spins[v] = static_cast<int8_t>(rng.spin());
    st.cached_energy = energy(model, st);
    return st;
}

SpinState uniform_state(const IsingModel& model, int8_t value) {
    if (value != 1 && value != -1)
        throw std::invalid_argument("uniform_state: spins must be +1 or -1");
    SpinState st;
    st.spins.assign(model.num_vars(), int8_t{1});
    for (int32_t v : model.graph().functional_nodes()) st.spins[v] = value;
    st.cached_energy = energy(model, st);
    return st;
}

int32_t hamming_distance(const IsingModel& model, const SpinState& a, const SpinState& b) {
    check_state(model, a);
    check_state(model, b);
    int32_t d = 0;
    for (int32_t v : model.graph().functional_nodes())
        if (a.spins[v] != b.spins[v]) ++d;
    return d;
}

bool validate_cache(const IsingModel& model, const SpinState& state, double tol) {
    if (!state.cached_energy) return true;
    double fresh = energy(model, state);
    double scale = std::max({1.0, std::abs(fresh), std::abs(*state.cached_energy)});
    return std::abs(fresh - *state.cached_energy) <= tol * scale;
}

}  // namespace qaga
