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
#include <optional>
#include <span>
#include <vector>

#include "qaga/graph.hpp"
#include "qaga/rng.hpp"

namespace qaga {

// E(s) = sum_i h_i s_i + sum_(i,j) J_ij s_i s_j over the graph's edge list.
//
// The graph is shared and immutable; h/J are fixed at construction. Masked
// variables and edges are forced to h = 0 / J = 0 so they can never
// contribute to the energy.
class IsingModel {
  public:
    IsingModel(std::shared_ptr<const SpinGraph> graph, std::vector<double> h,
               std::vector<double> j);

    const SpinGraph& graph() const { return *graph_; }
    const std::shared_ptr<const SpinGraph>& graph_ptr() const { return graph_; }

    int32_t num_vars() const { return graph_->num_vars(); }

    double field(int32_t v) const { return h_[v]; }
    double coupling(int32_t e) const { return j_[e]; }
    const std::vector<double>& fields() const { return h_; }
    const std::vector<double>& couplings() const { return j_; }

    // Coupling values aligned with graph().neighbors(v).
    std::span<const double> adjacent_couplings(int32_t v) const {
        const auto row = graph_->neighbors(v);
        return {adj_j_.data() + graph_->adj_offset(v), row.size()};
    }

    // True when every h and J is integer-valued; such models have exact
    // float energies and take the fast brute-force path.
    bool integral() const { return integral_; }

  private:
    std::shared_ptr<const SpinGraph> graph_;
    std::vector<double> h_;
    std::vector<double> j_;
    std::vector<double> adj_j_;
    bool integral_;
};

// Spin assignment plus a lazily maintained energy cache. flip() keeps the
// cache current in O(degree); validate_cache() recomputes from scratch and is
// the debug-mode cross-check.
struct SpinState {
    std::vector<int8_t> spins;  // each ±1
    std::optional<double> cached_energy;
};

// Full recompute, deterministic summation order (fields by index, then edges
// in canonical order). Throws std::invalid_argument on dimension mismatch.
double energy(const IsingModel& model, const SpinState& state);

// Computes and caches the energy if the cache is empty.
double ensure_energy(const IsingModel& model, SpinState& state);

// Energy change of flipping variable v: -2 s_v (h_v + sum_u J_uv s_u).
// O(degree). Throws std::out_of_range for a bad index.
double energy_delta(const IsingModel& model, const SpinState& state, int32_t v);

// Flips v in place and updates the cached energy if present.
void flip(const IsingModel& model, SpinState& state, int32_t v);

// Uniform random ±1 on functional variables; masked variables frozen at +1.
SpinState random_state(const IsingModel& model, Rng& rng);

// All spins set to `value` (±1); masked variables still frozen at +1.
SpinState uniform_state(const IsingModel& model, int8_t value);

// Number of functional variables on which a and b differ.
int32_t hamming_distance(const IsingModel& model, const SpinState& a, const SpinState& b);

// True when the cache (if set) agrees with a fresh recompute to within tol.
bool validate_cache(const IsingModel& model, const SpinState& state, double tol = 1e-9);

}  // namespace qaga
