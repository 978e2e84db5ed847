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
#include <vector>

#include "qaga/model.hpp"
#include "qaga/rng.hpp"

namespace qaga {

// Instance generators. Each is a pure function of (graph, params, rng seed):
// couplings are drawn in canonical edge order, so the same seed always yields
// the same instance. All three classes have zero fields.

// J = ±1 uniformly on every functional edge.
IsingModel gen_ran1(std::shared_ptr<const SpinGraph> graph, Rng& rng);

// RAN1, then inter-tile couplings scaled by 3. Same seed as gen_ran1 gives
// identical intra-tile couplings. Requires a tiled graph.
IsingModel gen_ac3(std::shared_ptr<const SpinGraph> graph, Rng& rng);

struct DclParams {
    double alpha = 0.75;   // loops per logical variable
    double rung = 4.0;     // magnitude cap R on accumulated logical couplings
    double lambda = 4.0;   // intra-tile ferromagnetic strength

    void validate() const;  // throws std::invalid_argument
};

// Per-instance construction record, mostly for tests and inspection.
struct DclInfo {
    int32_t num_logical = 0;           // logical variables (tiles)
    std::vector<int32_t> loop_lengths; // one entry per placed loop
    int64_t rejected_loops = 0;        // draws discarded by the cap R
};

// Deceptive cluster loops. Tiles are logical variables on the rows x cols
// grid; intra-tile couplers bind each tile ferromagnetically at -lambda, and
// frustrated loops are accumulated on the logical grid edges: each loop is a
// non-backtracking random walk closed at its first revisit, carrying J = -1 on
// every cycle edge except one uniformly chosen +1. A loop that would push any
// accumulated logical coupling past `rung` in magnitude is redrawn. The final
// logical coupling is replicated onto each physical inter-tile coupler.
// Requires a tiled graph with rows, cols >= 2.
IsingModel gen_dcl(std::shared_ptr<const SpinGraph> graph, const DclParams& params,
                   Rng& rng, DclInfo* info = nullptr);

}  // namespace qaga
