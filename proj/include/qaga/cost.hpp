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
#include <optional>

namespace qaga {

// Hardware-neutral effort accounting, in microseconds. One Metropolis sweep
// (or one cluster move, whose work is likewise linear in the variables)
// costs num_vars spin updates at ns_per_spin_update; at 2000 variables the
// default rate gives 0.4 us per sweep. Anneal-style moves are charged their
// schedule duration instead. Parameter tuning is never charged.
struct CostModel {
    double ns_per_spin_update = 0.2;

    double sweep_cost_us(int32_t num_vars) const {
        return num_vars * ns_per_spin_update / 1000.0;
    }
};

// Any subset may be active. target_energy defines success; the other two cap
// the run. Budgets are checked after each costed operation, so effort can
// overshoot by at most one operation.
struct StopCriterion {
    std::optional<double> target_energy;
    std::optional<double> max_effort_us;
    std::optional<int64_t> max_iterations;

    bool target_reached(double best_energy) const {
        return target_energy && best_energy <= *target_energy;
    }
    bool budget_exhausted(double effort_us) const {
        return max_effort_us && effort_us >= *max_effort_us;
    }
    bool iterations_exhausted(int64_t iterations) const {
        return max_iterations && iterations >= *max_iterations;
    }
};

}  // namespace qaga
