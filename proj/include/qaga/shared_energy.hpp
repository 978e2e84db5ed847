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

#include <span>
#include <vector>

#include "qaga/model.hpp"

namespace qaga {

// Implicit fitness sharing over Ising terms. A term (field h_i or coupling
// J_ij) is satisfied by an individual when its energy contribution is
// negative; each satisfied term's reward is split evenly among the n
// individuals that satisfy it:
//
//   shared_i = sum over satisfied fields    h_i s_i / n_i
//            + sum over satisfied couplings J_ij s_i s_j / n_ij
//
// Unsatisfied terms contribute nothing. Summing over the population counts
// each term satisfied by anyone exactly once, which is the invariant tests
// pin down. O(population x (edges + fields)).
std::vector<double> shared_energies(const IsingModel& model,
                                    std::span<const SpinState> population);

// Same computation over non-contiguous states.
std::vector<double> shared_energies(const IsingModel& model,
                                    std::span<const SpinState* const> population);

}  // namespace qaga
