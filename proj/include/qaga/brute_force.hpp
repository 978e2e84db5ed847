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

#include "qaga/model.hpp"

namespace qaga {

struct GroundTruth {
    double energy = 0.0;
    uint64_t degeneracy = 0;  // number of ground states, masked variables fixed
};

// Exact minimum by Gray-code enumeration over the functional variables
// (masked ones stay +1). At most 32 functional variables; more throws
// std::invalid_argument. Zero-field models enumerate half the space (global
// spin-flip symmetry) and double the count; integer models with |J|, |h|
// <= 127 additionally take a bitmask/popcount inner loop. Exact for integer
// models; float models are exact to double summation.
GroundTruth brute_force(const IsingModel& model);

}  // namespace qaga
