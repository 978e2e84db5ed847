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
#include "qaga/rng.hpp"

namespace qaga {

struct IcmResult {
    bool moved = false;
    int32_t cluster_size = 0;
};

// Houdayer isoenergetic cluster move. Let D be the set of functional
// variables where a and b disagree; a uniformly chosen seed from D is
// flood-filled through functional edges within D, and the resulting cluster
// is flipped in both states (cached energies updated incrementally).
// Identical states are a no-op. For models with zero fields the move
// conserves energy(a) + energy(b) exactly. The work is linear in the number
// of variables, like a sweep.
IcmResult houdayer_move(const IsingModel& model, SpinState& a, SpinState& b, Rng& rng);

}  // namespace qaga
