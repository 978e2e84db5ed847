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
#include <span>
#include <vector>

namespace qaga {

// Ranks points by repeated Pareto-frontier extraction under (minimize raw,
// minimize shared). x dominates y when x is no worse in both coordinates and
// strictly better in at least one; each peel takes the non-dominated set.
// Within a frontier, order is raw ascending, then shared ascending, then
// original index (stable for exact duplicates). raw is the primary metric:
// the first element is always a minimum-raw point, which is what gives
// selection its elitism guarantee.
//
// Returns a permutation of [0, n). Sizes must match.
std::vector<int32_t> pareto_order(std::span<const double> raw,
                                  std::span<const double> shared);

}  // namespace qaga
