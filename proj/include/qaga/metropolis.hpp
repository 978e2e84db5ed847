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
#include <vector>

#include "qaga/model.hpp"
#include "qaga/rng.hpp"

namespace qaga {

// One Metropolis sweep at inverse temperature beta: every functional variable
// is proposed once, in fixed index order. A flip with dE <= 0 is always
// taken; otherwise it is taken with probability exp(-beta dE). The state's
// cached energy is kept current. Returns the number of accepted flips.
// beta < 0 throws std::invalid_argument.
int64_t sweep_metropolis(const IsingModel& model, SpinState& state, double beta, Rng& rng);

// Per-sweep inverse temperatures; must be non-decreasing for a cooling run.
struct SaSchedule {
    std::vector<double> betas;

    int64_t num_sweeps() const { return static_cast<int64_t>(betas.size()); }
    void validate() const;  // non-empty, non-negative, non-decreasing
};

// Linear interpolation from the ladder's coldest-to-hottest range:
// betas[k] = lo + (hi - lo) k / (num_sweeps - 1). num_sweeps == 1 yields
// {hi} (the degenerate single-sweep case anneals at the cold end).
SaSchedule sa_schedule_linear(double beta_min, double beta_max, int64_t num_sweeps);

// Starts from a uniform random state and runs one sweep per schedule entry.
// An empty schedule returns the random initial state unchanged. Returns the
// final state with its cached energy set; flips_out, if non-null, receives
// the total accepted flips.
SpinState simulated_anneal(const IsingModel& model, const SaSchedule& schedule, Rng& rng,
                           int64_t* flips_out = nullptr);

}  // namespace qaga
