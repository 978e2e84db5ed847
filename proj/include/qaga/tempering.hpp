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

#include "qaga/metropolis.hpp"
#include "qaga/model.hpp"
#include "qaga/rng.hpp"

namespace qaga {

// Inverse-temperature ladder for parallel tempering, strictly increasing.
// measured_exchange_rates[k] is the observed acceptance rate of the
// (k, k+1) swap, filled in by the tuner or by measure_exchange_rates.
struct BetaLadder {
    std::vector<double> betas;
    std::vector<double> measured_exchange_rates;
    bool tuned_within_band = true;

    int32_t size() const { return static_cast<int32_t>(betas.size()); }
    void validate() const;  // >= 2 rungs, positive, strictly increasing

    static BetaLadder geometric(double beta_min, double beta_max, int32_t size);
};

// Swap acceptance min(1, exp((beta_i - beta_j)(E_i - E_j))).
double exchange_probability(double beta_i, double beta_j, double e_i, double e_j);

// Per-pair replica-exchange counters, indexed like adjacent ladder pairs.
struct ExchangeStats {
    std::vector<int64_t> attempts;
    std::vector<int64_t> accepts;

    void reset(int32_t pairs);
    std::vector<double> rates() const;
};

// Swap phase only: attempts the adjacent pairs (k, k+1) with k % 2 == parity,
// in ascending k, swapping states (not betas) on acceptance. The replica
// multiset is preserved. Exposed separately so drivers and tests can combine
// it with sweeps as needed.
void pt_exchange(std::vector<SpinState>& replicas, const BetaLadder& ladder, int parity,
                 Rng& rng, ExchangeStats* stats = nullptr);

// One parallel-tempering step: one Metropolis sweep per replica at its rung,
// then pt_exchange with the given parity. Drivers alternate parity between
// calls so both pairings are exercised. replicas.size() must equal the
// ladder size. Returns accepted flips across all sweeps.
int64_t pt_step(const IsingModel& model, std::vector<SpinState>& replicas,
                const BetaLadder& ladder, int parity, Rng& rng,
                ExchangeStats* stats = nullptr);

// Runs seeded PT (fresh random replicas) for burn_in + measure steps and
// returns the per-pair exchange rates observed over the measured portion.
std::vector<double> measure_exchange_rates(const IsingModel& model, const BetaLadder& ladder,
                                           int64_t burn_in, int64_t measure, Rng& rng);

struct PtTuneParams {
    double target_low = 0.3;
    double target_high = 0.8;
    double beta_min = 0.1;
    double beta_max = 5.0;
    int32_t initial_size = 8;
    int32_t max_size = 96;
    int64_t burn_in_sweeps = 200;
    int64_t measure_sweeps = 1000;
    int64_t confirm_sweeps = 3000;
    int32_t max_rounds = 40;

    void validate() const;
};

// Adjusts a geometric initial ladder until every measured adjacent exchange
// rate lies in [target_low, target_high]: a cold pair (rate below the band)
// gets a geometric-mean rung inserted; a hot pair (above the band) loses an
// interior rung. Endpoints are pinned. A candidate ladder must pass a longer
// confirmation measurement before it is returned. If the round or size cap
// is hit, the best ladder seen is returned with tuned_within_band = false.
BetaLadder tune_beta_ladder(const IsingModel& model, const PtTuneParams& params, Rng& rng);

// Convenience: SA cooling schedule spanning the ladder's range.
SaSchedule sa_schedule_from_ladder(const BetaLadder& ladder, int64_t num_sweeps);

}  // namespace qaga
