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

#include "qaga/metropolis.hpp"

#include <cmath>
#include <stdexcept>

namespace qaga {

int64_t sweep_metropolis(const IsingModel& model, SpinState& state, double beta, Rng& rng) {
    if (!(beta >= 0.0)) throw std::invalid_argument("sweep_metropolis: beta must be >= 0");
    ensure_energy(model, state);
    int64_t flips = 0;
    auto* spins = state.spins.data();
    double e = *state.cached_energy;
    for (int32_t v : model.graph().functional_nodes()) {
        double local = model.field(v);
        const auto row = model.graph().neighbors(v);
        const auto js = model.adjacent_couplings(v);
        for (size_t k = 0; k < row.size(); ++k) local += js[k] * spins[row[k].vertex];
        double d = -2.0 * spins[v] * local;
        if (d <= 0.0 || rng.uniform01() < std::exp(-beta * d)) {
            spins[v] = static_cast<int8_t>(-spins[v]);
            e += d;
            ++flips;
        }
    }
    state.cached_energy = e;
    return flips;
}

void SaSchedule::validate() const {
    if (betas.empty()) throw std::invalid_argument("SaSchedule: empty schedule");
    for (size_t k = 0; k < betas.size(); ++k) {
        if (!(betas[k] >= 0.0))
            throw std::invalid_argument("SaSchedule: betas must be >= 0");
        if (k > 0 && betas[k] < betas[k - 1])
            throw std::invalid_argument("SaSchedule: betas must be non-decreasing");
    }
}

SaSchedule sa_schedule_linear(double beta_min, double beta_max, int64_t num_sweeps) {
    if (num_sweeps < 1) throw std::invalid_argument("sa_schedule_linear: num_sweeps < 1");
    if (!(beta_min >= 0.0) || beta_max < beta_min)
        throw std::invalid_argument("sa_schedule_linear: need 0 <= beta_min <= beta_max");
    SaSchedule sched;
    sched.betas.reserve(num_sweeps);
    if (num_sweeps == 1) {
        sched.betas.push_back(beta_max);
        return sched;
    }
    for (int64_t k = 0; k < num_sweeps; ++k)
        sched.betas.push_back(beta_min + (beta_max - beta_min) *
                                             (static_cast<double>(k) / (num_sweeps - 1)));
    return sched;
}

SpinState simulated_anneal(const IsingModel& model, const SaSchedule& schedule, Rng& rng,
                           int64_t* flips_out) {
    SpinState state = random_state(model, rng);
    int64_t flips = 0;
    for (double beta : schedule.betas) flips += sweep_metropolis(model, state, beta, rng);
    if (flips_out) *flips_out = flips;
    return state;
}

}  // namespace qaga
