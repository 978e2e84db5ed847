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

#include "qaga/mutation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qaga/metropolis.hpp"

namespace qaga {

void SurrogateConfig::validate() const {
    if (!(beta_hot > 0.0) || !(beta_cold > beta_hot))
        throw std::invalid_argument("SurrogateConfig: need 0 < beta_hot < beta_cold");
    if (!(sweeps_per_us >= 1.0))
        throw std::invalid_argument("SurrogateConfig: sweeps_per_us must be >= 1");
}

double effective_beta(double s, const SurrogateConfig& config) {
    config.validate();
    if (!(s >= 0.0 && s <= 1.0))
        throw std::invalid_argument("effective_beta: s must lie in [0, 1]");
    return config.beta_hot * std::pow(config.beta_cold / config.beta_hot, s);
}

static uint64_t state_hash(const SpinState& state) {
    return hash64({reinterpret_cast<const char*>(state.spins.data()), state.spins.size()});
}

static void anneal_sweeps(const IsingModel& model, SpinState& state,
                          const AnnealSchedule& schedule, const SurrogateConfig& config,
                          Rng child) {
    const double duration = schedule.duration_us();
    const auto sweeps = std::max<int64_t>(1, std::llround(config.sweeps_per_us * duration));
    for (int64_t k = 0; k < sweeps; ++k) {
        double t = (k + 0.5) / static_cast<double>(sweeps) * duration;
        sweep_metropolis(model, state, effective_beta(schedule.s_at(t), config), child);
    }
    ensure_energy(model, state);
}

SurrogateMutator::SurrogateMutator(AnnealSchedule schedule, SurrogateConfig config,
                                   int32_t batch_limit)
    : schedule_(std::move(schedule)), config_(config), batch_limit_(batch_limit) {
    schedule_.validate();
    config_.validate();
    if (batch_limit_ < 1)
        throw std::invalid_argument("SurrogateMutator: batch_limit must be >= 1");
}

double SurrogateMutator::mutate_batch(const IsingModel& model, std::span<SpinState> states,
                                      Rng& rng) {
    if (states.size() > static_cast<size_t>(batch_limit_))
        throw std::length_error("mutate_batch: batch exceeds the operator's batch limit");
    const uint64_t base = rng.next();
    std::vector<uint64_t> seen;
    seen.reserve(states.size());
    for (auto& state : states) {
        const uint64_t h = state_hash(state);
        uint64_t ordinal = 0;
        for (uint64_t prior : seen)
            if (prior == h) ++ordinal;
        seen.push_back(h);
        anneal_sweeps(model, state, schedule_, config_, Rng(mix64(base, mix64(h, ordinal))));
    }
    return static_cast<double>(states.size()) * schedule_.duration_us();
}

SpinState mutate(const IsingModel& model, const SpinState& state,
                 const AnnealSchedule& schedule, const SurrogateConfig& config, Rng& rng) {
    schedule.validate();
    config.validate();
    SpinState out = state;
    const uint64_t base = rng.next();
    anneal_sweeps(model, out, schedule, config, Rng(mix64(base, mix64(state_hash(out), 0))));
    return out;
}

}  // namespace qaga
