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
#include <span>

#include "qaga/model.hpp"
#include "qaga/rng.hpp"
#include "qaga/schedule.hpp"

namespace qaga {

// Maps the annealing parameter to an equilibration inverse temperature:
// log beta is linear in s over the fixed domain [0, 1], so beta(0) =
// beta_hot, beta(1) = beta_cold, and the midpoint is their geometric mean.
// A shallow reverse anneal (s near 1) therefore equilibrates cold and stays
// near its input; a deep one (s near 0) runs hot and scrambles it.
struct SurrogateConfig {
    double beta_hot = 0.5;
    double beta_cold = 5.0;
    double sweeps_per_us = 10.0;

    void validate() const;  // 0 < beta_hot < beta_cold, sweeps_per_us >= 1
};

// beta(s) for s in [0, 1]; out-of-range s throws std::invalid_argument.
double effective_beta(double s, const SurrogateConfig& config);

// Mutation backends are interchangeable: a batch of states goes in, mutated
// states and a cost-model effort (microseconds) come out. batch_limit models
// the fan-in of the underlying device or simulator.
class MutationOperator {
  public:
    virtual ~MutationOperator() = default;

    // Mutates the states in place. Throws std::length_error when the batch
    // exceeds batch_limit(). Returns the effort charged for the batch.
    virtual double mutate_batch(const IsingModel& model, std::span<SpinState> states,
                                Rng& rng) = 0;
    virtual int32_t batch_limit() const = 0;
};

// Classical stand-in for a reverse anneal: the schedule is discretized into
// round(sweeps_per_us * duration) Metropolis sweeps, each run at
// effective_beta(s(t)) for its midpoint time t. Effort is the schedule
// duration per state, regardless of how many sweeps that works out to.
//
// Batch slots draw from substreams keyed by state content (plus an ordinal
// for duplicates), so permuting a batch permutes the outputs identically
// while duplicate states still mutate independently.
class SurrogateMutator : public MutationOperator {
  public:
    SurrogateMutator(AnnealSchedule schedule, SurrogateConfig config,
                     int32_t batch_limit = 40);

    double mutate_batch(const IsingModel& model, std::span<SpinState> states,
                        Rng& rng) override;
    int32_t batch_limit() const override { return batch_limit_; }

    const AnnealSchedule& schedule() const { return schedule_; }
    const SurrogateConfig& config() const { return config_; }

  private:
    AnnealSchedule schedule_;
    SurrogateConfig config_;
    int32_t batch_limit_;
};

// Single-state convenience; identical to a batch of one.
SpinState mutate(const IsingModel& model, const SpinState& state,
                 const AnnealSchedule& schedule, const SurrogateConfig& config, Rng& rng);

}  // namespace qaga
