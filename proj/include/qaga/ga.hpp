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

#include "qaga/cost.hpp"
#include "qaga/icm.hpp"
#include "qaga/model.hpp"
#include "qaga/mutation.hpp"
#include "qaga/record.hpp"
#include "qaga/rng.hpp"
#include "qaga/schedule.hpp"

namespace qaga {

struct Individual {
    SpinState state;
    double raw_energy = 0.0;
    double shared_energy = 0.0;
};

using Population = std::vector<Individual>;

Individual make_individual(const IsingModel& model, SpinState state);

// Genetic-algorithm driver around an interchangeable mutation backend.
//
// Per generation: every individual is mutated (a copy, kept alongside its
// parent) with probability mutation_rate via batched mutation; recombination
// pairs the population through `recombination_rate` random perfect matchings
// and applies an isoenergetic cluster move per pair; selection keeps the
// first keep_size individuals of the Pareto order over (raw energy, shared
// energy) and tops back up with fresh_random new random individuals. If the
// target is not reached after max_generations the population restarts from
// scratch (up to max_restarts).
struct QagaConfig {
    int32_t population_size = 40;
    int32_t keep_size = 30;
    int32_t fresh_random = 10;
    double mutation_rate = 1.0;      // >= 1: that many mutations each, fraction Bernoulli
    int32_t recombination_rate = 10; // matchings per generation
    int64_t max_generations = 50;    // per attempt
    int64_t max_restarts = -1;       // -1: unlimited; 0: single attempt
    int32_t batch_limit = 40;
    bool plain_truncation = false;   // fallback: keep best keep_size by raw energy
    AnnealSchedule schedule;         // default set by QagaConfig()
    SurrogateConfig surrogate;
    StopCriterion stop;
    CostModel cost;

    QagaConfig();
    void validate() const;  // throws std::invalid_argument
};

// Pareto-orders the population by (raw, shared) and truncates to keep_size.
// The minimum-raw individual always survives. With plain_truncation the
// order is raw ascending instead.
void select(const IsingModel& model, Population& population, const QagaConfig& config);

// `rate` independent random perfect matchings of the population (odd
// leftover skipped per matching); each matched pair spawns two children that
// undergo one cluster move together. Pairs whose parents were identical are
// no-ops and produce no offspring. Every attempted pair is charged one
// sweep-equivalent; moves_out counts attempted pairs.
std::vector<Individual> recombination_round(const IsingModel& model,
                                            std::span<const Individual> population,
                                            int32_t rate, Rng& rng, int64_t* moves_out);

// One line per generation when tracing.
struct GenerationStats {
    int64_t restart = 0;
    int64_t generation = 0;      // within the attempt, 1-based
    int32_t population = 0;      // size at generation start
    double best_energy = 0.0;    // best so far, across attempts
    double effort_us = 0.0;      // cumulative
};

RunRecord qaga_run(const IsingModel& model, const QagaConfig& config,
                   MutationOperator& mutator, Rng& rng,
                   std::vector<GenerationStats>* trace = nullptr);

}  // namespace qaga
