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

#include "qaga/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qaga/pareto.hpp"
#include "qaga/shared_energy.hpp"

namespace qaga {

Individual make_individual(const IsingModel& model, SpinState state) {
    Individual ind;
    ind.state = std::move(state);
    ind.raw_energy = ensure_energy(model, ind.state);
    return ind;
}

QagaConfig::QagaConfig() {
    schedule.points = {{0.0, 1.0}, {1.0, 0.5}, {7.0, 0.5}, {10.0, 1.0}};
}

void QagaConfig::validate() const {
    if (population_size < 1) throw std::invalid_argument("QagaConfig: empty population");
    if (keep_size < 1 || fresh_random < 0 || keep_size + fresh_random != population_size)
        throw std::invalid_argument(
            "QagaConfig: need keep_size >= 1, fresh_random >= 0, and "
            "keep_size + fresh_random == population_size");
    if (!(mutation_rate >= 0.0)) throw std::invalid_argument("QagaConfig: mutation_rate < 0");
    if (recombination_rate < 0)
        throw std::invalid_argument("QagaConfig: recombination_rate < 0");
    if (max_generations < 1) throw std::invalid_argument("QagaConfig: max_generations < 1");
    if (batch_limit < 1) throw std::invalid_argument("QagaConfig: batch_limit < 1");
    schedule.validate();
    surrogate.validate();
    if (max_restarts < 0 && !stop.target_energy && !stop.max_effort_us &&
        !stop.max_iterations)
        throw std::invalid_argument(
            "QagaConfig: unlimited restarts need at least one stop criterion");
}

void select(const IsingModel& model, Population& population, const QagaConfig& config) {
    const auto keep = std::min<size_t>(config.keep_size, population.size());
    std::vector<int32_t> order;
    if (config.plain_truncation) {
        order.resize(population.size());
        for (size_t i = 0; i < population.size(); ++i) order[i] = static_cast<int32_t>(i);
        std::stable_sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
            return population[a].raw_energy < population[b].raw_energy;
        });
    } else {
        std::vector<const SpinState*> states;
        std::vector<double> raw;
        states.reserve(population.size());
        raw.reserve(population.size());
        for (auto& ind : population) {
            states.push_back(&ind.state);
            raw.push_back(ind.raw_energy);
        }
        std::vector<double> shared = shared_energies(model, states);
        for (size_t i = 0; i < population.size(); ++i)
            population[i].shared_energy = shared[i];
        order = pareto_order(raw, shared);
    }
    Population selected;
    selected.reserve(keep);
    for (size_t k = 0; k < keep; ++k) selected.push_back(std::move(population[order[k]]));
    population = std::move(selected);
}

std::vector<Individual> recombination_round(const IsingModel& model,
                                            std::span<const Individual> population,
                                            int32_t rate, Rng& rng, int64_t* moves_out) {
    if (rate < 0) throw std::invalid_argument("recombination_round: rate < 0");
    const auto n = population.size();
    std::vector<Individual> offspring;
    int64_t moves = 0;
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    for (int32_t round = 0; round < rate && n >= 2; ++round) {
        for (size_t i = n - 1; i > 0; --i)
            std::swap(idx[i], idx[rng.below(i + 1)]);
        for (size_t p = 0; p + 1 < n; p += 2) {
            Individual a = population[idx[p]];
            Individual b = population[idx[p + 1]];
            IcmResult result = houdayer_move(model, a.state, b.state, rng);
            ++moves;
            if (!result.moved) continue;
            a.raw_energy = *a.state.cached_energy;
            b.raw_energy = *b.state.cached_energy;
            offspring.push_back(std::move(a));
            offspring.push_back(std::move(b));
        }
    }
    if (moves_out) *moves_out = moves;
    return offspring;
}

RunRecord qaga_run(const IsingModel& model, const QagaConfig& config,
                   MutationOperator& mutator, Rng& rng,
                   std::vector<GenerationStats>* trace) {
    config.validate();
    const double sweep_cost = config.cost.sweep_cost_us(model.graph().num_functional_nodes());
    const auto chunk_limit =
        std::min<size_t>(config.batch_limit, std::max(1, mutator.batch_limit()));

    RunRecord rec;
    rec.solver_type = "qaga";
    rec.seed = rng.seed();
    rec.target_energy = config.stop.target_energy;
    rec.max_generations = config.max_generations;

    double best = std::numeric_limits<double>::infinity();
    double effort = 0.0;
    int64_t total_generations = 0;

    auto absorb = [&](const Individual& ind) { best = std::min(best, ind.raw_energy); };
    auto stopped = [&] {
        return config.stop.target_reached(best) || config.stop.budget_exhausted(effort) ||
               config.stop.iterations_exhausted(total_generations);
    };

    for (int64_t attempt = 0;; ++attempt) {
        Population population;
        population.reserve(config.population_size);
        for (int32_t i = 0; i < config.population_size; ++i) {
            population.push_back(make_individual(model, random_state(model, rng)));
            absorb(population.back());
        }
        rec.generations = 0;

        for (int64_t gen = 1; gen <= config.max_generations && !stopped(); ++gen) {
            rec.generations = gen;
            ++total_generations;
            if (trace)
                trace->push_back({attempt, gen, static_cast<int32_t>(population.size()),
                                  best, effort});

            // Mutation: parents stay, mutants join. Copies go through the
            // backend in batch-limit chunks.
            const double frac = config.mutation_rate - std::floor(config.mutation_rate);
            const auto whole = static_cast<int64_t>(std::floor(config.mutation_rate));
            std::vector<SpinState> batch;
            auto flush = [&] {
                if (batch.empty()) return;
                double charged = mutator.mutate_batch(model, batch, rng);
                effort += charged;
                rec.anneal_time_us += charged;
                rec.anneals += static_cast<int64_t>(batch.size());
                for (auto& st : batch) {
                    population.push_back(make_individual(model, std::move(st)));
                    absorb(population.back());
                }
                batch.clear();
            };
            const size_t parents = population.size();
            for (size_t i = 0; i < parents; ++i) {
                int64_t count = whole + ((frac > 0.0 && rng.bernoulli(frac)) ? 1 : 0);
                for (int64_t c = 0; c < count; ++c) {
                    batch.push_back(population[i].state);
                    if (batch.size() == chunk_limit) flush();
                }
            }
            flush();
            if (stopped()) break;

            int64_t moves = 0;
            auto offspring =
                recombination_round(model, population, config.recombination_rate, rng, &moves);
            effort += static_cast<double>(moves) * sweep_cost;
            rec.icm_moves += moves;
            for (auto& child : offspring) {
                absorb(child);
                population.push_back(std::move(child));
            }
            if (stopped()) break;

            select(model, population, config);
            for (int32_t i = 0; i < config.fresh_random; ++i) {
                population.push_back(make_individual(model, random_state(model, rng)));
                absorb(population.back());
            }
        }

        if (config.stop.target_reached(best)) break;
        if (config.stop.budget_exhausted(effort) ||
            config.stop.iterations_exhausted(total_generations))
            break;
        if (config.max_restarts >= 0 && attempt >= config.max_restarts) break;
        ++rec.restarts;
    }

    rec.best_energy = best;
    rec.success = config.stop.target_reached(best);
    rec.effort_us = effort;
    return rec;
}

}  // namespace qaga
