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

#include "qaga/tempering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qaga {

void BetaLadder::validate() const {
    if (betas.size() < 2) throw std::invalid_argument("BetaLadder: need at least 2 rungs");
    for (size_t k = 0; k < betas.size(); ++k) {
        if (!(betas[k] > 0.0)) throw std::invalid_argument("BetaLadder: betas must be > 0");
        if (k > 0 && betas[k] <= betas[k - 1])
            throw std::invalid_argument("BetaLadder: betas must be strictly increasing");
    }
}

BetaLadder BetaLadder::geometric(double beta_min, double beta_max, int32_t size) {
    if (size < 2) throw std::invalid_argument("BetaLadder::geometric: size < 2");
    if (!(beta_min > 0.0) || !(beta_max > beta_min))
        throw std::invalid_argument("BetaLadder::geometric: need 0 < beta_min < beta_max");
    BetaLadder ladder;
    ladder.betas.reserve(size);
    double ratio = beta_max / beta_min;
    for (int32_t k = 0; k < size; ++k)
        ladder.betas.push_back(beta_min *
                               std::pow(ratio, static_cast<double>(k) / (size - 1)));
    ladder.betas.front() = beta_min;
    ladder.betas.back() = beta_max;
    return ladder;
}

double exchange_probability(double beta_i, double beta_j, double e_i, double e_j) {
    return std::min(1.0, std::exp((beta_i - beta_j) * (e_i - e_j)));
}

void ExchangeStats::reset(int32_t pairs) {
    attempts.assign(pairs, 0);
    accepts.assign(pairs, 0);
}

std::vector<double> ExchangeStats::rates() const {
    std::vector<double> out(attempts.size());
    for (size_t k = 0; k < attempts.size(); ++k)
        out[k] = attempts[k] ? static_cast<double>(accepts[k]) / attempts[k] : 0.0;
    return out;
}

void pt_exchange(std::vector<SpinState>& replicas, const BetaLadder& ladder, int parity,
                 Rng& rng, ExchangeStats* stats) {
    if (replicas.size() != ladder.betas.size())
        throw std::invalid_argument("pt_exchange: replica count must match ladder size");
    for (size_t k = (parity & 1); k + 1 < replicas.size(); k += 2) {
        double p = exchange_probability(ladder.betas[k], ladder.betas[k + 1],
                                        *replicas[k].cached_energy,
                                        *replicas[k + 1].cached_energy);
        bool accept = p >= 1.0 || rng.uniform01() < p;
        if (stats) {
            ++stats->attempts[k];
            if (accept) ++stats->accepts[k];
        }
        if (accept) std::swap(replicas[k], replicas[k + 1]);
    }
}

int64_t pt_step(const IsingModel& model, std::vector<SpinState>& replicas,
                const BetaLadder& ladder, int parity, Rng& rng, ExchangeStats* stats) {
    if (replicas.size() != ladder.betas.size())
        throw std::invalid_argument("pt_step: replica count must match ladder size");
    int64_t flips = 0;
    for (size_t k = 0; k < replicas.size(); ++k)
        flips += sweep_metropolis(model, replicas[k], ladder.betas[k], rng);
    pt_exchange(replicas, ladder, parity, rng, stats);
    return flips;
}

std::vector<double> measure_exchange_rates(const IsingModel& model, const BetaLadder& ladder,
                                           int64_t burn_in, int64_t measure, Rng& rng) {
    ladder.validate();
    std::vector<SpinState> replicas;
    replicas.reserve(ladder.betas.size());
    for (size_t k = 0; k < ladder.betas.size(); ++k) replicas.push_back(random_state(model, rng));
    ExchangeStats stats;
    stats.reset(ladder.size() - 1);
    for (int64_t t = 0; t < burn_in + measure; ++t)
        pt_step(model, replicas, ladder, static_cast<int>(t & 1), rng,
                t >= burn_in ? &stats : nullptr);
    return stats.rates();
}

void PtTuneParams::validate() const {
    if (!(0.0 < target_low && target_low < target_high && target_high < 1.0))
        throw std::invalid_argument("PtTuneParams: need 0 < target_low < target_high < 1");
    if (!(beta_min > 0.0) || !(beta_max > beta_min))
        throw std::invalid_argument("PtTuneParams: need 0 < beta_min < beta_max");
    if (initial_size < 2 || max_size < initial_size)
        throw std::invalid_argument("PtTuneParams: bad ladder sizes");
    if (measure_sweeps < 2 || confirm_sweeps < measure_sweeps || max_rounds < 1)
        throw std::invalid_argument("PtTuneParams: bad measurement budget");
}

BetaLadder tune_beta_ladder(const IsingModel& model, const PtTuneParams& params, Rng& rng) {
    params.validate();
    // Tuning aims at a band slightly inside [target_low, target_high] so an
    // independent re-measurement stays in the requested band despite noise.
    const double margin = std::min(0.02, (params.target_high - params.target_low) / 8.0);
    const double lo = params.target_low + margin;
    const double hi = params.target_high - margin;

    BetaLadder ladder = BetaLadder::geometric(params.beta_min, params.beta_max,
                                              params.initial_size);
    BetaLadder best = ladder;
    int32_t best_violations = std::numeric_limits<int32_t>::max();

    auto violations_in = [&](const std::vector<double>& rates) {
        int32_t count = 0;
        for (double r : rates)
            if (r < lo || r > hi) ++count;
        return count;
    };

    for (int32_t round = 0; round < params.max_rounds; ++round) {
        std::vector<double> rates = measure_exchange_rates(
            model, ladder, params.burn_in_sweeps, params.measure_sweeps, rng);
        if (violations_in(rates) == 0) {
            std::vector<double> confirm = measure_exchange_rates(
                model, ladder, params.burn_in_sweeps, params.confirm_sweeps, rng);
            if (violations_in(confirm) == 0) {
                ladder.measured_exchange_rates = std::move(confirm);
                ladder.tuned_within_band = true;
                return ladder;
            }
            rates = std::move(confirm);  // better estimate; adjust from it
        }
        if (violations_in(rates) < best_violations) {
            best_violations = violations_in(rates);
            best = ladder;
            best.measured_exchange_rates = rates;
        }

        // One adjustment pass. Hot pairs lose an interior rung (no two
        // adjacent removals at once); cold pairs whose endpoints both survive
        // get a geometric-mean rung, worst pair first under the size cap.
        const int32_t size = ladder.size();
        std::vector<uint8_t> removed(size, 0);
        for (int32_t k = 0; k + 1 < size; ++k) {
            if (rates[k] <= hi) continue;
            int32_t cand = (k + 1 <= size - 2) ? k + 1 : k;
            if (cand == 0 || cand == size - 1) continue;  // endpoints pinned
            if (removed[cand] || removed[cand - 1] || (cand + 1 < size && removed[cand + 1]))
                continue;
            removed[cand] = 1;
        }
        std::vector<int32_t> cold;
        for (int32_t k = 0; k + 1 < size; ++k)
            if (rates[k] < lo && !removed[k] && !removed[k + 1]) cold.push_back(k);
        std::sort(cold.begin(), cold.end(),
                  [&](int32_t a, int32_t b) { return rates[a] < rates[b]; });
        int32_t removals = static_cast<int32_t>(
            std::count(removed.begin(), removed.end(), uint8_t{1}));
        int32_t budget = params.max_size - (size - removals);
        if (budget < static_cast<int32_t>(cold.size()))
            cold.resize(std::max(budget, 0));

        std::vector<uint8_t> insert_after(size, 0);
        for (int32_t k : cold) insert_after[k] = 1;
        std::vector<double> next;
        next.reserve(size + cold.size());
        for (int32_t k = 0; k < size; ++k) {
            if (!removed[k]) next.push_back(ladder.betas[k]);
            if (k + 1 < size && insert_after[k])
                next.push_back(std::sqrt(ladder.betas[k] * ladder.betas[k + 1]));
        }
        if (next == ladder.betas) {
            // Nothing adjustable (e.g. a hot endpoint pair at minimal size).
            ladder.measured_exchange_rates = std::move(rates);
            ladder.tuned_within_band = false;
            return ladder;
        }
        ladder.betas = std::move(next);
        ladder.measured_exchange_rates.clear();
    }
    best.tuned_within_band = false;
    return best;
}

SaSchedule sa_schedule_from_ladder(const BetaLadder& ladder, int64_t num_sweeps) {
    ladder.validate();
    return sa_schedule_linear(ladder.betas.front(), ladder.betas.back(), num_sweeps);
}

}  // namespace qaga
