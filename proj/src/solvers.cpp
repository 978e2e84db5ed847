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

#include "qaga/solvers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qaga/icm.hpp"

namespace qaga {

static constexpr double kInf = std::numeric_limits<double>::infinity();

static void require_terminating(const StopCriterion& stop, const char* who) {
    if (!stop.target_energy && !stop.max_effort_us && !stop.max_iterations)
        throw std::invalid_argument(std::string(who) + ": no stop criterion set");
}

RunRecord run_sa(const IsingModel& model, const SaRunParams& params, Rng& rng) {
    params.schedule.validate();
    require_terminating(params.stop, "run_sa");
    const double anneal_cost =
        params.cost.sweep_cost_us(model.graph().num_functional_nodes()) *
        static_cast<double>(params.schedule.num_sweeps());

    RunRecord rec;
    rec.solver_type = "sa";
    rec.seed = rng.seed();
    rec.target_energy = params.stop.target_energy;
    double best = kInf;
    while (!params.stop.target_reached(best) && !params.stop.budget_exhausted(rec.effort_us) &&
           !params.stop.iterations_exhausted(rec.anneals)) {
        SpinState state = simulated_anneal(model, params.schedule, rng);
        best = std::min(best, *state.cached_energy);
        rec.sweeps += params.schedule.num_sweeps();
        rec.effort_us += anneal_cost;
        ++rec.anneals;
    }
    rec.best_energy = best;
    rec.success = params.stop.target_reached(best);
    return rec;
}

RunRecord run_pt(const IsingModel& model, const PtRunParams& params, Rng& rng,
                 std::vector<std::pair<int64_t, double>>* best_trace) {
    params.ladder.validate();
    require_terminating(params.stop, "run_pt");
    const double sweep_cost = params.cost.sweep_cost_us(model.graph().num_functional_nodes());
    const auto rungs = static_cast<int64_t>(params.ladder.betas.size());

    RunRecord rec;
    rec.solver_type = "pt";
    rec.seed = rng.seed();
    rec.target_energy = params.stop.target_energy;

    std::vector<SpinState> replicas;
    replicas.reserve(rungs);
    double best = kInf;
    for (int64_t k = 0; k < rungs; ++k) {
        replicas.push_back(random_state(model, rng));
        best = std::min(best, *replicas.back().cached_energy);
    }
    if (best_trace) best_trace->push_back({0, best});

    int64_t step = 0;
    while (!params.stop.target_reached(best) && !params.stop.budget_exhausted(rec.effort_us) &&
           !params.stop.iterations_exhausted(step)) {
        pt_step(model, replicas, params.ladder, static_cast<int>(step & 1), rng);
        ++step;
        rec.sweeps += rungs;
        rec.effort_us += static_cast<double>(rungs) * sweep_cost;
        for (const auto& r : replicas)
            if (*r.cached_energy < best) {
                best = *r.cached_energy;
                if (best_trace) best_trace->push_back({step, best});
            }
    }
    rec.best_energy = best;
    rec.success = params.stop.target_reached(best);
    return rec;
}

RunRecord pt_icm_run(const IsingModel& model, const PtIcmParams& params, Rng& rng,
                     std::vector<std::pair<int64_t, double>>* best_trace) {
    params.ladder.validate();
    require_terminating(params.stop, "pt_icm_run");
    const double sweep_cost = params.cost.sweep_cost_us(model.graph().num_functional_nodes());
    const auto rungs = static_cast<int64_t>(params.ladder.betas.size());

    RunRecord rec;
    rec.solver_type = "pt-icm";
    rec.seed = rng.seed();
    rec.target_energy = params.stop.target_energy;

    std::vector<SpinState> set_a, set_b;
    double best = kInf;
    for (int64_t k = 0; k < 2 * rungs; ++k) {
        auto& set = (k < rungs) ? set_a : set_b;
        set.push_back(random_state(model, rng));
        best = std::min(best, *set.back().cached_energy);
    }
    if (best_trace) best_trace->push_back({0, best});
    auto note_best = [&](double e, int64_t step) {
        if (e < best) {
            best = e;
            if (best_trace) best_trace->push_back({step, best});
        }
    };

    int64_t step = 0;
    while (!params.stop.target_reached(best) && !params.stop.budget_exhausted(rec.effort_us) &&
           !params.stop.iterations_exhausted(step)) {
        int parity = static_cast<int>(step & 1);
        pt_step(model, set_a, params.ladder, parity, rng);
        pt_step(model, set_b, params.ladder, parity, rng);
        ++step;
        rec.sweeps += 2 * rungs;
        rec.effort_us += static_cast<double>(2 * rungs) * sweep_cost;
        for (int64_t k = 0; k < rungs; ++k) {
            note_best(*set_a[k].cached_energy, step);
            note_best(*set_b[k].cached_energy, step);
        }
        if (params.stop.target_reached(best)) break;

        if (params.icm_period > 0 && step % params.icm_period == 0) {
            for (int64_t k = 0; k < rungs; ++k) {
                houdayer_move(model, set_a[k], set_b[k], rng);
                note_best(*set_a[k].cached_energy, step);
                note_best(*set_b[k].cached_energy, step);
            }
            rec.icm_moves += rungs;
            rec.effort_us += static_cast<double>(rungs) * sweep_cost;
        }
    }
    rec.best_energy = best;
    rec.success = params.stop.target_reached(best);
    return rec;
}

RunRecord run_qa(const IsingModel& model, const QaRunParams& params, Rng& rng) {
    params.schedule.validate();
    params.surrogate.validate();
    require_terminating(params.stop, "run_qa");
    const double anneal_time = params.schedule.duration_us();

    RunRecord rec;
    rec.solver_type = "qa";
    rec.seed = rng.seed();
    rec.target_energy = params.stop.target_energy;
    double best = kInf;
    while (!params.stop.target_reached(best) && !params.stop.budget_exhausted(rec.effort_us) &&
           !params.stop.iterations_exhausted(rec.anneals)) {
        SpinState state = random_state(model, rng);
        state = mutate(model, state, params.schedule, params.surrogate, rng);
        best = std::min(best, *state.cached_energy);
        ++rec.anneals;
        rec.anneal_time_us += anneal_time;
        rec.effort_us += anneal_time;
    }
    rec.best_energy = best;
    rec.success = params.stop.target_reached(best);
    return rec;
}

}  // namespace qaga
