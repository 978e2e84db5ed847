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
#include <utility>
#include <vector>

#include "qaga/cost.hpp"
#include "qaga/metropolis.hpp"
#include "qaga/model.hpp"
#include "qaga/mutation.hpp"
#include "qaga/record.hpp"
#include "qaga/rng.hpp"
#include "qaga/schedule.hpp"
#include "qaga/tempering.hpp"

namespace qaga {

// Benchmark drivers. Each repeats its primitive until the stop criterion
// fires (target reached, effort budget spent, or iteration cap) and reports
// best energy, success, and cost-model effort. Iterations mean: anneals for
// run_sa/run_qa, steps for run_pt/pt_icm_run.

struct SaRunParams {
    SaSchedule schedule;   // one anneal
    StopCriterion stop;    // max_iterations caps the anneal count
    CostModel cost;
};
RunRecord run_sa(const IsingModel& model, const SaRunParams& params, Rng& rng);

struct PtRunParams {
    BetaLadder ladder;
    StopCriterion stop;
    CostModel cost;
};
// Single replica set, one sweep per rung plus exchanges per step.
RunRecord run_pt(const IsingModel& model, const PtRunParams& params, Rng& rng,
                 std::vector<std::pair<int64_t, double>>* best_trace = nullptr);

struct PtIcmParams {
    BetaLadder ladder;
    int64_t icm_period = 3;  // sweeps between cluster-move rounds; <= 0 disables
    StopCriterion stop;
    CostModel cost;
};
// Two coupled replica sets; every icm_period steps a Houdayer move runs at
// each rung between the paired replicas. icm_period <= 0 degenerates to two
// independent PT runs.
RunRecord pt_icm_run(const IsingModel& model, const PtIcmParams& params, Rng& rng,
                     std::vector<std::pair<int64_t, double>>* best_trace = nullptr);

struct QaRunParams {
    AnnealSchedule schedule;  // forward anneal by default
    SurrogateConfig surrogate;
    StopCriterion stop;       // max_iterations caps the anneal count
    CostModel cost;
};
// Surrogate quantum-annealer baseline: each iteration anneals a fresh random
// state through the schedule; effort per anneal is the schedule duration.
RunRecord run_qa(const IsingModel& model, const QaRunParams& params, Rng& rng);

inline QaRunParams default_qa_params(double anneal_time_us = 10.0) {
    QaRunParams params;
    params.schedule = forward_schedule(anneal_time_us);
    return params;
}

}  // namespace qaga
