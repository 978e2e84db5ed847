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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qaga/ga.hpp"
#include "qaga/record.hpp"
#include "qaga/schedule.hpp"
#include "qaga/tempering.hpp"

namespace qaga {

struct PlanInstance {
    std::string path;
    std::optional<double> target;  // falls back to the instance's annotation
};

struct SolverSpec {
    std::string id;        // row label; unique per plan
    std::string type;      // "sa" | "pt" | "pt-icm" | "qa" | "qaga"
    nlohmann::json params; // solver-specific knobs, may be empty
};

// A benchmark campaign: every solver runs `repetitions` seeded repetitions
// on every instance under a shared effort budget. Runs are deterministic:
// the per-run seed mixes the master seed with (solver id, instance id, rep),
// so adding instances, solvers, or repetitions never changes existing rows.
struct ExperimentPlan {
    uint64_t master_seed = 1;
    int32_t repetitions = 1;
    double budget_us = 316227766.0;  // ~10^8.5, the full-scale per-run budget
    std::string output_dir;          // optional; see resolve_output_dir
    nlohmann::json ladder;           // optional beta-ladder tuning overrides
    std::vector<PlanInstance> instances;
    std::vector<SolverSpec> solvers;

    static ExperimentPlan from_json(const nlohmann::json& j);
    static ExperimentPlan from_file(const std::string& path);
    void validate() const;
};

// Precedence: --out flag, then the plan's output_dir, then $QAGA_OUT_DIR,
// then "qaga-results".
std::string resolve_output_dir(const std::string& cli_dir, const std::string& plan_dir);

struct BenchOutcome {
    std::string records_csv;
    int64_t executed = 0;
    int64_t resumed = 0;  // rows found complete in an existing records.csv
};

// Executes the plan into output_dir/records.csv. Rows are appended as runs
// finish (so an interrupted campaign can resume) and the file is rewritten
// in canonical (solver, instance, rep) order on completion; a finished
// campaign's bytes are identical no matter how it was scheduled or how often
// it was interrupted. budget_scale multiplies every budget, for desk-scale
// reruns of a full-scale plan. jobs > 1 runs that many worker threads.
BenchOutcome run_plan(const ExperimentPlan& plan, const std::string& output_dir,
                      int32_t jobs = 1, double budget_scale = 1.0);

struct TtsSummaryRow {
    std::string instance;
    std::string solver_id;
    std::string solver_type;
    int64_t runs = 0;
    int64_t successes = 0;
    double tts50_us = 0.0;
};

struct HeadToHeadRow {
    std::string instance;
    std::string qaga_solver;
    std::string baseline_solver;
    double qaga_tts50_us = 0.0;
    double baseline_tts50_us = 0.0;
    std::string winner;  // qaga solver id, baseline id, or "tie"
};

struct TtsReport {
    std::vector<TtsSummaryRow> summary;
    std::vector<HeadToHeadRow> head_to_head;

    std::string summary_csv() const;
    std::string head_to_head_csv() const;
    std::string text() const;  // printable tables
};

// Estimates TTS50 per (instance, solver) with the estimator matching the
// solver type: geometric for fixed-length sa/qa repetitions, sample median
// for run-until-target pt/pt-icm, and the restart model for qaga.
TtsReport tts_report(const std::vector<RunRecord>& records);

// Writes tts_summary.csv and head_to_head.csv under out_dir.
void write_tts_report(const TtsReport& report, const std::string& out_dir);

// Config parsing shared with the CLI.
AnnealSchedule schedule_from_json(const nlohmann::json& j);
QagaConfig qaga_config_from_json(const nlohmann::json& j);
PtTuneParams tune_params_from_json(const nlohmann::json& j);

// One-off run of a solver spec: tunes a beta ladder first when the type
// needs one (seeded from `seed`), then runs with the given target and
// budget. qaga_trace, when non-null, collects per-generation rows for qaga
// solvers. instance_id is left empty for the caller.
RunRecord solve_one(const SolverSpec& spec, const IsingModel& model,
                    std::optional<double> target, double budget_us, uint64_t seed,
                    const nlohmann::json& ladder_params = nlohmann::json(),
                    std::vector<GenerationStats>* qaga_trace = nullptr);

}  // namespace qaga
