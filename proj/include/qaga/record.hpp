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

namespace qaga {

// One benchmark run. Effort is always reconstructible from the counters:
//   effort_us = (sweeps + icm_moves) * sweep_cost + anneal_time_us
// where anneal_time_us accumulates the schedule durations of anneal-style
// moves. generations counts the final attempt only; failed attempts (each a
// full max_generations) are in restarts, so total generations =
// restarts * max_generations + generations.
struct RunRecord {
    std::string solver_id;
    std::string solver_type;  // "sa" | "pt" | "pt-icm" | "qa" | "qaga"
    std::string instance_id;
    int32_t rep = 0;
    uint64_t seed = 0;
    double best_energy = 0.0;
    std::optional<double> target_energy;
    bool success = false;
    double effort_us = 0.0;
    int64_t sweeps = 0;
    int64_t icm_moves = 0;
    int64_t anneals = 0;
    double anneal_time_us = 0.0;
    int64_t generations = 0;
    int64_t restarts = 0;
    int64_t max_generations = 0;  // the cap generations ran under (qaga)
    std::string config_hash;
};

// Deterministic CSV: fixed column set, shortest-round-trip doubles. The
// header line is written once per file.
std::string run_record_csv_header();
std::string to_csv_row(const RunRecord& record);

// Parses a full CSV document (header + rows). A truncated final line is
// dropped rather than rejected, so an interrupted run's file can be resumed.
std::vector<RunRecord> parse_csv_records(const std::string& text);

std::string to_json(const RunRecord& record);  // single-record pretty JSON

// Shortest text that round-trips the double exactly; used anywhere numbers
// must serialize deterministically.
std::string format_double(double value);

}  // namespace qaga
