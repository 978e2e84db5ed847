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

#include <span>
#include <vector>

#include "qaga/record.hpp"

namespace qaga {

// Time to reach the ground state with 50% confidence.

// Fixed-length runs (one anneal of duration t_a, success probability p_s):
// TTS50 = t_a * ceil(-1 / log2(1 - p_s)). p_s = 0 gives infinity, p_s = 1
// gives t_a. Requires t_a > 0 and p_s in [0, 1].
double tts50_geometric(double p_s, double t_a_us);

// Run-until-target samples: the median effort, counting failed runs as
// infinite. Lower median for even counts; empty input throws.
double tts50_sample_median(std::span<const double> efforts_us,
                           std::span<const uint8_t> successes);

// Restart model for the genetic algorithm: with first-attempt success
// probability p (a run that succeeds with restarts == 0), the median number
// of failed attempts is ceil(-1 / log2(1 - p)) - 1, each costing
// max_generations; the final attempt costs the sample median generations of
// the successful first attempts (lower median).
//   TTS50 = (failed_attempts * max_generations + median_generations) * per_generation_cost
// p = 0 gives infinity. Records must share one max_generations cap; empty
// input throws.
double tts50_qaga(std::span<const RunRecord> records, double per_generation_cost_us);

// Lower median: element at index floor((n - 1) / 2) of the sorted values.
double lower_median(std::vector<double> values);

}  // namespace qaga
