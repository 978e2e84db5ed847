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

#include "qaga/tts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qaga {

static constexpr double kInf = std::numeric_limits<double>::infinity();

// Runs needed for >= 50% aggregate success at per-run probability p.
static double runs_for_half(double p_s) {
    if (p_s <= 0.0) return kInf;
    if (p_s >= 1.0) return 1.0;
    return std::ceil(-1.0 / std::log2(1.0 - p_s));
}

double tts50_geometric(double p_s, double t_a_us) {
    if (!(t_a_us > 0.0)) throw std::invalid_argument("tts50_geometric: t_a must be > 0");
    if (!(p_s >= 0.0 && p_s <= 1.0))
        throw std::invalid_argument("tts50_geometric: p_s must lie in [0, 1]");
    double runs = runs_for_half(p_s);
    return std::isinf(runs) ? kInf : runs * t_a_us;
}

double lower_median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("lower_median: empty input");
    size_t k = (values.size() - 1) / 2;
    std::nth_element(values.begin(), values.begin() + k, values.end());
    return values[k];
}

double tts50_sample_median(std::span<const double> efforts_us,
                           std::span<const uint8_t> successes) {
    if (efforts_us.empty() || efforts_us.size() != successes.size())
        throw std::invalid_argument("tts50_sample_median: bad sample arrays");
    std::vector<double> samples(efforts_us.size());
    for (size_t i = 0; i < samples.size(); ++i)
        samples[i] = successes[i] ? efforts_us[i] : kInf;
    return lower_median(std::move(samples));
}

double tts50_qaga(std::span<const RunRecord> records, double per_generation_cost_us) {
    if (records.empty()) throw std::invalid_argument("tts50_qaga: no records");
    if (!(per_generation_cost_us > 0.0))
        throw std::invalid_argument("tts50_qaga: per-generation cost must be > 0");
    const int64_t max_generations = records.front().max_generations;
    if (max_generations < 1)
        throw std::invalid_argument("tts50_qaga: records lack a max_generations cap");
    for (const auto& r : records)
        if (r.max_generations != max_generations)
            throw std::invalid_argument("tts50_qaga: records mix max_generations caps");

    int64_t first_try_successes = 0;
    std::vector<double> success_generations;
    for (const auto& r : records) {
        if (r.success && r.restarts == 0) {
            ++first_try_successes;
            success_generations.push_back(static_cast<double>(r.generations));
        }
    }
    double p = static_cast<double>(first_try_successes) / records.size();
    double attempts = runs_for_half(p);
    if (std::isinf(attempts)) return kInf;
    double failed = attempts - 1.0;
    double final_generations = lower_median(std::move(success_generations));
    return (failed * static_cast<double>(max_generations) + final_generations) *
           per_generation_cost_us;
}

}  // namespace qaga
