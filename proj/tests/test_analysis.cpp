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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaga/cost.hpp"
#include "qaga/record.hpp"
#include "qaga/tts.hpp"

using namespace qaga;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

RunRecord qaga_record(bool success, int64_t restarts, int64_t generations,
                      int64_t max_generations) {
    RunRecord r;
    r.solver_id = "qaga";
    r.solver_type = "qaga";
    r.instance_id = "fixture";
    r.success = success;
    r.restarts = restarts;
    r.generations = generations;
    r.max_generations = max_generations;
    return r;
}

}  // namespace

TEST_CASE("sweep cost is linear at 0.2 ns per spin update") {
    CostModel cost;
    CHECK(cost.sweep_cost_us(2000) == doctest::Approx(0.4));
    CHECK(cost.sweep_cost_us(1) == doctest::Approx(0.0002));
    CHECK(cost.sweep_cost_us(32) == doctest::Approx(0.0064));
    cost.ns_per_spin_update = 1.0;
    CHECK(cost.sweep_cost_us(1000) == doctest::Approx(1.0));
}

TEST_CASE("stop criterion edges") {
    StopCriterion stop;
    CHECK_FALSE(stop.target_reached(-1e300));
    CHECK_FALSE(stop.budget_exhausted(1e300));
    CHECK_FALSE(stop.iterations_exhausted(1'000'000));
    stop.target_energy = -5.0;
    CHECK(stop.target_reached(-5.0));
    CHECK_FALSE(stop.target_reached(-4.999999));
    stop.max_effort_us = 10.0;
    CHECK(stop.budget_exhausted(10.0));
    CHECK_FALSE(stop.budget_exhausted(9.99));
}

TEST_CASE("geometric tts50 fixtures") {
    CHECK(tts50_geometric(0.5, 100.0) == 100.0);
    CHECK(tts50_geometric(0.1, 1.0) == 7.0);
    CHECK(tts50_geometric(1.0, 42.0) == 42.0);
    CHECK(tts50_geometric(0.99, 42.0) == 42.0);  // one run already clears 50%
    CHECK(std::isinf(tts50_geometric(0.0, 42.0)));
    CHECK(tts50_geometric(0.25, 10.0) == 30.0);  // ceil(2.409...) runs

    CHECK_THROWS_AS(tts50_geometric(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tts50_geometric(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(tts50_geometric(1.1, 1.0), std::invalid_argument);

    double prev = kInf;
    for (double p = 0.05; p <= 1.0; p += 0.05) {
        const double tts = tts50_geometric(p, 7.0);
        CHECK(tts <= prev);  // more reliable runs never look slower
        CHECK(tts == tts50_geometric(p, 1.0) * 7.0);
        prev = tts;
    }
}

TEST_CASE("lower median picks the smaller of the middle pair") {
    CHECK(lower_median({3.0}) == 3.0);
    CHECK(lower_median({1.0, 2.0, 3.0, 4.0}) == 2.0);
    CHECK(lower_median({5.0, 1.0, 3.0}) == 3.0);
    CHECK(lower_median({kInf, 1.0}) == 1.0);
    CHECK_THROWS_AS(lower_median({}), std::invalid_argument);
}

TEST_CASE("sample-median tts50 counts failures as infinite") {
    const std::vector<double> efforts{10.0, 20.0, 30.0, 40.0};
    CHECK(tts50_sample_median(efforts, std::vector<uint8_t>{1, 1, 1, 1}) == 20.0);
    CHECK(tts50_sample_median(efforts, std::vector<uint8_t>{1, 1, 0, 0}) == 20.0);
    CHECK(tts50_sample_median(efforts, std::vector<uint8_t>{0, 0, 0, 1}) == kInf);
    CHECK(tts50_sample_median(std::vector<double>{5.0, 1.0, 9.0},
                              std::vector<uint8_t>{0, 1, 1}) == 9.0);
    CHECK_THROWS_AS(tts50_sample_median({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(tts50_sample_median(efforts, std::vector<uint8_t>{1, 1}),
                    std::invalid_argument);
}

TEST_CASE("restart-model tts50 fixtures") {
    // Everyone succeeds on the first attempt in 7 generations.
    std::vector<RunRecord> all;
    for (int i = 0; i < 5; ++i) all.push_back(qaga_record(true, 0, 7, 50));
    CHECK(tts50_qaga(all, 3.0) == 21.0);

    // Half succeed first try: one attempt reaches 50%, so no failed attempts
    // are charged and the cost is the lower-median generation count.
    std::vector<RunRecord> half{qaga_record(true, 0, 10, 50), qaga_record(true, 0, 20, 50),
                                qaga_record(false, 0, 50, 50), qaga_record(false, 0, 50, 50)};
    CHECK(tts50_qaga(half, 2.0) == 20.0);

    // p = 1/4 needs 3 attempts: two full failed caps plus the median success.
    std::vector<RunRecord> quarter{qaga_record(true, 0, 10, 50), qaga_record(false, 0, 50, 50),
                                   qaga_record(false, 0, 50, 50), qaga_record(false, 0, 50, 50)};
    CHECK(tts50_qaga(quarter, 2.0) == 220.0);

    // A success that needed restarts is not a first-try success: it dilutes p
    // and stays out of the generation median.
    std::vector<RunRecord> mixed{qaga_record(true, 0, 4, 50), qaga_record(true, 3, 2, 50)};
    CHECK(tts50_qaga(mixed, 1.0) == 4.0);

    std::vector<RunRecord> none{qaga_record(false, 0, 50, 50), qaga_record(false, 0, 50, 50)};
    CHECK(std::isinf(tts50_qaga(none, 1.0)));

    CHECK_THROWS_AS(tts50_qaga({}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(tts50_qaga(all, 0.0), std::invalid_argument);
    std::vector<RunRecord> mixed_caps{qaga_record(true, 0, 7, 50), qaga_record(true, 0, 7, 60)};
    CHECK_THROWS_AS(tts50_qaga(mixed_caps, 1.0), std::invalid_argument);
    std::vector<RunRecord> no_cap{qaga_record(true, 0, 7, 0)};
    CHECK_THROWS_AS(tts50_qaga(no_cap, 1.0), std::invalid_argument);
}

TEST_CASE("doubles format exactly, including non-finite markers") {
    CHECK(format_double(0.4) == "0.4");
    CHECK(format_double(-16.0) == "-16.0");
    CHECK(format_double(kInf) == "inf");
    CHECK(format_double(-kInf) == "-inf");
    CHECK(format_double(std::nan("")) == "nan");
    // Shortest representation still round-trips exactly.
    const double awkward = 0.1 + 0.2;
    CHECK(std::stod(format_double(awkward)) == awkward);
}

TEST_CASE("run records survive a CSV round trip") {
    RunRecord r;
    r.solver_id = "pt-icm-base";
    r.solver_type = "pt-icm";
    r.instance_id = "ran1_c16_s7";
    r.rep = 3;
    r.seed = 0xdeadbeefcafef00dULL;
    r.best_energy = -2837.0 + 1.0 / 3.0;
    r.target_energy = -2838.0;
    r.success = false;
    r.effort_us = 12345.6789;
    r.sweeps = 100000;
    r.icm_moves = 250;
    r.anneals = 0;
    r.anneal_time_us = 0.0;
    r.generations = 0;
    r.restarts = 0;
    r.max_generations = 0;
    r.config_hash = "00ff00ff00ff00ff";

    RunRecord g;
    g.solver_id = "qaga-default";
    g.solver_type = "qaga";
    g.instance_id = "ran1_c2_s1";
    g.seed = 1;
    g.best_energy = -40.0;
    g.success = true;  // no target recorded
    g.effort_us = 400.0;
    g.anneals = 40;
    g.anneal_time_us = 400.0;
    g.generations = 1;
    g.max_generations = 50;

    const std::string text =
        run_record_csv_header() + "\n" + to_csv_row(r) + "\n" + to_csv_row(g) + "\n";
    const auto parsed = parse_csv_records(text);
    REQUIRE(parsed.size() == 2);
    CHECK(to_csv_row(parsed[0]) == to_csv_row(r));
    CHECK(to_csv_row(parsed[1]) == to_csv_row(g));
    CHECK(parsed[0].target_energy.has_value());
    CHECK(*parsed[0].target_energy == -2838.0);
    CHECK_FALSE(parsed[1].target_energy.has_value());
    CHECK(parsed[0].best_energy == r.best_energy);
    CHECK(parsed[0].seed == r.seed);
}

TEST_CASE("csv parsing tolerates exactly one truncated tail row") {
    RunRecord r;
    r.solver_id = "sa";
    r.solver_type = "sa";
    r.instance_id = "x";
    r.config_hash = "0";
    const std::string full =
        run_record_csv_header() + "\n" + to_csv_row(r) + "\n" + to_csv_row(r) + "\n";

    const std::string cut = full.substr(0, full.size() - 8);
    const auto parsed = parse_csv_records(cut);
    CHECK(parsed.size() == 1);  // damaged tail dropped, clean row kept

    const std::string interior =
        run_record_csv_header() + "\n" + "garbage\n" + to_csv_row(r) + "\n";
    CHECK_THROWS_AS(parse_csv_records(interior), std::runtime_error);

    CHECK_THROWS_AS(parse_csv_records("not,a,header\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_csv_records(""), std::runtime_error);
    CHECK(parse_csv_records(run_record_csv_header() + "\n").empty());
}
