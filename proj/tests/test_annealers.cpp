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

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "qaga/brute_force.hpp"
#include "qaga/chimera.hpp"
#include "qaga/generators.hpp"
#include "qaga/icm.hpp"
#include "qaga/metropolis.hpp"
#include "qaga/record.hpp"
#include "qaga/solvers.hpp"
#include "qaga/tempering.hpp"
#include "test_util.hpp"

using namespace qaga;
using test::make_model;

namespace {

IsingModel ran1_small(uint64_t seed) {
    auto graph = chimera_shared({2, 2, 4});
    Rng rng(seed);
    return gen_ran1(graph, rng);
}

}  // namespace

TEST_CASE("metropolis accepts everything at beta 0 and nothing at a frozen minimum") {
    auto model = ran1_small(1);
    Rng rng(2);
    SpinState state = random_state(model, rng);
    CHECK(sweep_metropolis(model, state, 0.0, rng) == 32);
    CHECK(validate_cache(model, state));

    auto ferro = make_model(2, {{0, 1}}, {0, 0}, {-1.0});
    SpinState ground = uniform_state(ferro, 1);
    ensure_energy(ferro, ground);
    CHECK(sweep_metropolis(ferro, ground, 1e6, rng) == 0);
    CHECK(ground.spins == std::vector<int8_t>{1, 1});

    CHECK_THROWS_AS(sweep_metropolis(ferro, ground, -0.5, rng), std::invalid_argument);
}

TEST_CASE("long metropolis runs reproduce Boltzmann weights on a 2-var model") {
    // E(s) = 0.5 s0 - 0.25 s1 + s0 s1 at beta = 0.7; exact marginals below.
    auto model = make_model(2, {{0, 1}}, {0.5, -0.25}, {1.0});
    const double beta = 0.7;
    std::array<double, 4> weights{};
    double z = 0.0;
    for (int k = 0; k < 4; ++k) {
        const SpinState s{{k & 1 ? int8_t{-1} : int8_t{1}, k & 2 ? int8_t{-1} : int8_t{1}}, {}};
        weights[k] = std::exp(-beta * energy(model, s));
        z += weights[k];
    }

    Rng rng(40);
    SpinState state = random_state(model, rng);
    std::array<int64_t, 4> counts{};
    const int64_t sweeps = 200000;
    for (int64_t i = 0; i < sweeps; ++i) {
        sweep_metropolis(model, state, beta, rng);
        const int k = (state.spins[0] < 0 ? 1 : 0) + (state.spins[1] < 0 ? 2 : 0);
        ++counts[k];
    }
    for (int k = 0; k < 4; ++k) {
        const double expected = weights[k] / z;
        const double observed = static_cast<double>(counts[k]) / sweeps;
        CHECK(std::abs(observed - expected) < 0.02);
    }
}

TEST_CASE("linear schedules and ladder-derived schedules") {
    CHECK(sa_schedule_linear(0.1, 1.0, 2).betas == std::vector<double>{0.1, 1.0});
    const auto three = sa_schedule_linear(0.1, 1.0, 3).betas;
    REQUIRE(three.size() == 3);
    CHECK(three[1] == doctest::Approx(0.55));
    CHECK(sa_schedule_linear(0.1, 1.0, 1).betas == std::vector<double>{1.0});

    BetaLadder ladder;
    ladder.betas = {0.1, 1.0};
    CHECK(sa_schedule_from_ladder(ladder, 2).betas == std::vector<double>{0.1, 1.0});
    const auto mid = sa_schedule_from_ladder(ladder, 3).betas;
    CHECK(mid[1] == doctest::Approx(0.55));

    SaSchedule bad;
    bad.betas = {1.0, 0.5};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("simulated annealing finds the 2-var ferromagnetic ground state reliably") {
    auto ferro = make_model(2, {{0, 1}}, {0, 0}, {-1.0});
    const SaSchedule schedule = sa_schedule_linear(0.1, 5.0, 1000);
    int hits = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const SpinState out = simulated_anneal(ferro, schedule, rng);
        if (out.spins[0] == out.spins[1]) ++hits;
    }
    CHECK(hits >= 98);

    // Empty schedule: the random initial state comes back untouched.
    Rng rng(5);
    int64_t flips = -1;
    const SpinState init = simulated_anneal(ferro, SaSchedule{}, rng, &flips);
    CHECK(flips == 0);
    CHECK(validate_cache(ferro, init));
}

TEST_CASE("exchange probability fixtures") {
    CHECK(exchange_probability(0.5, 1.5, -3.0, -3.0) == 1.0);
    CHECK(exchange_probability(1.0, 1.0, -10.0, 4.0) == 1.0);
    CHECK(exchange_probability(1.0, 2.0, -10.0, -12.0) == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("pt exchange preserves the replica multiset") {
    auto model = ran1_small(8);
    BetaLadder ladder = BetaLadder::geometric(0.2, 4.0, 6);
    Rng rng(3);
    std::vector<SpinState> replicas;
    for (int k = 0; k < 6; ++k) replicas.push_back(random_state(model, rng));

    auto spin_multiset = [&]() {
        std::multiset<std::vector<int8_t>> set;
        for (const auto& r : replicas) set.insert(r.spins);
        return set;
    };
    const auto before = spin_multiset();
    ExchangeStats stats;
    stats.reset(5);
    pt_exchange(replicas, ladder, 0, rng, &stats);
    pt_exchange(replicas, ladder, 1, rng, &stats);
    CHECK(spin_multiset() == before);
    // Parity 0 touches pairs 0,2,4; parity 1 touches 1,3.
    CHECK(stats.attempts == std::vector<int64_t>{1, 1, 1, 1, 1});

    // Equal-state pairs always exchange.
    std::vector<SpinState> twins{replicas[0], replicas[0]};
    BetaLadder pair = BetaLadder::geometric(0.5, 2.0, 2);
    ExchangeStats twin_stats;
    twin_stats.reset(1);
    pt_exchange(twins, pair, 0, rng, &twin_stats);
    CHECK(twin_stats.accepts == std::vector<int64_t>{1});
}

TEST_CASE("pt step sweeps every rung and validates sizes") {
    auto model = ran1_small(12);
    BetaLadder ladder = BetaLadder::geometric(0.2, 4.0, 4);
    Rng rng(9);
    std::vector<SpinState> replicas;
    for (int k = 0; k < 4; ++k) replicas.push_back(random_state(model, rng));
    pt_step(model, replicas, ladder, 0, rng);
    CHECK(replicas.size() == 4);
    for (const auto& r : replicas) CHECK(validate_cache(model, r));

    std::vector<SpinState> short_set(replicas.begin(), replicas.begin() + 2);
    CHECK_THROWS_AS(pt_step(model, short_set, ladder, 0, rng), std::invalid_argument);
}

TEST_CASE("measured exchange rates are probabilities") {
    auto model = ran1_small(19);
    BetaLadder ladder = BetaLadder::geometric(0.3, 3.0, 5);
    Rng rng(2);
    const auto rates = measure_exchange_rates(model, ladder, 50, 200, rng);
    REQUIRE(rates.size() == 4);
    for (double r : rates) {
        CHECK(r >= 0.0);
        CHECK(r <= 1.0);
    }
}

TEST_CASE("ladder tuning lands measured rates inside the band") {
    auto model = ran1_small(33);
    PtTuneParams params;
    Rng rng(101);
    const BetaLadder ladder = tune_beta_ladder(model, params, rng);
    REQUIRE(ladder.size() >= 2);
    CHECK(ladder.betas.front() == doctest::Approx(params.beta_min));
    CHECK(ladder.betas.back() == doctest::Approx(params.beta_max));
    CHECK(std::is_sorted(ladder.betas.begin(), ladder.betas.end()));
    REQUIRE(ladder.measured_exchange_rates.size() == static_cast<size_t>(ladder.size() - 1));
    if (ladder.tuned_within_band)
        for (double r : ladder.measured_exchange_rates) {
            CHECK(r >= 0.25);
            CHECK(r <= 0.85);
        }
}

TEST_CASE("houdayer move flips one difference cluster in both replicas") {
    // Identical parents: nothing to do.
    auto model = ran1_small(3);
    Rng rng(4);
    SpinState a = random_state(model, rng);
    SpinState b = a;
    const IcmResult none = houdayer_move(model, a, b, rng);
    CHECK_FALSE(none.moved);
    CHECK(a.spins == b.spins);

    // Fully opposite parents: the cluster is a whole connected component, and
    // flipping it in both swaps the pair.
    auto graph = chimera_shared({1, 1, 4});
    IsingModel ferro(graph, std::vector<double>(8, 0.0), std::vector<double>(16, -1.0));
    SpinState up = uniform_state(ferro, 1);
    SpinState down = uniform_state(ferro, -1);
    ensure_energy(ferro, up);
    ensure_energy(ferro, down);
    const IcmResult swap = houdayer_move(ferro, up, down, rng);
    CHECK(swap.moved);
    CHECK(swap.cluster_size == 8);
    CHECK(up.spins == std::vector<int8_t>(8, -1));
    CHECK(down.spins == std::vector<int8_t>(8, 1));
}

TEST_CASE("houdayer moves conserve the energy sum on zero-field instances") {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        auto model = ran1_small(seed + 50);
        Rng rng(seed);
        for (int rep = 0; rep < 20; ++rep) {
            SpinState a = random_state(model, rng);
            SpinState b = random_state(model, rng);
            const double sum = *a.cached_energy + *b.cached_energy;
            houdayer_move(model, a, b, rng);
            CHECK(*a.cached_energy + *b.cached_energy == sum);  // exact, integer couplings
            CHECK(validate_cache(model, a));
            CHECK(validate_cache(model, b));
        }
    }
}

TEST_CASE("solver records satisfy the effort identity and are seed-deterministic") {
    auto model = ran1_small(64);
    const GroundTruth gt = brute_force(model);
    const CostModel cost;
    const double sweep_cost = cost.sweep_cost_us(32);

    SaRunParams sa;
    sa.schedule = sa_schedule_linear(0.1, 5.0, 500);
    sa.stop.target_energy = gt.energy;
    sa.stop.max_effort_us = 1e5;
    Rng rng_a(7), rng_b(7);
    const RunRecord ra = run_sa(model, sa, rng_a);
    const RunRecord rb = run_sa(model, sa, rng_b);
    CHECK(to_csv_row(ra) == to_csv_row(rb));
    CHECK(ra.effort_us ==
          doctest::Approx((ra.sweeps + ra.icm_moves) * sweep_cost + ra.anneal_time_us));
    CHECK(ra.best_energy >= gt.energy);

    BetaLadder ladder = BetaLadder::geometric(0.1, 5.0, 8);
    PtIcmParams pticm;
    pticm.ladder = ladder;
    pticm.stop.target_energy = gt.energy;
    pticm.stop.max_effort_us = 1e5;
    Rng rng_c(7), rng_d(7);
    const RunRecord rc = pt_icm_run(model, pticm, rng_c);
    const RunRecord rd = pt_icm_run(model, pticm, rng_d);
    CHECK(to_csv_row(rc) == to_csv_row(rd));
    CHECK(rc.effort_us ==
          doctest::Approx((rc.sweeps + rc.icm_moves) * sweep_cost + rc.anneal_time_us));
    CHECK(rc.success);
    CHECK(rc.icm_moves > 0);

    QaRunParams qa = default_qa_params(10.0);
    qa.stop.target_energy = gt.energy;
    qa.stop.max_effort_us = 500.0;
    qa.stop.max_iterations = 50;
    Rng rng_e(7), rng_f(7);
    const RunRecord re = run_qa(model, qa, rng_e);
    const RunRecord rf = run_qa(model, qa, rng_f);
    CHECK(to_csv_row(re) == to_csv_row(rf));
    CHECK(re.sweeps == 0);
    CHECK(re.anneal_time_us == doctest::Approx(re.anneals * 10.0));
    CHECK(re.effort_us == doctest::Approx(re.anneal_time_us));
}

TEST_CASE("pt run improves on its starting energies and respects budgets") {
    auto model = ran1_small(90);
    PtRunParams params;
    params.ladder = BetaLadder::geometric(0.1, 5.0, 8);
    params.stop.max_effort_us = 50.0;
    Rng rng(17);
    const RunRecord rec = run_pt(model, params, rng);
    CHECK_FALSE(rec.success);  // no target given
    CHECK(rec.effort_us >= 50.0);
    CHECK(rec.effort_us <= 50.0 + 8 * 0.0064 + 1e-9);  // overshoot bounded by one step
    CHECK(rec.sweeps > 0);
}
