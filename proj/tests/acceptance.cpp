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

// End-to-end acceptance checks, one printed line each. These pin the
// project's headline guarantees at full parameter settings, so the binary
// runs for several minutes; the unit suites cover the same code at toy
// scale.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qaga/bench.hpp"
#include "qaga/brute_force.hpp"
#include "qaga/chimera.hpp"
#include "qaga/ga.hpp"
#include "qaga/generators.hpp"
#include "qaga/icm.hpp"
#include "qaga/instance_io.hpp"
#include "qaga/metropolis.hpp"
#include "qaga/mutation.hpp"
#include "qaga/pareto.hpp"
#include "qaga/shared_energy.hpp"
#include "qaga/solvers.hpp"
#include "qaga/tempering.hpp"
#include "qaga/tts.hpp"
#include "test_util.hpp"

using namespace qaga;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%s] %02d %s%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

IsingModel ran1_instance(const ChimeraSpec& spec, uint64_t seed) {
    Rng rng(seed);
    return gen_ran1(chimera_shared(spec), rng);
}

// 1. The full-scale lattice has the advertised size, and the small lattices
//    used throughout the suite are consistent with the same construction.
void chimera_counts() {
    auto c16 = chimera_shared({16, 16, 4});
    auto c2 = chimera_shared({2, 2, 4});
    auto c1 = chimera_shared({1, 1, 4});
    const bool ok = c16->num_vars() == 2048 && c16->num_edges() == 6016 &&
                    c2->num_vars() == 32 && c2->num_edges() == 80 && c1->num_vars() == 8 &&
                    c1->num_edges() == 16;
    std::ostringstream detail;
    detail << "C(16,16,4) -> " << c16->num_vars() << " vars, " << c16->num_edges() << " edges";
    report(1, "chimera lattice counts", ok, detail.str());
}

// 2. Houdayer cluster moves conserve the pair energy exactly on zero-field
//    instances: 10 instances x 100 random pairs, compared bit-for-bit after
//    a full recompute.
void icm_conservation() {
    int64_t conserved = 0, moved = 0;
    const int64_t total = 1000;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        IsingModel model = ran1_instance({2, 2, 4}, seed);
        Rng rng(seed * 977);
        for (int pair = 0; pair < 100; ++pair) {
            SpinState a = random_state(model, rng);
            SpinState b = random_state(model, rng);
            const double before = energy(model, a) + energy(model, b);
            const IcmResult result = houdayer_move(model, a, b, rng);
            const double after = energy(model, a) + energy(model, b);
            if (before == after && validate_cache(model, a) && validate_cache(model, b))
                ++conserved;
            if (result.moved) ++moved;
        }
    }
    std::ostringstream detail;
    detail << conserved << "/" << total << " pairs conserved exactly (" << moved << " moved)";
    report(2, "isoenergetic cluster moves", conserved == total, detail.str());
}

// 3. Diversity-reward bookkeeping: the worked single-coupling splits hold
//    exactly, and on random populations each term satisfied by anyone is
//    counted exactly once in the population total (relative 1e-9).
void shared_energy_rewards() {
    bool ok = true;

    auto split_model = test::make_model(2, {{0, 1}}, {0, 0}, {1.0});
    std::vector<SpinState> pop;
    for (int i = 0; i < 5; ++i) pop.push_back({{1, -1}, {}});
    for (int i = 0; i < 35; ++i) pop.push_back({{1, 1}, {}});
    const auto split = shared_energies(split_model, pop);
    for (int i = 0; i < 5; ++i) ok = ok && split[i] == -0.2;
    for (int i = 5; i < 40; ++i) ok = ok && split[i] == 0.0;

    auto lone_model = test::make_model(2, {{0, 1}}, {0, 0}, {-0.5});
    std::vector<SpinState> lone_pop{{{1, 1}, {}}, {{1, -1}, {}}, {{-1, 1}, {}}};
    const auto lone = shared_energies(lone_model, lone_pop);
    ok = ok && lone[0] == -0.5 && lone[1] == 0.0 && lone[2] == 0.0;

    Rng rng(17);
    int checked = 0;
    for (int rep = 0; rep < 100; ++rep) {
        IsingModel model = test::random_small_model(8, rng, rep % 2 == 0, rep % 3 == 0);
        std::vector<SpinState> population;
        const int n = 1 + static_cast<int>(rng.below(16));
        for (int i = 0; i < n; ++i) population.push_back(random_state(model, rng));
        const auto shared = shared_energies(model, population);

        double identity = 0.0;
        for (int32_t v = 0; v < model.num_vars(); ++v) {
            const double h = model.field(v);
            if (h == 0.0) continue;
            for (const auto& s : population)
                if (h * s.spins[v] < 0.0) {
                    identity -= std::abs(h);
                    break;
                }
        }
        const auto& edges = model.graph().edges();
        for (int32_t e = 0; e < model.graph().num_edges(); ++e) {
            const double j = model.coupling(e);
            if (j == 0.0) continue;
            for (const auto& s : population)
                if (j * s.spins[edges[e].first] * s.spins[edges[e].second] < 0.0) {
                    identity -= std::abs(j);
                    break;
                }
        }
        double total = 0.0;
        for (double v : shared) total += v;
        if (std::abs(total - identity) <= 1e-9 * std::max({1.0, std::abs(total), std::abs(identity)}))
            ++checked;
    }
    ok = ok && checked == 100;
    std::ostringstream detail;
    detail << "fixtures exact, " << checked << "/100 population sums match";
    report(3, "shared-energy reward splits", ok, detail.str());
}

// 4. Time-to-solution estimators at their worked values.
void tts_formulas() {
    const bool ok = tts50_geometric(0.5, 100.0) == 100.0 && tts50_geometric(0.1, 1.0) == 7.0 &&
                    tts50_geometric(1.0, 42.0) == 42.0 &&
                    std::isinf(tts50_geometric(0.0, 42.0)) &&
                    lower_median({1.0, 2.0, 3.0, 4.0}) == 2.0 &&
                    tts50_sample_median(std::vector<double>{10, 20, 30, 40},
                                        std::vector<uint8_t>{1, 1, 0, 0}) == 20.0 &&
                    std::isinf(tts50_sample_median(std::vector<double>{1, 2, 3},
                                                   std::vector<uint8_t>{1, 0, 0}));
    report(4, "time-to-solution formulas", ok, "");
}

// 5. The headline race: on 50 seeded 32-variable instances, simulated
//    annealing, PT-ICM, and the genetic solver each reach the exact
//    brute-force ground state on at least 48 within a 1e7 us effort budget.
void ground_state_race() {
    const double budget_us = 1e7;
    int sa_wins = 0, pticm_wins = 0, qaga_wins = 0;
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        IsingModel model = ran1_instance({2, 2, 4}, seed);
        const GroundTruth gt = brute_force(model);

        StopCriterion stop;
        stop.target_energy = gt.energy;
        stop.max_effort_us = budget_us;

        SaRunParams sa;
        sa.schedule = sa_schedule_linear(0.1, 5.0, 10000);
        sa.stop = stop;
        Rng sa_rng(1000 + seed);
        if (run_sa(model, sa, sa_rng).success) ++sa_wins;

        Rng tune_rng(4000 + seed);
        PtIcmParams pticm;
        pticm.ladder = tune_beta_ladder(model, PtTuneParams{}, tune_rng);
        pticm.stop = stop;
        Rng pticm_rng(2000 + seed);
        if (pt_icm_run(model, pticm, pticm_rng).success) ++pticm_wins;

        QagaConfig config;
        config.stop = stop;
        SurrogateMutator mutator(config.schedule, config.surrogate, config.batch_limit);
        Rng qaga_rng(3000 + seed);
        if (qaga_run(model, config, mutator, qaga_rng).success) ++qaga_wins;
    }
    std::ostringstream detail;
    detail << "sa " << sa_wins << "/50, pt-icm " << pticm_wins << "/50, qaga " << qaga_wins
           << "/50 (need 48 each)";
    report(5, "ground-state race on 50 seeded instances",
           sa_wins >= 48 && pticm_wins >= 48 && qaga_wins >= 48, detail.str());
}

// 6. Metropolis sampling reproduces the exact two-variable Boltzmann
//    distribution at beta 0.7 to within 0.02 per state.
void boltzmann_sampling() {
    auto model = test::make_model(2, {{0, 1}}, {0.5, -0.25}, {1.0});
    const double beta = 0.7;
    const int64_t sweeps = 200000;

    double weights[4];
    double z = 0.0;
    for (int idx = 0; idx < 4; ++idx) {
        const int8_t s0 = (idx & 2) ? -1 : 1;
        const int8_t s1 = (idx & 1) ? -1 : 1;
        const double e = 0.5 * s0 - 0.25 * s1 + 1.0 * s0 * s1;
        weights[idx] = std::exp(-beta * e);
        z += weights[idx];
    }

    Rng rng(40);
    SpinState state = random_state(model, rng);
    int64_t counts[4] = {0, 0, 0, 0};
    for (int64_t n = 0; n < sweeps; ++n) {
        sweep_metropolis(model, state, beta, rng);
        const int idx = (state.spins[0] < 0 ? 2 : 0) + (state.spins[1] < 0 ? 1 : 0);
        ++counts[idx];
    }

    bool ok = true;
    double worst = 0.0;
    for (int idx = 0; idx < 4; ++idx) {
        const double diff =
            std::abs(static_cast<double>(counts[idx]) / sweeps - weights[idx] / z);
        worst = std::max(worst, diff);
        ok = ok && diff <= 0.02;
    }
    std::ostringstream detail;
    detail << "max deviation " << worst << " (tolerance 0.02)";
    report(6, "metropolis matches the boltzmann distribution", ok, detail.str());
}

// 7. Ladder auto-tuning holds up out of sample: tuned ladders for 10 seeded
//    128-variable instances keep every adjacent exchange rate inside
//    [0.25, 0.85] under a fresh, longer measurement.
void ladder_band() {
    bool ok = true;
    double lo = 1.0, hi = 0.0;
    int within_band = 0;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        IsingModel model = ran1_instance({4, 4, 4}, 100 + seed);
        Rng tune_rng(500 + seed);
        const BetaLadder ladder = tune_beta_ladder(model, PtTuneParams{}, tune_rng);
        if (ladder.tuned_within_band) ++within_band;
        Rng measure_rng(900 + seed);
        const auto rates = measure_exchange_rates(model, ladder, 500, 4000, measure_rng);
        for (double r : rates) {
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            ok = ok && r >= 0.25 && r <= 0.85;
        }
    }
    std::ostringstream detail;
    detail << "fresh rates in [" << lo << ", " << hi << "], " << within_band
           << "/10 tuned within band";
    report(7, "exchange-rate band after ladder tuning", ok, detail.str());
}

// 8. Mutation locality: the mean parent-offspring Hamming distance grows
//    strictly as the reversal deepens (s* 0.9 -> 0.5 -> 0.2), 1000 samples
//    per depth on a fixed 32-variable instance.
void mutation_locality() {
    IsingModel model = ran1_instance({2, 2, 4}, 3);
    SurrogateConfig config;
    Rng base_rng(7);
    const SpinState base = random_state(model, base_rng);

    const double s_stars[3] = {0.9, 0.5, 0.2};
    double means[3];
    for (int k = 0; k < 3; ++k) {
        const AnnealSchedule schedule = reverse_schedule(10.0, s_stars[k], 0.6);
        Rng rng(11 + static_cast<uint64_t>(k));
        int64_t total = 0;
        for (int n = 0; n < 1000; ++n) {
            const SpinState out = mutate(model, base, schedule, config, rng);
            total += hamming_distance(model, base, out);
        }
        means[k] = static_cast<double>(total) / 1000.0;
    }
    const bool ok = means[0] < means[1] && means[1] < means[2];
    std::ostringstream detail;
    detail << "mean hamming " << means[0] << " < " << means[1] << " < " << means[2]
           << " at s* 0.9/0.5/0.2";
    report(8, "mutation depth controls locality", ok, detail.str());
}

// 9. Campaign determinism: the same plan produces byte-identical records
//    whether it runs single-threaded, two-threaded, or resumes a finished
//    directory.
void bench_determinism() {
    std::random_device rd;
    const fs::path root =
        fs::temp_directory_path() / ("qaga-accept-" + std::to_string(rd()));
    fs::create_directories(root);

    IsingModel model = ran1_instance({1, 1, 4}, 5);
    const GroundTruth gt = brute_force(model);
    InstanceMeta meta;
    meta.klass = "ran1";
    meta.seed = 5;
    meta.chimera = ChimeraSpec{1, 1, 4};
    meta.ground_energy = gt.energy;
    meta.ground_degeneracy = gt.degeneracy;
    const std::string instance = (root / "tile.json").string();
    save_instance(model, meta, instance);

    ExperimentPlan plan;
    plan.master_seed = 11;
    plan.repetitions = 2;
    plan.budget_us = 2000.0;
    plan.instances.push_back({instance, std::nullopt});
    plan.solvers.push_back(
        {"sa-fast", "sa", nlohmann::json{{"sweeps", 200}, {"max_anneals", 3}}});
    plan.solvers.push_back({"ga", "qaga", nlohmann::json{{"max_generations", 5}}});

    auto read_file = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    };

    const BenchOutcome serial = run_plan(plan, (root / "serial").string(), 1);
    const BenchOutcome threaded = run_plan(plan, (root / "threaded").string(), 2);
    const BenchOutcome resumed = run_plan(plan, (root / "serial").string(), 1);
    const std::string serial_bytes = read_file(serial.records_csv);
    const bool ok = serial.executed == 4 && threaded.executed == 4 && resumed.executed == 0 &&
                    resumed.resumed == 4 && !serial_bytes.empty() &&
                    serial_bytes == read_file(threaded.records_csv);

    std::ostringstream detail;
    detail << serial.executed << " runs, " << serial_bytes.size()
           << " bytes identical across 1 and 2 workers";
    report(9, "benchmark campaigns are byte-deterministic", ok, detail.str());

    std::error_code ec;
    fs::remove_all(root, ec);
}

// 10. Selection elitism: across 1000 random populations and cut sizes the
//     minimum-raw-energy individual always survives to the front.
void selection_elitism() {
    Rng rng(23);
    int kept = 0;
    const int total = 1000;
    for (int rep = 0; rep < total; ++rep) {
        IsingModel model = test::random_small_model(8, rng, rep % 2 == 0, rep % 2 == 1);
        Population pop;
        const int n = 2 + static_cast<int>(rng.below(14));
        for (int i = 0; i < n; ++i)
            pop.push_back(make_individual(model, random_state(model, rng)));
        double best = pop.front().raw_energy;
        for (const auto& ind : pop) best = std::min(best, ind.raw_energy);

        QagaConfig config;
        config.population_size = n;
        config.keep_size = 1 + static_cast<int>(rng.below(n));
        config.fresh_random = n - config.keep_size;
        config.plain_truncation = rep % 7 == 0;
        select(model, pop, config);
        if (!pop.empty() && pop.front().raw_energy == best) ++kept;
    }
    std::ostringstream detail;
    detail << kept << "/" << total << " selections kept the best individual first";
    report(10, "selection elitism", kept == total, detail.str());
}

}  // namespace

int main() {
    chimera_counts();
    icm_conservation();
    shared_energy_rewards();
    tts_formulas();
    ground_state_race();
    boltzmann_sampling();
    ladder_band();
    mutation_locality();
    bench_determinism();
    selection_elitism();
    std::printf("%d of 10 criteria failed\n", failures);
    return failures;
}
