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

#include "qaga/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qaga/instance_io.hpp"
#include "qaga/solvers.hpp"
#include "qaga/tts.hpp"

namespace qaga {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::set<std::string>& known_solver_types() {
    static const std::set<std::string> types{"sa", "pt", "pt-icm", "qa", "qaga"};
    return types;
}

void check_label(const std::string& label, const std::string& what) {
    if (label.empty()) throw std::runtime_error(what + " must not be empty");
    if (label.find_first_of(",\n\x1f") != std::string::npos)
        throw std::runtime_error(what + " '" + label + "' contains a forbidden character");
}

std::string run_key(const std::string& solver_id, const std::string& instance_id, int32_t rep) {
    return solver_id + '\x1f' + instance_id + '\x1f' + std::to_string(rep);
}

SurrogateConfig surrogate_from_json(const json& j) {
    SurrogateConfig config;
    config.beta_hot = j.value("beta_hot", config.beta_hot);
    config.beta_cold = j.value("beta_cold", config.beta_cold);
    config.sweeps_per_us = j.value("sweeps_per_us", config.sweeps_per_us);
    config.validate();
    return config;
}

}  // namespace

ExperimentPlan ExperimentPlan::from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("plan: expected a JSON object");
    ExperimentPlan plan;
    plan.master_seed = j.value("master_seed", plan.master_seed);
    plan.repetitions = j.value("repetitions", plan.repetitions);
    plan.budget_us = j.value("budget_us", plan.budget_us);
    plan.output_dir = j.value("output_dir", std::string());
    if (j.contains("ladder")) plan.ladder = j.at("ladder");
    for (const auto& item : j.value("instances", json::array())) {
        PlanInstance inst;
        if (item.is_string()) {
            inst.path = item.get<std::string>();
        } else {
            inst.path = item.at("path").get<std::string>();
            if (item.contains("target")) inst.target = item.at("target").get<double>();
        }
        plan.instances.push_back(std::move(inst));
    }
    for (const auto& item : j.value("solvers", json::array())) {
        SolverSpec spec;
        spec.id = item.at("id").get<std::string>();
        spec.type = item.at("type").get<std::string>();
        spec.params = item;
        spec.params.erase("id");
        spec.params.erase("type");
        plan.solvers.push_back(std::move(spec));
    }
    plan.validate();
    return plan;
}

ExperimentPlan ExperimentPlan::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("plan: cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error("plan: " + path + ": " + e.what());
    }
    return from_json(j);
}

void ExperimentPlan::validate() const {
    if (repetitions < 1) throw std::runtime_error("plan: repetitions must be >= 1");
    if (!(budget_us > 0.0)) throw std::runtime_error("plan: budget_us must be positive");
    if (instances.empty()) throw std::runtime_error("plan: no instances");
    if (solvers.empty()) throw std::runtime_error("plan: no solvers");
    std::set<std::string> ids;
    for (const auto& spec : solvers) {
        check_label(spec.id, "plan: solver id");
        if (!known_solver_types().count(spec.type))
            throw std::runtime_error("plan: unknown solver type '" + spec.type + "'");
        if (!ids.insert(spec.id).second)
            throw std::runtime_error("plan: duplicate solver id '" + spec.id + "'");
    }
    for (const auto& inst : instances)
        if (inst.path.empty()) throw std::runtime_error("plan: empty instance path");
}

std::string resolve_output_dir(const std::string& cli_dir, const std::string& plan_dir) {
    if (!cli_dir.empty()) return cli_dir;
    if (!plan_dir.empty()) return plan_dir;
    if (const char* env = std::getenv("QAGA_OUT_DIR"); env && *env) return env;
    return "qaga-results";
}

AnnealSchedule schedule_from_json(const json& j) {
    AnnealSchedule schedule;
    if (j.contains("points")) {
        for (const auto& p : j.at("points"))
            schedule.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    } else if (j.value("forward", false)) {
        schedule = forward_schedule(j.value("annealing_time_us", 10.0));
    } else {
        schedule = reverse_schedule(j.value("annealing_time_us", 10.0), j.value("s_star", 0.5),
                                    j.value("pause_fraction", 0.6));
    }
    schedule.validate();
    return schedule;
}

QagaConfig qaga_config_from_json(const json& j) {
    QagaConfig config;
    config.population_size = j.value("population_size", config.population_size);
    config.keep_size = j.value("keep_size", config.keep_size);
    config.fresh_random = j.value("fresh_random", config.fresh_random);
    config.mutation_rate = j.value("mutation_rate", config.mutation_rate);
    config.recombination_rate = j.value("recombination_rate", config.recombination_rate);
    config.max_generations = j.value("max_generations", config.max_generations);
    config.max_restarts = j.value("max_restarts", config.max_restarts);
    config.batch_limit = j.value("batch_limit", config.batch_limit);
    config.plain_truncation = j.value("plain_truncation", config.plain_truncation);
    if (j.contains("schedule")) config.schedule = schedule_from_json(j.at("schedule"));
    if (j.contains("surrogate")) config.surrogate = surrogate_from_json(j.at("surrogate"));
    return config;  // stop criteria are the caller's; validate() after setting them
}

PtTuneParams tune_params_from_json(const json& j) {
    PtTuneParams params;
    params.target_low = j.value("target_low", params.target_low);
    params.target_high = j.value("target_high", params.target_high);
    params.beta_min = j.value("beta_min", params.beta_min);
    params.beta_max = j.value("beta_max", params.beta_max);
    params.initial_size = j.value("initial_size", params.initial_size);
    params.max_size = j.value("max_size", params.max_size);
    params.burn_in_sweeps = j.value("burn_in_sweeps", params.burn_in_sweeps);
    params.measure_sweeps = j.value("measure_sweeps", params.measure_sweeps);
    params.confirm_sweeps = j.value("confirm_sweeps", params.confirm_sweeps);
    params.max_rounds = j.value("max_rounds", params.max_rounds);
    params.validate();
    return params;
}

namespace {

struct LoadedInstance {
    std::string id;
    IsingModel model;
    std::optional<double> target;
    BetaLadder ladder;
    bool has_ladder = false;
};

bool solver_needs_ladder(const SolverSpec& spec) {
    if (spec.type == "pt" || spec.type == "pt-icm") return true;
    if (spec.type == "sa")
        return !(spec.params.contains("beta_min") && spec.params.contains("beta_max"));
    return false;
}

std::string config_fingerprint(const SolverSpec& spec, double budget_us) {
    json j;
    j["type"] = spec.type;
    j["params"] = spec.params;
    j["budget_us"] = budget_us;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(hash64(j.dump())));
    return buf;
}

RunRecord execute_run(const SolverSpec& spec, const IsingModel& model,
                      const std::optional<double>& target, const BetaLadder* ladder,
                      double budget_us, Rng& rng, std::vector<GenerationStats>* trace) {
    const json& p = spec.params;
    StopCriterion stop;
    stop.target_energy = target;
    stop.max_effort_us = budget_us;

    const auto need_ladder = [&]() -> const BetaLadder& {
        if (!ladder) throw std::runtime_error("solver '" + spec.id + "' needs a beta ladder");
        return *ladder;
    };

    if (spec.type == "sa") {
        SaRunParams params;
        const auto sweeps = p.value<int64_t>("sweeps", 10000);
        if (p.contains("beta_min") && p.contains("beta_max")) {
            params.schedule = sa_schedule_linear(p.at("beta_min").get<double>(),
                                                 p.at("beta_max").get<double>(), sweeps);
        } else {
            params.schedule = sa_schedule_from_ladder(need_ladder(), sweeps);
        }
        params.stop = stop;
        if (const auto n = p.value<int64_t>("max_anneals", 1); n > 0)
            params.stop.max_iterations = n;
        return run_sa(model, params, rng);
    }
    if (spec.type == "pt") {
        PtRunParams params;
        params.ladder = need_ladder();
        params.stop = stop;
        if (const auto n = p.value<int64_t>("max_steps", 0); n > 0)
            params.stop.max_iterations = n;
        return run_pt(model, params, rng);
    }
    if (spec.type == "pt-icm") {
        PtIcmParams params;
        params.ladder = need_ladder();
        params.icm_period = p.value("icm_period", params.icm_period);
        params.stop = stop;
        if (const auto n = p.value<int64_t>("max_steps", 0); n > 0)
            params.stop.max_iterations = n;
        return pt_icm_run(model, params, rng);
    }
    if (spec.type == "qa") {
        QaRunParams params = default_qa_params(p.value("anneal_time_us", 10.0));
        if (p.contains("schedule")) params.schedule = schedule_from_json(p.at("schedule"));
        if (p.contains("surrogate")) params.surrogate = surrogate_from_json(p.at("surrogate"));
        params.stop = stop;
        if (const auto n = p.value<int64_t>("max_anneals", 1); n > 0)
            params.stop.max_iterations = n;
        return run_qa(model, params, rng);
    }
    if (spec.type == "qaga") {
        QagaConfig config = qaga_config_from_json(p);
        // One attempt per rep by default so restart statistics stay in the
        // records instead of being consumed inside a single run.
        if (!p.contains("max_restarts")) config.max_restarts = 0;
        config.stop = stop;
        config.validate();
        SurrogateMutator mutator(config.schedule, config.surrogate, config.batch_limit);
        return qaga_run(model, config, mutator, rng, trace);
    }
    throw std::runtime_error("unknown solver type '" + spec.type + "'");
}

}  // namespace

RunRecord solve_one(const SolverSpec& spec, const IsingModel& model,
                    std::optional<double> target, double budget_us, uint64_t seed,
                    const nlohmann::json& ladder_params,
                    std::vector<GenerationStats>* qaga_trace) {
    std::optional<BetaLadder> ladder;
    if (solver_needs_ladder(spec)) {
        const PtTuneParams tune =
            ladder_params.is_null() ? PtTuneParams{} : tune_params_from_json(ladder_params);
        Rng tune_rng(mix64(seed, hash64("ladder")));
        ladder = tune_beta_ladder(model, tune, tune_rng);
    }
    Rng rng(seed);
    RunRecord rec = execute_run(spec, model, target, ladder ? &*ladder : nullptr, budget_us,
                                rng, qaga_trace);
    rec.solver_id = spec.id;
    rec.seed = seed;
    rec.config_hash = config_fingerprint(spec, budget_us);
    return rec;
}

BenchOutcome run_plan(const ExperimentPlan& plan, const std::string& output_dir,
                      int32_t jobs, double budget_scale) {
    plan.validate();
    if (jobs < 1) throw std::runtime_error("run_plan: jobs must be >= 1");
    if (!(budget_scale > 0.0)) throw std::runtime_error("run_plan: budget_scale must be positive");

    fs::create_directories(output_dir);
    const fs::path csv_path = fs::path(output_dir) / "records.csv";

    std::vector<LoadedInstance> instances;
    {
        std::set<std::string> seen;
        for (const auto& p : plan.instances) {
            InstanceMeta meta;
            LoadedInstance inst{fs::path(p.path).stem().string(), load_instance(p.path, &meta),
                                p.target, {}, false};
            if (!inst.target) inst.target = meta.ground_energy;
            check_label(inst.id, "run_plan: instance id");
            if (!seen.insert(inst.id).second)
                throw std::runtime_error("run_plan: duplicate instance id '" + inst.id + "'");
            instances.push_back(std::move(inst));
        }
    }

    // One ladder per instance, shared by every tempering-style solver and
    // rep; tuning is charged to nobody, mirroring offline parameter setting.
    if (std::any_of(plan.solvers.begin(), plan.solvers.end(), solver_needs_ladder)) {
        const PtTuneParams tune =
            plan.ladder.is_null() ? PtTuneParams{} : tune_params_from_json(plan.ladder);
        for (auto& inst : instances) {
            Rng rng(mix64(plan.master_seed, hash64("ladder:" + inst.id)));
            inst.ladder = tune_beta_ladder(inst.model, tune, rng);
            inst.has_ladder = true;
        }
    }

    std::vector<double> budgets(plan.solvers.size());
    std::vector<std::string> hashes(plan.solvers.size());
    for (size_t s = 0; s < plan.solvers.size(); ++s) {
        budgets[s] = plan.solvers[s].params.value("budget_us", plan.budget_us) * budget_scale;
        hashes[s] = config_fingerprint(plan.solvers[s], budgets[s]);
    }

    std::map<std::string, RunRecord> previous;
    const bool had_file = fs::exists(csv_path);
    if (had_file) {
        std::ifstream in(csv_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        for (auto& rec : parse_csv_records(buffer.str())) {
            std::string key = run_key(rec.solver_id, rec.instance_id, rec.rep);
            previous.insert_or_assign(std::move(key), std::move(rec));
        }
    }

    struct Task {
        size_t solver;
        size_t instance;
        int32_t rep;
    };
    std::vector<Task> tasks;
    tasks.reserve(plan.solvers.size() * instances.size() * plan.repetitions);
    for (size_t s = 0; s < plan.solvers.size(); ++s)
        for (size_t i = 0; i < instances.size(); ++i)
            for (int32_t rep = 0; rep < plan.repetitions; ++rep) tasks.push_back({s, i, rep});

    std::vector<std::optional<RunRecord>> results(tasks.size());
    int64_t resumed = 0;
    for (size_t t = 0; t < tasks.size(); ++t) {
        const Task& task = tasks[t];
        auto it = previous.find(
            run_key(plan.solvers[task.solver].id, instances[task.instance].id, task.rep));
        if (it == previous.end()) continue;
        if (it->second.config_hash != hashes[task.solver])
            throw std::runtime_error(
                "run_plan: records.csv holds results for a different configuration of solver '" +
                plan.solvers[task.solver].id + "'; use a fresh output directory");
        results[t] = it->second;
        ++resumed;
    }

    std::ofstream append(csv_path, std::ios::app);
    if (!append) throw std::runtime_error("run_plan: cannot write " + csv_path.string());
    if (!had_file) {
        append << run_record_csv_header() << '\n';
        append.flush();
    }

    std::atomic<size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::mutex io_mutex;
    std::exception_ptr error;

    auto worker = [&]() {
        for (;;) {
            const size_t t = cursor.fetch_add(1);
            if (t >= tasks.size() || failed.load()) return;
            if (results[t]) continue;
            const Task& task = tasks[t];
            const SolverSpec& spec = plan.solvers[task.solver];
            const LoadedInstance& inst = instances[task.instance];
            try {
                const uint64_t seed =
                    mix64(plan.master_seed, hash64(run_key(spec.id, inst.id, task.rep)));
                Rng rng(seed);
                RunRecord rec = execute_run(spec, inst.model, inst.target,
                                            inst.has_ladder ? &inst.ladder : nullptr,
                                            budgets[task.solver], rng, nullptr);
                rec.solver_id = spec.id;
                rec.instance_id = inst.id;
                rec.rep = task.rep;
                rec.seed = seed;
                rec.config_hash = hashes[task.solver];
                std::lock_guard<std::mutex> lock(io_mutex);
                append << to_csv_row(rec) << '\n';
                append.flush();
                results[t] = std::move(rec);
            } catch (...) {
                std::lock_guard<std::mutex> lock(io_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int32_t k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    append.close();

    // Canonical rewrite: rows in (solver, instance, rep) order, independent
    // of scheduling and of how many times the campaign was interrupted.
    std::string canonical = run_record_csv_header() + "\n";
    for (const auto& rec : results) canonical += to_csv_row(*rec) + '\n';
    const fs::path tmp = csv_path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << canonical;
        if (!out) throw std::runtime_error("run_plan: cannot write " + tmp.string());
    }
    fs::rename(tmp, csv_path);

    BenchOutcome outcome;
    outcome.records_csv = csv_path.string();
    outcome.resumed = resumed;
    outcome.executed = static_cast<int64_t>(tasks.size()) - resumed;
    return outcome;
}

namespace {

double estimate_tts(const std::string& type, const std::vector<const RunRecord*>& rows) {
    if (type == "qaga") {
        std::vector<RunRecord> records;
        records.reserve(rows.size());
        for (const auto* r : rows) records.push_back(*r);
        int64_t total_generations = 0;
        double total_effort = 0.0;
        for (const auto& r : records) {
            total_generations += r.restarts * r.max_generations + r.generations;
            total_effort += r.effort_us;
        }
        if (total_generations == 0) {
            // Every run stopped inside its initial population; the restart
            // model has nothing to amortize, fall back to observed efforts.
            std::vector<double> efforts;
            for (const auto& r : records) efforts.push_back(r.effort_us);
            return lower_median(std::move(efforts));
        }
        return tts50_qaga(records, total_effort / static_cast<double>(total_generations));
    }
    if (type == "pt" || type == "pt-icm") {
        std::vector<double> efforts;
        std::vector<uint8_t> successes;
        for (const auto* r : rows) {
            efforts.push_back(r->effort_us);
            successes.push_back(r->success ? 1 : 0);
        }
        return tts50_sample_median(efforts, successes);
    }
    // Fixed-length repetitions (sa, qa): geometric restarts at the full
    // per-run cost, which a failed row always pays.
    int64_t successes = 0;
    double t_a = 0.0;
    for (const auto* r : rows) {
        successes += r->success ? 1 : 0;
        t_a = std::max(t_a, r->effort_us);
    }
    const double p = static_cast<double>(successes) / static_cast<double>(rows.size());
    return tts50_geometric(p, t_a);
}

std::string format_tts(double value) {
    return std::isinf(value) ? "inf" : format_double(value);
}

void pad_to(std::string& line, size_t width) {
    if (line.size() < width) line.append(width - line.size(), ' ');
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return {};
    std::vector<size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line = "  ";
        for (size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            pad_to(cell, widths[c] + (c + 1 < row.size() ? 2 : 0));
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

}  // namespace

TtsReport tts_report(const std::vector<RunRecord>& records) {
    std::map<std::pair<std::string, std::string>, std::vector<const RunRecord*>> groups;
    for (const auto& rec : records) groups[{rec.instance_id, rec.solver_id}].push_back(&rec);

    TtsReport report;
    for (const auto& [key, rows] : groups) {
        const std::string& type = rows.front()->solver_type;
        for (const auto* r : rows)
            if (r->solver_type != type)
                throw std::runtime_error("tts_report: solver '" + key.second +
                                         "' has mixed solver types");
        TtsSummaryRow row;
        row.instance = key.first;
        row.solver_id = key.second;
        row.solver_type = type;
        row.runs = static_cast<int64_t>(rows.size());
        for (const auto* r : rows) row.successes += r->success ? 1 : 0;
        row.tts50_us = estimate_tts(type, rows);
        report.summary.push_back(std::move(row));
    }

    // Pair every qaga-type solver against every baseline on each instance.
    std::map<std::string, std::vector<const TtsSummaryRow*>> by_instance;
    for (const auto& row : report.summary) by_instance[row.instance].push_back(&row);
    for (const auto& [instance, rows] : by_instance) {
        for (const auto* q : rows) {
            if (q->solver_type != "qaga") continue;
            for (const auto* b : rows) {
                if (b->solver_type == "qaga") continue;
                HeadToHeadRow pair;
                pair.instance = instance;
                pair.qaga_solver = q->solver_id;
                pair.baseline_solver = b->solver_id;
                pair.qaga_tts50_us = q->tts50_us;
                pair.baseline_tts50_us = b->tts50_us;
                if (q->tts50_us < b->tts50_us)
                    pair.winner = q->solver_id;
                else if (b->tts50_us < q->tts50_us)
                    pair.winner = b->solver_id;
                else
                    pair.winner = "tie";
                report.head_to_head.push_back(std::move(pair));
            }
        }
    }
    return report;
}

std::string TtsReport::summary_csv() const {
    std::string out = "instance,solver_id,solver_type,runs,successes,tts50_us\n";
    for (const auto& row : summary) {
        out += row.instance + ',' + row.solver_id + ',' + row.solver_type + ',' +
               std::to_string(row.runs) + ',' + std::to_string(row.successes) + ',' +
               format_tts(row.tts50_us) + '\n';
    }
    return out;
}

std::string TtsReport::head_to_head_csv() const {
    std::string out = "instance,qaga_solver,baseline_solver,qaga_tts50_us,baseline_tts50_us,winner\n";
    for (const auto& row : head_to_head) {
        out += row.instance + ',' + row.qaga_solver + ',' + row.baseline_solver + ',' +
               format_tts(row.qaga_tts50_us) + ',' + format_tts(row.baseline_tts50_us) + ',' +
               row.winner + '\n';
    }
    return out;
}

std::string TtsReport::text() const {
    std::string out = "TTS50 summary\n";
    std::vector<std::vector<std::string>> table;
    table.push_back({"instance", "solver", "type", "runs", "success", "tts50_us"});
    for (const auto& row : summary)
        table.push_back({row.instance, row.solver_id, row.solver_type, std::to_string(row.runs),
                         std::to_string(row.successes), format_tts(row.tts50_us)});
    out += render_table(table);
    if (!head_to_head.empty()) {
        out += "\nHead to head\n";
        table.clear();
        table.push_back({"instance", "qaga", "baseline", "tts50(qaga)", "tts50(baseline)", "winner"});
        for (const auto& row : head_to_head)
            table.push_back({row.instance, row.qaga_solver, row.baseline_solver,
                             format_tts(row.qaga_tts50_us), format_tts(row.baseline_tts50_us),
                             row.winner});
        out += render_table(table);
    }
    return out;
}

void write_tts_report(const TtsReport& report, const std::string& out_dir) {
    fs::create_directories(out_dir);
    {
        std::ofstream out(fs::path(out_dir) / "tts_summary.csv", std::ios::trunc);
        out << report.summary_csv();
        if (!out) throw std::runtime_error("write_tts_report: cannot write tts_summary.csv");
    }
    {
        std::ofstream out(fs::path(out_dir) / "head_to_head.csv", std::ios::trunc);
        out << report.head_to_head_csv();
        if (!out) throw std::runtime_error("write_tts_report: cannot write head_to_head.csv");
    }
}

}  // namespace qaga
