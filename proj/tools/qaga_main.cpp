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

// Command-line front end. Exit codes: 0 success, 1 usage or harness error,
// 3 solver finished without reaching the requested target.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaga/bench.hpp"
#include "qaga/brute_force.hpp"
#include "qaga/chimera.hpp"
#include "qaga/generators.hpp"
#include "qaga/instance_io.hpp"
#include "qaga/record.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTargetMissed = 3;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

struct GenerateArgs {
    std::string klass;
    std::string chimera_size = "16x16x4";
    uint64_t seed = 1;
    double alpha = 0.75;
    double rung = 4.0;
    double lambda = 4.0;
    std::vector<int32_t> mask;
    bool ground = false;
    std::string output;
};

int cmd_generate(const GenerateArgs& args) {
    qaga::ChimeraSpec spec = qaga::ChimeraSpec::parse(args.chimera_size);
    spec.dead_nodes = args.mask;
    spec.validate();
    auto graph = qaga::chimera_shared(spec);

    qaga::Rng rng(args.seed);
    qaga::DclInfo dcl_info;
    std::optional<qaga::IsingModel> model;
    if (args.klass == "ran1") {
        model = qaga::gen_ran1(graph, rng);
    } else if (args.klass == "ac3") {
        model = qaga::gen_ac3(graph, rng);
    } else {
        qaga::DclParams params{args.alpha, args.rung, args.lambda};
        model = qaga::gen_dcl(graph, params, rng, &dcl_info);
    }

    qaga::InstanceMeta meta;
    meta.klass = args.klass;
    meta.seed = args.seed;
    meta.chimera = spec;
    if (args.ground) {
        const qaga::GroundTruth gt = qaga::brute_force(*model);
        meta.ground_energy = gt.energy;
        meta.ground_degeneracy = gt.degeneracy;
    }

    std::string path = args.output;
    if (path.empty()) {
        const std::string dir = qaga::resolve_output_dir("", "");
        fs::create_directories(dir);
        std::ostringstream name;
        name << args.klass << '_' << spec.rows << 'x' << spec.cols << 'x' << spec.shore << "_s"
             << args.seed << ".json";
        path = (fs::path(dir) / name.str()).string();
    } else if (fs::path(path).has_parent_path()) {
        fs::create_directories(fs::path(path).parent_path());
    }
    qaga::save_instance(*model, meta, path);

    std::cerr << args.klass << " on chimera " << spec.rows << 'x' << spec.cols << 'x'
              << spec.shore << ": " << model->graph().num_vars() << " vars";
    if (args.klass == "dcl")
        std::cerr << ", " << dcl_info.loop_lengths.size() << " loops over " << dcl_info.num_logical
                  << " logical vars (" << dcl_info.rejected_loops << " rejected)";
    if (meta.ground_energy)
        std::cerr << ", ground energy " << qaga::format_double(*meta.ground_energy) << " x"
                  << *meta.ground_degeneracy;
    std::cerr << '\n';
    std::cout << path << '\n';
    return kExitOk;
}

struct SolveArgs {
    std::string instance;
    std::string solver;
    uint64_t seed = 1;
    double budget_us = 1e6;
    std::optional<double> target;
    std::optional<int64_t> sweeps;
    std::optional<int64_t> icm_period;
    std::optional<double> anneal_time_us;
    std::string config_path;
    std::string trace_path;
    std::string output;
};

int cmd_solve(const SolveArgs& args) {
    qaga::InstanceMeta meta;
    const qaga::IsingModel model = qaga::load_instance(args.instance, &meta);

    qaga::SolverSpec spec;
    spec.id = args.solver;
    spec.type = args.solver;
    spec.params = json::object();
    if (!args.config_path.empty()) {
        spec.params = load_json_file(args.config_path);
        if (!spec.params.is_object())
            throw std::runtime_error(args.config_path + ": expected a JSON object");
    }
    if (args.sweeps) spec.params["sweeps"] = *args.sweeps;
    if (args.icm_period) spec.params["icm_period"] = *args.icm_period;
    if (args.anneal_time_us) spec.params["anneal_time_us"] = *args.anneal_time_us;
    if (!args.trace_path.empty() && spec.type != "qaga")
        throw std::runtime_error("--trace applies to the qaga solver only");

    std::optional<double> target = args.target;
    if (!target) target = meta.ground_energy;

    std::vector<qaga::GenerationStats> trace;
    const qaga::RunRecord rec =
        qaga::solve_one(spec, model, target, args.budget_us, args.seed, json(),
                        args.trace_path.empty() ? nullptr : &trace);

    if (!args.trace_path.empty()) {
        std::ofstream out(args.trace_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + args.trace_path);
        for (const auto& row : trace) {
            json line;
            line["restart"] = row.restart;
            line["generation"] = row.generation;
            line["population"] = row.population;
            line["best_energy"] = row.best_energy;
            line["effort_us"] = row.effort_us;
            out << line.dump() << '\n';
        }
    }

    qaga::RunRecord out_rec = rec;
    out_rec.instance_id = fs::path(args.instance).stem().string();
    const std::string text = qaga::to_json(out_rec) + "\n";
    if (args.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + args.output);
        out << text;
        std::cout << args.output << '\n';
    }

    if (target && !rec.success) {
        std::cerr << "target " << qaga::format_double(*target) << " not reached (best "
                  << qaga::format_double(rec.best_energy) << ")\n";
        return kExitTargetMissed;
    }
    return kExitOk;
}

struct BenchArgs {
    std::string plan_path;
    std::string out_dir;
    int32_t jobs = 1;
    double budget_scale = 1.0;
    bool no_report = false;
};

int cmd_bench(const BenchArgs& args) {
    const qaga::ExperimentPlan plan = qaga::ExperimentPlan::from_file(args.plan_path);
    const std::string out_dir = qaga::resolve_output_dir(args.out_dir, plan.output_dir);
    const qaga::BenchOutcome outcome =
        qaga::run_plan(plan, out_dir, args.jobs, args.budget_scale);
    std::cerr << "executed " << outcome.executed << " runs (" << outcome.resumed
              << " resumed) -> " << outcome.records_csv << '\n';
    if (!args.no_report) {
        std::ifstream in(outcome.records_csv);
        std::stringstream buffer;
        buffer << in.rdbuf();
        const qaga::TtsReport report = qaga::tts_report(qaga::parse_csv_records(buffer.str()));
        qaga::write_tts_report(report, out_dir);
        std::cout << report.text();
    }
    return kExitOk;
}

struct TtsArgs {
    std::string results;
    std::string out_dir;
};

int cmd_tts(const TtsArgs& args) {
    fs::path path = args.results;
    if (fs::is_directory(path)) path /= "records.csv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const qaga::TtsReport report = qaga::tts_report(qaga::parse_csv_records(buffer.str()));
    const std::string out_dir =
        args.out_dir.empty() ? path.parent_path().string() : args.out_dir;
    qaga::write_tts_report(report, out_dir.empty() ? "." : out_dir);
    std::cout << report.text();
    return kExitOk;
}

struct VerifyArgs {
    std::string instance;
    bool annotate = false;
    std::string records;
};

int cmd_verify(const VerifyArgs& args) {
    if (args.instance.empty() && args.records.empty())
        throw std::runtime_error("verify needs --instance and/or --records");
    int exit_code = kExitOk;

    if (!args.instance.empty()) {
        qaga::InstanceMeta meta;
        const qaga::IsingModel model = qaga::load_instance(args.instance, &meta);
        const qaga::GroundTruth gt = qaga::brute_force(model);
        std::cout << "ground energy " << qaga::format_double(gt.energy) << ", degeneracy "
                  << gt.degeneracy << '\n';
        if (meta.ground_energy && *meta.ground_energy != gt.energy) {
            std::cerr << "annotation mismatch: file says "
                      << qaga::format_double(*meta.ground_energy) << '\n';
            exit_code = kExitError;
        } else if (args.annotate) {
            qaga::annotate_ground_truth(args.instance, gt.energy, gt.degeneracy);
            std::cerr << "annotated " << args.instance << '\n';
        }
    }

    if (!args.records.empty()) {
        std::ifstream in(args.records);
        if (!in) throw std::runtime_error("cannot open " + args.records);
        std::stringstream buffer;
        buffer << in.rdbuf();
        const auto records = qaga::parse_csv_records(buffer.str());
        int64_t bad = 0;
        for (size_t i = 0; i < records.size(); ++i) {
            const auto& rec = records[i];
            std::string why;
            if (rec.target_energy &&
                rec.success != (rec.best_energy <= *rec.target_energy))
                why = "success flag disagrees with best_energy vs target";
            else if (!rec.target_energy && rec.success)
                why = "success without a target";
            else if (rec.effort_us < 0 || rec.sweeps < 0 || rec.icm_moves < 0 ||
                     rec.restarts < 0 || rec.generations < 0)
                why = "negative counter";
            if (!why.empty()) {
                std::cerr << args.records << " row " << i + 1 << " (" << rec.solver_id << '/'
                          << rec.instance_id << "/rep" << rec.rep << "): " << why << '\n';
                ++bad;
            }
        }
        std::cout << records.size() << " records checked, " << bad << " inconsistent\n";
        if (bad > 0) exit_code = kExitError;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ising solver suite and benchmark harness for chimera-structured instances"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate a benchmark instance");
    generate->add_option("--class", gen.klass, "Instance class")
        ->required()
        ->check(CLI::IsMember({"ran1", "ac3", "dcl"}));
    generate->add_option("--chimera", gen.chimera_size, "Chimera size RxCxL")
        ->capture_default_str();
    generate->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
    generate->add_option("--alpha", gen.alpha, "dcl: loops per logical variable")
        ->capture_default_str();
    generate->add_option("--rung", gen.rung, "dcl: logical coupling cap")->capture_default_str();
    generate->add_option("--lambda", gen.lambda, "dcl: intra-tile coupling strength")
        ->capture_default_str();
    generate->add_option("--mask", gen.mask, "Dead node indices")->delimiter(',');
    generate->add_flag("--ground", gen.ground,
                       "Annotate exact ground truth (needs <= 32 functional vars)");
    generate->add_option("-o,--output", gen.output, "Output file (default: auto-named)");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Run one solver on one instance");
    solve_cmd->add_option("--instance", solve.instance, "Instance JSON file")->required();
    solve_cmd->add_option("--solver", solve.solver, "Solver type")
        ->required()
        ->check(CLI::IsMember({"sa", "pt", "pt-icm", "qa", "qaga"}));
    solve_cmd->add_option("--seed", solve.seed, "Run seed")->capture_default_str();
    solve_cmd->add_option("--budget-us", solve.budget_us, "Effort budget in simulated us")
        ->capture_default_str();
    solve_cmd->add_option("--target", solve.target,
                          "Target energy (default: instance annotation)");
    solve_cmd->add_option("--sweeps", solve.sweeps, "sa: sweeps per anneal");
    solve_cmd->add_option("--icm-period", solve.icm_period, "pt-icm: steps between cluster moves");
    solve_cmd->add_option("--anneal-time", solve.anneal_time_us, "qa: anneal duration in us");
    solve_cmd->add_option("--config", solve.config_path, "Solver params JSON file");
    solve_cmd->add_option("--trace", solve.trace_path, "qaga: per-generation JSONL trace file");
    solve_cmd->add_option("-o,--output", solve.output, "Write the run record here (default: stdout)");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Execute a benchmark plan");
    bench_cmd->add_option("--plan", bench.plan_path, "Plan JSON file")->required();
    bench_cmd->add_option("--out", bench.out_dir, "Output directory (default: plan, then $QAGA_OUT_DIR)");
    bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")->capture_default_str();
    bench_cmd->add_option("--budget-scale", bench.budget_scale, "Multiplier on every budget")
        ->capture_default_str();
    bench_cmd->add_flag("--no-report", bench.no_report, "Skip the TTS report");

    TtsArgs tts;
    auto* tts_cmd = app.add_subcommand("tts", "Summarize TTS50 from run records");
    tts_cmd->add_option("--results", tts.results, "records.csv or its directory")->required();
    tts_cmd->add_option("--out", tts.out_dir, "Report directory (default: alongside records)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check ground truth and record consistency");
    verify_cmd->add_option("--instance", verify.instance, "Instance to brute-force");
    verify_cmd->add_flag("--annotate", verify.annotate, "Write ground truth into the instance");
    verify_cmd->add_option("--records", verify.records, "records.csv to cross-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*generate) return cmd_generate(gen);
        if (*solve_cmd) return cmd_solve(solve);
        if (*bench_cmd) return cmd_bench(bench);
        if (*tts_cmd) return cmd_tts(tts);
        if (*verify_cmd) return cmd_verify(verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
