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

#include "qaga/record.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qaga {

std::string format_double(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    return nlohmann::json(value).dump();
}

static constexpr const char* kCsvHeader =
    "solver_id,solver_type,instance,rep,seed,best_energy,target_energy,success,"
    "effort_us,sweeps,icm_moves,anneals,anneal_time_us,generations,restarts,"
    "max_generations,config_hash";

std::string run_record_csv_header() { return kCsvHeader; }

std::string to_csv_row(const RunRecord& r) {
    std::ostringstream out;
    out << r.solver_id << ',' << r.solver_type << ',' << r.instance_id << ',' << r.rep << ','
        << r.seed << ',' << format_double(r.best_energy) << ','
        << (r.target_energy ? format_double(*r.target_energy) : std::string{}) << ','
        << (r.success ? 1 : 0) << ',' << format_double(r.effort_us) << ',' << r.sweeps << ','
        << r.icm_moves << ',' << r.anneals << ',' << format_double(r.anneal_time_us) << ','
        << r.generations << ',' << r.restarts << ',' << r.max_generations << ','
        << r.config_hash;
    return out.str();
}

static std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::vector<RunRecord> parse_csv_records(const std::string& text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty() || lines.front() != kCsvHeader)
        throw std::runtime_error("records CSV: missing or unexpected header");

    const size_t expected = split_fields(kCsvHeader).size();
    std::vector<RunRecord> records;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = split_fields(lines[i]);
        bool last = (i + 1 == lines.size());
        try {
            if (f.size() != expected) throw std::runtime_error("field count");
            RunRecord r;
            r.solver_id = f[0];
            r.solver_type = f[1];
            r.instance_id = f[2];
            r.rep = std::stoi(f[3]);
            r.seed = std::stoull(f[4]);
            r.best_energy = std::stod(f[5]);
            if (!f[6].empty()) r.target_energy = std::stod(f[6]);
            r.success = (f[7] == "1");
            r.effort_us = std::stod(f[8]);
            r.sweeps = std::stoll(f[9]);
            r.icm_moves = std::stoll(f[10]);
            r.anneals = std::stoll(f[11]);
            r.anneal_time_us = std::stod(f[12]);
            r.generations = std::stoll(f[13]);
            r.restarts = std::stoll(f[14]);
            r.max_generations = std::stoll(f[15]);
            r.config_hash = f[16];
            records.push_back(std::move(r));
        } catch (const std::exception& e) {
            // An interrupted writer can leave a partial final row; resuming
            // re-runs it. Damage anywhere else is a real error.
            if (last) break;
            throw std::runtime_error("records CSV: malformed row " + std::to_string(i + 1));
        }
    }
    return records;
}

std::string to_json(const RunRecord& r) {
    nlohmann::ordered_json j;
    j["solver_id"] = r.solver_id;
    j["solver_type"] = r.solver_type;
    j["instance"] = r.instance_id;
    j["rep"] = r.rep;
    j["seed"] = r.seed;
    j["best_energy"] = r.best_energy;
    if (r.target_energy) j["target_energy"] = *r.target_energy;
    j["success"] = r.success;
    j["effort_us"] = r.effort_us;
    j["sweeps"] = r.sweeps;
    j["icm_moves"] = r.icm_moves;
    j["anneals"] = r.anneals;
    j["anneal_time_us"] = r.anneal_time_us;
    j["generations"] = r.generations;
    j["restarts"] = r.restarts;
    j["max_generations"] = r.max_generations;
    j["config_hash"] = r.config_hash;
    return j.dump(2) + "\n";
}

}  // namespace qaga
