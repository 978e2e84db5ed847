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

#include "qaga/instance_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace qaga {

using ordered_json = nlohmann::ordered_json;

static ordered_json meta_to_json(const InstanceMeta& meta) {
    ordered_json m;
    if (!meta.klass.empty()) m["class"] = meta.klass;
    m["seed"] = meta.seed;
    if (meta.chimera) {
        ordered_json gspec;
        gspec["type"] = "chimera";
        gspec["rows"] = meta.chimera->rows;
        gspec["cols"] = meta.chimera->cols;
        gspec["shore"] = meta.chimera->shore;
        if (!meta.chimera->dead_nodes.empty()) gspec["dead_nodes"] = meta.chimera->dead_nodes;
        m["graph"] = std::move(gspec);
    }
    if (meta.ground_energy) m["ground_energy"] = *meta.ground_energy;
    if (meta.ground_degeneracy) m["ground_degeneracy"] = *meta.ground_degeneracy;
    return m;
}

std::string instance_to_json(const IsingModel& model, const InstanceMeta& meta) {
    const SpinGraph& g = model.graph();
    ordered_json j;
    j["num_vars"] = g.num_vars();
    auto edges = ordered_json::array();
    for (int32_t e = 0; e < g.num_edges(); ++e) {
        if (!g.edge_functional(e)) continue;
        edges.push_back({g.edges()[e].first, g.edges()[e].second, model.coupling(e)});
    }
    j["edges"] = std::move(edges);
    auto fields = ordered_json::array();
    for (int32_t v = 0; v < g.num_vars(); ++v)
        if (model.field(v) != 0.0) fields.push_back({v, model.field(v)});
    if (!fields.empty()) j["fields"] = std::move(fields);
    j["metadata"] = meta_to_json(meta);
    return j.dump(2) + "\n";
}

void save_instance(const IsingModel& model, const InstanceMeta& meta,
                   const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    out << instance_to_json(model, meta);
    if (!out) throw std::runtime_error("short write on instance file: " + path);
}

static InstanceMeta meta_from_json(const nlohmann::json& j) {
    InstanceMeta meta;
    if (!j.contains("metadata")) return meta;
    const auto& m = j.at("metadata");
    meta.klass = m.value("class", std::string{});
    meta.seed = m.value("seed", uint64_t{0});
    if (m.contains("graph") && m.at("graph").value("type", std::string{}) == "chimera") {
        const auto& gspec = m.at("graph");
        ChimeraSpec spec;
        spec.rows = gspec.at("rows").get<int32_t>();
        spec.cols = gspec.at("cols").get<int32_t>();
        spec.shore = gspec.at("shore").get<int32_t>();
        if (gspec.contains("dead_nodes"))
            spec.dead_nodes = gspec.at("dead_nodes").get<std::vector<int32_t>>();
        meta.chimera = std::move(spec);
    }
    if (m.contains("ground_energy")) meta.ground_energy = m.at("ground_energy").get<double>();
    if (m.contains("ground_degeneracy"))
        meta.ground_degeneracy = m.at("ground_degeneracy").get<uint64_t>();
    return meta;
}

IsingModel instance_from_json(const std::string& text, InstanceMeta* meta_out) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("instance parse error: ") + e.what());
    }
    try {
        const auto num_vars = j.at("num_vars").get<int32_t>();
        InstanceMeta meta = meta_from_json(j);

        std::shared_ptr<const SpinGraph> graph;
        if (meta.chimera) {
            if (meta.chimera->num_nodes() != num_vars)
                throw std::runtime_error("num_vars does not match the chimera graph block");
            graph = chimera_shared(*meta.chimera);
        } else {
            std::vector<SpinGraph::Edge> edges;
            for (const auto& row : j.value("edges", nlohmann::json::array()))
                edges.emplace_back(row.at(0).get<int32_t>(), row.at(1).get<int32_t>());
            graph = std::make_shared<const SpinGraph>(num_vars, std::move(edges));
        }

        std::vector<double> h(graph->num_vars(), 0.0);
        std::vector<double> couplings(graph->num_edges(), 0.0);
        for (const auto& row : j.value("edges", nlohmann::json::array())) {
            if (row.size() != 3) throw std::runtime_error("edge rows must be [i, j, J]");
            int32_t e = graph->find_edge(row.at(0).get<int32_t>(), row.at(1).get<int32_t>());
            if (e < 0)
                throw std::runtime_error("edge (" + row.at(0).dump() + "," + row.at(1).dump() +
                                         ") is not present in the declared graph");
            if (!graph->edge_functional(e))
                throw std::runtime_error("edge (" + row.at(0).dump() + "," + row.at(1).dump() +
                                         ") touches a dead node");
            couplings[e] = row.at(2).get<double>();
        }
        for (const auto& row : j.value("fields", nlohmann::json::array())) {
            if (row.size() != 2) throw std::runtime_error("field rows must be [i, h]");
            int32_t v = row.at(0).get<int32_t>();
            graph->check_var(v);
            h[v] = row.at(1).get<double>();
        }

        if (meta_out) *meta_out = std::move(meta);
        return IsingModel(std::move(graph), std::move(h), std::move(couplings));
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("instance parse error: ") + e.what());
    }
}

IsingModel load_instance(const std::string& path, InstanceMeta* meta) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return instance_from_json(text, meta);
}

void annotate_ground_truth(const std::string& path, double ground_energy,
                           uint64_t degeneracy) {
    InstanceMeta meta;
    IsingModel model = load_instance(path, &meta);
    meta.ground_energy = ground_energy;
    meta.ground_degeneracy = degeneracy;
    save_instance(model, meta, path);
}

}  // namespace qaga
