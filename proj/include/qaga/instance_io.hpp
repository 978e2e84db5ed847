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

#include "qaga/chimera.hpp"
#include "qaga/model.hpp"

namespace qaga {

struct InstanceMeta {
    std::string klass;      // "ran1" | "ac3" | "dcl" | free-form
    uint64_t seed = 0;
    std::optional<ChimeraSpec> chimera;       // set when the graph is a chimera lattice
    std::optional<double> ground_energy;      // annotated by `qaga verify --annotate`
    std::optional<uint64_t> ground_degeneracy;
};

// Instance files are JSON:
//   {"num_vars": N,
//    "edges":  [[i, j, J], ...],   // canonical order, functional edges only
//    "fields": [[i, h], ...],      // nonzero fields only; omitted => all zero
//    "metadata": {"class": ..., "seed": ..., "graph": {...}, ...}}
// Serialization is deterministic: same instance in, same bytes out.
std::string instance_to_json(const IsingModel& model, const InstanceMeta& meta);
void save_instance(const IsingModel& model, const InstanceMeta& meta,
                   const std::string& path);

// Rebuilds the model; a chimera graph block restores tiles and node masks.
// Malformed input throws std::runtime_error with the offending detail.
IsingModel load_instance(const std::string& path, InstanceMeta* meta = nullptr);
IsingModel instance_from_json(const std::string& text, InstanceMeta* meta = nullptr);

// Rewrites an instance file with ground-truth annotations, preserving
// everything else.
void annotate_ground_truth(const std::string& path, double ground_energy,
                           uint64_t degeneracy);

}  // namespace qaga
