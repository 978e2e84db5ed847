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

#include "qaga/brute_force.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace qaga {

namespace {

// Enumerated-subspace view: `fixed` spins (masked nodes and, under spin-flip
// symmetry, the anchor variable) are folded into per-variable constants.
struct LocalProblem {
    std::vector<int32_t> offsets;    // CSR into neighbors/js
    std::vector<int32_t> neighbors;  // local indices
    std::vector<double> js;
    std::vector<double> base;        // h + couplings to fixed +1 spins
    double fixed_energy;             // energy of the all-plus start state
};

LocalProblem build_local(const IsingModel& model, const std::vector<int32_t>& vars) {
    const SpinGraph& g = model.graph();
    std::vector<int32_t> local_of(g.num_vars(), -1);
    for (size_t l = 0; l < vars.size(); ++l) local_of[vars[l]] = static_cast<int32_t>(l);

    LocalProblem lp;
    lp.offsets.assign(vars.size() + 1, 0);
    lp.base.assign(vars.size(), 0.0);
    for (size_t l = 0; l < vars.size(); ++l) {
        for (const auto& [u, e] : g.neighbors(vars[l])) {
            double j = model.coupling(e);
            if (j == 0.0) continue;
            if (local_of[u] >= 0) {
                lp.neighbors.push_back(local_of[u]);
                lp.js.push_back(j);
                ++lp.offsets[l + 1];
            } else {
                lp.base[l] += j;  // fixed neighbor, spin +1
            }
        }
        lp.base[l] += model.field(vars[l]);
        lp.offsets[l + 1] += lp.offsets[l];
    }
    SpinState all_plus;
    all_plus.spins.assign(g.num_vars(), int8_t{1});
    lp.fixed_energy = energy(model, all_plus);
    return lp;
}

// J in {-1, +1}, no fields: two popcounts give the local field.
GroundTruth enumerate_pm1(const LocalProblem& lp, size_t m) {
    std::vector<uint32_t> mask_plus(m, 0), mask_minus(m, 0);
    std::vector<int32_t> stat(m, 0);
    for (size_t l = 0; l < m; ++l) {
        int32_t s = static_cast<int32_t>(std::llround(lp.base[l]));
        for (int32_t k = lp.offsets[l]; k < lp.offsets[l + 1]; ++k) {
            if (lp.js[k] > 0) {
                mask_plus[l] |= 1u << lp.neighbors[k];
                ++s;
            } else {
                mask_minus[l] |= 1u << lp.neighbors[k];
                --s;
            }
        }
        stat[l] = s;  // local field when every enumerated spin is +1
    }
    int32_t e = 0, best;
    uint64_t count = 1;
    best = e = static_cast<int32_t>(std::llround(lp.fixed_energy));
    uint32_t word = 0;  // bit l set <=> spin l is -1
    const uint64_t total = 1ull << m;
    for (uint64_t k = 1; k < total; ++k) {
        const int l = std::countr_zero(k);
        const int32_t local =
            stat[l] - 2 * (std::popcount(word & mask_plus[l]) -
                           std::popcount(word & mask_minus[l]));
        const int32_t s = 1 - 2 * static_cast<int32_t>((word >> l) & 1u);
        e += -2 * s * local;
        word ^= 1u << l;
        if (e < best) {
            best = e;
            count = 1;
        } else if (e == best) {
            ++count;
        }
    }
    return {static_cast<double>(best), count};
}

template <typename Energy>
GroundTruth enumerate_general(const LocalProblem& lp, size_t m) {
    std::vector<Energy> js(lp.js.begin(), lp.js.end());
    std::vector<Energy> base(lp.base.begin(), lp.base.end());
    std::vector<int8_t> spins(m, 1);
    Energy e = static_cast<Energy>(lp.fixed_energy);
    Energy best = e;
    uint64_t count = 1;
    const uint64_t total = 1ull << m;
    for (uint64_t k = 1; k < total; ++k) {
        const int l = std::countr_zero(k);
        Energy local = base[l];
        for (int32_t t = lp.offsets[l]; t < lp.offsets[l + 1]; ++t)
            local += js[t] * spins[lp.neighbors[t]];
        e += Energy{-2} * spins[l] * local;
        spins[l] = static_cast<int8_t>(-spins[l]);
        if (e < best) {
            best = e;
            count = 1;
        } else if (e == best) {
            ++count;
        }
    }
    return {static_cast<double>(best), count};
}

}  // namespace

GroundTruth brute_force(const IsingModel& model) {
    const SpinGraph& g = model.graph();
    const auto& functional = g.functional_nodes();
    if (functional.size() > 32)
        throw std::invalid_argument("brute_force: more than 32 functional variables");
    if (functional.empty()) {
        SpinState all_plus;
        all_plus.spins.assign(g.num_vars(), int8_t{1});
        return {energy(model, all_plus), 1};
    }

    bool zero_field = true;
    for (int32_t v : functional)
        if (model.field(v) != 0.0) {
            zero_field = false;
            break;
        }

    // Zero fields: E(s) = E(-s), so anchor the first variable at +1 and
    // double the ground-state count.
    std::vector<int32_t> vars(functional.begin() + (zero_field ? 1 : 0), functional.end());
    LocalProblem lp = build_local(model, vars);

    bool pm1 = zero_field && model.integral();
    if (pm1)
        for (double j : lp.js)
            if (std::abs(j) != 1.0) {
                pm1 = false;
                break;
            }
    bool small_int = model.integral();
    if (small_int)
        for (double j : model.couplings())
            if (std::abs(j) > 127) {
                small_int = false;
                break;
            }
    if (small_int)
        for (double h : model.fields())
            if (std::abs(h) > 127) {
                small_int = false;
                break;
            }

    GroundTruth truth;
    if (vars.empty())
        truth = {lp.fixed_energy, 1};
    else if (pm1)
        truth = enumerate_pm1(lp, vars.size());
    else if (small_int)
        truth = enumerate_general<int32_t>(lp, vars.size());
    else
        truth = enumerate_general<double>(lp, vars.size());

    if (zero_field) truth.degeneracy *= 2;
    return truth;
}

}  // namespace qaga
