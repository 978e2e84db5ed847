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

#include "qaga/pareto.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qaga {

std::vector<int32_t> pareto_order(std::span<const double> raw,
                                  std::span<const double> shared) {
    if (raw.size() != shared.size())
        throw std::invalid_argument("pareto_order: metric sizes differ");
    const auto n = static_cast<int32_t>(raw.size());
    std::vector<int32_t> sorted(n);
    for (int32_t i = 0; i < n; ++i) sorted[i] = i;
    std::sort(sorted.begin(), sorted.end(), [&](int32_t a, int32_t b) {
        if (raw[a] != raw[b]) return raw[a] < raw[b];
        if (shared[a] != shared[b]) return shared[a] < shared[b];
        return a < b;
    });

    // Peel frontiers off the raw-sorted list. Scanning in sorted order, an
    // item is dominated iff some earlier item has strictly smaller shared, or
    // equal shared with strictly smaller raw; exact duplicates survive
    // together.
    std::vector<int32_t> order;
    order.reserve(n);
    std::vector<int32_t> remaining = std::move(sorted);
    std::vector<int32_t> next;
    while (!remaining.empty()) {
        next.clear();
        double min_shared = std::numeric_limits<double>::infinity();
        double raw_at_min = std::numeric_limits<double>::infinity();
        for (int32_t i : remaining) {
            bool dominated = shared[i] > min_shared ||
                             (shared[i] == min_shared && raw[i] > raw_at_min);
            if (dominated)
                next.push_back(i);
            else
                order.push_back(i);
            if (shared[i] < min_shared) {
                min_shared = shared[i];
                raw_at_min = raw[i];
            }
        }
        std::swap(remaining, next);
    }
    return order;
}

}  // namespace qaga
