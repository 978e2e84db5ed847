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

#include <vector>

namespace qaga {

struct SchedulePoint {
    double time_us;
    double s;  // annealing parameter in [0, 1]
};

// Piecewise-linear annealing schedule over (time, s) control points. Times
// start at 0 and increase strictly; s stays in [0, 1]. Reverse-anneal
// schedules additionally start and end at s = 1.
struct AnnealSchedule {
    std::vector<SchedulePoint> points;

    double duration_us() const { return points.empty() ? 0.0 : points.back().time_us; }
    double min_s() const;
    double s_at(double t_us) const;  // linear interpolation; clamps outside [0, T]

    void validate() const;           // throws std::invalid_argument
    void validate_reverse() const;   // validate() plus s = 1 at both ends
};

// Reverse anneal parameterized as (total time, target s*, pause fraction):
// ramp down to s* over (1 - pause_fraction)/2 of the time, hold, ramp back.
// pause_fraction = 0 gives the three-point vee ((0,1), (T/2, s*), (T, 1)).
// Requires T > 0, 0 < s_star < 1, 0 <= pause_fraction < 1.
AnnealSchedule reverse_schedule(double annealing_time_us, double s_star,
                                double pause_fraction);

// Plain forward anneal ((0, 0), (T, 1)).
AnnealSchedule forward_schedule(double annealing_time_us);

}  // namespace qaga
