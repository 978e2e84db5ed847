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

#include "qaga/schedule.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaga {

double AnnealSchedule::min_s() const {
    if (points.empty()) throw std::invalid_argument("AnnealSchedule: empty schedule");
    double m = points.front().s;
    for (const auto& p : points) m = std::min(m, p.s);
    return m;
}

double AnnealSchedule::s_at(double t_us) const {
    if (points.empty()) throw std::invalid_argument("AnnealSchedule: empty schedule");
    if (t_us <= points.front().time_us) return points.front().s;
    if (t_us >= points.back().time_us) return points.back().s;
    for (size_t k = 1; k < points.size(); ++k) {
        if (t_us > points[k].time_us) continue;
        const auto& lo = points[k - 1];
        const auto& hi = points[k];
        double f = (t_us - lo.time_us) / (hi.time_us - lo.time_us);
        return lo.s + f * (hi.s - lo.s);
    }
    return points.back().s;
}

void AnnealSchedule::validate() const {
    if (points.size() < 2)
        throw std::invalid_argument("AnnealSchedule: need at least 2 points");
    if (points.front().time_us != 0.0)
        throw std::invalid_argument("AnnealSchedule: must start at time 0");
    for (size_t k = 0; k < points.size(); ++k) {
        if (points[k].s < 0.0 || points[k].s > 1.0)
            throw std::invalid_argument("AnnealSchedule: s must lie in [0, 1]");
        if (k > 0 && points[k].time_us <= points[k - 1].time_us)
            throw std::invalid_argument("AnnealSchedule: times must increase strictly");
    }
}

void AnnealSchedule::validate_reverse() const {
    validate();
    if (points.front().s != 1.0 || points.back().s != 1.0)
        throw std::invalid_argument("AnnealSchedule: reverse anneal must start and end at s = 1");
}

AnnealSchedule reverse_schedule(double annealing_time_us, double s_star,
                                double pause_fraction) {
    if (!(annealing_time_us > 0.0))
        throw std::invalid_argument("reverse_schedule: annealing time must be > 0");
    if (!(s_star > 0.0 && s_star < 1.0))
        throw std::invalid_argument("reverse_schedule: s_star must lie in (0, 1)");
    if (!(pause_fraction >= 0.0 && pause_fraction < 1.0))
        throw std::invalid_argument("reverse_schedule: pause_fraction must lie in [0, 1)");
    AnnealSchedule sched;
    double ramp = annealing_time_us * (1.0 - pause_fraction) / 2.0;
    if (pause_fraction == 0.0) {
        sched.points = {{0.0, 1.0}, {ramp, s_star}, {annealing_time_us, 1.0}};
    } else {
        sched.points = {{0.0, 1.0},
                        {ramp, s_star},
                        {annealing_time_us - ramp, s_star},
                        {annealing_time_us, 1.0}};
    }
    sched.validate_reverse();
    return sched;
}

AnnealSchedule forward_schedule(double annealing_time_us) {
    if (!(annealing_time_us > 0.0))
        throw std::invalid_argument("forward_schedule: annealing time must be > 0");
    AnnealSchedule sched;
    sched.points = {{0.0, 0.0}, {annealing_time_us, 1.0}};
    sched.validate();
    return sched;
}

}  // namespace qaga
