#pragma once

#include "travel/domain/clock.hpp"

namespace travel {

// Per-candidate quantities of the spatiotemporal attraction score. An
// infeasible candidate (does not fit in the remaining day) carries
// feasible == false instead of an infinite return-time score; its numeric
// components are still filled so that s_total == s_ret + s_opt + s_left holds.
struct ScoreBreakdown {
    double d_km = 0.0;
    double travel_minutes = 0.0;
    Hours t_cost = 0.0;
    Hours t_arr = 0.0;
    Hours t_dep = 0.0;
    bool feasible = true;
    double s_ret = 0.0;
    double s_opt = 0.0;
    double s_left = 0.0;
    double s_total = 0.0;

    bool operator==(const ScoreBreakdown&) const = default;
};

} // namespace travel
