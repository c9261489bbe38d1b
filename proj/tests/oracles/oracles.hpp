#pragma once

// Independent re-implementations used as test oracles. Nothing here calls
// into the code under test except for plain data types.

#include "travel/domain/catalog_items.hpp"
#include "travel/domain/score.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kRadiusKm = 6371.0088;

// Great-circle distance from the straight chord between the two points on
// the unit sphere: d = 2R asin(|c| / 2).
inline double chord_distance_km(double lat1, double lon1, double lat2, double lon2) {
    auto unit = [](double lat, double lon) {
        const double p = lat * kPi / 180.0;
        const double l = lon * kPi / 180.0;
        return std::array<double, 3>{std::cos(p) * std::cos(l), std::cos(p) * std::sin(l), std::sin(p)};
    };
    const auto a = unit(lat1, lon1);
    const auto b = unit(lat2, lon2);
    const double c = std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                               (a[2] - b[2]) * (a[2] - b[2]));
    return 2.0 * kRadiusKm * std::asin(std::min(1.0, c / 2.0));
}

inline double chord_distance_km(const travel::GeoPoint& a, const travel::GeoPoint& b) {
    return chord_distance_km(a.lat(), a.lon(), b.lat(), b.lon());
}

inline double overlap(double a, double b, double ws, double we) {
    const double lo = a > ws ? a : ws;
    const double hi = b < we ? b : we;
    return hi > lo ? hi - lo : 0.0;
}

struct Breakdown {
    double d = 0, travel = 0, t_cost = 0, t_arr = 0, t_dep = 0;
    bool feasible = true;
    double s_ret = 0, s_opt = 0, s_left = 0, total = 0;
};

// The three component formulas written out from their definitions.
inline Breakdown score(const travel::GeoPoint& p_cur, double t_cur, double day_end, double speed,
                       const travel::Attraction& a) {
    Breakdown b;
    b.d = chord_distance_km(p_cur, a.position);
    b.travel = b.d / speed;
    b.t_cost = b.travel + a.recommend_duration;
    b.t_arr = t_cur + b.travel;
    b.t_dep = b.t_arr + a.recommend_duration;
    const double t_left = day_end - t_cur;
    b.feasible = b.t_cost <= t_left;
    b.s_ret = b.feasible ? 1.0 : 0.0;
    b.s_opt = overlap(b.t_arr, b.t_dep, a.recommend_window.start(), a.recommend_window.end()) / a.recommend_duration;
    b.s_left = t_left > 0 ? 1.0 - std::min(1.0, b.travel / t_left) : 0.0;
    b.total = b.s_ret + b.s_opt + b.s_left;
    return b;
}

// Exhaustive argmax with the documented tie order.
inline std::optional<std::size_t> argmax(const std::vector<travel::Attraction>& items,
                                         const std::vector<Breakdown>& scores) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!scores[i].feasible) continue;
        if (!best) {
            best = i;
            continue;
        }
        const auto& x = scores[i];
        const auto& y = scores[*best];
        const auto& ix = items[i];
        const auto& iy = items[*best];
        const bool better = std::tie(x.total, ix.rating) > std::tie(y.total, iy.rating) ||
                            (x.total == y.total && ix.rating == iy.rating &&
                             (x.d < y.d || (x.d == y.d && ix.id < iy.id)));
        if (better) best = i;
    }
    return best;
}

// Hamilton apportionment by enumeration: hand out whole quotas, then give the
// leftover units one at a time to the largest outstanding fraction (lower
// index first on ties), comparing fractions as exact rationals.
inline std::vector<std::int64_t> hamilton(std::int64_t units, const std::vector<int>& weights) {
    const std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    std::vector<std::int64_t> out(weights.size());
    std::vector<std::int64_t> rem(weights.size());
    std::int64_t given = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        out[i] = units * weights[i] / total;
        rem[i] = units * weights[i] - out[i] * total;
        given += out[i];
    }
    std::vector<bool> bumped(weights.size(), false);
    for (std::int64_t left = units - given; left > 0; --left) {
        std::size_t pick = weights.size();
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (bumped[i]) continue;
            if (pick == weights.size() || rem[i] > rem[pick]) pick = i;
        }
        bumped[pick] = true;
        ++out[pick];
    }
    return out;
}

// Liked first, then undecided, then passed; order inside each group kept.
inline std::vector<std::string> partition(const std::vector<std::string>& order,
                                          const std::map<std::string, int>& group) {
    std::vector<std::string> out;
    for (int g : {0, 1, 2}) {
        for (const auto& id : order) {
            auto it = group.find(id);
            const int gi = it == group.end() ? 1 : it->second;
            if (gi == g) out.push_back(id);
        }
    }
    return out;
}

// Solves (X^T X + lambda P) w = X^T y by Gauss-Jordan elimination with
// partial pivoting, where P penalizes every column except the first.
inline std::vector<double> ridge(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                                 double lambda) {
    const std::size_t n = x.empty() ? 0 : x[0].size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t r = 0; r < x.size(); ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] += x[r][i] * x[r][j];
            m[i][n] += x[r][i] * y[r];
        }
    }
    for (std::size_t i = 1; i < n; ++i) m[i][i] += lambda;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        }
        std::swap(m[c], m[piv]);
        const double d = m[c][c];
        if (std::abs(d) < 1e-12) continue;
        for (std::size_t j = c; j <= n; ++j) m[c][j] /= d;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = m[r][c];
            for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = m[i][n];
    return w;
}

inline double mae(const std::vector<double>& p, const std::vector<double>& a) {
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - a[i]);
    return s / static_cast<double>(p.size());
}

inline double rmse(const std::vector<double>& p, const std::vector<double>& a) {
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - a[i]) * (p[i] - a[i]);
    return std::sqrt(s / static_cast<double>(p.size()));
}

} // namespace oracle
