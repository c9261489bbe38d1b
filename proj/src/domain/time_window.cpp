#include "travel/domain/time_window.hpp"

#include "travel/core/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace travel {

TimeWindow::TimeWindow(Hours start, Hours end) : start_(start), end_(end) {
    if (!std::isfinite(start) || !std::isfinite(end) || start < 0.0 || start >= 24.0 || end <= 0.0 || end > 24.0 ||
        !(start < end)) {
        throw Error(ErrorCode::InvalidValue,
                    "bad time window [" + std::to_string(start) + ", " + std::to_string(end) + "]");
    }
}

Hours overlap_length(Hours a, Hours b, const TimeWindow& window) {
    return std::max(0.0, std::min(b, window.end()) - std::max(a, window.start()));
}

TimeWindow parse_time_window(std::string_view text) {
    std::string s(text);
    for (char& c : s) {
        if (c == '[' || c == ']' || c == ',') c = ' ';
    }
    std::istringstream in(s);
    double a = 0.0, b = 0.0;
    std::string rest;
    if (!(in >> a >> b) || (in >> rest)) {
        throw Error(ErrorCode::BadField, "unparseable time window '" + std::string(text) + "'");
    }
    return TimeWindow(a, b);
}

} // namespace travel
