#include "travel/toolkit/time_tool.hpp"

#include "travel/core/error.hpp"

#include <string>

namespace travel::tools {

Hours time_shift(Hours t, Hours delta) {
    const Hours result = t + delta;
    if (result >= 24.0 || result < 0.0) {
        throw Error(ErrorCode::DayOverflow, std::to_string(t) + " + " + std::to_string(delta) + " leaves the day");
    }
    return result;
}

} // namespace travel::tools
