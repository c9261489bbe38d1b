#pragma once

#include "travel/domain/clock.hpp"

namespace travel::tools {

// t + delta within one day; throws DayOverflow when the result leaves [0, 24).
Hours time_shift(Hours t, Hours delta);

} // namespace travel::tools
