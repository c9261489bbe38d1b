#pragma once

#include "travel/domain/clock.hpp"

#include <string_view>

namespace travel {

// Preferred hour-of-day interval, start in [0, 24), end in (0, 24], start < end.
class TimeWindow {
  public:
    TimeWindow() = default;
    TimeWindow(Hours start, Hours end);

    [[nodiscard]] Hours start() const noexcept { return start_; }
    [[nodiscard]] Hours end() const noexcept { return end_; }
    [[nodiscard]] Hours length() const noexcept { return end_ - start_; }
    [[nodiscard]] bool contains(Hours t) const noexcept { return t >= start_ && t <= end_; }

    bool operator==(const TimeWindow&) const = default;

  private:
    Hours start_ = 0.0;
    Hours end_ = 24.0;
};

// Length of [a, b] ∩ window, zero when disjoint.
Hours overlap_length(Hours a, Hours b, const TimeWindow& window);

// Parses the "[8, 12]" form used by catalog records.
TimeWindow parse_time_window(std::string_view text);

} // namespace travel
