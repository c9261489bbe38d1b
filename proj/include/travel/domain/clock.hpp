#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace travel {

// Hour-of-day as fractional hours, e.g. 18.5 == 18:30.
using Hours = double;

using Date = std::chrono::year_month_day;

// Accepts "2024-08-06" and the unpadded "2024-9-09" seen in user forms.
Date parse_date(std::string_view text);
std::string format_date(const Date& d);
// "August 6, 2024"
std::string format_long_date(const Date& d);
int days_between(const Date& from, const Date& to);
Date add_days(const Date& d, int days);

// Accepts "14:00", "2:00 PM", "12:00 PM".
Hours parse_clock(std::string_view text);
// Rounds to the nearest minute: 18.1667 -> "18:10".
std::string format_clock(Hours h);

struct DateTime {
    Date date{};
    Hours hour = 0.0;

    bool operator==(const DateTime&) const = default;
};

// "2024-08-06 08:00"
DateTime parse_date_time(std::string_view text);
std::string format_date_time(const DateTime& t);
double minutes_between(const DateTime& from, const DateTime& to);

} // namespace travel
