#include "travel/domain/clock.hpp"

#include "travel/core/error.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace travel {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_uint(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && out >= 0;
}

constexpr std::array<const char*, 12> kMonthNames = {"January", "February", "March", "April", "May", "June",
                                                     "July", "August", "September", "October", "November", "December"};

} // namespace

Date parse_date(std::string_view text) {
    const auto s = trim(text);
    const auto first = s.find('-');
    const auto second = first == std::string_view::npos ? first : s.find('-', first + 1);
    int y = 0, m = 0, d = 0;
    if (second == std::string_view::npos || first != 4 || !parse_uint(s.substr(0, first), y) ||
        !parse_uint(s.substr(first + 1, second - first - 1), m) || !parse_uint(s.substr(second + 1), d) ||
        second - first - 1 > 2 || s.size() - second - 1 > 2) {
        throw Error(ErrorCode::BadDate, "unparseable date '" + std::string(text) + "'");
    }
    const Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)}, std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) {
        throw Error(ErrorCode::BadDate, "invalid calendar date '" + std::string(text) + "'");
    }
    return date;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                  static_cast<unsigned>(d.day()));
    return buf;
}

std::string format_long_date(const Date& d) {
    return std::string(kMonthNames.at(static_cast<unsigned>(d.month()) - 1)) + " " +
           std::to_string(static_cast<unsigned>(d.day())) + ", " + std::to_string(static_cast<int>(d.year()));
}

int days_between(const Date& from, const Date& to) {
    return static_cast<int>((std::chrono::sys_days{to} - std::chrono::sys_days{from}).count());
}

Date add_days(const Date& d, int days) {
    return Date{std::chrono::sys_days{d} + std::chrono::days{days}};
}

Hours parse_clock(std::string_view text) {
    auto s = trim(text);
    bool pm = false;
    bool am = false;
    if (s.size() > 2) {
        auto suffix = s.substr(s.size() - 2);
        if (suffix == "PM" || suffix == "pm") pm = true;
        if (suffix == "AM" || suffix == "am") am = true;
        if (pm || am) s = trim(s.substr(0, s.size() - 2));
    }
    const auto colon = s.find(':');
    int h = 0, m = 0;
    if (colon == std::string_view::npos || !parse_uint(s.substr(0, colon), h) || !parse_uint(s.substr(colon + 1), m) ||
        m >= 60 || h > 24 || ((pm || am) && (h < 1 || h > 12))) {
        throw Error(ErrorCode::BadField, "unparseable clock time '" + std::string(text) + "'");
    }
    if (pm && h != 12) h += 12;
    if (am && h == 12) h = 0;
    return h + m / 60.0;
}

std::string format_clock(Hours h) {
    const long total = std::lround(h * 60.0);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%02ld:%02ld", total / 60, total % 60);
    return buf;
}

DateTime parse_date_time(std::string_view text) {
    const auto s = trim(text);
    const auto space = s.find(' ');
    if (space == std::string_view::npos) {
        throw Error(ErrorCode::BadDate, "expected 'YYYY-MM-DD HH:MM', got '" + std::string(text) + "'");
    }
    return DateTime{parse_date(s.substr(0, space)), parse_clock(s.substr(space + 1))};
}

std::string format_date_time(const DateTime& t) {
    return format_date(t.date) + " " + format_clock(t.hour);
}

double minutes_between(const DateTime& from, const DateTime& to) {
    return days_between(from.date, to.date) * 1440.0 + (to.hour - from.hour) * 60.0;
}

} // namespace travel
