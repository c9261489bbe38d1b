#include "travel/domain/money.hpp"

#include "travel/core/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

namespace travel {

Money Money::from_units(double units, std::string tag) {
    return Money{std::llround(units * 100.0), std::move(tag)};
}

Money parse_money(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s == "Free" || s == "free" || s == "FREE") return Money{};

    std::size_t digits = 0;
    while (digits < s.size() && !std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    std::string tag(s.substr(0, digits));
    while (!tag.empty() && std::isspace(static_cast<unsigned char>(tag.back()))) tag.pop_back();
    if (tag.find('-') != std::string::npos) {
        throw Error(ErrorCode::InvalidValue, "negative price '" + std::string(text) + "'");
    }
    std::string number;
    for (char c : s.substr(digits)) {
        if (c != ',') number.push_back(c);
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(number, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (number.empty() || used != number.size() || value < 0.0) {
        throw Error(ErrorCode::BadField, "unparseable price '" + std::string(text) + "'");
    }
    return Money::from_units(value, tag.empty() ? "$" : tag);
}

std::string format_money(const Money& m) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%lld.%02lld", m.currency.c_str(), static_cast<long long>(m.cents / 100),
                  static_cast<long long>(m.cents % 100));
    return buf;
}

std::string format_money_compact(const Money& m) {
    if (m.cents % 100 == 0) return m.currency + std::to_string(m.cents / 100);
    return format_money(m);
}

double to_units(const Money& m) {
    return static_cast<double>(m.cents) / 100.0;
}

} // namespace travel
