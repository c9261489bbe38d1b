#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace travel {

// Integer minor units plus an opaque currency tag ("$" unless the source says
// otherwise). No conversion between tags is ever attempted.
struct Money {
    std::int64_t cents = 0;
    std::string currency = "$";

    bool operator==(const Money&) const = default;

    [[nodiscard]] bool is_free() const noexcept { return cents == 0; }

    static Money from_cents(std::int64_t c, std::string tag = "$") { return Money{c, std::move(tag)}; }
    static Money from_units(double units, std::string tag = "$");
};

// "$4.16" -> 416, "Free" -> 0, "1209" -> 120900, "€12" -> 1200 tagged "€".
Money parse_money(std::string_view text);
// "$1209.00"
std::string format_money(const Money& m);
// Whole units when the amount has no fractional part: "$300".
std::string format_money_compact(const Money& m);
double to_units(const Money& m);

} // namespace travel
