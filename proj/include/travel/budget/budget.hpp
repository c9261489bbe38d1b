#pragma once

#include "travel/core/text_model.hpp"
#include "travel/domain/constraints.hpp"
#include "travel/domain/money.hpp"
#include "travel/domain/request.hpp"
#include "travel/toolkit/tools.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace travel::budget {

enum class Category { accommodation, restaurant, attraction, transportation, other, reserve };

inline constexpr std::array<Category, 6> kCategories = {Category::accommodation, Category::restaurant,
                                                        Category::attraction,    Category::transportation,
                                                        Category::other,         Category::reserve};

std::string_view to_string(Category c);
// "Accommodation", "Other Expenses", ...
std::string_view display_name(Category c);

// Percentage points of the confirmed budget per category. The reserve is
// taken first; the other five split what is left in proportion to their
// points (30:20:15:15:10 gives 1/3, 2/9, 1/6, 1/6, 1/9).
struct Shares {
    int accommodation = 30;
    int restaurant = 20;
    int attraction = 15;
    int transportation = 15;
    int other = 10;
    int reserve = 10;

    [[nodiscard]] int total() const noexcept {
        return accommodation + restaurant + attraction + transportation + other + reserve;
    }
    [[nodiscard]] int of(Category c) const noexcept;
    bool operator==(const Shares&) const = default;
};

using ShareAdjustment = std::function<Shares(Shares, const SoftConstraintSet&)>;

// Moves `points` from accommodation to the reserve for low spenders.
ShareAdjustment low_spending_adjustment(int points = 5);

struct BudgetConfig {
    Shares shares;
    // Allocations are multiples of this many cents (1 = exact to the cent).
    std::int64_t rounding_unit = 1;
    // Smallest acceptable confirmed budget per night (one night minimum).
    Money per_day_floor = Money::from_cents(1000);
    // Disabled unless set.
    ShareAdjustment adjustment;

    // Per-person daily rates used by the preliminary estimate. Children count half.
    Money meal_rate = Money::from_cents(2500);
    Money transport_rate = Money::from_cents(1000);
    int paid_visits_per_day = 3;
};

struct BudgetRecommendation {
    Money recommended_fund;
    std::string reason;
    Money round_trip_flights_price;

    bool operator==(const BudgetRecommendation&) const = default;
};

struct BudgetPlan {
    Money flights;
    Money confirmed;
    std::array<Money, 6> amounts; // indexed by Category
    std::array<std::string, 6> reasons;

    [[nodiscard]] const Money& amount(Category c) const { return amounts[static_cast<std::size_t>(c)]; }
    [[nodiscard]] Money total() const;
    bool operator==(const BudgetPlan&) const = default;
};

// Largest-remainder apportionment of `units` in proportion to `weights`.
// Ties on the remainder go to the lower index. Exact in integers.
std::vector<std::int64_t> apportion(std::int64_t units, const std::vector<int>& weights);

// Half-up rounding of numerator/denominator to a multiple of `unit`.
std::int64_t round_to_unit(std::int64_t numerator, std::int64_t denominator, std::int64_t unit);

// Throws BudgetTooSmall, InvalidValue (non-positive amount or bad shares).
BudgetPlan allocate_budget(const Money& confirmed, const TravelRequest& r, const Money& flights_price,
                           const BudgetConfig& cfg = {}, const SoftConstraintSet& soft = {});

// Cheapest round-trip price over the outbound flights offered for the trip.
// Throws NoFlights.
Money cheapest_round_trip(const std::vector<Flight>& flights);

// Deterministic estimate of the fund needed on the ground, optionally
// replaced by a model answer. Throws NoFlights, NoResults.
BudgetRecommendation recommend_budget(const TravelRequest& r, const tools::DataProvider& provider,
                                      const BudgetConfig& cfg = {}, const TextModel* model = nullptr);

} // namespace travel::budget
