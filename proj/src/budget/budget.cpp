#include "travel/budget/budget.hpp"

#include "travel/core/assets.hpp"
#include "travel/core/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace travel::budget {
namespace {

std::vector<int> spend_weights(const Shares& s) {
    return {s.accommodation, s.restaurant, s.attraction, s.transportation, s.other};
}

void check_shares(const Shares& s) {
    for (Category c : kCategories) {
        if (s.of(c) < 0) throw Error(ErrorCode::InvalidValue, "negative share for " + std::string(to_string(c)));
    }
    if (s.total() != 100) throw Error(ErrorCode::InvalidValue, "shares must total 100 points");
    if (s.reserve == 100) throw Error(ErrorCode::InvalidValue, "shares leave nothing to spend");
}

const std::array<std::string, 6> kReasons = {
    "Mid-range lodging for every night of the stay.",
    "A mix of casual meals and a few nicer sit-down dinners.",
    "Entry fees for the main sights, favouring ones suitable for the whole party.",
    "Public transit plus the occasional taxi between sights.",
    "Souvenirs, snacks and small incidentals.",
    "Kept aside for emergencies and unplanned costs.",
};

std::int64_t lower_median(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    return v[(v.size() - 1) / 2];
}

// days * (2*adults + children) * rate / 2, rounded half up.
std::int64_t party_days_cost(int days, int party_x2, std::int64_t rate_cents) {
    return round_to_unit(static_cast<std::int64_t>(days) * party_x2 * rate_cents, 2, 1);
}

} // namespace

std::string_view to_string(Category c) {
    switch (c) {
    case Category::accommodation: return "accommodation";
    case Category::restaurant: return "restaurant";
    case Category::attraction: return "attraction";
    case Category::transportation: return "transportation";
    case Category::other: return "other";
    case Category::reserve: return "reserve";
    }
    return "other";
}

std::string_view display_name(Category c) {
    switch (c) {
    case Category::accommodation: return "Accommodation";
    case Category::restaurant: return "Restaurant";
    case Category::attraction: return "Attraction";
    case Category::transportation: return "Transportation";
    case Category::other: return "Other Expenses";
    case Category::reserve: return "Reserve";
    }
    return "Other Expenses";
}

int Shares::of(Category c) const noexcept {
    switch (c) {
    case Category::accommodation: return accommodation;
    case Category::restaurant: return restaurant;
    case Category::attraction: return attraction;
    case Category::transportation: return transportation;
    case Category::other: return other;
    case Category::reserve: return reserve;
    }
    return 0;
}

ShareAdjustment low_spending_adjustment(int points) {
    return [points](Shares s, const SoftConstraintSet& soft) {
        if (soft.spending_level == SpendingLevel::low) {
            const int moved = std::min(points, s.accommodation);
            s.accommodation -= moved;
            s.reserve += moved;
        }
        return s;
    };
}

Money BudgetPlan::total() const {
    Money sum = Money::from_cents(0, confirmed.currency);
    for (const auto& m : amounts) sum.cents += m.cents;
    return sum;
}

std::vector<std::int64_t> apportion(std::int64_t units, const std::vector<int>& weights) {
    if (units < 0) throw Error(ErrorCode::InvalidValue, "cannot apportion a negative amount");
    const std::int64_t w_total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    if (w_total <= 0) throw Error(ErrorCode::InvalidValue, "weights must have a positive total");

    std::vector<std::int64_t> out(weights.size());
    std::vector<std::int64_t> rem(weights.size());
    std::int64_t given = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0) throw Error(ErrorCode::InvalidValue, "negative weight");
        const std::int64_t q = units / w_total * weights[i];
        const std::int64_t r = units % w_total * weights[i];
        out[i] = q + r / w_total;
        rem[i] = r % w_total;
        given += out[i];
    }
    std::vector<std::size_t> order(weights.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
    for (std::int64_t k = 0; k < units - given; ++k) ++out[order[static_cast<std::size_t>(k)]];
    return out;
}

std::int64_t round_to_unit(std::int64_t numerator, std::int64_t denominator, std::int64_t unit) {
    if (denominator <= 0 || unit <= 0) throw Error(ErrorCode::InvalidValue, "rounding needs positive divisors");
    const std::int64_t d = denominator * unit;
    std::int64_t q = numerator / d;
    std::int64_t r = numerator % d;
    if (r < 0) {
        r += d;
        --q;
    }
    if (2 * r >= d) ++q;
    return q * unit;
}

BudgetPlan allocate_budget(const Money& confirmed, const TravelRequest& r, const Money& flights_price,
                           const BudgetConfig& cfg, const SoftConstraintSet& soft) {
    if (cfg.rounding_unit <= 0) throw Error(ErrorCode::InvalidValue, "rounding unit must be positive");
    const std::int64_t floor_cents = cfg.per_day_floor.cents * std::max(1, r.nights());
    if (confirmed.cents <= 0 || confirmed.cents < floor_cents) {
        throw Error(ErrorCode::BudgetTooSmall, format_money(confirmed) + " is below the minimum of " +
                                                   format_money(Money::from_cents(floor_cents, confirmed.currency)));
    }
    Shares shares = cfg.adjustment ? cfg.adjustment(cfg.shares, soft) : cfg.shares;
    check_shares(shares);

    BudgetPlan plan;
    plan.flights = flights_price;
    plan.confirmed = confirmed;
    plan.reasons = kReasons;

    const std::int64_t unit = cfg.rounding_unit;
    const std::int64_t reserve = std::min(confirmed.cents, round_to_unit(confirmed.cents * shares.reserve, 100, unit));
    const std::int64_t spend = confirmed.cents - reserve;
    auto parts = apportion(spend / unit, spend_weights(shares));
    for (std::size_t i = 0; i < parts.size(); ++i) plan.amounts[i] = Money::from_cents(parts[i] * unit, confirmed.currency);
    // Sub-unit residue (only when unit > 1) lands in "other" so the total stays exact.
    plan.amounts[static_cast<std::size_t>(Category::other)].cents += spend % unit;
    plan.amounts[static_cast<std::size_t>(Category::reserve)] = Money::from_cents(reserve, confirmed.currency);
    plan.reasons[static_cast<std::size_t>(Category::reserve)] =
        "Reserved " + std::to_string(shares.reserve) + "% of the budget for emergencies and unplanned costs.";
    return plan;
}

Money cheapest_round_trip(const std::vector<Flight>& flights) {
    const Flight* best = nullptr;
    for (const auto& f : flights) {
        if (f.direction != FlightDirection::outbound) continue;
        if (best == nullptr || f.round_trip_price.cents < best->round_trip_price.cents) best = &f;
    }
    if (best == nullptr) throw Error(ErrorCode::NoFlights, "no outbound flight matches the trip");
    return best->round_trip_price;
}

BudgetRecommendation recommend_budget(const TravelRequest& r, const tools::DataProvider& provider,
                                      const BudgetConfig& cfg, const TextModel* model) {
    const std::string city = city_key(r.destination);
    tools::FlightQuery fq{city_key(r.departure), city, r.outbound_date, r.return_date};
    BudgetRecommendation out;
    out.round_trip_flights_price = cheapest_round_trip(provider.flights(fq));

    const int nights = r.nights();
    const int days = r.days();
    const int party_x2 = 2 * r.adults_num + r.children_num;

    std::int64_t hotel_night = 0;
    if (auto hotels = provider.hotels({city, std::nullopt, std::nullopt}); !hotels.empty()) {
        std::vector<std::int64_t> prices;
        for (const auto& h : hotels) prices.push_back(h.price_per_night.cents);
        hotel_night = lower_median(prices);
    }
    std::int64_t paid_visit = 0;
    {
        std::vector<std::int64_t> prices;
        for (const auto& a : provider.sights(city)) {
            if (!a.price_per_person.is_free()) prices.push_back(a.price_per_person.cents);
        }
        if (!prices.empty()) paid_visit = lower_median(prices);
    }

    const std::int64_t lodging = nights * hotel_night;
    const std::int64_t per_diem = party_days_cost(days, party_x2, cfg.meal_rate.cents + cfg.transport_rate.cents);
    const std::int64_t visits = party_days_cost(days, party_x2, cfg.paid_visits_per_day * paid_visit);
    out.recommended_fund = Money::from_cents(lodging + per_diem + visits);

    std::ostringstream reason;
    reason << nights << " night(s) at a typical nightly rate of " << format_money(Money::from_cents(hotel_night))
           << ", meals and local transport for " << r.adults_num << " adult(s)";
    if (r.children_num > 0) reason << " and " << r.children_num << " child(ren)";
    reason << " over " << days << " day(s)";
    if (paid_visit > 0) reason << ", and " << cfg.paid_visits_per_day << " paid visits a day";
    reason << '.';
    out.reason = reason.str();

    if (model != nullptr) {
        try {
            const std::string prompt = render_template(
                asset("prompts/budget_estimate.txt"),
                {{"adults", std::to_string(r.adults_num)},
                 {"children", std::to_string(r.children_num)},
                 {"city", r.destination},
                 {"nights", std::to_string(nights)},
                 {"hotel_price", format_money(Money::from_cents(hotel_night))},
                 {"attraction_price", format_money(Money::from_cents(paid_visit))}});
            auto j = nlohmann::json::parse(extract_json_block(model->complete(prompt)));
            Money fund = parse_money(j.at("recommended_fund").get<std::string>());
            if (fund.cents > 0) {
                out.recommended_fund = fund;
                out.reason = j.value("recommendation_reason", out.reason);
            }
        } catch (const Error&) {
            // keep the deterministic estimate
        } catch (const nlohmann::json::exception&) {
        }
    }
    return out;
}

} // namespace travel::budget
