#include "oracles.hpp"
#include "support.hpp"

#include "travel/budget/budget.hpp"
#include "travel/core/error.hpp"
#include "travel/core/text_model.hpp"

#include <doctest.h>

#include <random>

using namespace travel;
using namespace travel::budget;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Io;
}

std::int64_t cents(const BudgetPlan& p, Category c) { return p.amount(c).cents; }

// Reserve first (half-up on the cent), the remainder split by the oracle.
std::array<std::int64_t, 6> expected_split(std::int64_t confirmed, const Shares& s) {
    const std::int64_t reserve = (confirmed * s.reserve * 2 + 100) / 200;
    const auto parts = oracle::hamilton(confirmed - reserve,
                                        {s.accommodation, s.restaurant, s.attraction, s.transportation, s.other});
    return {parts[0], parts[1], parts[2], parts[3], parts[4], reserve};
}

class CannedModel final : public TextModel {
  public:
    explicit CannedModel(std::string reply) : reply_(std::move(reply)) {}
    std::string complete(const std::string&) const override { return reply_; }

  private:
    std::string reply_;
};

} // namespace

TEST_SUITE("budget") {

TEST_CASE("a confirmed 1000 splits into the default table") {
    const BudgetPlan p = allocate_budget(Money::from_cents(100000), support::form(0), Money::from_cents(120900));
    CHECK(cents(p, Category::accommodation) == 30000);
    CHECK(cents(p, Category::restaurant) == 20000);
    CHECK(cents(p, Category::attraction) == 15000);
    CHECK(cents(p, Category::transportation) == 15000);
    CHECK(cents(p, Category::other) == 10000);
    CHECK(cents(p, Category::reserve) == 10000);
    CHECK(p.total().cents == 100000);
    CHECK(p.flights.cents == 120900);
    for (const auto& r : p.reasons) CHECK_FALSE(r.empty());
}

TEST_CASE("allocations sum exactly and match the apportionment oracle") {
    const auto r = support::form(0);
    const BudgetPlan p = allocate_budget(Money::from_cents(100300), r, {});
    CHECK(p.total().cents == 100300);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> amount(3000, 5'000'000);
    for (int i = 0; i < 500; ++i) {
        const std::int64_t c = amount(rng);
        const BudgetPlan q = allocate_budget(Money::from_cents(c), r, {});
        const auto want = expected_split(c, Shares{});
        for (std::size_t k = 0; k < 6; ++k) CHECK(q.amounts[k].cents == want[k]);
        CHECK(q.total().cents == c);
    }
}

TEST_CASE("apportion agrees with enumeration on random weights") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> w(0, 40), len(1, 7);
    std::uniform_int_distribution<std::int64_t> units(0, 100000);
    for (int i = 0; i < 1000; ++i) {
        std::vector<int> weights(static_cast<std::size_t>(len(rng)));
        for (auto& x : weights) x = w(rng);
        weights[0] += 1;
        const std::int64_t u = units(rng);
        const auto got = apportion(u, weights);
        CHECK(got == oracle::hamilton(u, weights));
        CHECK(std::accumulate(got.begin(), got.end(), std::int64_t{0}) == u);
    }
    CHECK(code_of([] { apportion(-1, {1}); }) == ErrorCode::InvalidValue);
    CHECK(code_of([] { apportion(10, {0, 0}); }) == ErrorCode::InvalidValue);
}

TEST_CASE("rounding to a unit") {
    CHECK(round_to_unit(150, 100, 1) == 2);
    CHECK(round_to_unit(149, 100, 1) == 1);
    CHECK(round_to_unit(10035, 1, 100) == 10000);
    CHECK(round_to_unit(10050, 1, 100) == 10100);
    const auto r = support::form(0);
    BudgetConfig cfg;
    cfg.rounding_unit = 100;
    const BudgetPlan p = allocate_budget(Money::from_cents(100337), r, {}, cfg);
    CHECK(p.total().cents == 100337);
    for (auto c : {Category::accommodation, Category::restaurant, Category::attraction, Category::transportation,
                   Category::reserve}) {
        CHECK(cents(p, c) % 100 == 0);
    }
}

TEST_CASE("allocation is homogeneous in the confirmed amount") {
    const auto r = support::form(0);
    for (std::int64_t base : {100000, 250000, 990000}) {
        const BudgetPlan a = allocate_budget(Money::from_cents(base), r, {});
        const BudgetPlan b = allocate_budget(Money::from_cents(base * 3), r, {});
        for (std::size_t k = 0; k < 6; ++k) CHECK(b.amounts[k].cents == 3 * a.amounts[k].cents);
    }
}

TEST_CASE("too small and malformed budgets") {
    const auto r = support::form(0); // three nights
    CHECK(code_of([&] { allocate_budget(Money::from_cents(0), r, {}); }) == ErrorCode::BudgetTooSmall);
    CHECK(code_of([&] { allocate_budget(Money::from_cents(2999), r, {}); }) == ErrorCode::BudgetTooSmall);
    CHECK_NOTHROW(allocate_budget(Money::from_cents(3000), r, {}));
    BudgetConfig cfg;
    cfg.shares.other = 20;
    CHECK(code_of([&] { allocate_budget(Money::from_cents(100000), r, {}, cfg); }) == ErrorCode::InvalidValue);
}

TEST_CASE("low spenders move points into the reserve") {
    BudgetConfig cfg;
    cfg.adjustment = low_spending_adjustment(5);
    SoftConstraintSet low;
    low.spending_level = SpendingLevel::low;
    const auto r = support::form(0);
    const BudgetPlan plain = allocate_budget(Money::from_cents(100000), r, {}, cfg);
    const BudgetPlan adj = allocate_budget(Money::from_cents(100000), r, {}, cfg, low);
    CHECK(plain == allocate_budget(Money::from_cents(100000), r, {}));
    CHECK(cents(adj, Category::reserve) == 15000);
    CHECK(cents(adj, Category::accommodation) < cents(plain, Category::accommodation));
    CHECK(adj.total().cents == 100000);
}

TEST_CASE("cheapest round trip over the trip's flights") {
    const auto p = support::provider();
    const auto r = support::form(0);
    const auto flights = p->flights({"beijing", "shanghai", r.outbound_date, r.return_date});
    CHECK(cheapest_round_trip(flights).cents == 120900);
    CHECK(code_of([] { cheapest_round_trip({}); }) == ErrorCode::NoFlights);
}

TEST_CASE("recommended fund") {
    const auto p = support::provider();
    const auto r = support::form(0);
    const BudgetRecommendation a = recommend_budget(r, *p);
    CHECK(a.round_trip_flights_price.cents == 120900);
    CHECK(a.recommended_fund.cents > 0);
    CHECK_FALSE(a.reason.empty());
    CHECK(recommend_budget(r, *p) == a);

    // Nights at the lower-median rate, plus per-person daily meals, transport
    // and paid visits with children counted at half.
    const auto median = [](std::vector<std::int64_t> v) {
        std::sort(v.begin(), v.end());
        return v[(v.size() - 1) / 2];
    };
    std::vector<std::int64_t> nightly, fees;
    for (const auto& h : p->hotels({"shanghai", std::nullopt, std::nullopt})) nightly.push_back(h.price_per_night.cents);
    for (const auto& s : p->sights("shanghai")) {
        if (s.price_per_person.cents > 0) fees.push_back(s.price_per_person.cents);
    }
    const double persons = r.adults_num + 0.5 * r.children_num;
    const double fund = 3.0 * static_cast<double>(median(nightly)) +
                        4.0 * persons * (2500 + 1000) + 4.0 * persons * 3.0 * static_cast<double>(median(fees));
    CHECK(static_cast<double>(a.recommended_fund.cents) == doctest::Approx(fund).epsilon(1e-6));

    const CannedModel model(R"(Sure: {"recommended_fund": "$1500", "recommendation_reason": "ok"})");
    const BudgetRecommendation b = recommend_budget(r, *p, {}, &model);
    CHECK(b.recommended_fund.cents == 150000);
    CHECK(b.reason == "ok");

    const CannedModel junk("no idea");
    CHECK(recommend_budget(r, *p, {}, &junk) == a);

    TravelRequest nowhere = r;
    nowhere.departure = "atlantis, sea, nowhere";
    CHECK(code_of([&] { recommend_budget(nowhere, *p); }) == ErrorCode::NoFlights);
}

} // TEST_SUITE
