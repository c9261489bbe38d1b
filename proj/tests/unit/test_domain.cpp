#include "support.hpp"

#include "travel/core/error.hpp"
#include "travel/domain/clock.hpp"
#include "travel/domain/constraints.hpp"
#include "travel/domain/geo.hpp"
#include "travel/domain/itinerary.hpp"
#include "travel/domain/json_io.hpp"
#include "travel/domain/money.hpp"
#include "travel/domain/request.hpp"
#include "travel/domain/time_window.hpp"

#include <doctest.h>

using namespace travel;
using nlohmann::json;

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

json form1() {
    return json{{"user_name", "sheep"},          {"departure", "beijing, beijing, china"},
                {"destination", "shanghai, shanghai, china"}, {"outbound_date", "2024-08-06"},
                {"return_date", "2024-08-09"},   {"adults_num", 2},
                {"children_num", 1},             {"children_ages", "3"},
                {"restaurant_preference", "Chinese"}};
}

} // namespace

TEST_SUITE("domain") {

TEST_CASE("geo point rejects out-of-range and non-finite coordinates") {
    CHECK_NOTHROW(GeoPoint(90.0, -180.0));
    CHECK(code_of([] { GeoPoint(90.5, 0.0); }) == ErrorCode::InvalidValue);
    CHECK(code_of([] { GeoPoint(0.0, 181.0); }) == ErrorCode::InvalidValue);
    CHECK(code_of([] { GeoPoint(std::nan(""), 0.0); }) == ErrorCode::InvalidValue);
}

TEST_CASE("time window bounds and overlap") {
    CHECK_NOTHROW(TimeWindow(0.0, 24.0));
    CHECK(code_of([] { TimeWindow(12.0, 12.0); }) == ErrorCode::InvalidValue);
    CHECK(code_of([] { TimeWindow(-1.0, 3.0); }) == ErrorCode::InvalidValue);
    CHECK(code_of([] { TimeWindow(1.0, 24.5); }) == ErrorCode::InvalidValue);
    const TimeWindow w(8, 12);
    CHECK(overlap_length(11, 13, w) == doctest::Approx(1.0));
    CHECK(overlap_length(13, 14, w) == 0.0);
    CHECK(overlap_length(9, 10, w) == doctest::Approx(1.0));
    CHECK(parse_time_window("[18, 22]") == TimeWindow(18, 22));
    CHECK(parse_time_window("[8.5, 12]") == TimeWindow(8.5, 12));
    CHECK(code_of([] { parse_time_window("soon"); }) == ErrorCode::BadField);
}

TEST_CASE("clock and date formatting") {
    CHECK(format_clock(18.0 + 10.0 / 60.0) == "18:10");
    CHECK(format_clock(9.0) == "09:00");
    CHECK(parse_clock("2:00 PM") == doctest::Approx(14.0));
    CHECK(parse_clock("12:00 PM") == doctest::Approx(12.0));
    CHECK(parse_clock("12:30 AM") == doctest::Approx(0.5));
    CHECK(parse_clock("14:00") == doctest::Approx(14.0));
    CHECK(format_long_date(parse_date("2024-08-06")) == "August 6, 2024");
    CHECK(parse_date("2024-9-09") == parse_date("2024-09-09"));
    CHECK(days_between(parse_date("2024-08-06"), parse_date("2024-08-09")) == 3);
    CHECK(code_of([] { parse_date("2024-02-30"); }) == ErrorCode::BadDate);
    const DateTime t = parse_date_time("2024-08-06 08:00");
    CHECK(format_date_time(t) == "2024-08-06 08:00");
    CHECK(minutes_between(t, parse_date_time("2024-08-06 10:10")) == doctest::Approx(130.0));
}

TEST_CASE("money parsing keeps integer cents") {
    CHECK(parse_money("$4.16").cents == 416);
    CHECK(parse_money("Free").cents == 0);
    CHECK(parse_money("1209").cents == 120900);
    const Money eur = parse_money("€12");
    CHECK(eur.cents == 1200);
    CHECK(eur.currency == "€");
    CHECK(format_money(Money::from_cents(120900)) == "$1209.00");
    CHECK(format_money_compact(Money::from_cents(30000)) == "$300");
    CHECK(format_money_compact(Money::from_cents(24450)) == "$244.50");
    CHECK(code_of([] { parse_money("-$3"); }) == ErrorCode::InvalidValue);
    CHECK(code_of([] { parse_money("cheap"); }) == ErrorCode::BadField);
}

TEST_CASE("the first bundled form parses to a party with one three-year-old") {
    const ParsedForm p = parse_input_form(form1());
    CHECK(p.warnings.empty());
    CHECK(p.request.user_name == "sheep");
    CHECK(p.request.adults_num == 2);
    CHECK(p.request.children_num == 1);
    CHECK(p.request.children_ages == std::vector<int>{3});
    CHECK(p.request.restaurant_preference == "Chinese");
    CHECK(p.request.days() == 4);
    CHECK(p.request.nights() == 3);
    CHECK(validate_request(p.request).empty());
    CHECK(city_key(p.request.destination) == "shanghai");
}

TEST_CASE("form parsing errors") {
    SUBCASE("zero children with an empty age list") {
        json f = form1();
        f["children_num"] = 0;
        f["children_ages"] = "";
        CHECK(parse_input_form(f).request.children_ages.empty());
    }
    SUBCASE("ages with spaces") {
        json f = form1();
        f["children_num"] = 2;
        f["children_ages"] = " 7,  9 ";
        CHECK(parse_input_form(f).request.children_ages == std::vector<int>{7, 9});
    }
    SUBCASE("return before outbound") {
        json f = form1();
        f["return_date"] = "2024-08-01";
        CHECK(code_of([&] { parse_input_form(f); }) == ErrorCode::BadDate);
    }
    SUBCASE("missing field") {
        json f = form1();
        f.erase("destination");
        CHECK(code_of([&] { parse_input_form(f); }) == ErrorCode::MissingField);
    }
    SUBCASE("negative count") {
        json f = form1();
        f["adults_num"] = -1;
        CHECK(code_of([&] { parse_input_form(f); }) == ErrorCode::NegativeCount);
    }
    SUBCASE("unknown keys become warnings") {
        json f = form1();
        f["pets"] = "cat";
        const auto p = parse_input_form(f);
        REQUIRE(p.warnings.size() == 1);
        CHECK(p.warnings[0].key == "pets");
    }
    SUBCASE("malformed text") {
        CHECK(code_of([] { parse_input_form(std::string_view(support::slurp(support::test_data("malformed_form.json")))); }) ==
              ErrorCode::MalformedDocument);
    }
}

TEST_CASE("validation reports violations as data") {
    TravelRequest r = parse_input_form(form1()).request;
    r.adults_num = 0;
    auto v = validate_request(r);
    REQUIRE(v.size() == 1);
    CHECK(v[0].code == ViolationCode::PartySizeZero);

    r = parse_input_form(form1()).request;
    r.children_ages = {3, 5};
    v = validate_request(r);
    REQUIRE(v.size() == 1);
    CHECK(v[0].code == ViolationCode::ChildAgesMismatch);
}

TEST_CASE("all bundled forms survive parse, serialize, parse") {
    const json forms = support::forms();
    REQUIRE(forms.size() == 20);
    for (const auto& f : forms) {
        const TravelRequest a = parse_input_form(f).request;
        const auto text = to_form_json(a).dump();
        const TravelRequest b = parse_input_form(std::string_view(text)).request;
        CHECK(a == b);
        CHECK(to_form_json(b).dump() == text);
    }
}

TEST_CASE("commonsense rule ids are unique") {
    CommonsenseRuleSet rules;
    rules.add({"a", "always", "do x", RuleSource::seed});
    CHECK(code_of([&] { rules.add({"a", "again", "do y", RuleSource::seed}); }) == ErrorCode::InvalidValue);
    rules.upsert({"a", "again", "do y", RuleSource::learned});
    REQUIRE(rules.rules().size() == 1);
    CHECK(rules.find("a")->effect == "do y");
}

TEST_CASE("day ordering check flags overlaps") {
    DayPlan d;
    d.points = {{RouteKind::visit, 9, 10, "1", ""}, {RouteKind::visit, 10, 11, "2", ""}};
    CHECK(check_day_ordering(d).empty());
    d.points.push_back({RouteKind::visit, 10.5, 12, "3", ""});
    CHECK_FALSE(check_day_ordering(d).empty());
}

TEST_CASE("catalog item json round trip") {
    Attraction a = support::attraction("9", 31.2449, 121.4905, 0.5, 18, 22, 4.5);
    a.price_per_person = parse_money("$4.16");
    a.types = {"Bridge"};
    const Attraction b = json(a).get<Attraction>();
    CHECK(a == b);
}

} // TEST_SUITE
