#pragma once

// Wire format for domain values (sessions, trip documents, HTTP bodies).
// Fixture packs use their own record layout; see toolkit/catalog.hpp.

#include "travel/domain/catalog_items.hpp"
#include "travel/domain/constraints.hpp"
#include "travel/domain/insight.hpp"
#include "travel/domain/itinerary.hpp"
#include "travel/domain/request.hpp"
#include "travel/domain/score.hpp"

#include <json.hpp>

namespace travel {

void to_json(nlohmann::json& j, const GeoPoint& p);
void from_json(const nlohmann::json& j, GeoPoint& p);
void to_json(nlohmann::json& j, const TimeWindow& w);
void from_json(const nlohmann::json& j, TimeWindow& w);
void to_json(nlohmann::json& j, const Money& m);
void from_json(const nlohmann::json& j, Money& m);
void to_json(nlohmann::json& j, const DateTime& t);
void from_json(const nlohmann::json& j, DateTime& t);

void to_json(nlohmann::json& j, const Attraction& a);
void from_json(const nlohmann::json& j, Attraction& a);
void to_json(nlohmann::json& j, const Hotel& h);
void from_json(const nlohmann::json& j, Hotel& h);
void to_json(nlohmann::json& j, const Restaurant& r);
void from_json(const nlohmann::json& j, Restaurant& r);
void to_json(nlohmann::json& j, const Airport& a);
void from_json(const nlohmann::json& j, Airport& a);
void to_json(nlohmann::json& j, const Flight& f);
void from_json(const nlohmann::json& j, Flight& f);
void to_json(nlohmann::json& j, const CityInfo& c);
void from_json(const nlohmann::json& j, CityInfo& c);

void to_json(nlohmann::json& j, const SoftConstraintSet& s);
void from_json(const nlohmann::json& j, SoftConstraintSet& s);
void to_json(nlohmann::json& j, const CommonsenseRule& r);
void from_json(const nlohmann::json& j, CommonsenseRule& r);

void to_json(nlohmann::json& j, const InsightRecord& r);
void from_json(const nlohmann::json& j, InsightRecord& r);

void to_json(nlohmann::json& j, const ScoreBreakdown& s);
void from_json(const nlohmann::json& j, ScoreBreakdown& s);
void to_json(nlohmann::json& j, const RoutePoint& p);
void from_json(const nlohmann::json& j, RoutePoint& p);
void to_json(nlohmann::json& j, const DayPlan& d);
void from_json(const nlohmann::json& j, DayPlan& d);
void to_json(nlohmann::json& j, const Itinerary& it);
void from_json(const nlohmann::json& j, Itinerary& it);

void to_json(nlohmann::json& j, const TravelRequest& r);
void from_json(const nlohmann::json& j, TravelRequest& r);
void to_json(nlohmann::json& j, const Violation& v);

} // namespace travel
