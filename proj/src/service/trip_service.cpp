#include "travel/service/trip_service.hpp"

#include "travel/core/error.hpp"
#include "travel/domain/json_io.hpp"
#include "travel/recommend/json_io.hpp"
#include "travel/service/export.hpp"

#include <algorithm>
#include <cstdio>

namespace travel::budget {

void to_json(nlohmann::json& j, const BudgetPlan& p) {
    nlohmann::json cats = nlohmann::json::array();
    for (Category c : kCategories) {
        cats.push_back({{"category", to_string(c)},
                        {"label", display_name(c)},
                        {"amount", p.amount(c)},
                        {"reason", p.reasons[static_cast<std::size_t>(c)]}});
    }
    j = nlohmann::json{{"flights", p.flights}, {"confirmed", p.confirmed}, {"total", p.total()}, {"categories", cats}};
}

void from_json(const nlohmann::json& j, BudgetPlan& p) {
    p = BudgetPlan{};
    p.flights = j.at("flights").get<Money>();
    p.confirmed = j.at("confirmed").get<Money>();
    const auto& cats = j.at("categories");
    if (!cats.is_array() || cats.size() != kCategories.size()) {
        throw Error(ErrorCode::MalformedDocument, "budget plan needs six categories");
    }
    for (std::size_t i = 0; i < kCategories.size(); ++i) {
        p.amounts[i] = cats.at(i).at("amount").get<Money>();
        p.reasons[i] = cats.at(i).value("reason", "");
    }
}

void to_json(nlohmann::json& j, const BudgetRecommendation& r) {
    j = nlohmann::json{{"recommended_fund", format_money(r.recommended_fund)},
                       {"recommendation_reason", r.reason},
                       {"round_trip_flights_price", format_money(r.round_trip_flights_price)}};
}

void from_json(const nlohmann::json& j, BudgetRecommendation& r) {
    r.recommended_fund = parse_money(j.at("recommended_fund").get<std::string>());
    r.reason = j.value("recommendation_reason", "");
    r.round_trip_flights_price = parse_money(j.value("round_trip_flights_price", "0"));
}

} // namespace travel::budget

namespace travel::service {
namespace {

constexpr std::string_view kTripPrefix = "trip-";

std::string sequence_id(int n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "trip-%06d", n);
    return buf;
}

[[noreturn]] void conflict(const TripSession& s, std::string_view action) {
    throw Error(ErrorCode::StageConflict, std::string(action) + " is not allowed while trip " + s.trip_id + " is " +
                                              std::string(to_string(s.stage)));
}

nlohmann::json scored_entry(const rec::ScoredItem& s, const Attraction& a) {
    nlohmann::json j = s;
    j["item"] = a;
    return j;
}

} // namespace

std::string_view to_string(Stage s) {
    switch (s) {
    case Stage::created: return "created";
    case Stage::recommended: return "recommended";
    case Stage::feedback: return "feedback";
    case Stage::budget_confirmed: return "budget_confirmed";
    case Stage::planned: return "planned";
    }
    return "created";
}

Stage parse_stage(std::string_view text) {
    for (Stage s : {Stage::created, Stage::recommended, Stage::feedback, Stage::budget_confirmed, Stage::planned}) {
        if (to_string(s) == text) return s;
    }
    throw Error(ErrorCode::BadField, "unknown stage '" + std::string(text) + "'");
}

RequestRejected::RequestRejected(std::vector<Violation> violations, const std::string& message)
    : Error(ErrorCode::InvalidValue, message), violations_(std::move(violations)) {}

nlohmann::json session_to_json(const TripSession& s) {
    nlohmann::json j{{"trip_id", s.trip_id},
                     {"user_id", s.user_id},
                     {"request", s.request},
                     {"stage", to_string(s.stage)},
                     {"restaurants", s.restaurants}};
    j["attractions"] = s.attractions ? nlohmann::json(*s.attractions) : nlohmann::json(nullptr);
    j["flights"] = s.flights ? nlohmann::json{{"outbound", s.flights->outbound}, {"inbound", s.flights->inbound}}
                             : nlohmann::json(nullptr);
    j["hotel"] = s.hotel ? nlohmann::json(*s.hotel) : nlohmann::json(nullptr);
    j["budget_recommendation"] =
        s.budget_recommendation ? nlohmann::json(*s.budget_recommendation) : nlohmann::json(nullptr);
    j["budget"] = s.budget ? nlohmann::json(*s.budget) : nlohmann::json(nullptr);
    j["itinerary"] = s.itinerary ? nlohmann::json(*s.itinerary) : nlohmann::json(nullptr);
    return j;
}

TripSession session_from_json(const nlohmann::json& j) {
    TripSession s;
    try {
        s.trip_id = j.at("trip_id").get<std::string>();
        s.user_id = j.at("user_id").get<std::string>();
        s.request = j.at("request").get<TravelRequest>();
        s.stage = parse_stage(j.at("stage").get<std::string>());
        s.restaurants = j.at("restaurants").get<std::vector<Restaurant>>();
        if (!j.at("attractions").is_null()) s.attractions = j.at("attractions").get<rec::Session>();
        if (!j.at("flights").is_null()) {
            s.flights = route::FlightPair{j.at("flights").at("outbound").get<Flight>(),
                                          j.at("flights").at("inbound").get<Flight>()};
        }
        if (!j.at("hotel").is_null()) s.hotel = j.at("hotel").get<Hotel>();
        if (!j.at("budget_recommendation").is_null()) {
            s.budget_recommendation = j.at("budget_recommendation").get<budget::BudgetRecommendation>();
        }
        if (!j.at("budget").is_null()) s.budget = j.at("budget").get<budget::BudgetPlan>();
        if (!j.at("itinerary").is_null()) s.itinerary = j.at("itinerary").get<Itinerary>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("bad trip session: ") + e.what());
    }
    return s;
}

TripService::TripService(ServiceDeps deps, ServiceConfig cfg) : deps_(std::move(deps)), cfg_(std::move(cfg)) {
    if (!deps_.provider) throw Error(ErrorCode::ProviderUnavailable, "trip service needs a data provider");
    if (!deps_.documents) throw Error(ErrorCode::InvalidValue, "trip service needs a document store");
    if (!deps_.memory) deps_.memory = std::make_shared<memory::MemoryStore>(deps_.documents);
    route::validate(cfg_.planner);
}

const rec::PreferenceModel& TripService::model() const {
    return deps_.model ? *deps_.model : static_cast<const rec::PreferenceModel&>(fallback_);
}

budget::BudgetConfig TripService::budget_config() const {
    budget::BudgetConfig b = cfg_.budget;
    if (cfg_.low_spending_points > 0) b.adjustment = budget::low_spending_adjustment(cfg_.low_spending_points);
    return b;
}

std::shared_ptr<TripService::Slot> TripService::slot(const std::string& trip_id) const {
    std::lock_guard lock(slots_mu_);
    auto& s = slots_[trip_id];
    if (!s) s = std::make_shared<Slot>();
    return s;
}

TripSession& TripService::loaded(Slot& s, const std::string& trip_id) const {
    if (!s.session) {
        auto text = deps_.documents->read(trip_id);
        if (!text || trip_id.rfind(kTripPrefix, 0) != 0) throw Error(ErrorCode::NotFound, "no trip " + trip_id);
        try {
            s.session = session_from_json(nlohmann::json::parse(*text));
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::MalformedDocument, "trip " + trip_id + ": " + e.what());
        }
    }
    return *s.session;
}

void TripService::persist(const TripSession& s) const {
    deps_.documents->write(s.trip_id, session_to_json(s).dump(2));
}

std::vector<std::string> TripService::trip_ids() const {
    std::vector<std::string> out;
    for (const auto& k : deps_.documents->keys()) {
        if (k.rfind(kTripPrefix, 0) == 0) out.push_back(k);
    }
    return out;
}

TripSession TripService::session(const std::string& trip_id) const {
    auto s = slot(trip_id);
    std::lock_guard lock(s->mu);
    return loaded(*s, trip_id);
}

std::string TripService::create_trip(const nlohmann::json& form, std::string user_id) {
    const ParsedForm parsed = parse_input_form(form);
    auto violations = validate_request(parsed.request);
    if (!violations.empty()) {
        std::string msg = "form rejected:";
        for (const auto& v : violations) msg += " " + std::string(to_string(v.code)) + ";";
        throw RequestRejected(std::move(violations), msg);
    }
    TripSession s;
    s.request = parsed.request;
    s.user_id = user_id.empty() ? parsed.request.user_name : std::move(user_id);
    if (s.user_id.empty()) s.user_id = "anonymous";
    {
        std::lock_guard lock(create_mu_);
        const auto existing = trip_ids();
        int n = static_cast<int>(existing.size()) + 1;
        while (std::find(existing.begin(), existing.end(), sequence_id(n)) != existing.end()) ++n;
        s.trip_id = sequence_id(n);
        persist(s);
    }
    deps_.memory->begin_scenario(s.user_id, s.trip_id);
    auto sl = slot(s.trip_id);
    std::lock_guard lock(sl->mu);
    sl->session = s;
    return s.trip_id;
}

void TripService::ensure_flights(TripSession& s) const {
    if (s.flights) return;
    const auto& r = s.request;
    tools::FlightQuery q{city_key(r.departure), city_key(r.destination), r.outbound_date, r.return_date};
    s.flights = route::choose_flights(deps_.provider->flights(q));
}

nlohmann::json TripService::recommendations(const std::string& trip_id, std::string_view stage) {
    auto sl = slot(trip_id);
    std::lock_guard lock(sl->mu);
    TripSession& s = loaded(*sl, trip_id);
    const auto& r = s.request;
    const std::string city = city_key(r.destination);
    nlohmann::json out{{"trip_id", s.trip_id}, {"stage", stage}};

    if (stage == "flights") {
        tools::FlightQuery q{city_key(r.departure), city, r.outbound_date, r.return_date};
        auto flights = deps_.provider->flights(q);
        ensure_flights(s);
        std::stable_sort(flights.begin(), flights.end(), [](const Flight& a, const Flight& b) {
            return a.round_trip_price.cents < b.round_trip_price.cents;
        });
        out["items"] = flights;
        out["selected"] = {s.flights->outbound.id, s.flights->inbound.id};
        persist(s);
    } else if (stage == "hotel") {
        auto hotels = deps_.provider->hotels({city, r.outbound_date, r.return_date});
        std::stable_sort(hotels.begin(), hotels.end(), [](const Hotel& a, const Hotel& b) {
            if (a.rating != b.rating) return a.rating > b.rating;
            return a.total_price.cents < b.total_price.cents;
        });
        std::optional<Money> allowance;
        if (s.budget) allowance = s.budget->amount(budget::Category::accommodation);
        out["items"] = hotels;
        const auto chosen = route::choose_hotel(hotels, allowance);
        out["selected"] = chosen ? nlohmann::json::array({chosen->id}) : nlohmann::json::array();
    } else if (stage == "restaurants") {
        auto all = deps_.provider->restaurants(city, "");
        const std::string want = r.restaurant_preference;
        std::stable_sort(all.begin(), all.end(), [&](const Restaurant& a, const Restaurant& b) {
            const bool ma = !want.empty() && city_key(a.cuisine) == city_key(want);
            const bool mb = !want.empty() && city_key(b.cuisine) == city_key(want);
            if (ma != mb) return ma;
            return a.rating > b.rating;
        });
        out["items"] = all;
    } else if (stage == "budget") {
        if (!s.budget_recommendation) {
            s.budget_recommendation = budget::recommend_budget(r, *deps_.provider, budget_config(), deps_.text_model.get());
            persist(s);
        }
        out["recommendation"] = *s.budget_recommendation;
    } else if (stage == "attractions") {
        if (!s.attractions) {
            if (s.stage != Stage::created) conflict(s, "recommending attractions");
            const auto known = deps_.memory->retrieve_insights(s.user_id, &r);
            rec::RecommendationContext ctx{r, known.soft, known.commonsense, deps_.provider->sights(city), {},
                                           deps_.provider->city_info(city).center};
            std::vector<rec::ScoredItem> list;
            try {
                list = rec::recommend(ctx, model(), cfg_.recommend_k);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ModelFailure) throw;
                list = rec::recommend(ctx, fallback_, cfg_.recommend_k);
            }
            s.attractions = rec::start_session(s.user_id, s.trip_id, ctx, std::move(list));
            s.stage = Stage::recommended;
            persist(s);
        }
        nlohmann::json items = nlohmann::json::array();
        for (const auto& p : s.attractions->presented) items.push_back(scored_entry(p, s.attractions->items.at(p.item_ref)));
        out["items"] = items;
    } else {
        throw Error(ErrorCode::BadField, "unknown recommendation stage '" + std::string(stage) + "'");
    }
    return out;
}

void TripService::feedback(const std::string& trip_id, const ItemId& item, rec::Verdict verdict) {
    auto sl = slot(trip_id);
    std::lock_guard lock(sl->mu);
    TripSession& s = loaded(*sl, trip_id);
    if (s.stage != Stage::recommended && s.stage != Stage::feedback) conflict(s, "feedback");
    const auto ts = static_cast<std::int64_t>(s.attractions->feedback.size() + 1);
    rec::Feedback f{item, verdict, std::nullopt, ts};
    rec::ingest_feedback(*s.attractions, f);
    if (deps_.memory->active_scenario(s.user_id) != s.trip_id) deps_.memory->begin_scenario(s.user_id, s.trip_id);
    deps_.memory->append_short_term(s.user_id, f);
    s.stage = Stage::feedback;
    persist(s);
}

budget::BudgetPlan TripService::confirm_budget(const std::string& trip_id, const Money& confirmed) {
    auto sl = slot(trip_id);
    std::lock_guard lock(sl->mu);
    TripSession& s = loaded(*sl, trip_id);
    if (s.stage == Stage::created || s.stage == Stage::planned) conflict(s, "confirming the budget");
    ensure_flights(s);
    const auto soft = deps_.memory->retrieve_insights(s.user_id, &s.request).soft;
    s.budget = budget::allocate_budget(confirmed, s.request, s.flights->outbound.round_trip_price, budget_config(), soft);
    s.stage = Stage::budget_confirmed;
    persist(s);
    return *s.budget;
}

Itinerary TripService::plan(const std::string& trip_id) {
    auto sl = slot(trip_id);
    std::lock_guard lock(sl->mu);
    TripSession& s = loaded(*sl, trip_id);
    if (s.stage == Stage::planned && s.itinerary) return *s.itinerary;
    if (s.stage != Stage::budget_confirmed) conflict(s, "planning");
    const auto& r = s.request;
    const std::string city = city_key(r.destination);
    ensure_flights(s);

    // Liked attractions in presented order; without any like, everything not passed.
    std::vector<Attraction> chosen;
    const auto v = rec::verdicts(*s.attractions);
    for (bool want_liked : {true, false}) {
        for (const auto& p : s.attractions->presented) {
            auto it = v.find(p.item_ref);
            const bool liked = it != v.end() && it->second == rec::Verdict::like;
            const bool passed = it != v.end() && it->second == rec::Verdict::pass;
            if (want_liked ? liked : !passed) chosen.push_back(s.attractions->items.at(p.item_ref));
        }
        if (!chosen.empty()) break;
    }

    const auto hotels = deps_.provider->hotels({city, r.outbound_date, r.return_date});
    s.hotel = route::choose_hotel(hotels, s.budget->amount(budget::Category::accommodation));
    s.restaurants = deps_.provider->restaurants(city, "");

    const auto known = deps_.memory->retrieve_insights(s.user_id, &r);
    route::TripInputs in{r, chosen, *s.flights, s.hotel, s.restaurants, s.budget,
                         deps_.provider->city_info(city).center, s.trip_id};
    s.itinerary = route::plan_trip(in, route::apply_commonsense(cfg_.planner, known.commonsense, r));

    if (!s.attractions->feedback.empty()) {
        if (deps_.memory->active_scenario(s.user_id) == s.trip_id) {
            const auto ts = static_cast<std::int64_t>(s.attractions->feedback.size() + 1);
            for (auto& rec : rec::learn_insights(*s.attractions, model(), ts)) {
                deps_.memory->append_short_term(s.user_id, std::move(rec));
            }
            deps_.memory->consolidate(s.user_id, deps_.text_model ? memory::text_model_merger(deps_.text_model)
                                                                  : memory::concatenating_merger());
        }
    }
    s.stage = Stage::planned;
    persist(s);
    return *s.itinerary;
}

std::string TripService::export_plan(const std::string& trip_id, std::string_view format) {
    return export_session(session(trip_id), format);
}

std::string export_session(const TripSession& s, std::string_view format) {
    if (s.stage != Stage::planned || !s.itinerary || !s.flights) conflict(s, "exporting");
    if (format == "json") return nlohmann::json(*s.itinerary).dump(2);
    if (format != "markdown") throw Error(ErrorCode::BadField, "unknown export format '" + std::string(format) + "'");
    PlanDocument doc{s.request, *s.itinerary, *s.flights, s.hotel, {}, {}, s.budget};
    if (s.attractions) doc.attractions = s.attractions->items;
    for (const auto& rr : s.restaurants) doc.restaurants[rr.id] = rr;
    return render_markdown(doc);
}

TripService::BatchResult TripService::run_noninteractive(const nlohmann::json& form, std::string user_id,
                                                         std::optional<Money> confirmed) {
    const std::string id = create_trip(form, std::move(user_id));
    const auto recs = recommendations(id, "attractions");
    const TripSession s = session(id);
    const std::size_t n =
        static_cast<std::size_t>(std::max(0, cfg_.planner.attractions_per_day)) * static_cast<std::size_t>(s.request.days());
    const auto& presented = s.attractions->presented;
    for (std::size_t i = 0; i < presented.size() && i < n; ++i) feedback(id, presented[i].item_ref, rec::Verdict::like);
    if (!confirmed) {
        const auto b = recommendations(id, "budget");
        confirmed = parse_money(b.at("recommendation").at("recommended_fund").get<std::string>());
    }
    confirm_budget(id, *confirmed);
    return {id, plan(id)};
}

} // namespace travel::service
