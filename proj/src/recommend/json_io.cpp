#include "travel/recommend/json_io.hpp"

#include "travel/core/error.hpp"
#include "travel/domain/json_io.hpp"

namespace travel::rec {

std::string_view to_string(Verdict v) {
    return v == Verdict::like ? "like" : "pass";
}

Verdict parse_verdict(std::string_view text) {
    if (text == "like") return Verdict::like;
    if (text == "pass") return Verdict::pass;
    throw Error(ErrorCode::BadField, "unknown verdict '" + std::string(text) + "'");
}

void to_json(nlohmann::json& j, const ScoredItem& s) {
    j = nlohmann::json{{"item_ref", s.item_ref},
                       {"predicted_rating", s.predicted_rating},
                       {"reason", s.reason},
                       {"recommend_duration", s.recommend_duration},
                       {"recommend_window", s.recommend_window}};
}

void from_json(const nlohmann::json& j, ScoredItem& s) {
    s.item_ref = j.at("item_ref").get<std::string>();
    s.predicted_rating = j.at("predicted_rating").get<double>();
    s.reason = j.value("reason", "");
    s.recommend_duration = j.value("recommend_duration", 1.0);
    if (j.contains("recommend_window")) s.recommend_window = j.at("recommend_window").get<TimeWindow>();
}

void to_json(nlohmann::json& j, const Feedback& f) {
    j = nlohmann::json{{"item_ref", f.item_ref}, {"timestamp", f.timestamp}};
    if (f.verdict) j["verdict"] = to_string(*f.verdict);
    if (f.rating) j["rating"] = *f.rating;
}

void from_json(const nlohmann::json& j, Feedback& f) {
    f = Feedback{};
    f.item_ref = j.at("item_ref").get<std::string>();
    f.timestamp = j.value("timestamp", std::int64_t{0});
    if (auto it = j.find("verdict"); it != j.end() && !it->is_null()) f.verdict = parse_verdict(it->get<std::string>());
    if (auto it = j.find("rating"); it != j.end() && !it->is_null()) f.rating = it->get<int>();
}

void to_json(nlohmann::json& j, const Session& s) {
    nlohmann::json items = nlohmann::json::object();
    for (const auto& [id, a] : s.items) items[id] = a;
    j = nlohmann::json{{"user_id", s.user_id},     {"scenario_id", s.scenario_id}, {"request", s.request},
                       {"prior", s.prior},         {"presented", s.presented},     {"items", items},
                       {"feedback", s.feedback}};
}

void from_json(const nlohmann::json& j, Session& s) {
    s = Session{};
    s.user_id = j.at("user_id").get<std::string>();
    s.scenario_id = j.at("scenario_id").get<std::string>();
    s.request = j.at("request").get<TravelRequest>();
    s.prior = j.at("prior").get<SoftConstraintSet>();
    s.presented = j.at("presented").get<std::vector<ScoredItem>>();
    for (const auto& [id, a] : j.at("items").items()) s.items[id] = a.get<Attraction>();
    s.feedback = j.at("feedback").get<std::vector<Feedback>>();
}

} // namespace travel::rec
