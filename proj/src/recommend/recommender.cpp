#include "travel/recommend/recommender.hpp"

#include "travel/core/assets.hpp"
#include "travel/core/error.hpp"
#include "travel/domain/json_io.hpp"
#include "travel/toolkit/geo_distance.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace travel::rec {
namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double price_norm(const Attraction& a) {
    return item_features(a)[feature::price];
}

std::string preference_text(const SoftConstraintSet& soft) {
    std::string text = soft.attraction_preference;
    if (auto it = soft.extra.find(std::string(insight_keys::top_categories)); it != soft.extra.end()) {
        text += " " + it->second;
    }
    return lower(text);
}

bool wants_family(const TravelRequest& hard, const SoftConstraintSet& soft) {
    return hard.has_children() || lower(soft.attraction_preference).find("family") != std::string::npos;
}

std::string party_text(const TravelRequest& r) {
    std::ostringstream out;
    out << r.adults_num << " adult(s)";
    if (r.children_num > 0) {
        out << ", " << r.children_num << " child(ren)";
        if (!r.children_ages.empty()) {
            out << " aged";
            for (int age : r.children_ages) out << ' ' << age;
        }
    }
    return out.str();
}

std::string types_text(const Attraction& a) {
    std::string out;
    for (const auto& t : a.types) {
        if (!out.empty()) out += ", ";
        out += t;
    }
    return out;
}

std::string item_list(const std::vector<Attraction>& items) {
    std::string out;
    for (const auto& a : items) {
        if (!out.empty()) out += "\n";
        out += "- " + a.name + " (" + types_text(a) + "; " + format_money(a.price_per_person) + ")";
    }
    return out.empty() ? "(none)" : out;
}

std::string rules_text(const CommonsenseRuleSet& rules) {
    std::string out;
    for (const auto& r : rules.rules()) {
        if (!out.empty()) out += " ";
        out += r.condition + ": " + r.effect + ".";
    }
    return out.empty() ? "none" : out;
}

std::string make_reason(const Attraction& a, const ContextVector& x) {
    std::vector<std::string> parts;
    if (x[4] > 0.0) parts.push_back("matches your interests");
    if (x[3] > 0.0) parts.push_back("suits families");
    if (x[2] > 0.0) parts.push_back("free entry");
    if (a.rating >= 4.5) parts.push_back("highly rated");
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ", ";
        out += p;
    }
    if (out.empty()) return a.recommend_reason.empty() ? "A well-known local sight." : a.recommend_reason;
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out + ".";
}

InsightRecord soft_record(const FeedbackDigest& d, std::map<std::string, std::string> structured, std::string narrative) {
    InsightRecord r;
    r.user_id = d.user_id;
    r.kind = InsightKind::soft;
    r.structured = std::move(structured);
    r.narrative = std::move(narrative);
    r.scenario_id = d.scenario_id;
    r.created_at = d.timestamp;
    return r;
}

InsightRecord commonsense_record(const FeedbackDigest& d, std::string id, std::string condition, std::string effect) {
    InsightRecord r;
    r.kind = InsightKind::commonsense;
    r.structured = {{"id", std::move(id)}, {"condition", condition}, {"effect", effect}};
    r.narrative = "If " + condition + ", " + effect + ".";
    r.scenario_id = d.scenario_id;
    r.created_at = d.timestamp;
    return r;
}

} // namespace

std::map<tools::ToolKind, tools::ToolQuery> extract_hard_constraints(const TravelRequest& r) {
    using tools::ToolKind;
    const std::string to = city_key(r.destination);
    const std::string from = city_key(r.departure);
    std::map<ToolKind, tools::ToolQuery> out;
    out[ToolKind::city] = {ToolKind::city, {{"city", to}}};
    out[ToolKind::flight] = {ToolKind::flight,
                             {{"from", from},
                              {"to", to},
                              {"outbound", format_date(r.outbound_date)},
                              {"return", format_date(r.return_date)},
                              {"passengers", std::to_string(r.party_size())}}};
    out[ToolKind::hotel] = {ToolKind::hotel,
                            {{"city", to},
                             {"check_in", format_date(r.outbound_date)},
                             {"check_out", format_date(r.return_date)},
                             {"guests", std::to_string(r.party_size())}}};
    tools::ToolQuery rest{ToolKind::restaurant, {{"city", to}}};
    if (!r.restaurant_preference.empty()) rest.params["cuisine"] = r.restaurant_preference;
    out[ToolKind::restaurant] = rest;
    tools::ToolQuery sight{ToolKind::sight, {{"city", to}}};
    if (r.has_children()) {
        std::string ages;
        for (int a : r.children_ages) ages += (ages.empty() ? "" : ",") + std::to_string(a);
        sight.params["children"] = std::to_string(r.children_num);
        if (!ages.empty()) sight.params["children_ages"] = ages;
    }
    out[ToolKind::sight] = sight;
    out[ToolKind::tip] = {ToolKind::tip, {{"city", to}}};
    return out;
}

ContextVector context_features(const Attraction& a, const TravelRequest& hard, const SoftConstraintSet& soft) {
    ContextVector x{};
    x[0] = 1.0;
    x[1] = a.rating - 4.0;
    const double p = price_norm(a);
    const auto level = soft.spending_level.value_or(SpendingLevel::mid);
    switch (level) {
    case SpendingLevel::low: x[2] = a.price_per_person.is_free() ? 1.0 : -p; break;
    case SpendingLevel::mid: x[2] = -0.5 * p; break;
    case SpendingLevel::high: x[2] = 0.0; break;
    }
    if (wants_family(hard, soft)) x[3] = is_family_friendly(a) ? 1.0 : (is_adult_oriented(a) ? -1.0 : 0.0);
    const std::string pref = preference_text(soft);
    if (!pref.empty()) {
        for (Category c : categories_of(a)) {
            if (pref.find(to_string(c)) != std::string::npos) {
                x[4] = 1.0;
                break;
            }
        }
    }
    return x;
}

double squash_rating(double z) {
    return std::clamp(1.0 + 4.0 / (1.0 + std::exp(-z)), 1.0, 5.0);
}

double DeterministicScorer::rate(const Attraction& a, const TravelRequest& hard, const SoftConstraintSet& soft) const {
    const auto x = context_features(a, hard, soft);
    double z = 0.0;
    for (std::size_t i = 0; i < kContextDim; ++i) z += weights_.w[i] * x[i];
    return squash_rating(z);
}

std::vector<ScoredItem> DeterministicScorer::score(const RecommendationContext& ctx) const {
    std::vector<ScoredItem> out;
    out.reserve(ctx.candidates.size());
    for (const auto& a : ctx.candidates) {
        const auto x = context_features(a, ctx.hard, ctx.soft);
        out.push_back({a.id, rate(a, ctx.hard, ctx.soft), make_reason(a, x), a.recommend_duration, a.recommend_window});
    }
    return out;
}

std::vector<InsightRecord> DeterministicScorer::learn(const FeedbackDigest& digest) const {
    return frequency_insights(digest);
}

std::vector<ScoredItem> LlmPreferenceModel::score(const RecommendationContext& ctx) const {
    std::string list;
    for (const auto& a : ctx.candidates) {
        std::ostringstream line;
        line << a.id << " | " << a.name << " | " << types_text(a) << " | " << format_money(a.price_per_person) << " | "
             << a.rating << "\n";
        list += line.str();
    }
    const std::string prompt = render_template(
        asset("prompts/recommend_attractions.txt"),
        {{"item_type", "attractions"},
         {"city", ctx.hard.destination},
         {"party", party_text(ctx.hard)},
         {"restaurant_preference", ctx.hard.restaurant_preference.empty() ? "none" : ctx.hard.restaurant_preference},
         {"soft_constraints", nlohmann::json(ctx.soft).dump()},
         {"commonsense", rules_text(ctx.commonsense)},
         {"candidate_list", list}});
    nlohmann::json reply;
    try {
        reply = nlohmann::json::parse(extract_json_block(model_->complete(prompt)));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ModelFailure, std::string("unparseable recommendation reply: ") + e.what());
    }
    if (!reply.is_array()) throw Error(ErrorCode::ModelFailure, "recommendation reply is not an array");
    std::map<std::string, const Attraction*> by_id;
    for (const auto& a : ctx.candidates) by_id[a.id] = &a;
    std::vector<ScoredItem> out;
    std::set<std::string> seen;
    try {
        for (const auto& e : reply) {
            const std::string id = e.at("id").is_string() ? e.at("id").get<std::string>() : e.at("id").dump();
            auto it = by_id.find(id);
            if (it == by_id.end() || !seen.insert(id).second) continue;
            const Attraction& a = *it->second;
            ScoredItem s{a.id, std::clamp(e.at("rating").get<double>(), 1.0, 5.0), e.value("reason", std::string()),
                         a.recommend_duration, a.recommend_window};
            if (e.contains("duration")) s.recommend_duration = e.at("duration").get<double>();
            if (e.contains("window")) {
                const auto& w = e.at("window");
                s.recommend_window = TimeWindow(w.at(0).get<double>(), w.at(1).get<double>());
            }
            if (!(s.recommend_duration > 0.0)) s.recommend_duration = a.recommend_duration;
            out.push_back(std::move(s));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ModelFailure, std::string("bad recommendation entry: ") + e.what());
    } catch (const Error& e) {
        throw Error(ErrorCode::ModelFailure, std::string("bad recommendation entry: ") + e.what());
    }
    if (out.size() != ctx.candidates.size()) {
        throw Error(ErrorCode::ModelFailure, "recommendation reply covers " + std::to_string(out.size()) + " of " +
                                                 std::to_string(ctx.candidates.size()) + " candidates");
    }
    return out;
}

std::vector<InsightRecord> LlmPreferenceModel::learn(const FeedbackDigest& digest) const {
    const std::string prompt = render_template(asset("prompts/learn_insights.txt"),
                                               {{"item_type", "attractions"},
                                                {"city", digest.request.destination},
                                                {"liked", item_list(digest.liked)},
                                                {"passed", item_list(digest.passed)},
                                                {"soft_constraints", nlohmann::json(digest.prior).dump()}});
    std::vector<InsightRecord> out;
    try {
        const auto j = nlohmann::json::parse(extract_json_block(model_->complete(prompt)));
        const std::string level = j.at(std::string(insight_keys::spending_level)).get<std::string>();
        if (!parse_spending_level(level)) throw Error(ErrorCode::ModelFailure, "bad spending level '" + level + "'");
        std::map<std::string, std::string> structured{{std::string(insight_keys::spending_level), level}};
        for (auto key : {insight_keys::attraction_preference, insight_keys::restaurant_preference}) {
            if (j.contains(key) && j.at(key).is_string()) structured[std::string(key)] = j.at(key).get<std::string>();
        }
        std::string narrative = "Spending level " + level + ".";
        if (structured.contains(std::string(insight_keys::attraction_preference))) {
            narrative += " " + structured[std::string(insight_keys::attraction_preference)];
        }
        out.push_back(soft_record(digest, std::move(structured), std::move(narrative)));
        if (j.contains("commonsense")) {
            for (const auto& c : j.at("commonsense")) {
                out.push_back(commonsense_record(digest, c.at("id").get<std::string>(),
                                                 c.at("condition").get<std::string>(),
                                                 c.at("effect").get<std::string>()));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ModelFailure, std::string("unparseable insight reply: ") + e.what());
    }
    return out;
}

std::vector<ScoredItem> recommend(const RecommendationContext& ctx, const PreferenceModel& model, std::size_t k) {
    if (k == 0) return {};
    if (ctx.candidates.empty()) throw Error(ErrorCode::PreconditionFailed, "no candidates to score");
    std::map<std::string, const Attraction*> by_id;
    for (const auto& a : ctx.candidates) by_id[a.id] = &a;
    auto scored = model.score(ctx);
    for (auto& s : scored) {
        if (!by_id.contains(s.item_ref)) throw Error(ErrorCode::UnknownItem, "model scored unknown item " + s.item_ref);
        s.predicted_rating = std::clamp(s.predicted_rating, 1.0, 5.0);
    }
    auto key = [&](const ScoredItem& s) {
        const Attraction& a = *by_id.at(s.item_ref);
        return std::make_tuple(-s.predicted_rating, -a.rating, tools::distance_km(a.position, ctx.city_center),
                               std::cref(a.id));
    };
    std::sort(scored.begin(), scored.end(), [&](const ScoredItem& a, const ScoredItem& b) { return key(a) < key(b); });
    if (scored.size() > k) scored.resize(k);
    return scored;
}

Session start_session(std::string user_id, std::string scenario_id, const RecommendationContext& ctx,
                      std::vector<ScoredItem> presented) {
    Session s;
    s.user_id = std::move(user_id);
    s.scenario_id = std::move(scenario_id);
    s.request = ctx.hard;
    s.prior = ctx.soft;
    for (const auto& p : presented) {
        auto it = std::find_if(ctx.candidates.begin(), ctx.candidates.end(),
                               [&](const Attraction& a) { return a.id == p.item_ref; });
        if (it == ctx.candidates.end()) throw Error(ErrorCode::UnknownItem, "presented item " + p.item_ref);
        s.items[it->id] = *it;
    }
    s.presented = std::move(presented);
    return s;
}

void ingest_feedback(Session& s, Feedback f) {
    if (f.verdict.has_value() == f.rating.has_value()) {
        throw Error(ErrorCode::InvalidValue, "feedback needs exactly one of verdict or rating");
    }
    if (f.rating && (*f.rating < 1 || *f.rating > 5)) {
        throw Error(ErrorCode::InvalidValue, "rating " + std::to_string(*f.rating) + " outside 1..5");
    }
    const bool known = std::any_of(s.presented.begin(), s.presented.end(),
                                   [&](const ScoredItem& p) { return p.item_ref == f.item_ref; });
    if (!known) throw Error(ErrorCode::UnknownItem, "item " + f.item_ref + " was not presented");
    s.feedback.push_back(std::move(f));
}

std::map<ItemId, Verdict> verdicts(const Session& s) {
    std::map<ItemId, Verdict> out;
    for (const auto& f : s.feedback) {
        if (f.verdict) {
            out[f.item_ref] = *f.verdict;
        } else if (*f.rating >= 4) {
            out[f.item_ref] = Verdict::like;
        } else if (*f.rating <= 2) {
            out[f.item_ref] = Verdict::pass;
        } else {
            out.erase(f.item_ref);
        }
    }
    return out;
}

std::vector<ScoredItem> rerank(const Session& s) {
    if (s.feedback.empty()) throw Error(ErrorCode::PreconditionFailed, "rerank needs at least one feedback event");
    const auto v = verdicts(s);
    auto rank = [&](const ScoredItem& item) {
        auto it = v.find(item.item_ref);
        if (it == v.end()) return 1;
        return it->second == Verdict::like ? 0 : 2;
    };
    auto out = s.presented;
    std::stable_sort(out.begin(), out.end(), [&](const ScoredItem& a, const ScoredItem& b) { return rank(a) < rank(b); });
    return out;
}

std::vector<std::pair<Category, int>> category_counts(const std::vector<Attraction>& items) {
    std::map<Category, int> counts;
    for (const auto& a : items) {
        for (Category c : categories_of(a)) ++counts[c];
    }
    std::vector<std::pair<Category, int>> out(counts.begin(), counts.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return to_string(a.first) < to_string(b.first);
    });
    return out;
}

std::vector<InsightRecord> frequency_insights(const FeedbackDigest& d) {
    std::map<std::string, std::string> structured;
    std::string narrative;
    SpendingLevel level = d.prior.spending_level.value_or(SpendingLevel::mid);
    if (!d.liked.empty()) {
        const auto free = std::count_if(d.liked.begin(), d.liked.end(),
                                        [](const Attraction& a) { return a.price_per_person.is_free(); });
        std::int64_t paid_sum = 0;
        for (const auto& a : d.liked) paid_sum += a.price_per_person.cents;
        const auto paid = static_cast<std::int64_t>(d.liked.size()) - free;
        if (free * 5 >= static_cast<std::int64_t>(d.liked.size()) * 3) {
            level = SpendingLevel::low;
        } else if (paid > 0 && paid_sum > paid * 2000) {
            level = SpendingLevel::high;
        } else {
            level = SpendingLevel::mid;
        }
        std::ostringstream n;
        n << "Liked " << d.liked.size() << " of " << d.liked.size() + d.passed.size() << " rated attractions, " << free
          << " of them free.";
        narrative = n.str();
    } else {
        narrative = "Passed on every attraction shown.";
    }
    structured[std::string(insight_keys::spending_level)] = std::string(to_string(level));

    const auto counts = category_counts(d.liked);
    std::string top;
    for (std::size_t i = 0; i < counts.size() && i < 3; ++i) {
        if (!top.empty()) top += ", ";
        top += std::string(to_string(counts[i].first));
    }
    if (!top.empty()) {
        structured[std::string(insight_keys::top_categories)] = top;
        std::string pref = "Enjoys " + top;
        if (level == SpendingLevel::low) pref += ", preferably free";
        if (d.request.has_children()) pref += "; travels as a family";
        structured[std::string(insight_keys::attraction_preference)] = pref;
        narrative += " Favourite kinds: " + top + ".";
    } else if (!d.prior.attraction_preference.empty()) {
        structured[std::string(insight_keys::attraction_preference)] = d.prior.attraction_preference;
    }
    const std::string cuisine =
        !d.request.restaurant_preference.empty() ? d.request.restaurant_preference : d.prior.restaurant_preference;
    if (!cuisine.empty()) structured[std::string(insight_keys::restaurant_preference)] = cuisine;

    std::vector<InsightRecord> out{soft_record(d, std::move(structured), std::move(narrative))};
    if (level == SpendingLevel::low && d.request.has_children()) {
        out.push_back(commonsense_record(d, "low-spending-family", "spending is low and children are travelling",
                                         "favour free, family-friendly sights"));
    }
    return out;
}

std::vector<InsightRecord> learn_insights(const Session& s, const PreferenceModel& model, std::int64_t timestamp) {
    if (s.feedback.empty()) throw Error(ErrorCode::PreconditionFailed, "no feedback to learn from");
    FeedbackDigest d{s.user_id, s.scenario_id, s.request, s.prior, {}, {}, timestamp};
    const auto v = verdicts(s);
    for (const auto& p : s.presented) {
        auto it = v.find(p.item_ref);
        if (it == v.end()) continue;
        (it->second == Verdict::like ? d.liked : d.passed).push_back(s.items.at(p.item_ref));
    }
    std::vector<InsightRecord> out;
    try {
        out = model.learn(d);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ModelFailure) throw;
        out.clear();
    }
    const bool has_soft =
        std::any_of(out.begin(), out.end(), [](const InsightRecord& r) { return r.kind == InsightKind::soft; });
    if (!has_soft) {
        auto fallback = frequency_insights(d);
        out.insert(out.end(), fallback.begin(), fallback.end());
    }
    for (auto& r : out) {
        r.scenario_id = s.scenario_id;
        r.user_id = r.kind == InsightKind::soft ? s.user_id : std::string();
        r.created_at = timestamp;
    }
    return out;
}

} // namespace travel::rec
