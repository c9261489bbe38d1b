#include "oracles.hpp"
#include "support.hpp"

#include "travel/core/error.hpp"
#include "travel/core/text_model.hpp"
#include "travel/recommend/features.hpp"
#include "travel/recommend/json_io.hpp"
#include "travel/recommend/predict.hpp"
#include "travel/recommend/recommender.hpp"

#include <doctest.h>

#include <random>

using namespace travel;
using namespace travel::rec;

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

RecommendationContext shanghai_context() {
    RecommendationContext ctx;
    ctx.hard = support::form(0);
    ctx.candidates = support::catalog().find("shanghai")->sights;
    ctx.city_center = support::catalog().find("shanghai")->info.center;
    return ctx;
}

Attraction typed(std::string id, std::vector<std::string> types, std::int64_t fee) {
    Attraction a = support::attraction(std::move(id), 31.23, 121.47, 1, 9, 17);
    a.types = std::move(types);
    a.price_per_person = Money::from_cents(fee);
    return a;
}

// Replies with the same ratings list every time.
class ListModel final : public TextModel {
  public:
    explicit ListModel(std::string reply) : reply_(std::move(reply)) {}
    std::string complete(const std::string&) const override {
        ++calls;
        return reply_;
    }
    mutable int calls = 0;

  private:
    std::string reply_;
};

class FailingModel final : public PreferenceModel {
  public:
    std::vector<ScoredItem> score(const RecommendationContext&) const override {
        throw Error(ErrorCode::ModelFailure, "down");
    }
    std::vector<InsightRecord> learn(const FeedbackDigest&) const override {
        throw Error(ErrorCode::ModelFailure, "down");
    }
};

} // namespace

TEST_SUITE("recommend") {

TEST_CASE("hard constraints become tool queries") {
    const auto q = extract_hard_constraints(support::form(0));
    using tools::ToolKind;
    CHECK(q.at(ToolKind::flight).params.at("from") == "beijing");
    CHECK(q.at(ToolKind::flight).params.at("to") == "shanghai");
    CHECK(q.at(ToolKind::flight).params.at("outbound") == "2024-08-06");
    CHECK(q.at(ToolKind::flight).params.at("return") == "2024-08-09");
    CHECK(q.at(ToolKind::hotel).params.at("check_out") == "2024-08-09");
    CHECK(q.at(ToolKind::restaurant).params.at("cuisine") == "Chinese");
    CHECK(q.at(ToolKind::sight).params.at("children_ages") == "3");
    CHECK(q.at(ToolKind::tip).params.at("city") == "shanghai");
    // Every query is answerable by the fixtures.
    const auto p = support::provider();
    for (const auto& [kind, query] : q) CHECK_NOTHROW(tools::call_tool(query, *p));
}

TEST_CASE("recommend returns the top k by the scorer") {
    const auto ctx = shanghai_context();
    const DeterministicScorer scorer;
    CHECK(recommend(ctx, scorer, 0).empty());
    const auto top = recommend(ctx, scorer, 20);
    REQUIRE(top.size() == 20);
    CHECK(recommend(ctx, scorer, 100).size() == 30);

    // Brute force: rate every candidate, sort by the documented key.
    std::vector<std::tuple<double, double, double, std::string>> keys;
    for (const auto& a : ctx.candidates) {
        keys.emplace_back(-scorer.rate(a, ctx.hard, ctx.soft), -a.rating,
                          oracle::chord_distance_km(a.position, ctx.city_center), a.id);
    }
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
        if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
        if (std::abs(std::get<2>(x) - std::get<2>(y)) > 1e-9) return std::get<2>(x) < std::get<2>(y);
        return std::get<3>(x) < std::get<3>(y);
    });
    for (std::size_t i = 0; i < top.size(); ++i) {
        CHECK(top[i].item_ref == std::get<3>(keys[i]));
        CHECK(top[i].predicted_rating >= 1.0);
        CHECK(top[i].predicted_rating <= 5.0);
        CHECK_FALSE(top[i].reason.empty());
    }
    RecommendationContext empty = ctx;
    empty.candidates.clear();
    CHECK(code_of([&] { recommend(empty, scorer, 5); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("scorer features") {
    const TravelRequest hard = support::form(0);
    SoftConstraintSet low;
    low.spending_level = SpendingLevel::low;
    const Attraction free_garden = typed("g", {"Botanical garden"}, 0);
    const Attraction pricey_bar = typed("b", {"Night club"}, 4000);
    auto x = context_features(free_garden, hard, low);
    CHECK(x[2] == 1.0);
    x = context_features(pricey_bar, hard, low);
    CHECK(x[2] < 0.0);
    CHECK(squash_rating(0.0) == doctest::Approx(3.0));
    CHECK(squash_rating(100.0) == doctest::Approx(5.0));
    CHECK(squash_rating(-100.0) == doctest::Approx(1.0));
    low.attraction_preference = "quiet garden walks";
    CHECK(context_features(free_garden, hard, low)[4] == 1.0);
    const DeterministicScorer s;
    CHECK(s.rate(free_garden, hard, low) > s.rate(pricey_bar, hard, low));
}

TEST_CASE("feedback validation and verdicts") {
    const auto ctx = shanghai_context();
    const DeterministicScorer scorer;
    Session s = start_session("u", "s1", ctx, recommend(ctx, scorer, 20));
    CHECK(code_of([&] { ingest_feedback(s, {"nope", Verdict::like, std::nullopt, 0}); }) == ErrorCode::UnknownItem);
    CHECK(code_of([&] { ingest_feedback(s, {s.presented[0].item_ref, std::nullopt, std::nullopt, 0}); }) ==
          ErrorCode::InvalidValue);
    CHECK(code_of([&] { ingest_feedback(s, {s.presented[0].item_ref, std::nullopt, 6, 0}); }) ==
          ErrorCode::InvalidValue);
    CHECK(code_of([&] { rerank(s); }) == ErrorCode::PreconditionFailed);
    for (std::size_t i = 0; i < 20; ++i) {
        ingest_feedback(s, {s.presented[i].item_ref, i % 2 ? Verdict::pass : Verdict::like, std::nullopt,
                            static_cast<std::int64_t>(i)});
    }
    CHECK(s.feedback.size() == 20);
    // Last event wins, ratings map onto verdicts.
    ingest_feedback(s, {s.presented[0].item_ref, std::nullopt, 2, 21});
    ingest_feedback(s, {s.presented[1].item_ref, std::nullopt, 3, 22});
    const auto v = verdicts(s);
    CHECK(v.at(s.presented[0].item_ref) == Verdict::pass);
    CHECK_FALSE(v.contains(s.presented[1].item_ref));
    CHECK(v.at(s.presented[2].item_ref) == Verdict::like);
}

TEST_CASE("rerank against the partition oracle") {
    const auto ctx = shanghai_context();
    const DeterministicScorer scorer;
    const auto presented = recommend(ctx, scorer, 12);
    std::vector<std::string> order;
    for (const auto& p : presented) order.push_back(p.item_ref);
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        Session s = start_session("u", "s", ctx, presented);
        std::map<std::string, int> group;
        for (const auto& id : order) {
            const int g = pick(rng);
            if (g == 1) continue;
            group[id] = g;
            ingest_feedback(s, {id, g == 0 ? Verdict::like : Verdict::pass, std::nullopt, 0});
        }
        if (s.feedback.empty()) continue;
        std::vector<std::string> got;
        for (const auto& r : rerank(s)) got.push_back(r.item_ref);
        CHECK(got == oracle::partition(order, group));
    }
}

TEST_CASE("learning from liked free gardens") {
    RecommendationContext ctx;
    ctx.hard = support::form(0);
    ctx.candidates = {typed("1", {"Botanical garden"}, 0), typed("2", {"Garden", "Park"}, 0),
                      typed("3", {"Chinese garden"}, 0), typed("4", {"Museum"}, 3000),
                      typed("5", {"Shopping mall"}, 0)};
    const DeterministicScorer scorer;
    Session s = start_session("u", "s", ctx, recommend(ctx, scorer, 5));
    for (const char* id : {"1", "2", "3"}) ingest_feedback(s, {id, Verdict::like, std::nullopt, 0});
    for (const char* id : {"4", "5"}) ingest_feedback(s, {id, Verdict::pass, std::nullopt, 0});
    const auto out = learn_insights(s, scorer, 7);
    auto soft = std::find_if(out.begin(), out.end(), [](const InsightRecord& r) { return r.kind == InsightKind::soft; });
    REQUIRE(soft != out.end());
    CHECK(soft->structured.at(std::string(insight_keys::spending_level)) == "low");
    CHECK(soft->structured.at(std::string(insight_keys::top_categories)).rfind("garden", 0) == 0);
    CHECK(soft->structured.at(std::string(insight_keys::restaurant_preference)) == "Chinese");
    CHECK(soft->user_id == "u");
    CHECK(soft->created_at == 7);

    // A failing model falls back to the counts.
    const auto fb = learn_insights(s, FailingModel{}, 7);
    CHECK(fb == out);
}

TEST_CASE("ridge predictor matches the normal-equation oracle") {
    const auto sights = support::catalog().find("shanghai")->sights;
    std::mt19937_64 rng(13);
    std::normal_distribution<double> w(0.0, 1.0);
    std::vector<double> truth(kFeatureDim);
    for (auto& t : truth) t = w(rng);
    std::vector<RatedItem> data;
    std::vector<std::vector<double>> x;
    std::vector<double> y;
    for (const auto& a : sights) {
        const auto f = item_features(a);
        double r = 0;
        for (std::size_t i = 0; i < kFeatureDim; ++i) r += truth[i] * f[i];
        data.push_back({a, r});
        x.emplace_back(f.begin(), f.end());
        y.push_back(r);
    }
    const auto got = fit_ridge(data, 0.1);
    const auto want = oracle::ridge(x, y, 0.1);
    std::vector<double> pg, pw;
    for (const auto& a : sights) {
        pg.push_back(predict_linear(got, a));
        double s = 0;
        const auto f = item_features(a);
        for (std::size_t i = 0; i < kFeatureDim; ++i) s += want[i] * f[i];
        pw.push_back(s);
    }
    CHECK(oracle::mae(pg, pw) < 1e-6);

    // Through the scheme interface the ratings land within the tolerance of the truth.
    std::vector<RatedItem> history;
    std::vector<double> actual;
    for (const auto& d : data) {
        const double r = std::clamp(3.0 + d.rating, 1.0, 5.0);
        history.push_back({d.item, r});
        actual.push_back(r);
    }
    const auto pred = predict_ratings(history, nullptr, sights, Scheme::memory, {});
    CHECK(oracle::mae(pred, actual) < 0.3);
    CHECK(predict_ratings(history, nullptr, {}, Scheme::memory, {}).empty());
}

TEST_CASE("scheme preconditions and prior ratings") {
    const auto sights = support::catalog().find("shanghai")->sights;
    const std::vector<Attraction> few(sights.begin(), sights.begin() + 3);
    CHECK(code_of([&] { predict_ratings({}, nullptr, few, Scheme::direct, {}); }) == ErrorCode::PreconditionFailed);
    CHECK(code_of([&] { predict_ratings({}, nullptr, few, Scheme::decode_encode, {}); }) ==
          ErrorCode::PreconditionFailed);
    const auto prior = prior_ratings(few, support::form(0));
    REQUIRE(prior.size() == 3);
    for (double r : prior) {
        CHECK(r >= 1.0);
        CHECK(r <= 5.0);
    }
    std::vector<RatedItem> hist;
    for (const auto& a : sights) hist.push_back({a, a.rating});
    const UserProfile prof = decode_profile(hist, {});
    REQUIRE(prof.weights.has_value());
    CHECK_FALSE(prof.text.empty());
    CHECK(predict_ratings(hist, &prof, few, Scheme::decode_encode, {}).size() == 3);
    CHECK(predict_ratings(hist, nullptr, few, Scheme::direct, {}).size() == 3);
}

TEST_CASE("rating lists from model replies") {
    CHECK(parse_rating_list("[4, 3.5, 5]", 3) == std::vector<double>{4, 3.5, 5});
    CHECK(parse_rating_list("Ratings:\n1. 4\n2. 2\n", 2).size() == 2);
    CHECK(code_of([] { parse_rating_list("[1, 2]", 3); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("direct scheme through a recorded transcript") {
    const auto sights = support::catalog().find("shanghai")->sights;
    const std::vector<Attraction> items(sights.begin(), sights.begin() + 3);
    std::vector<RatedItem> hist;
    for (std::size_t i = 3; i < 8; ++i) hist.push_back({sights[i], 4.0});

    support::TempDir dir;
    const auto file = dir.path() / "t.jsonl";
    auto inner = std::make_shared<ListModel>("```json\n[5, 2, 4]\n```");
    PredictorOptions rec_opt;
    rec_opt.model = std::make_shared<RecordingTextModel>(inner, file);
    const auto live = predict_ratings(hist, nullptr, items, Scheme::direct, rec_opt);
    CHECK(live == std::vector<double>{5, 2, 4});
    CHECK(inner->calls == 1);

    const auto entries = read_transcript(file);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].prompt.find(sights[3].name) != std::string::npos);
    PredictorOptions replay_opt;
    replay_opt.model = std::make_shared<ReplayTextModel>(entries);
    CHECK(predict_ratings(hist, nullptr, items, Scheme::direct, replay_opt) == live);
    // One recorded answer per prompt; asking again exhausts it.
    CHECK(code_of([&] { predict_ratings(hist, nullptr, items, Scheme::direct, replay_opt); }) ==
          ErrorCode::ModelFailure);
}

TEST_CASE("a wrong-length reply is retried once") {
    const auto sights = support::catalog().find("shanghai")->sights;
    const std::vector<Attraction> items(sights.begin(), sights.begin() + 3);
    std::vector<RatedItem> hist{{sights[5], 4.0}};
    PredictorOptions opt;
    auto m = std::make_shared<ListModel>("[1, 2]");
    opt.model = m;
    CHECK(code_of([&] { predict_ratings(hist, nullptr, items, Scheme::direct, opt); }) == ErrorCode::LengthMismatch);
    CHECK(m->calls == 2);
}

TEST_CASE("session json round trip") {
    const auto ctx = shanghai_context();
    Session s = start_session("u", "s", ctx, recommend(ctx, DeterministicScorer{}, 5));
    ingest_feedback(s, {s.presented[0].item_ref, Verdict::like, std::nullopt, 3});
    ingest_feedback(s, {s.presented[1].item_ref, std::nullopt, 2, 4});
    const nlohmann::json j = s;
    CHECK(j.get<Session>() == s);
    CHECK(parse_verdict("like") == Verdict::like);
    CHECK(parse_verdict(to_string(Verdict::pass)) == Verdict::pass);
}

} // TEST_SUITE
