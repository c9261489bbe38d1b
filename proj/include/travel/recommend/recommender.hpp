#pragma once

#include "travel/core/text_model.hpp"
#include "travel/domain/catalog_items.hpp"
#include "travel/domain/constraints.hpp"
#include "travel/domain/insight.hpp"
#include "travel/domain/request.hpp"
#include "travel/recommend/features.hpp"
#include "travel/toolkit/tools.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace travel::rec {

// Step A: per-tool query parameters derived from the hard constraints.
std::map<tools::ToolKind, tools::ToolQuery> extract_hard_constraints(const TravelRequest& r);

struct RecommendationContext {
    TravelRequest hard;
    SoftConstraintSet soft;
    CommonsenseRuleSet commonsense;
    std::vector<Attraction> candidates;
    std::string generalized_notes;
    GeoPoint city_center;
};

struct ScoredItem {
    ItemId item_ref;
    double predicted_rating = 1.0;
    std::string reason;
    Hours recommend_duration = 1.0;
    TimeWindow recommend_window;

    bool operator==(const ScoredItem&) const = default;
};

// What the learning step sees: the presented items split by verdict.
struct FeedbackDigest {
    std::string user_id;
    std::string scenario_id;
    TravelRequest request;
    SoftConstraintSet prior;
    std::vector<Attraction> liked;
    std::vector<Attraction> passed;
    std::int64_t timestamp = 0;
};

class PreferenceModel {
  public:
    virtual ~PreferenceModel() = default;
    // One entry per candidate, any order. Throws ModelFailure.
    virtual std::vector<ScoredItem> score(const RecommendationContext& ctx) const = 0;
    // Insight records for the digest. Throws ModelFailure.
    virtual std::vector<InsightRecord> learn(const FeedbackDigest& digest) const = 0;
};

// Context features of the pure scorer:
//   0 bias, 1 catalog rating - 4, 2 spending match, 3 family match,
//   4 category match.
inline constexpr std::size_t kContextDim = 5;
using ContextVector = std::array<double, kContextDim>;

struct ScorerWeights {
    ContextVector w = {0.0, 1.5, 1.0, 1.0, 0.8};
};

// spending match: low -> +1 for free, -price otherwise; mid/unknown -> -price/2; high -> 0.
// family match: when the party has children or the preference text mentions
// families, +1 for family-friendly and -1 for adult-oriented items.
// category match: 1 when any of the item's categories is named in the
// preference text or the learned top categories.
ContextVector context_features(const Attraction& a, const TravelRequest& hard, const SoftConstraintSet& soft);

// clamp(1 + 4 * sigmoid(w . x), 1, 5)
double squash_rating(double z);

// Pure stand-in for the language model. Learning uses frequency_insights.
class DeterministicScorer final : public PreferenceModel {
  public:
    explicit DeterministicScorer(ScorerWeights weights = {}) : weights_(weights) {}

    [[nodiscard]] double rate(const Attraction& a, const TravelRequest& hard, const SoftConstraintSet& soft) const;
    std::vector<ScoredItem> score(const RecommendationContext& ctx) const override;
    std::vector<InsightRecord> learn(const FeedbackDigest& digest) const override;

  private:
    ScorerWeights weights_;
};

// Prompts a text model with the bundled templates and parses JSON replies.
class LlmPreferenceModel final : public PreferenceModel {
  public:
    explicit LlmPreferenceModel(std::shared_ptr<const TextModel> model) : model_(std::move(model)) {}

    std::vector<ScoredItem> score(const RecommendationContext& ctx) const override;
    std::vector<InsightRecord> learn(const FeedbackDigest& digest) const override;

  private:
    std::shared_ptr<const TextModel> model_;
};

// Step D. Sorted by predicted rating, then catalog rating, then distance to
// the city centre, then id. Throws PreconditionFailed on empty candidates.
std::vector<ScoredItem> recommend(const RecommendationContext& ctx, const PreferenceModel& model, std::size_t k);

enum class Verdict { like, pass };

struct Feedback {
    ItemId item_ref;
    std::optional<Verdict> verdict;
    std::optional<int> rating; // 1..5
    std::int64_t timestamp = 0;

    bool operator==(const Feedback&) const = default;
};

// One recommendation round for one user and scenario.
struct Session {
    std::string user_id;
    std::string scenario_id;
    TravelRequest request;
    SoftConstraintSet prior;
    std::vector<ScoredItem> presented;
    std::map<ItemId, Attraction> items;
    std::vector<Feedback> feedback; // short-term memory

    bool operator==(const Session&) const = default;
};

Session start_session(std::string user_id, std::string scenario_id, const RecommendationContext& ctx,
                      std::vector<ScoredItem> presented);

// Step E. Throws UnknownItem, InvalidValue (neither or both of verdict and
// rating, or rating outside 1..5).
void ingest_feedback(Session& s, Feedback f);

// Effective verdict per item (last event wins; ratings >= 4 like, <= 2 pass).
std::map<ItemId, Verdict> verdicts(const Session& s);

// Step F: liked items, then items without a verdict, then passed items, each
// group in presented order. Throws PreconditionFailed without feedback.
std::vector<ScoredItem> rerank(const Session& s);

// Step G. Falls back to frequency_insights when the model fails.
// Throws PreconditionFailed without feedback.
std::vector<InsightRecord> learn_insights(const Session& s, const PreferenceModel& model, std::int64_t timestamp = 0);

// Counts over liked items: spending level, top categories, cuisine.
std::vector<InsightRecord> frequency_insights(const FeedbackDigest& digest);

// Liked categories ordered by count (desc), then name.
std::vector<std::pair<Category, int>> category_counts(const std::vector<Attraction>& items);

} // namespace travel::rec
