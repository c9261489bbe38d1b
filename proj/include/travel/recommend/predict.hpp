#pragma once

#include "travel/core/text_model.hpp"
#include "travel/domain/catalog_items.hpp"
#include "travel/domain/constraints.hpp"
#include "travel/domain/request.hpp"
#include "travel/recommend/features.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace travel::rec {

enum class Scheme { memory, direct, decode_encode };

std::string_view to_string(Scheme s);
Scheme parse_scheme(std::string_view text);

struct RatedItem {
    Attraction item;
    double rating = 3.0;
};

// Decoded once from a batch of ratings. `weights` is set by the offline
// decoder; `text` by the text-model decoder.
struct UserProfile {
    std::string text;
    std::optional<FeatureVector> weights;
};

struct PredictorOptions {
    // When set, the prompt templates are used instead of the offline stand-ins.
    std::shared_ptr<const TextModel> model;
    double ridge_lambda = 0.1;
    std::size_t knn_window = 20; // most recent behaviours consulted
    std::size_t knn_k = 5;
    // Context for the memory scheme when no ratings are supplied.
    TravelRequest hard;
    SoftConstraintSet soft;
};

// Least-squares weights over item_features with an L2 penalty on every
// component except the bias. Targets are used as given.
FeatureVector fit_ridge(const std::vector<RatedItem>& data, double lambda);
double predict_linear(const FeatureVector& w, const Attraction& a);

// Mean rating of the k nearest (feature distance) of the last `window`
// behaviours, inverse-distance weighted.
double predict_knn(const std::vector<RatedItem>& history, const Attraction& a, std::size_t window, std::size_t k);

// Rating-predictor stand-ins:
//   memory         ridge fit over every observed rating; with no ratings,
//                  the deterministic scorer over the learned soft insights
//   direct         nearest neighbours among recent behaviours (prompt:
//                  direct_predict)
//   decode_encode  the decoded profile, averaged with the neighbour
//                  estimate when behaviours are supplied (prompts:
//                  profile_encode_*)
// Output is order-aligned with `items` and clamped to [1, 5]. Throws
// PreconditionFailed (direct without history, decode_encode without
// profile) and LengthMismatch (model reply of the wrong length, after one retry).
std::vector<double> predict_ratings(const std::vector<RatedItem>& history, const UserProfile* profile,
                                    const std::vector<Attraction>& items, Scheme scheme, const PredictorOptions& opt);

// Ratings from general knowledge only: the deterministic scorer with no
// learned preferences.
std::vector<double> prior_ratings(const std::vector<Attraction>& items, const TravelRequest& hard);

// Summarizes a rated batch into a profile (prompt: profile_decode).
UserProfile decode_profile(const std::vector<RatedItem>& batch, const PredictorOptions& opt);

// Pulls n ratings from model output: a JSON array of numbers or, failing
// that, the numbers in the text. Throws LengthMismatch.
std::vector<double> parse_rating_list(std::string_view reply, std::size_t n);

} // namespace travel::rec
