#pragma once

#include "travel/domain/request.hpp"
#include "travel/recommend/features.hpp"
#include "travel/recommend/predict.hpp"
#include "travel/toolkit/catalog.hpp"

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace travel::eval {

struct SimulatedUser {
    std::string id;
    rec::FeatureVector preference_weights{};
    double noise_std = 0.0;
    std::uint64_t seed = 0;
};

// Throws InvalidValue on non-finite weights or negative noise.
void validate(const SimulatedUser& u);

// n users with weights drawn from N(0, weight_scale) (the bias from
// N(0, weight_scale / 2)), each with its own seed derived from `seed`.
std::vector<SimulatedUser> make_users(std::size_t n, std::uint64_t seed, double noise_std = 0.0,
                                      double weight_scale = 1.5);

// round(clamp(1 + 4 sigmoid(w . phi(item)) + noise, 1, 5)). Noise is drawn
// from `rng` only when noise_std > 0.
int simulate_rating(const SimulatedUser& u, const Attraction& item, std::mt19937_64& rng);

// A user's private rating stream, seeded from the user.
class RatingStream {
  public:
    explicit RatingStream(SimulatedUser u);
    int rate(const Attraction& item);
    [[nodiscard]] const SimulatedUser& user() const noexcept { return user_; }

  private:
    SimulatedUser user_;
    std::mt19937_64 rng_;
};

struct Method {
    rec::Scheme scheme = rec::Scheme::memory;
    bool with_history = true;

    bool operator==(const Method&) const = default;
};

// "memory/with_history"
std::string to_string(const Method& m);
Method parse_method(std::string_view text);
// All six scheme/history combinations.
std::vector<Method> all_methods();

struct Scenario {
    std::string id;
    TravelRequest request;
    std::vector<Attraction> candidates;
    GeoPoint city_center;
};

// One scenario per form whose destination has a fixture pack, in form order,
// at most `count`. Throws FixtureMissing when fewer are available.
std::vector<Scenario> build_scenarios(const std::vector<TravelRequest>& forms, const tools::Catalog& catalog,
                                      std::size_t count);
// Throws FixtureMissing.
Scenario scenario_for(const TravelRequest& form, const tools::Catalog& catalog);

struct EvalConfig {
    std::size_t users = 100;
    std::size_t scenarios = 10;
    std::size_t k = 20;
    std::uint64_t seed = 42;
    double noise_std = 0.0;
    double weight_scale = 1.5;
    bool shuffle_scenarios = true; // per-user scenario order
    std::vector<Method> methods = all_methods();
    rec::PredictorOptions predictor;
};

struct EvalRun {
    Method method;
    // Per interaction index (0-based), aggregated over users.
    std::vector<double> mae;
    std::vector<double> rmse;
    std::vector<double> abs_sum;
    std::vector<double> sq_sum;
    std::vector<std::size_t> count;
    EvalConfig config;
};

struct WindowStats {
    double mae = 0.0;
    double rmse = 0.0;
};

// Interactions first..last, 1-based and inclusive. Throws EmptySeries.
WindowStats window(const EvalRun& run, std::size_t first, std::size_t last);

// For every user and scenario: recommend k items, predict them with every
// method, observe the simulated ratings, then update each method's memory.
// Throws FixtureMissing (via scenarios), InvalidValue.
std::vector<EvalRun> run_stream(const std::vector<SimulatedUser>& users, const std::vector<Scenario>& scenarios,
                                const EvalConfig& cfg);

// Throws EmptySeries on empty input and InvalidValue on unequal lengths.
double compute_mae(const std::vector<double>& pred, const std::vector<double>& actual);
double compute_rmse(const std::vector<double>& pred, const std::vector<double>& actual);

// Trailing mean over up to `window` interactions, from the summed errors.
std::vector<WindowStats> smoothed(const EvalRun& run, std::size_t window = 10);

// method,interaction_index,mae,rmse with 1-based indices and window-smoothed
// values.
void write_series_csv(const std::vector<EvalRun>& runs, const std::filesystem::path& file, std::size_t window = 10);
std::string series_csv(const std::vector<EvalRun>& runs, std::size_t window = 10);

struct SeriesRow {
    std::string method;
    std::size_t interaction_index = 0;
    double mae = 0.0;
    double rmse = 0.0;
};

std::vector<SeriesRow> read_series_csv(const std::filesystem::path& file);

// One row per method: first and last 10-interaction windows plus overall.
std::string summary_table(const std::vector<EvalRun>& runs);

// Two-panel (MAE, RMSE) line chart.
std::string render_svg(const std::vector<SeriesRow>& rows);

} // namespace travel::eval
