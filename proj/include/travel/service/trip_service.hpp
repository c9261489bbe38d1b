#pragma once

#include "travel/budget/budget.hpp"
#include "travel/core/error.hpp"
#include "travel/memory/memory_store.hpp"
#include "travel/recommend/recommender.hpp"
#include "travel/route/planner.hpp"
#include "travel/service/config.hpp"
#include "travel/toolkit/tools.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace travel::service {

enum class Stage { created, recommended, feedback, budget_confirmed, planned };

std::string_view to_string(Stage s);
Stage parse_stage(std::string_view text);

struct TripSession {
    std::string trip_id;
    std::string user_id;
    TravelRequest request;
    Stage stage = Stage::created;
    std::optional<rec::Session> attractions; // presented list plus feedback
    std::optional<route::FlightPair> flights;
    std::optional<Hotel> hotel;
    std::vector<Restaurant> restaurants;
    std::optional<budget::BudgetRecommendation> budget_recommendation;
    std::optional<budget::BudgetPlan> budget;
    std::optional<Itinerary> itinerary;

    bool operator==(const TripSession&) const = default;
};

// Form rejected by validation; carries every violation.
class RequestRejected : public Error {
  public:
    RequestRejected(std::vector<Violation> violations, const std::string& message);
    [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

  private:
    std::vector<Violation> violations_;
};

struct ServiceDeps {
    std::shared_ptr<const tools::DataProvider> provider;
    std::shared_ptr<memory::DocumentStore> documents; // sessions live here as "trip-..." documents
    std::shared_ptr<memory::MemoryStore> memory;
    std::shared_ptr<const rec::PreferenceModel> model; // deterministic scorer when null
    std::shared_ptr<const TextModel> text_model;       // optional, for budget estimates and narratives
};

// The interactive workflow over library calls. Stage order:
// created -> recommended -> feedback -> budget_confirmed -> planned.
// Calls out of order throw StageConflict. Sessions are written through to
// the document store after every change.
class TripService {
  public:
    TripService(ServiceDeps deps, ServiceConfig cfg);

    // Parses and validates the form. Throws RequestRejected or the form
    // parser's errors. The user id defaults to the form's user name.
    std::string create_trip(const nlohmann::json& form, std::string user_id = {});

    // stage: flights | hotel | attractions | restaurants | budget. The first
    // attractions call moves the trip to "recommended"; later calls return
    // the same list.
    nlohmann::json recommendations(const std::string& trip_id, std::string_view stage);

    void feedback(const std::string& trip_id, const ItemId& item, rec::Verdict verdict);
    budget::BudgetPlan confirm_budget(const std::string& trip_id, const Money& confirmed);
    Itinerary plan(const std::string& trip_id);
    // format: markdown | json
    std::string export_plan(const std::string& trip_id, std::string_view format);

    // Throws NotFound.
    TripSession session(const std::string& trip_id) const;
    std::vector<std::string> trip_ids() const;

    struct BatchResult {
        std::string trip_id;
        Itinerary itinerary;
    };

    // Non-interactive path: recommend, like the top attractions_per_day x
    // days items, confirm the recommended budget (or `confirmed`), plan.
    BatchResult run_noninteractive(const nlohmann::json& form, std::string user_id = {},
                                   std::optional<Money> confirmed = std::nullopt);

    [[nodiscard]] const ServiceConfig& config() const noexcept { return cfg_; }

  private:
    struct Slot {
        std::mutex mu;
        std::optional<TripSession> session;
    };

    std::shared_ptr<Slot> slot(const std::string& trip_id) const;
    TripSession& loaded(Slot& s, const std::string& trip_id) const;
    void persist(const TripSession& s) const;
    const rec::PreferenceModel& model() const;
    budget::BudgetConfig budget_config() const;
    void ensure_flights(TripSession& s) const;

    ServiceDeps deps_;
    ServiceConfig cfg_;
    rec::DeterministicScorer fallback_;
    mutable std::mutex slots_mu_;
    mutable std::map<std::string, std::shared_ptr<Slot>> slots_;
    std::mutex create_mu_;
};

// Renders a planned session (markdown | json). Throws StageConflict, BadField.
std::string export_session(const TripSession& s, std::string_view format);

nlohmann::json session_to_json(const TripSession& s);
TripSession session_from_json(const nlohmann::json& j);

} // namespace travel::service

namespace travel::budget {
void to_json(nlohmann::json& j, const BudgetPlan& p);
void from_json(const nlohmann::json& j, BudgetPlan& p);
void to_json(nlohmann::json& j, const BudgetRecommendation& r);
void from_json(const nlohmann::json& j, BudgetRecommendation& r);
} // namespace travel::budget
