#pragma once

#include "travel/budget/budget.hpp"
#include "travel/route/planner.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace travel::service {

enum class ModelAdapter { deterministic, http, replay };

struct ModelConfig {
    ModelAdapter adapter = ModelAdapter::deterministic;
    std::string endpoint;                           // OpenAI-style chat completions URL
    std::string model = "gpt-4o-mini";
    std::string api_key_env = "TRAVEL_MODEL_API_KEY"; // credentials are read from this variable only
    std::filesystem::path transcript;               // record (http) or replay source
    int timeout_seconds = 60;
};

struct ServiceConfig {
    std::filesystem::path fixtures = "data/fixtures";
    std::filesystem::path state_dir = "var/state";
    route::PlannerConfig planner;
    budget::BudgetConfig budget;
    int low_spending_points = 0; // share shift for low spenders; 0 disables
    std::size_t recommend_k = 20;
    ModelConfig model;
    std::string host = "127.0.0.1";
    int port = 8080;
};

// "key = value" lines; '#' starts a comment. Unknown keys and bad values
// throw BadField naming the line.
ServiceConfig parse_config(std::string_view text, ServiceConfig base = {});
ServiceConfig load_config(const std::filesystem::path& file, ServiceConfig base = {});

// Every recognised key with a one-line description, for --help output.
const std::map<std::string, std::string>& config_keys();

} // namespace travel::service
