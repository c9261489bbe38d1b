#include "travel/service/config.hpp"

#include "travel/core/error.hpp"
#include "travel/domain/money.hpp"

#include <fstream>
#include <sstream>

namespace travel::service {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& v) {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
}

int to_int(const std::string& v) {
    std::size_t used = 0;
    const int i = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return i;
}

bool to_bool(const std::string& v) {
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw std::invalid_argument(v);
}

// "11-13" or "none"
std::optional<TimeWindow> to_window(const std::string& v) {
    if (v == "none") return std::nullopt;
    const auto dash = v.find('-');
    if (dash == std::string::npos) throw std::invalid_argument(v);
    return TimeWindow(to_double(trim(v.substr(0, dash))), to_double(trim(v.substr(dash + 1))));
}

budget::Shares to_shares(const std::string& v) {
    std::vector<int> parts;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(to_int(trim(item)));
    if (parts.size() != 6) throw std::invalid_argument(v);
    return budget::Shares{parts[0], parts[1], parts[2], parts[3], parts[4], parts[5]};
}

ModelAdapter to_adapter(const std::string& v) {
    if (v == "deterministic") return ModelAdapter::deterministic;
    if (v == "http") return ModelAdapter::http;
    if (v == "replay") return ModelAdapter::replay;
    throw std::invalid_argument(v);
}

using Setter = void (*)(ServiceConfig&, const std::string&);

struct Key {
    const char* help;
    Setter set;
};

const std::map<std::string, Key>& table() {
    static const std::map<std::string, Key> keys = {
        {"fixtures", {"directory of city fixture packs", [](ServiceConfig& c, const std::string& v) { c.fixtures = v; }}},
        {"state_dir",
         {"directory for memory and session documents", [](ServiceConfig& c, const std::string& v) { c.state_dir = v; }}},
        {"planner.travel_speed_kmh",
         {"walking/transit speed used for travel times",
          [](ServiceConfig& c, const std::string& v) { c.planner.travel_speed_kmh = to_double(v); }}},
        {"planner.day_start", {"hour sightseeing starts", [](ServiceConfig& c, const std::string& v) { c.planner.day_start = to_double(v); }}},
        {"planner.day_end", {"hour everyone is back at the hotel", [](ServiceConfig& c, const std::string& v) { c.planner.day_end = to_double(v); }}},
        {"planner.lunch_window", {"lunch start window, e.g. 11-13, or none", [](ServiceConfig& c, const std::string& v) { c.planner.lunch_window = to_window(v); }}},
        {"planner.dinner_window", {"dinner start window, e.g. 16-18, or none", [](ServiceConfig& c, const std::string& v) { c.planner.dinner_window = to_window(v); }}},
        {"planner.meal_duration", {"hours per meal", [](ServiceConfig& c, const std::string& v) { c.planner.meal_duration = to_double(v); }}},
        {"planner.meal_start_slack", {"latest meal start after its window opens when visits come first", [](ServiceConfig& c, const std::string& v) { c.planner.meal_start_slack = to_double(v); }}},
        {"planner.restaurant_search_radius_km",
         {"how far to look for a restaurant", [](ServiceConfig& c, const std::string& v) { c.planner.restaurant_search_radius_km = to_double(v); }}},
        {"planner.airport_transfer", {"hours between airport and hotel", [](ServiceConfig& c, const std::string& v) { c.planner.airport_transfer = to_double(v); }}},
        {"planner.require_window_overlap", {"skip visits entirely outside the recommended window", [](ServiceConfig& c, const std::string& v) { c.planner.require_window_overlap = to_bool(v); }}},
        {"planner.check_in_routine", {"schedule a check-in block on arrival", [](ServiceConfig& c, const std::string& v) { c.planner.check_in_routine = to_bool(v); }}},
        {"planner.check_out_routine", {"schedule a check-out block before departure", [](ServiceConfig& c, const std::string& v) { c.planner.check_out_routine = to_bool(v); }}},
        {"planner.max_visits_per_day", {"visit cap per day, 0 for none", [](ServiceConfig& c, const std::string& v) { c.planner.max_visits_per_day = to_int(v); }}},
        {"planner.attractions_per_day", {"auto-liked recommendations per day in batch runs", [](ServiceConfig& c, const std::string& v) { c.planner.attractions_per_day = to_int(v); }}},
        {"budget.shares",
         {"accommodation,restaurant,attraction,transportation,other,reserve points (total 100)",
          [](ServiceConfig& c, const std::string& v) { c.budget.shares = to_shares(v); }}},
        {"budget.rounding_unit_cents", {"allocation granularity in cents", [](ServiceConfig& c, const std::string& v) { c.budget.rounding_unit = to_int(v); }}},
        {"budget.per_day_floor", {"smallest budget per night, e.g. $10", [](ServiceConfig& c, const std::string& v) { c.budget.per_day_floor = parse_money(v); }}},
        {"budget.low_spending_points", {"share points moved from accommodation to the reserve for low spenders (0 disables)", [](ServiceConfig& c, const std::string& v) { c.low_spending_points = to_int(v); }}},
        {"recommend.k", {"attractions recommended per trip", [](ServiceConfig& c, const std::string& v) { c.recommend_k = static_cast<std::size_t>(to_int(v)); }}},
        {"model.adapter", {"deterministic, http or replay", [](ServiceConfig& c, const std::string& v) { c.model.adapter = to_adapter(v); }}},
        {"model.endpoint", {"chat completions URL for the http adapter", [](ServiceConfig& c, const std::string& v) { c.model.endpoint = v; }}},
        {"model.name", {"model name sent to the endpoint", [](ServiceConfig& c, const std::string& v) { c.model.model = v; }}},
        {"model.api_key_env", {"environment variable holding the API key", [](ServiceConfig& c, const std::string& v) { c.model.api_key_env = v; }}},
        {"model.transcript", {"transcript file to record to or replay from", [](ServiceConfig& c, const std::string& v) { c.model.transcript = v; }}},
        {"model.timeout_seconds", {"request timeout for the http adapter", [](ServiceConfig& c, const std::string& v) { c.model.timeout_seconds = to_int(v); }}},
        {"server.host", {"listen address", [](ServiceConfig& c, const std::string& v) { c.host = v; }}},
        {"server.port", {"listen port", [](ServiceConfig& c, const std::string& v) { c.port = to_int(v); }}},
    };
    return keys;
}

} // namespace

const std::map<std::string, std::string>& config_keys() {
    static const std::map<std::string, std::string> help = [] {
        std::map<std::string, std::string> out;
        for (const auto& [k, v] : table()) out[k] = v.help;
        return out;
    }();
    return help;
}

ServiceConfig parse_config(std::string_view text, ServiceConfig cfg) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        const std::string where = "config line " + std::to_string(line_no);
        if (eq == std::string::npos) throw Error(ErrorCode::BadField, where + ": expected key = value");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        auto it = table().find(key);
        if (it == table().end()) throw Error(ErrorCode::BadField, where + ": unknown key '" + key + "'");
        try {
            it->second.set(cfg, value);
        } catch (const Error& e) {
            throw Error(ErrorCode::BadField, where + ": " + e.what());
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadField, where + ": bad value '" + value + "' for " + key);
        }
    }
    route::validate(cfg.planner);
    return cfg;
}

ServiceConfig load_config(const std::filesystem::path& file, ServiceConfig base) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::Io, "cannot read config " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

} // namespace travel::service
