#include "travel/domain/request.hpp"

#include "travel/core/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

namespace travel {

const std::vector<std::string_view> kFormFields = {
    "user_name", "departure", "destination", "outbound_date", "return_date",
    "adults_num", "children_num", "children_ages", "restaurant_preference",
};

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

const nlohmann::json& require(const nlohmann::json& raw, std::string_view key) {
    auto it = raw.find(key);
    if (it == raw.end() || it->is_null()) {
        throw Error(ErrorCode::MissingField, std::string(key));
    }
    return *it;
}

std::string require_string(const nlohmann::json& raw, std::string_view key) {
    const auto& v = require(raw, key);
    if (!v.is_string()) {
        throw Error(ErrorCode::BadField, std::string(key) + " must be a string");
    }
    return v.get<std::string>();
}

// Integers may arrive as JSON numbers or as digit strings.
long parse_integer(std::string_view text, std::string_view key) {
    const auto s = trim(text);
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::BadField, std::string(key) + " must be an integer, got '" + std::string(text) + "'");
    }
    return value;
}

int require_count(const nlohmann::json& raw, std::string_view key) {
    const auto& v = require(raw, key);
    long value = 0;
    if (v.is_number_integer()) {
        value = v.get<long>();
    } else if (v.is_string()) {
        value = parse_integer(v.get<std::string>(), key);
    } else {
        throw Error(ErrorCode::BadField, std::string(key) + " must be an integer");
    }
    if (value < 0) {
        throw Error(ErrorCode::NegativeCount, std::string(key) + " = " + std::to_string(value));
    }
    return static_cast<int>(value);
}

std::vector<int> parse_ages(const nlohmann::json& v) {
    std::vector<int> ages;
    auto push = [&](long age) {
        if (age < 0) throw Error(ErrorCode::NegativeCount, "children_ages contains " + std::to_string(age));
        ages.push_back(static_cast<int>(age));
    };
    if (v.is_array()) {
        for (const auto& e : v) {
            if (e.is_number_integer()) {
                push(e.get<long>());
            } else if (e.is_string()) {
                push(parse_integer(e.get<std::string>(), "children_ages"));
            } else {
                throw Error(ErrorCode::BadField, "children_ages entries must be integers");
            }
        }
        return ages;
    }
    if (v.is_number_integer()) {
        push(v.get<long>());
        return ages;
    }
    if (!v.is_string()) {
        throw Error(ErrorCode::BadField, "children_ages must be a comma-separated string");
    }
    const std::string text = v.get<std::string>();
    std::string_view rest = text;
    if (trim(rest).empty()) return ages;
    while (true) {
        const auto comma = rest.find(',');
        push(parse_integer(rest.substr(0, comma), "children_ages"));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return ages;
}

} // namespace

int TravelRequest::nights() const {
    return days_between(outbound_date, return_date);
}

ParsedForm parse_input_form(const nlohmann::json& raw) {
    if (!raw.is_object()) {
        throw Error(ErrorCode::MalformedDocument, "input form must be a JSON object");
    }
    ParsedForm out;
    TravelRequest& r = out.request;
    r.user_name = require_string(raw, "user_name");
    r.departure = require_string(raw, "departure");
    r.destination = require_string(raw, "destination");
    r.outbound_date = parse_date(require_string(raw, "outbound_date"));
    r.return_date = parse_date(require_string(raw, "return_date"));
    r.adults_num = require_count(raw, "adults_num");
    r.children_num = require_count(raw, "children_num");
    r.children_ages = parse_ages(require(raw, "children_ages"));
    r.restaurant_preference = require_string(raw, "restaurant_preference");

    if (days_between(r.outbound_date, r.return_date) < 0) {
        throw Error(ErrorCode::BadDate, "return_date " + format_date(r.return_date) + " is before outbound_date " +
                                            format_date(r.outbound_date));
    }
    for (const auto& [key, value] : raw.items()) {
        if (std::find(kFormFields.begin(), kFormFields.end(), key) == kFormFields.end()) {
            out.warnings.push_back(FormWarning{key, "unknown form key ignored"});
        }
    }
    return out;
}

ParsedForm parse_input_form(std::string_view text) {
    nlohmann::json raw;
    try {
        raw = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedDocument, e.what());
    }
    return parse_input_form(raw);
}

nlohmann::ordered_json to_form_json(const TravelRequest& r) {
    std::string ages;
    for (std::size_t i = 0; i < r.children_ages.size(); ++i) {
        if (i > 0) ages += ", ";
        ages += std::to_string(r.children_ages[i]);
    }
    nlohmann::ordered_json j;
    j["user_name"] = r.user_name;
    j["departure"] = r.departure;
    j["destination"] = r.destination;
    j["outbound_date"] = format_date(r.outbound_date);
    j["return_date"] = format_date(r.return_date);
    j["adults_num"] = r.adults_num;
    j["children_num"] = r.children_num;
    j["children_ages"] = ages;
    j["restaurant_preference"] = r.restaurant_preference;
    return j;
}

std::string_view to_string(ViolationCode code) {
    switch (code) {
    case ViolationCode::PartySizeZero: return "PartySizeZero";
    case ViolationCode::ChildAgesMismatch: return "ChildAgesMismatch";
    case ViolationCode::NegativeChildAge: return "NegativeChildAge";
    case ViolationCode::DateOrder: return "DateOrder";
    case ViolationCode::EmptyDeparture: return "EmptyDeparture";
    case ViolationCode::EmptyDestination: return "EmptyDestination";
    }
    return "Unknown";
}

std::vector<Violation> validate_request(const TravelRequest& r) {
    std::vector<Violation> out;
    if (r.adults_num < 1) {
        out.push_back({ViolationCode::PartySizeZero, "at least one adult is required"});
    }
    if (static_cast<int>(r.children_ages.size()) != r.children_num) {
        out.push_back({ViolationCode::ChildAgesMismatch, std::to_string(r.children_ages.size()) + " ages for " +
                                                             std::to_string(r.children_num) + " children"});
    }
    if (std::any_of(r.children_ages.begin(), r.children_ages.end(), [](int a) { return a < 0; })) {
        out.push_back({ViolationCode::NegativeChildAge, "child ages must be non-negative"});
    }
    if (!r.outbound_date.ok() || !r.return_date.ok() || days_between(r.outbound_date, r.return_date) < 0) {
        out.push_back({ViolationCode::DateOrder, "return_date must not precede outbound_date"});
    }
    if (trim(r.departure).empty()) out.push_back({ViolationCode::EmptyDeparture, "departure is empty"});
    if (trim(r.destination).empty()) out.push_back({ViolationCode::EmptyDestination, "destination is empty"});
    return out;
}

std::string city_key(std::string_view location) {
    const auto comma = location.find(',');
    auto head = trim(location.substr(0, comma));
    std::string key(head);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return key;
}

} // namespace travel
