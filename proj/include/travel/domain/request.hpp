#pragma once

#include "travel/domain/clock.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace travel {

// Hard constraints from the user input form.
struct TravelRequest {
    std::string user_name;
    std::string departure;
    std::string destination;
    Date outbound_date{};
    Date return_date{};
    int adults_num = 1;
    int children_num = 0;
    std::vector<int> children_ages;
    std::string restaurant_preference;

    bool operator==(const TravelRequest&) const = default;

    [[nodiscard]] int party_size() const noexcept { return adults_num + children_num; }
    [[nodiscard]] bool has_children() const noexcept { return children_num > 0; }
    [[nodiscard]] int nights() const;
    [[nodiscard]] int days() const { return nights() + 1; }
};

struct FormWarning {
    std::string key;
    std::string message;

    bool operator==(const FormWarning&) const = default;
};

struct ParsedForm {
    TravelRequest request;
    std::vector<FormWarning> warnings;
};

// Field names of the input form, in form order.
extern const std::vector<std::string_view> kFormFields;

// Throws MissingField, BadField, BadDate (unparseable or return before
// outbound) and NegativeCount. Unknown keys become warnings.
ParsedForm parse_input_form(const nlohmann::json& raw);
// Same, from JSON text; malformed text throws MalformedDocument.
ParsedForm parse_input_form(std::string_view text);

nlohmann::ordered_json to_form_json(const TravelRequest& r);

enum class ViolationCode { PartySizeZero, ChildAgesMismatch, NegativeChildAge, DateOrder, EmptyDeparture, EmptyDestination };

std::string_view to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::string message;

    bool operator==(const Violation&) const = default;
};

std::vector<Violation> validate_request(const TravelRequest& r);

// "shanghai, shanghai, china" -> "shanghai"
std::string city_key(std::string_view location);

} // namespace travel
