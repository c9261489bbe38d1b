#pragma once

#include "travel/recommend/recommender.hpp"

#include <json.hpp>

namespace travel::rec {

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

void to_json(nlohmann::json& j, const ScoredItem& s);
void from_json(const nlohmann::json& j, ScoredItem& s);
void to_json(nlohmann::json& j, const Feedback& f);
void from_json(const nlohmann::json& j, Feedback& f);
void to_json(nlohmann::json& j, const Session& s);
void from_json(const nlohmann::json& j, Session& s);

} // namespace travel::rec
