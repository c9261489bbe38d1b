#include "travel/domain/constraints.hpp"

#include "travel/core/error.hpp"

#include <algorithm>

namespace travel {

std::string_view to_string(SpendingLevel level) {
    switch (level) {
    case SpendingLevel::low: return "low";
    case SpendingLevel::mid: return "mid";
    case SpendingLevel::high: return "high";
    }
    return "mid";
}

std::optional<SpendingLevel> parse_spending_level(std::string_view text) {
    if (text == "low") return SpendingLevel::low;
    if (text == "mid" || text == "medium") return SpendingLevel::mid;
    if (text == "high") return SpendingLevel::high;
    return std::nullopt;
}

CommonsenseRuleSet::CommonsenseRuleSet(std::vector<CommonsenseRule> rules) {
    for (auto& r : rules) add(std::move(r));
}

void CommonsenseRuleSet::add(CommonsenseRule rule) {
    if (contains(rule.id)) {
        throw Error(ErrorCode::InvalidValue, "duplicate commonsense rule id '" + rule.id + "'");
    }
    rules_.push_back(std::move(rule));
}

void CommonsenseRuleSet::upsert(CommonsenseRule rule) {
    auto it = std::find_if(rules_.begin(), rules_.end(), [&](const CommonsenseRule& r) { return r.id == rule.id; });
    if (it == rules_.end()) {
        rules_.push_back(std::move(rule));
    } else {
        *it = std::move(rule);
    }
}

const CommonsenseRule* CommonsenseRuleSet::find(std::string_view id) const {
    auto it = std::find_if(rules_.begin(), rules_.end(), [&](const CommonsenseRule& r) { return r.id == id; });
    return it == rules_.end() ? nullptr : &*it;
}

} // namespace travel
