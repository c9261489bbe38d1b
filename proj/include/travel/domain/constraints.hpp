#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace travel {

enum class SpendingLevel { low, mid, high };

std::string_view to_string(SpendingLevel level);
std::optional<SpendingLevel> parse_spending_level(std::string_view text);

// Cross-scenario preferences. Keys in `extra` are unique by construction.
struct SoftConstraintSet {
    std::optional<SpendingLevel> spending_level;
    std::string attraction_preference;
    std::string restaurant_preference;
    std::map<std::string, std::string> extra;

    bool operator==(const SoftConstraintSet&) const = default;
    [[nodiscard]] bool empty() const noexcept {
        return !spending_level && attraction_preference.empty() && restaurant_preference.empty() && extra.empty();
    }
};

enum class RuleSource { seed, learned };

struct CommonsenseRule {
    std::string id;
    std::string condition;
    std::string effect;
    RuleSource source = RuleSource::seed;

    bool operator==(const CommonsenseRule&) const = default;
};

class CommonsenseRuleSet {
  public:
    CommonsenseRuleSet() = default;
    explicit CommonsenseRuleSet(std::vector<CommonsenseRule> rules);

    // Throws InvalidValue on a duplicate id.
    void add(CommonsenseRule rule);
    // Replaces a rule with the same id or appends.
    void upsert(CommonsenseRule rule);

    [[nodiscard]] const CommonsenseRule* find(std::string_view id) const;
    [[nodiscard]] const std::vector<CommonsenseRule>& rules() const noexcept { return rules_; }
    [[nodiscard]] bool contains(std::string_view id) const { return find(id) != nullptr; }

    bool operator==(const CommonsenseRuleSet&) const = default;

  private:
    std::vector<CommonsenseRule> rules_;
};

// Ids of the rules shipped with the seed asset that the planner consults.
namespace rule_ids {
inline constexpr std::string_view no_repeat_restaurant = "no-repeat-restaurant";
inline constexpr std::string_view meal_windows = "meal-windows";
inline constexpr std::string_view child_pacing = "child-pacing";
} // namespace rule_ids

} // namespace travel
