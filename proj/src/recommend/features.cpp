#include "travel/recommend/features.hpp"

#include <algorithm>
#include <cctype>

namespace travel::rec {
namespace {

std::string haystack(const Attraction& a) {
    std::string text = a.name;
    for (const auto& t : a.types) text += " | " + t;
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return text;
}

bool is_alpha(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

// Whole-word (or plural) occurrence, so "bar" does not fire on "Barceloneta".
bool has_word(const std::string& text, std::string_view w) {
    for (auto pos = text.find(w); pos != std::string::npos; pos = text.find(w, pos + 1)) {
        if (pos > 0 && is_alpha(text[pos - 1])) continue;
        std::size_t end = pos + w.size();
        if (end < text.size() && text[end] == 's') ++end;
        if (end < text.size() && is_alpha(text[end])) continue;
        return true;
    }
    return false;
}

bool has_any(const std::string& text, std::initializer_list<std::string_view> words) {
    return std::any_of(words.begin(), words.end(), [&](std::string_view w) { return has_word(text, w); });
}

bool matches(Category c, const std::string& t) {
    switch (c) {
    case Category::garden: return has_any(t, {"garden"});
    case Category::park:
        return has_any(t, {"park", "hiking", "nature"}) && !has_any(t, {"amusement", "theme park"});
    case Category::museum: return has_any(t, {"museum", "gallery", "library", "exhibition"});
    case Category::temple:
        return has_any(t, {"temple", "shrine", "church", "cathedral", "basilica", "monastery"});
    case Category::landmark:
        return has_any(t, {"landmark", "monument", "bridge", "tower", "observation", "historical", "castle", "palace",
                           "viewpoint"});
    case Category::shopping: return has_any(t, {"shopping", "market", "street", "mall"});
    case Category::entertainment:
        return has_any(t, {"amusement", "theme park", "zoo", "aquarium", "circus", "theater", "entertainment",
                           "concert"});
    case Category::waterfront: return has_any(t, {"beach", "promenade", "pier", "lake", "river", "waterfront"});
    }
    return false;
}

} // namespace

std::string_view to_string(Category c) {
    switch (c) {
    case Category::garden: return "garden";
    case Category::park: return "park";
    case Category::museum: return "museum";
    case Category::temple: return "temple";
    case Category::landmark: return "landmark";
    case Category::shopping: return "shopping";
    case Category::entertainment: return "entertainment";
    case Category::waterfront: return "waterfront";
    }
    return "landmark";
}

std::vector<Category> categories_of(const Attraction& a) {
    const std::string t = haystack(a);
    std::vector<Category> out;
    for (Category c : kCategories) {
        if (matches(c, t)) out.push_back(c);
    }
    return out;
}

bool is_adult_oriented(const Attraction& a) {
    return has_any(haystack(a), {"bar", "night club", "pub", "beer hall", "casino"});
}

bool is_family_friendly(const Attraction& a) {
    if (is_adult_oriented(a)) return false;
    return has_any(haystack(a), {"zoo", "aquarium", "park", "garden", "science", "beach", "amusement", "circus"});
}

FeatureVector item_features(const Attraction& a) {
    FeatureVector f{};
    f[feature::bias] = 1.0;
    f[feature::free] = a.price_per_person.is_free() ? 1.0 : 0.0;
    f[feature::price] = std::min(1.0, static_cast<double>(a.price_per_person.cents) / 5000.0);
    f[feature::rating] = a.rating / 5.0;
    f[feature::family] = is_family_friendly(a) ? 1.0 : 0.0;
    f[feature::adult] = is_adult_oriented(a) ? 1.0 : 0.0;
    const auto cats = categories_of(a);
    for (std::size_t i = 0; i < kCategories.size(); ++i) {
        if (std::find(cats.begin(), cats.end(), kCategories[i]) != cats.end()) f[feature::first_category + i] = 1.0;
    }
    return f;
}

} // namespace travel::rec
