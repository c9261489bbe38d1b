#pragma once

#include "travel/domain/catalog_items.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace travel::rec {

// Keyword categories derived from an attraction's type list and name.
enum class Category { garden, park, museum, temple, landmark, shopping, entertainment, waterfront };

inline constexpr std::array<Category, 8> kCategories = {Category::garden,   Category::park,     Category::museum,
                                                        Category::temple,   Category::landmark, Category::shopping,
                                                        Category::entertainment, Category::waterfront};

std::string_view to_string(Category c);

std::vector<Category> categories_of(const Attraction& a);
bool is_family_friendly(const Attraction& a);
bool is_adult_oriented(const Attraction& a);

// Item feature vector:
//   0 bias (always 1)
//   1 free entry
//   2 price, min(price / $50, 1)
//   3 catalog rating / 5
//   4 family-friendly
//   5 adult-oriented
//   6.. one indicator per Category, in kCategories order
inline constexpr std::size_t kFeatureDim = 6 + kCategories.size();
using FeatureVector = std::array<double, kFeatureDim>;

namespace feature {
inline constexpr std::size_t bias = 0;
inline constexpr std::size_t free = 1;
inline constexpr std::size_t price = 2;
inline constexpr std::size_t rating = 3;
inline constexpr std::size_t family = 4;
inline constexpr std::size_t adult = 5;
inline constexpr std::size_t first_category = 6;
} // namespace feature

FeatureVector item_features(const Attraction& a);

} // namespace travel::rec
