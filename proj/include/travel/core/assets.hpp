#pragma once

#include "travel/core/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace travel {

// Text files from assets/ compiled into the binary, addressed by their path
// relative to assets/, e.g. "prompts/direct_predict.txt". Throws NotFound.
std::string_view asset(std::string_view name);
std::vector<std::string> asset_names();

} // namespace travel
