#pragma once

#include <string_view>
#include <vector>

namespace diagcalc::detail {

/// Parses `[[int,...],...]`; whitespace is insignificant and 0 is rejected.
std::vector<std::vector<int>> parse_int_lists(std::string_view text);

}  // namespace diagcalc::detail
