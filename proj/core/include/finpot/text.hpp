#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace finpot {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Collapses runs of whitespace to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool starts_with(std::string_view s, std::string_view prefix);

// Number of occurrences of a non-empty needle (non-overlapping).
std::size_t count_occurrences(std::string_view haystack, std::string_view needle);

}  // namespace finpot
