#pragma once

// Plain-text input formats.
//
// Permutation / function: first line n, then n integers separated by any
// whitespace (across any number of lines). Errors name the offending line.
// Word ids: whitespace-separated positive decimal integers.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "permc/permutation.hpp"

namespace permc {

// Values in [1, n], no check for repeats.
std::vector<std::size_t> parse_function(std::string_view text);
// Values in [1, n], each exactly once.
permutation parse_permutation(std::string_view text);
std::vector<std::size_t> parse_ids(std::string_view text);
// Splits on whitespace and numbers distinct words by first appearance.
std::vector<std::size_t> tokenize_words(std::string_view text, std::vector<std::string>& vocabulary);

std::string format_permutation(const permutation& pi);

} // namespace permc
