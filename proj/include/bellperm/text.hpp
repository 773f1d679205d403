#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bellperm/codes.hpp"
#include "bellperm/partitions.hpp"
#include "bellperm/permutation.hpp"

namespace bellperm::text {

// Grammars:
//   permutation  "4 5 2 1 3", or cycles "(1 4)(2 5 3)"
//   word         "1 2 1 1 3 2 3 4 2"; a single token of digits, e.g.
//                "121132342", is read one digit per entry (n <= 9)
//   partition    "1 4/2 3 5"
// Parsers throw ParseError on malformed text and the domain type's
// exception when the parsed value breaks an invariant.

std::string format_word(std::span<int const> word);
std::string format_permutation(Permutation const& sigma);
std::string format_sef(SubexceedantFunction const& f);
std::string format_partition(SetPartition const& pi);

enum class CycleStart { Minimum, Maximum };

/// Cycles ordered by minima, each starting at the chosen element. `compact`
/// drops the spaces inside cycles, as in "(9721)(653)(84)"; it requires n <= 9.
std::string format_cycles(Permutation const& sigma,
                          CycleStart start = CycleStart::Minimum,
                          bool compact = false);

/// True when the text, ignoring whitespace, starts with '('.
bool is_cycle_text(std::string_view text);

std::vector<int> parse_word(std::string_view text);
/// One-line or cycle notation. `n` sets the degree for cycle text; 0 means
/// the largest element mentioned.
Permutation parse_permutation(std::string_view text, int n = 0);
std::vector<std::vector<int>> parse_cycles(std::string_view text);
SubexceedantFunction parse_sef(std::string_view text);
/// Blocks may come in any order; the result is standard.
SetPartition parse_partition(std::string_view text);

}  // namespace bellperm::text
