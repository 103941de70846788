#pragma once

#include "colqsym/bijections.hpp"
#include "colqsym/symfun.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace colqsym {

// Caret form "2^0,2^1,1^1": comma-separated value^color items, whitespace
// ignored anywhere. An item without a caret has color 0. When r is absent
// it becomes one more than the largest color seen.
ColoredComposition parse_colored_composition(std::string_view text, std::optional<int> r = std::nullopt);
ColoredPermutation parse_colored_permutation(std::string_view text, std::optional<int> r = std::nullopt);

std::string format(const ColoredComposition& ce);
std::string format(const ColoredSet& cs);
std::string format(const ColoredPermutation& a);
std::string format(const Partition& l);
std::string format(const RPartitePartition& bll);

// Multi-line renderings for the table output format.
std::string format_table(const RPartiteTableau& bq);
std::string format_table(const SchurExpansion& e);
std::string format_table(const HExpansion& e);
std::string format_table(const FExpansion& e);

} // namespace colqsym
