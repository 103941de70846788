#pragma once

#include "colqsym/text_io.hpp"

#include <doctest.h>

namespace test {

inline colqsym::ColoredComposition cc(const char* text, int r) { return colqsym::parse_colored_composition(text, r); }
inline colqsym::ColoredPermutation cp(const char* text, int r) { return colqsym::parse_colored_permutation(text, r); }
inline colqsym::Composition comp(std::vector<int> parts) { return colqsym::Composition(std::move(parts)); }
inline colqsym::Partition part(std::vector<int> parts) { return colqsym::Partition(std::move(parts)); }
inline colqsym::Permutation perm(std::vector<int> word) { return colqsym::Permutation(std::move(word)); }

inline colqsym::ColoredSet cs(int n, int r, std::vector<std::pair<int, int>> pairs)
{
    std::vector<colqsym::ColoredInteger> out;
    for (auto [v, c] : pairs)
        out.push_back({v, c});
    return colqsym::ColoredSet(n, r, std::move(out));
}

inline colqsym::RPartitePartition bll(std::vector<std::vector<int>> parts)
{
    std::vector<colqsym::Partition> out;
    for (auto& p : parts)
        out.emplace_back(std::move(p));
    return colqsym::RPartitePartition(std::move(out));
}

} // namespace test
