#include "colqsym/compositions.hpp"

#include "colqsym/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace colqsym {

namespace {

void check_colors(const std::vector<Color>& colors, int r)
{
    if (r < 1)
        throw DomainError("number of colors must be positive, got " + std::to_string(r));
    for (Color c : colors)
        if (c < 0 || c >= r)
            throw DomainError("color " + std::to_string(c) + " outside Z_" + std::to_string(r));
}

} // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw DomainError("composition must have at least one part");
    for (int p : parts_) {
        if (p < 1)
            throw DomainError("composition part " + std::to_string(p) + " is not positive");
        n_ += p;
    }
}

AugmentedSubset::AugmentedSubset(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements))
{
    if (n_ < 1)
        throw DomainError("augmented subset needs n >= 1");
    if (elements_.empty() || elements_.back() != n_)
        throw DomainError("augmented subset must contain n = " + std::to_string(n_));
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 1 || elements_[i] > n_)
            throw DomainError("element " + std::to_string(elements_[i]) + " outside [n]");
        if (i > 0 && elements_[i - 1] >= elements_[i])
            throw DomainError("augmented subset elements must strictly increase");
    }
}

ColoredComposition::ColoredComposition(std::vector<int> parts, std::vector<Color> colors, int r)
    : parts_(std::move(parts)), colors_(std::move(colors)), r_(r)
{
    n_ = Composition(parts_).size();
    if (parts_.size() != colors_.size())
        throw DomainError("colored composition needs one color per part");
    check_colors(colors_, r_);
}

ColoredSet::ColoredSet(int n, int r, std::vector<ColoredInteger> pairs)
    : n_(n), r_(r), pairs_(std::move(pairs))
{
    if (n_ < 1)
        throw DomainError("colored set needs n >= 1");
    if (pairs_.empty() || pairs_.back().value != n_)
        throw DomainError("colored set must contain n = " + std::to_string(n_));
    std::vector<Color> colors;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].value < 1 || pairs_[i].value > n_)
            throw DomainError("element " + std::to_string(pairs_[i].value) + " outside [n]");
        if (i > 0 && pairs_[i - 1].value >= pairs_[i].value)
            throw DomainError("colored set elements must strictly increase");
        colors.push_back(pairs_[i].color);
    }
    check_colors(colors, r_);
}

bool ColoredSet::contains(ColoredInteger element) const
{
    return std::binary_search(pairs_.begin(), pairs_.end(), element);
}

ColorVector::ColorVector(std::vector<Color> entries, int r) : entries_(std::move(entries)), r_(r)
{
    check_colors(entries_, r_);
}

AugmentedSubset comp_to_augmented_set(const Composition& a)
{
    std::vector<int> sums(a.parts().size());
    std::partial_sum(a.parts().begin(), a.parts().end(), sums.begin());
    return AugmentedSubset(a.size(), std::move(sums));
}

Composition augmented_set_to_comp(const AugmentedSubset& s)
{
    std::vector<int> parts(s.elements().size());
    std::adjacent_difference(s.elements().begin(), s.elements().end(), parts.begin());
    return Composition(std::move(parts));
}

Composition composition_of_set(int n, const PositionSet& s)
{
    std::vector<int> augmented;
    for (int i : s)
        if (i != n)
            augmented.push_back(i);
    augmented.push_back(n);
    return augmented_set_to_comp(AugmentedSubset(n, std::move(augmented)));
}

PositionSet descent_positions(const Composition& a)
{
    PositionSet out = comp_to_augmented_set(a).elements();
    out.pop_back();
    return out;
}

ColoredSet colored_comp_to_colored_set(const ColoredComposition& ce)
{
    std::vector<ColoredInteger> pairs;
    int sum = 0;
    for (std::size_t i = 0; i < ce.parts().size(); ++i) {
        sum += ce.parts()[i];
        pairs.push_back({sum, ce.colors()[i]});
    }
    return ColoredSet(ce.size(), ce.colors_count(), std::move(pairs));
}

ColoredComposition colored_set_to_colored_comp(const ColoredSet& cs)
{
    std::vector<int> parts;
    std::vector<Color> colors;
    int previous = 0;
    for (const auto& [value, color] : cs.pairs()) {
        parts.push_back(value - previous);
        colors.push_back(color);
        previous = value;
    }
    return ColoredComposition(std::move(parts), std::move(colors), cs.colors_count());
}

ColorVector extend_color_vector(const ColoredComposition& ce)
{
    std::vector<Color> entries;
    entries.reserve(ce.size());
    for (std::size_t i = 0; i < ce.parts().size(); ++i)
        entries.insert(entries.end(), ce.parts()[i], ce.colors()[i]);
    return ColorVector(std::move(entries), ce.colors_count());
}

ColorVector extend_color_vector(const ColoredSet& cs)
{
    // zeta~_j = zeta(s_i) for s_{i-1} < j <= s_i, s_0 = 0.
    std::vector<Color> entries(cs.n());
    int previous = 0;
    for (const auto& [value, color] : cs.pairs()) {
        for (int j = previous + 1; j <= value; ++j)
            entries[j - 1] = color;
        previous = value;
    }
    return ColorVector(std::move(entries), cs.colors_count());
}

bool refines(const ColoredComposition& fine, const ColoredComposition& coarse)
{
    if (fine.size() != coarse.size() || fine.colors_count() != coarse.colors_count())
        throw DimensionError("refines: operands differ in n or r");
    if (extend_color_vector(fine) != extend_color_vector(coarse))
        return false;
    const auto fine_set = colored_comp_to_colored_set(fine);
    const auto coarse_set = colored_comp_to_colored_set(coarse);
    return std::includes(fine_set.pairs().begin(), fine_set.pairs().end(),
                         coarse_set.pairs().begin(), coarse_set.pairs().end());
}

std::vector<ColoredComposition> covered_by(const ColoredComposition& ce)
{
    std::vector<ColoredComposition> out;
    const auto& parts = ce.parts();
    const auto& colors = ce.colors();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (colors[i] != colors[i + 1])
            continue;
        std::vector<int> merged_parts(parts.begin(), parts.begin() + i);
        std::vector<Color> merged_colors(colors.begin(), colors.begin() + i);
        merged_parts.push_back(parts[i] + parts[i + 1]);
        merged_colors.push_back(colors[i]);
        merged_parts.insert(merged_parts.end(), parts.begin() + i + 2, parts.end());
        merged_colors.insert(merged_colors.end(), colors.begin() + i + 2, colors.end());
        out.emplace_back(std::move(merged_parts), std::move(merged_colors), ce.colors_count());
    }
    return out;
}

std::vector<ColoredComposition> coarsenings(const ColoredComposition& ce)
{
    // Each boundary between equal-colored neighbours is either kept or
    // merged away; the coarsenings are exactly these 2^m choices.
    const auto& parts = ce.parts();
    const auto& colors = ce.colors();
    std::vector<std::size_t> mergeable;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (colors[i] == colors[i + 1])
            mergeable.push_back(i);

    std::vector<ColoredComposition> out;
    const std::uint64_t total = std::uint64_t{1} << mergeable.size();
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<bool> merge_after(parts.size(), false);
        for (std::size_t b = 0; b < mergeable.size(); ++b)
            if (mask & (std::uint64_t{1} << b))
                merge_after[mergeable[b]] = true;
        std::vector<int> new_parts;
        std::vector<Color> new_colors;
        int run = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            run += parts[i];
            if (!merge_after[i]) {
                new_parts.push_back(run);
                new_colors.push_back(colors[i]);
                run = 0;
            }
        }
        out.emplace_back(std::move(new_parts), std::move(new_colors), ce.colors_count());
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.length() != y.length())
            return x.length() > y.length();
        return x.parts() < y.parts();
    });
    return out;
}

RainbowDecomposition rainbow_decomposition(const ColoredComposition& ce)
{
    RainbowDecomposition out;
    const auto& parts = ce.parts();
    const auto& colors = ce.colors();
    std::size_t start = 0;
    for (std::size_t i = 1; i <= parts.size(); ++i) {
        if (i == parts.size() || colors[i] != colors[start]) {
            out.blocks.push_back(
                {Composition(std::vector<int>(parts.begin() + start, parts.begin() + i)), colors[start]});
            start = i;
        }
    }
    return out;
}

ColoredComposition concatenate(const RainbowDecomposition& d, int r)
{
    std::vector<int> parts;
    std::vector<Color> colors;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& block = d.blocks[i];
        if (i > 0 && d.blocks[i - 1].color == block.color)
            throw DomainError("rainbow blocks must alternate colors");
        parts.insert(parts.end(), block.parts.parts().begin(), block.parts.parts().end());
        colors.insert(colors.end(), block.parts.parts().size(), block.color);
    }
    return ColoredComposition(std::move(parts), std::move(colors), r);
}

std::vector<Composition> enumerate_compositions(int n)
{
    if (n < 1)
        throw DomainError("enumerate_compositions needs n >= 1");
    std::vector<Composition> out;
    std::vector<int> prefix;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(prefix);
            return;
        }
        for (int first = 1; first <= remaining; ++first) {
            prefix.push_back(first);
            self(self, remaining - first);
            prefix.pop_back();
        }
    };
    recurse(recurse, n);
    return out;
}

std::vector<ColoredComposition> enumerate_colored_compositions(int n, int r)
{
    if (n < 1 || r < 1)
        throw DomainError("enumerate_colored_compositions needs n, r >= 1");
    std::vector<ColoredComposition> out;
    out.reserve(colored_composition_count(n, r));

    // Walk color vectors in lexicographic order; for each, the compositions
    // compatible with it must break at every color change and may break
    // freely between equal neighbours.
    std::vector<Color> z(n, 0);
    while (true) {
        std::vector<int> free_positions;
        for (int i = 0; i + 1 < n; ++i)
            if (z[i] == z[i + 1])
                free_positions.push_back(i);

        std::vector<std::vector<int>> bucket_parts;
        const std::uint64_t total = std::uint64_t{1} << free_positions.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<bool> cut(n, false);
            for (int i = 0; i + 1 < n; ++i)
                if (z[i] != z[i + 1])
                    cut[i] = true;
            for (std::size_t b = 0; b < free_positions.size(); ++b)
                if (mask & (std::uint64_t{1} << b))
                    cut[free_positions[b]] = true;
            cut[n - 1] = true;
            std::vector<int> parts;
            int run = 0;
            for (int i = 0; i < n; ++i) {
                ++run;
                if (cut[i]) {
                    parts.push_back(run);
                    run = 0;
                }
            }
            bucket_parts.push_back(std::move(parts));
        }
        std::sort(bucket_parts.begin(), bucket_parts.end());
        for (auto& parts : bucket_parts) {
            std::vector<Color> colors;
            int position = 0;
            for (int p : parts) {
                colors.push_back(z[position]);
                position += p;
            }
            out.emplace_back(std::move(parts), std::move(colors), r);
        }

        int k = n - 1;
        while (k >= 0 && z[k] == r - 1)
            z[k--] = 0;
        if (k < 0)
            break;
        ++z[k];
    }
    return out;
}

std::uint64_t colored_composition_count(int n, int r)
{
    std::uint64_t count = static_cast<std::uint64_t>(r);
    for (int i = 1; i < n; ++i)
        count *= static_cast<std::uint64_t>(r + 1);
    return count;
}

} // namespace colqsym
