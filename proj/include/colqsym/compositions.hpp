#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace colqsym {

// Colors are the integers 0..r-1 with their natural order.
using Color = int;

// Strictly increasing positions, e.g. a descent set.
using PositionSet = std::vector<int>;

// Ordered sequence of positive integers summing to n >= 1.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// S+ = S u {n} for S a subset of [n-1]; n is always the last element.
class AugmentedSubset {
public:
    AugmentedSubset(int n, std::vector<int> elements);

    int n() const noexcept { return n_; }
    const std::vector<int>& elements() const noexcept { return elements_; }

    auto operator<=>(const AugmentedSubset&) const = default;

private:
    int n_ = 0;
    std::vector<int> elements_;
};

class ColoredComposition {
public:
    ColoredComposition(std::vector<int> parts, std::vector<Color> colors, int r);

    const std::vector<int>& parts() const noexcept { return parts_; }
    const std::vector<Color>& colors() const noexcept { return colors_; }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int colors_count() const noexcept { return r_; }

    Composition composition() const { return Composition(parts_); }

    auto operator<=>(const ColoredComposition&) const = default;

private:
    std::vector<int> parts_;
    std::vector<Color> colors_;
    int r_ = 1;
    int n_ = 0;
};

// An integer together with a color, written value^color.
struct ColoredInteger {
    int value = 0;
    Color color = 0;

    auto operator<=>(const ColoredInteger&) const = default;
};

// Augmented colored subset (S+, zeta) of [n]; n is always present.
class ColoredSet {
public:
    ColoredSet(int n, int r, std::vector<ColoredInteger> pairs);

    int n() const noexcept { return n_; }
    int colors_count() const noexcept { return r_; }
    const std::vector<ColoredInteger>& pairs() const noexcept { return pairs_; }

    bool contains(ColoredInteger element) const;

    auto operator<=>(const ColoredSet&) const = default;

private:
    int n_ = 0;
    int r_ = 1;
    std::vector<ColoredInteger> pairs_;
};

class ColorVector {
public:
    ColorVector(std::vector<Color> entries, int r);

    const std::vector<Color>& entries() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }
    int colors_count() const noexcept { return r_; }
    // 1-based, matching the positions used throughout.
    Color operator[](int position) const { return entries_[position - 1]; }

    auto operator<=>(const ColorVector&) const = default;

private:
    std::vector<Color> entries_;
    int r_ = 1;
};

struct RainbowBlock {
    Composition parts;
    Color color = 0;

    auto operator<=>(const RainbowBlock&) const = default;
};

// Maximal monochromatic blocks; adjacent blocks have distinct colors.
struct RainbowDecomposition {
    std::vector<RainbowBlock> blocks;

    auto operator<=>(const RainbowDecomposition&) const = default;
};

AugmentedSubset comp_to_augmented_set(const Composition& a);
Composition augmented_set_to_comp(const AugmentedSubset& s);

// co(S) for a plain subset S of [n-1] (n itself is ignored if present).
Composition composition_of_set(int n, const PositionSet& s);
// S(alpha): partial sums without n.
PositionSet descent_positions(const Composition& a);

ColoredSet colored_comp_to_colored_set(const ColoredComposition& ce);
ColoredComposition colored_set_to_colored_comp(const ColoredSet& cs);

ColorVector extend_color_vector(const ColoredComposition& ce);
ColorVector extend_color_vector(const ColoredSet& cs);

// True iff coarse <= fine in the reverse-refinement order on Comp(n,r):
// equal extended color vectors and colored_set(coarse) a subset of
// colored_set(fine).
bool refines(const ColoredComposition& fine, const ColoredComposition& coarse);

// Elements covered by ce: merge one pair of adjacent equal-colored parts.
std::vector<ColoredComposition> covered_by(const ColoredComposition& ce);

// All (beta, delta) <= ce, including ce itself, in enumeration order.
std::vector<ColoredComposition> coarsenings(const ColoredComposition& ce);

RainbowDecomposition rainbow_decomposition(const ColoredComposition& ce);
ColoredComposition concatenate(const RainbowDecomposition& d, int r);

// Lexicographic on part sequences.
std::vector<Composition> enumerate_compositions(int n);

// Lexicographic on (extended color vector, part sequence).
std::vector<ColoredComposition> enumerate_colored_compositions(int n, int r);

// r (r+1)^(n-1).
std::uint64_t colored_composition_count(int n, int r);

} // namespace colqsym
