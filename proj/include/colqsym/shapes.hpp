#pragma once

#include "colqsym/compositions.hpp"

#include <compare>
#include <vector>

namespace colqsym {

// Diagrams use English notation: row 0 is the top row, columns grow to the
// right, and "lower row" means a strictly larger row index. Reading words,
// tableau descents and insertion all rely on this convention.

// Weakly decreasing positive parts; may be empty.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    // lambda_i with zero padding, 0-based row index.
    int row(int i) const { return i < length() ? parts_[i] : 0; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// lambda / mu, stored normalized: no empty top or bottom rows and the
// leftmost column is occupied, so equal shapes compare equal.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);
    // Straight shape lambda / ().
    explicit SkewShape(const Partition& outer) : SkewShape(outer, Partition{}) {}

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int rows() const noexcept { return outer_.length(); }
    int row_start(int i) const { return inner_.row(i); }
    int row_end(int i) const { return outer_.row(i); }
    int row_length(int i) const { return row_end(i) - row_start(i); }
    bool contains(int row, int col) const
    {
        return row >= 0 && row < rows() && col >= row_start(row) && col < row_end(row);
    }
    int cells() const noexcept { return outer_.size() - inner_.size(); }
    bool empty() const noexcept { return cells() == 0; }
    bool is_straight() const noexcept { return inner_.empty(); }

    auto operator<=>(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

struct ZigzagShape {
    SkewShape shape;
    Composition source;

    auto operator<=>(const ZigzagShape&) const = default;
};

// Ribbons with colors, adjacent colors distinct.
struct ColoredZigzagShape {
    std::vector<ZigzagShape> zigzags;
    std::vector<Color> colors;

    int cells() const;
    auto operator<=>(const ColoredZigzagShape&) const = default;
};

class RPartitePartition {
public:
    explicit RPartitePartition(std::vector<Partition> components);

    const std::vector<Partition>& components() const noexcept { return components_; }
    int colors_count() const noexcept { return static_cast<int>(components_.size()); }
    int size() const noexcept { return n_; }

    auto operator<=>(const RPartitePartition&) const = default;

private:
    std::vector<Partition> components_;
    int n_ = 0;
};

class RPartiteSkewShape {
public:
    explicit RPartiteSkewShape(std::vector<SkewShape> components);
    explicit RPartiteSkewShape(const RPartitePartition& straight);

    const std::vector<SkewShape>& components() const noexcept { return components_; }
    int colors_count() const noexcept { return static_cast<int>(components_.size()); }
    int cells() const noexcept { return n_; }

    auto operator<=>(const RPartiteSkewShape&) const = default;

private:
    std::vector<SkewShape> components_;
    int n_ = 0;
};

// Filling of a skew shape by distinct positive integers, increasing along
// rows and down columns. rows[i] lists the cells of row i left to right.
class StandardTableau {
public:
    StandardTableau() = default;
    StandardTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int cells() const noexcept { return shape_.cells(); }
    std::vector<int> entries() const;
    // Row index of an entry, or -1.
    int row_of(int entry) const;

    auto operator<=>(const StandardTableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

// Every element of [n] appears exactly once across the components.
class RPartiteTableau {
public:
    explicit RPartiteTableau(std::vector<StandardTableau> components);

    const std::vector<StandardTableau>& components() const noexcept { return components_; }
    int colors_count() const noexcept { return static_cast<int>(components_.size()); }
    int size() const noexcept { return n_; }
    RPartiteSkewShape shape() const;

    auto operator<=>(const RPartiteTableau&) const = default;

private:
    std::vector<StandardTableau> components_;
    int n_ = 0;
};

struct EnumerationLimits {
    int max_cells = 12;
};

ZigzagShape zigzag_of(const Composition& a);
bool is_ribbon(const SkewShape& s);
// Row lengths of a ribbon read bottom to top; throws ShapeError otherwise.
Composition ribbon_composition(const SkewShape& s);

ColoredZigzagShape colored_zigzag_of(const ColoredComposition& ce);
ColoredComposition colored_composition_of(const ColoredZigzagShape& czz, int r);

// b is placed so that its lower-left vertex touches the upper-right vertex of a.
SkewShape direct_sum(const SkewShape& a, const SkewShape& b);
StandardTableau direct_sum(const StandardTableau& a, const StandardTableau& b);

RPartiteSkewShape rpartite_shape_of(const ColoredZigzagShape& czz, int r);

std::vector<StandardTableau> enumerate_syt(const SkewShape& s, EnumerationLimits limits = {});
std::vector<RPartiteTableau> enumerate_rpartite_syt(const RPartiteSkewShape& s, EnumerationLimits limits = {});

PositionSet tableau_descent_set(const StandardTableau& q);
ColoredSet rpartite_descent_set(const RPartiteTableau& bq);
ColoredComposition rpartite_descent_composition(const RPartiteTableau& bq);
ColorVector rpartite_color_vector(const RPartiteTableau& bq);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> enumerate_partitions(int n);
// All r-partite partitions of n.
std::vector<RPartitePartition> enumerate_rpartite_partitions(int n, int r);

} // namespace colqsym
