#include "colqsym/shapes.hpp"

#include "colqsym/errors.hpp"

#include <algorithm>
#include <string>

namespace colqsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition part " + std::to_string(parts_[i]) + " is not positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw DomainError("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

SkewShape::SkewShape(Partition outer, Partition inner)
{
    if (inner.length() > outer.length())
        throw DomainError("skew shape: inner partition has more rows than outer");
    for (int i = 0; i < inner.length(); ++i)
        if (inner.row(i) > outer.row(i))
            throw DomainError("skew shape: inner partition not contained in outer");

    std::vector<int> out = outer.parts();
    std::vector<int> in(out.size(), 0);
    for (int i = 0; i < inner.length(); ++i)
        in[i] = inner.row(i);

    std::size_t top = 0;
    while (top < out.size() && out[top] == in[top])
        ++top;
    std::size_t bottom = out.size();
    while (bottom > top && out[bottom - 1] == in[bottom - 1])
        --bottom;
    out = std::vector<int>(out.begin() + top, out.begin() + bottom);
    in = std::vector<int>(in.begin() + top, in.begin() + bottom);
    if (!in.empty()) {
        const int shift = in.back();
        for (auto& x : out)
            x -= shift;
        for (auto& x : in)
            x -= shift;
    }
    while (!in.empty() && in.back() == 0)
        in.pop_back();
    outer_ = Partition(std::move(out));
    inner_ = Partition(std::move(in));
}

int ColoredZigzagShape::cells() const
{
    int total = 0;
    for (const auto& z : zigzags)
        total += z.shape.cells();
    return total;
}

RPartitePartition::RPartitePartition(std::vector<Partition> components) : components_(std::move(components))
{
    if (components_.empty())
        throw DomainError("r-partite partition needs r >= 1 components");
    for (const auto& p : components_)
        n_ += p.size();
}

RPartiteSkewShape::RPartiteSkewShape(std::vector<SkewShape> components) : components_(std::move(components))
{
    if (components_.empty())
        throw DomainError("r-partite shape needs r >= 1 components");
    for (const auto& s : components_)
        n_ += s.cells();
}

RPartiteSkewShape::RPartiteSkewShape(const RPartitePartition& straight)
{
    for (const auto& p : straight.components())
        components_.emplace_back(p);
    n_ = straight.size();
}

StandardTableau::StandardTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows))
{
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw DomainError("tableau: row count does not match shape");
    for (int i = 0; i < shape_.rows(); ++i) {
        if (static_cast<int>(rows_[i].size()) != shape_.row_length(i))
            throw DomainError("tableau: row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < rows_[i].size(); ++k) {
            if (rows_[i][k] < 1)
                throw DomainError("tableau entries must be positive");
            if (k > 0 && rows_[i][k - 1] >= rows_[i][k])
                throw DomainError("tableau rows must strictly increase");
            const int col = shape_.row_start(i) + static_cast<int>(k);
            if (i > 0 && shape_.contains(i - 1, col)) {
                const int above = rows_[i - 1][col - shape_.row_start(i - 1)];
                if (above >= rows_[i][k])
                    throw DomainError("tableau columns must strictly increase");
            }
        }
    }
    auto all = entries();
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw DomainError("tableau entries must be distinct");
}

std::vector<int> StandardTableau::entries() const
{
    std::vector<int> out;
    for (const auto& row : rows_)
        out.insert(out.end(), row.begin(), row.end());
    return out;
}

int StandardTableau::row_of(int entry) const
{
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (std::find(rows_[i].begin(), rows_[i].end(), entry) != rows_[i].end())
            return static_cast<int>(i);
    return -1;
}

RPartiteTableau::RPartiteTableau(std::vector<StandardTableau> components) : components_(std::move(components))
{
    if (components_.empty())
        throw DomainError("r-partite tableau needs r >= 1 components");
    std::vector<int> all;
    for (const auto& t : components_) {
        auto e = t.entries();
        all.insert(all.end(), e.begin(), e.end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1)
            throw DomainError("r-partite tableau entries must be exactly 1..n");
    n_ = static_cast<int>(all.size());
}

RPartiteSkewShape RPartiteTableau::shape() const
{
    std::vector<SkewShape> shapes;
    for (const auto& t : components_)
        shapes.push_back(t.shape());
    return RPartiteSkewShape(std::move(shapes));
}

ZigzagShape zigzag_of(const Composition& a)
{
    // Bottom row starts at column 0; each row above starts on the last
    // column of the row beneath it.
    const int k = a.length();
    std::vector<int> starts(k);
    for (int b = 1; b < k; ++b)
        starts[b] = starts[b - 1] + a.parts()[b - 1] - 1;
    std::vector<int> outer(k), inner(k);
    for (int i = 0; i < k; ++i) {
        const int b = k - 1 - i;
        inner[i] = starts[b];
        outer[i] = starts[b] + a.parts()[b];
    }
    while (!inner.empty() && inner.back() == 0)
        inner.pop_back();
    return {SkewShape(Partition(outer), Partition(inner)), a};
}

bool is_ribbon(const SkewShape& s)
{
    if (s.empty())
        return false;
    for (int i = 0; i < s.rows(); ++i)
        if (s.row_length(i) == 0)
            return false;
    for (int i = 0; i + 1 < s.rows(); ++i)
        if (s.row_end(i + 1) - 1 != s.row_start(i))
            return false;
    return true;
}

Composition ribbon_composition(const SkewShape& s)
{
    if (!is_ribbon(s))
        throw ShapeError("shape is not a ribbon");
    std::vector<int> parts;
    for (int i = s.rows() - 1; i >= 0; --i)
        parts.push_back(s.row_length(i));
    return Composition(std::move(parts));
}

ColoredZigzagShape colored_zigzag_of(const ColoredComposition& ce)
{
    ColoredZigzagShape out;
    for (const auto& block : rainbow_decomposition(ce).blocks) {
        out.zigzags.push_back(zigzag_of(block.parts));
        out.colors.push_back(block.color);
    }
    return out;
}

ColoredComposition colored_composition_of(const ColoredZigzagShape& czz, int r)
{
    if (czz.zigzags.size() != czz.colors.size())
        throw DomainError("colored zigzag shape needs one color per zigzag");
    RainbowDecomposition d;
    for (std::size_t i = 0; i < czz.zigzags.size(); ++i)
        d.blocks.push_back({ribbon_composition(czz.zigzags[i].shape), czz.colors[i]});
    return concatenate(d, r);
}

namespace {

struct Placement {
    int a_shift = 0;
    int b_shift = 0;
};

Placement place(const SkewShape& a, const SkewShape& b)
{
    const int d = a.row_end(0) - b.row_start(b.rows() - 1);
    Placement p;
    p.a_shift = std::max(0, -d);
    p.b_shift = d + p.a_shift;
    return p;
}

} // namespace

SkewShape direct_sum(const SkewShape& a, const SkewShape& b)
{
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    const Placement p = place(a, b);
    std::vector<int> outer, inner;
    for (int i = 0; i < b.rows(); ++i) {
        outer.push_back(b.row_end(i) + p.b_shift);
        inner.push_back(b.row_start(i) + p.b_shift);
    }
    for (int i = 0; i < a.rows(); ++i) {
        outer.push_back(a.row_end(i) + p.a_shift);
        inner.push_back(a.row_start(i) + p.a_shift);
    }
    while (!inner.empty() && inner.back() == 0)
        inner.pop_back();
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

StandardTableau direct_sum(const StandardTableau& a, const StandardTableau& b)
{
    if (a.shape().empty())
        return b;
    if (b.shape().empty())
        return a;
    auto rows = b.rows();
    rows.insert(rows.end(), a.rows().begin(), a.rows().end());
    return StandardTableau(direct_sum(a.shape(), b.shape()), std::move(rows));
}

RPartiteSkewShape rpartite_shape_of(const ColoredZigzagShape& czz, int r)
{
    std::vector<SkewShape> components(r);
    for (std::size_t i = 0; i < czz.zigzags.size(); ++i) {
        const Color c = czz.colors[i];
        if (c < 0 || c >= r)
            throw DomainError("zigzag color " + std::to_string(c) + " outside Z_" + std::to_string(r));
        components[c] = direct_sum(components[c], czz.zigzags[i].shape);
    }
    return RPartiteSkewShape(std::move(components));
}

namespace {

// Growth state of one skew component: filled[i] is the first unfilled column.
struct Growth {
    const SkewShape* shape;
    std::vector<int> filled;
    std::vector<std::vector<int>> rows;

    explicit Growth(const SkewShape& s) : shape(&s), filled(s.rows()), rows(s.rows())
    {
        for (int i = 0; i < s.rows(); ++i)
            filled[i] = s.row_start(i);
    }

    bool addable(int i) const
    {
        const int c = filled[i];
        return c < shape->row_end(i) && (i == 0 || filled[i - 1] > c);
    }
    void add(int i, int entry)
    {
        ++filled[i];
        rows[i].push_back(entry);
    }
    void remove(int i)
    {
        --filled[i];
        rows[i].pop_back();
    }
};

void check_cells(int cells, EnumerationLimits limits)
{
    if (cells > limits.max_cells)
        throw ResourceError("enumeration of " + std::to_string(cells) + " cells exceeds bound " +
                            std::to_string(limits.max_cells));
}

} // namespace

std::vector<StandardTableau> enumerate_syt(const SkewShape& s, EnumerationLimits limits)
{
    check_cells(s.cells(), limits);
    std::vector<StandardTableau> out;
    Growth g(s);
    const int n = s.cells();
    auto recurse = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.emplace_back(s, g.rows);
            return;
        }
        for (int i = 0; i < s.rows(); ++i) {
            if (!g.addable(i))
                continue;
            g.add(i, next);
            self(self, next + 1);
            g.remove(i);
        }
    };
    recurse(recurse, 1);
    return out;
}

std::vector<RPartiteTableau> enumerate_rpartite_syt(const RPartiteSkewShape& s, EnumerationLimits limits)
{
    check_cells(s.cells(), limits);
    std::vector<RPartiteTableau> out;
    std::vector<Growth> parts;
    for (const auto& c : s.components())
        parts.emplace_back(c);
    const int n = s.cells();
    auto recurse = [&](auto&& self, int next) -> void {
        if (next > n) {
            std::vector<StandardTableau> tableaux;
            for (const auto& g : parts)
                tableaux.emplace_back(*g.shape, g.rows);
            out.emplace_back(std::move(tableaux));
            return;
        }
        for (auto& g : parts) {
            for (int i = 0; i < g.shape->rows(); ++i) {
                if (!g.addable(i))
                    continue;
                g.add(i, next);
                self(self, next + 1);
                g.remove(i);
            }
        }
    };
    recurse(recurse, 1);
    return out;
}

PositionSet tableau_descent_set(const StandardTableau& q)
{
    auto entries = q.entries();
    std::sort(entries.begin(), entries.end());
    PositionSet out;
    for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
        const int i = entries[k];
        if (entries[k + 1] == i + 1 && q.row_of(i + 1) > q.row_of(i))
            out.push_back(i);
    }
    return out;
}

namespace {

struct Location {
    int component = -1;
    int row = -1;
};

std::vector<Location> locate(const RPartiteTableau& bq)
{
    std::vector<Location> where(bq.size() + 1);
    for (int j = 0; j < bq.colors_count(); ++j) {
        const auto& rows = bq.components()[j].rows();
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int e : rows[i])
                where[e] = {j, static_cast<int>(i)};
    }
    return where;
}

} // namespace

ColoredSet rpartite_descent_set(const RPartiteTableau& bq)
{
    const int n = bq.size();
    if (n == 0)
        throw DomainError("r-partite descent set of an empty tableau");
    const auto where = locate(bq);
    std::vector<ColoredInteger> pairs;
    for (int i = 1; i < n; ++i) {
        const auto& a = where[i];
        const auto& b = where[i + 1];
        if (a.component != b.component || b.row > a.row)
            pairs.push_back({i, a.component});
    }
    pairs.push_back({n, where[n].component});
    return ColoredSet(n, bq.colors_count(), std::move(pairs));
}

ColoredComposition rpartite_descent_composition(const RPartiteTableau& bq)
{
    return colored_set_to_colored_comp(rpartite_descent_set(bq));
}

ColorVector rpartite_color_vector(const RPartiteTableau& bq)
{
    const auto where = locate(bq);
    std::vector<Color> z;
    for (int i = 1; i <= bq.size(); ++i)
        z.push_back(where[i].component);
    return ColorVector(std::move(z), bq.colors_count());
}

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(prefix);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            prefix.push_back(p);
            self(self, remaining - p, p);
            prefix.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

std::vector<RPartitePartition> enumerate_rpartite_partitions(int n, int r)
{
    std::vector<RPartitePartition> out;
    std::vector<Partition> prefix;
    auto recurse = [&](auto&& self, int remaining, int component) -> void {
        if (component == r - 1) {
            for (const auto& p : enumerate_partitions(remaining)) {
                prefix.push_back(p);
                out.emplace_back(prefix);
                prefix.pop_back();
            }
            return;
        }
        for (int size = remaining; size >= 0; --size) {
            for (const auto& p : enumerate_partitions(size)) {
                prefix.push_back(p);
                self(self, remaining - size, component + 1);
                prefix.pop_back();
            }
        }
    };
    recurse(recurse, n, 0);
    return out;
}

} // namespace colqsym
