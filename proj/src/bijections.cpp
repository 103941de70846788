#include "colqsym/bijections.hpp"

#include "colqsym/errors.hpp"

#include <algorithm>

namespace colqsym {

namespace {

// Places letters into Z_alpha in reading order.
StandardTableau fill_ribbon(const std::vector<int>& letters, const Composition& a)
{
    const ZigzagShape z = zigzag_of(a);
    const int k = a.length();
    std::vector<std::vector<int>> rows(k);
    std::size_t next = 0;
    for (int b = 0; b < k; ++b) {
        auto& row = rows[k - 1 - b];
        for (int c = 0; c < a.parts()[b]; ++c)
            row.push_back(letters[next++]);
    }
    return StandardTableau(z.shape, std::move(rows));
}

// Reading word of a block of rows that form a ribbon, bottom row first.
std::vector<int> read_rows(const std::vector<std::vector<int>>& rows, std::size_t first, std::size_t count)
{
    std::vector<int> out;
    for (std::size_t i = first + count; i > first; --i)
        out.insert(out.end(), rows[i - 1].begin(), rows[i - 1].end());
    return out;
}

StandardTableau straight_tableau(const std::vector<std::vector<int>>& rows)
{
    std::vector<int> lengths;
    for (const auto& row : rows)
        lengths.push_back(static_cast<int>(row.size()));
    return StandardTableau(SkewShape(Partition(std::move(lengths))), rows);
}

} // namespace

Permutation reading_word(const StandardTableau& q)
{
    ribbon_composition(q.shape());
    return Permutation(read_rows(q.rows(), 0, q.rows().size()));
}

StandardTableau reading_word_inverse(const Permutation& p, const Composition& a)
{
    if (p.size() != a.size() || descent_composition(p) != a)
        throw DomainError("reading_word_inverse: descent composition of the word differs from the ribbon");
    return fill_ribbon(p.word(), a);
}

RPartiteTableau colored_class_to_tableau(const ColoredPermutation& a)
{
    const int r = a.colors_count();
    const auto rainbow = rainbow_decomposition(colored_descent_composition(a));
    std::vector<StandardTableau> components(r);
    std::size_t position = 0;
    for (const auto& block : rainbow.blocks) {
        std::vector<int> letters(a.perm().word().begin() + static_cast<std::ptrdiff_t>(position),
                                 a.perm().word().begin() +
                                     static_cast<std::ptrdiff_t>(position + block.parts.size()));
        position += block.parts.size();
        components[block.color] = direct_sum(components[block.color], fill_ribbon(letters, block.parts));
    }
    return RPartiteTableau(std::move(components));
}

ColoredPermutation colored_tableau_to_class(const RPartiteTableau& bq, const ColoredComposition& ce)
{
    const int r = ce.colors_count();
    if (bq.colors_count() != r || bq.size() != ce.size())
        throw DomainError("colored_tableau_to_class: tableau and composition differ in n or r");
    if (bq.shape() != rpartite_shape_of(colored_zigzag_of(ce), r))
        throw DomainError("colored_tableau_to_class: tableau shape is not the colored zigzag shape of the composition");

    // Component j stacks its blocks bottom-up in block order, so the first
    // block of color j occupies the bottom rows.
    std::vector<std::size_t> consumed(r, 0);
    std::vector<int> word;
    for (const auto& block : rainbow_decomposition(ce).blocks) {
        const auto& rows = bq.components()[block.color].rows();
        const std::size_t height = static_cast<std::size_t>(block.parts.length());
        const std::size_t first = rows.size() - consumed[block.color] - height;
        const auto letters = read_rows(rows, first, height);
        word.insert(word.end(), letters.begin(), letters.end());
        consumed[block.color] += height;
    }
    return ColoredPermutation(Permutation(std::move(word)), extend_color_vector(ce));
}

int row_insert(std::vector<std::vector<int>>& rows, int value)
{
    for (std::size_t i = 0;; ++i) {
        if (i == rows.size()) {
            rows.push_back({value});
            return static_cast<int>(i);
        }
        auto& row = rows[i];
        auto bump = std::upper_bound(row.begin(), row.end(), value);
        if (bump == row.end()) {
            row.push_back(value);
            return static_cast<int>(i);
        }
        std::swap(*bump, value);
    }
}

TableauPair colored_rsk(const ColoredPermutation& a)
{
    const int r = a.colors_count();
    std::vector<std::vector<std::vector<int>>> p(r), q(r);
    for (int i = 1; i <= a.size(); ++i) {
        const Color c = a.colors()[i];
        const int row = row_insert(p[c], a.perm()(i));
        if (row == static_cast<int>(q[c].size()))
            q[c].emplace_back();
        q[c][row].push_back(i);
    }
    std::vector<StandardTableau> pt, qt;
    for (int c = 0; c < r; ++c) {
        pt.push_back(straight_tableau(p[c]));
        qt.push_back(straight_tableau(q[c]));
    }
    return {RPartiteTableau(std::move(pt)), RPartiteTableau(std::move(qt))};
}

ColoredPermutation colored_rsk_inverse(const RPartiteTableau& p, const RPartiteTableau& q)
{
    if (p.colors_count() != q.colors_count() || p.size() != q.size())
        throw DomainError("colored_rsk_inverse: tableaux differ in n or r");
    if (p.shape() != q.shape())
        throw DomainError("colored_rsk_inverse: tableaux have different shapes");
    for (const auto& s : p.shape().components())
        if (!s.is_straight())
            throw DomainError("colored_rsk_inverse: shapes must be straight");

    const int r = p.colors_count();
    const int n = p.size();
    std::vector<std::vector<std::vector<int>>> prow(r), qrow(r);
    for (int c = 0; c < r; ++c) {
        prow[c] = p.components()[c].rows();
        qrow[c] = q.components()[c].rows();
    }
    std::vector<int> word(n);
    std::vector<Color> colors(n);
    for (int i = n; i >= 1; --i) {
        int color = -1;
        std::size_t row = 0;
        for (int c = 0; c < r && color < 0; ++c)
            for (std::size_t k = 0; k < qrow[c].size(); ++k)
                if (!qrow[c][k].empty() && qrow[c][k].back() == i) {
                    color = c;
                    row = k;
                    break;
                }
        if (color < 0)
            throw DomainError("colored_rsk_inverse: recording tableau entry is not at a row end");
        qrow[color][row].pop_back();
        auto& rows = prow[color];
        int value = rows[row].back();
        rows[row].pop_back();
        for (std::size_t k = row; k > 0; --k) {
            auto& above = rows[k - 1];
            auto it = std::lower_bound(above.begin(), above.end(), value);
            --it;
            std::swap(*it, value);
        }
        if (rows[row].empty())
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(row));
        if (qrow[color][row].empty())
            qrow[color].erase(qrow[color].begin() + static_cast<std::ptrdiff_t>(row));
        word[i - 1] = value;
        colors[i - 1] = color;
    }
    return ColoredPermutation(Permutation(std::move(word)), ColorVector(std::move(colors), r));
}

} // namespace colqsym
