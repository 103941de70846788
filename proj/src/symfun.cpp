#include "colqsym/symfun.hpp"

#include "colqsym/errors.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace colqsym {

namespace {

void check_alphabet(int alphabet, const Widths& widths)
{
    if (alphabet < 0 || alphabet >= static_cast<int>(widths.size()))
        throw DimensionError("alphabet " + std::to_string(alphabet) + " not among the " +
                             std::to_string(widths.size()) + " given");
}

// Sum over weakly increasing chains i_1 <= ... <= i_n, position t drawing
// its variable from alphabet colors[t], with i_t < i_{t+1} where strict[t].
// Chains are truncated at each alphabet's width.
MultiAlphabetPolynomial chain_sum(const std::vector<Color>& colors, const std::vector<bool>& strict,
                                  const Widths& widths)
{
    MultiAlphabetPolynomial out(widths);
    const int n = static_cast<int>(colors.size());
    for (Color c : colors)
        check_alphabet(c, widths);
    Exponents e(out.variable_count(), 0);
    auto recurse = [&](auto&& self, int t, int low) -> void {
        if (t == n) {
            out.add_term(e, 1);
            return;
        }
        const int c = colors[t];
        for (int v = low; v <= widths[c]; ++v) {
            ++e[out.slot(c, v)];
            self(self, t + 1, (t + 1 < n && strict[t]) ? v + 1 : v);
            --e[out.slot(c, v)];
        }
    };
    recurse(recurse, 0, 1);
    return out;
}

std::vector<bool> strict_at(int n, const PositionSet& positions)
{
    std::vector<bool> strict(std::max(n - 1, 0), false);
    for (int j : positions)
        if (j >= 1 && j < n)
            strict[j - 1] = true;
    return strict;
}

std::mutex schur_cache_mutex;
std::map<std::pair<Widths, RPartitePartition>, MultiAlphabetPolynomial> schur_cache;

const MultiAlphabetPolynomial& cached_colored_schur(const RPartitePartition& shape, const Widths& widths)
{
    const auto key = std::make_pair(widths, shape);
    {
        std::lock_guard lock(schur_cache_mutex);
        auto it = schur_cache.find(key);
        if (it != schur_cache.end())
            return it->second;
    }
    MultiAlphabetPolynomial value = colored_schur(shape, widths);
    std::lock_guard lock(schur_cache_mutex);
    return schur_cache.try_emplace(key, std::move(value)).first->second;
}

} // namespace

MultiAlphabetPolynomial schur_poly(const SkewShape& shape, int alphabet, const Widths& widths)
{
    check_alphabet(alphabet, widths);
    MultiAlphabetPolynomial out(widths);
    const int width = widths[alphabet];
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.rows(); ++i)
        for (int c = shape.row_start(i); c < shape.row_end(i); ++c)
            cells.emplace_back(i, c);

    // value[i][c - row_start(i)] for the current filling
    std::vector<std::vector<int>> value(shape.rows());
    for (int i = 0; i < shape.rows(); ++i)
        value[i].assign(shape.row_length(i), 0);
    Exponents e(out.variable_count(), 0);

    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            out.add_term(e, 1);
            return;
        }
        const auto [i, c] = cells[k];
        int low = 1;
        if (c > shape.row_start(i))
            low = value[i][c - 1 - shape.row_start(i)];
        if (i > 0 && shape.contains(i - 1, c))
            low = std::max(low, value[i - 1][c - shape.row_start(i - 1)] + 1);
        for (int v = low; v <= width; ++v) {
            value[i][c - shape.row_start(i)] = v;
            ++e[out.slot(alphabet, v)];
            self(self, k + 1);
            --e[out.slot(alphabet, v)];
        }
    };
    recurse(recurse, 0);
    return out;
}

MultiAlphabetPolynomial schur_poly(const Partition& shape, int alphabet, const Widths& widths)
{
    return schur_poly(SkewShape(shape), alphabet, widths);
}

MultiAlphabetPolynomial h_poly(int k, int alphabet, const Widths& widths)
{
    if (k < 0)
        throw DomainError("h_k needs k >= 0");
    return chain_sum(std::vector<Color>(k, alphabet), std::vector<bool>(std::max(k - 1, 0), false), widths);
}

MultiAlphabetPolynomial e_poly(int k, int alphabet, const Widths& widths)
{
    if (k < 0)
        throw DomainError("e_k needs k >= 0");
    return chain_sum(std::vector<Color>(k, alphabet), std::vector<bool>(std::max(k - 1, 0), true), widths);
}

MultiAlphabetPolynomial fundamental_F(const Composition& a, int alphabet, const Widths& widths)
{
    return chain_sum(std::vector<Color>(a.size(), alphabet), strict_at(a.size(), descent_positions(a)),
                     widths);
}

MultiAlphabetPolynomial colored_F(const ColoredComposition& ce, const Widths& widths)
{
    if (static_cast<int>(widths.size()) != ce.colors_count())
        throw DimensionError("colored_F: widths must list one entry per color");
    const int n = ce.size();
    PositionSet strict_positions;
    int r_j = 0;
    for (int j = 0; j + 1 < ce.length(); ++j) {
        r_j += ce.parts()[j];
        if (ce.colors()[j] >= ce.colors()[j + 1])
            strict_positions.push_back(r_j);
    }
    return chain_sum(extend_color_vector(ce).entries(), strict_at(n, strict_positions), widths);
}

MultiAlphabetPolynomial colored_F_of_permutation(const ColoredPermutation& a, const Widths& widths)
{
    if (static_cast<int>(widths.size()) != a.colors_count())
        throw DimensionError("colored_F_of_permutation: widths must list one entry per color");
    return chain_sum(a.colors().entries(), strict_at(a.size(), steingrimsson_descent_set(a)), widths);
}

MultiAlphabetPolynomial colored_schur(const RPartiteSkewShape& shape, const Widths& widths)
{
    if (static_cast<int>(widths.size()) != shape.colors_count())
        throw DimensionError("colored_schur: widths must list one entry per color");
    auto out = MultiAlphabetPolynomial::constant(widths, 1);
    for (int j = 0; j < shape.colors_count(); ++j)
        if (!shape.components()[j].empty())
            out = out * schur_poly(shape.components()[j], j, widths);
    return out;
}

MultiAlphabetPolynomial colored_schur(const RPartitePartition& shape, const Widths& widths)
{
    return colored_schur(RPartiteSkewShape(shape), widths);
}

MultiAlphabetPolynomial ribbon_schur(const Composition& a, int alphabet, const Widths& widths)
{
    return schur_poly(zigzag_of(a).shape, alphabet, widths);
}

MultiAlphabetPolynomial colored_ribbon(const ColoredComposition& ce, const Widths& widths)
{
    if (static_cast<int>(widths.size()) != ce.colors_count())
        throw DimensionError("colored_ribbon: widths must list one entry per color");
    auto out = MultiAlphabetPolynomial::constant(widths, 1);
    for (const auto& block : rainbow_decomposition(ce).blocks)
        out = out * ribbon_schur(block.parts, block.color, widths);
    return out;
}

RPartitePartition h_partition_of(const ColoredComposition& ce)
{
    std::vector<std::vector<int>> groups(ce.colors_count());
    for (int i = 0; i < ce.length(); ++i)
        groups[ce.colors()[i]].push_back(ce.parts()[i]);
    std::vector<Partition> components;
    for (auto& g : groups) {
        std::sort(g.begin(), g.end(), std::greater<>());
        components.emplace_back(std::move(g));
    }
    return RPartitePartition(std::move(components));
}

MultiAlphabetPolynomial colored_h(const RPartitePartition& shape, const Widths& widths)
{
    if (static_cast<int>(widths.size()) != shape.colors_count())
        throw DimensionError("colored_h: widths must list one entry per color");
    auto out = MultiAlphabetPolynomial::constant(widths, 1);
    for (int j = 0; j < shape.colors_count(); ++j)
        for (int part : shape.components()[j].parts())
            out = out * h_poly(part, j, widths);
    return out;
}

MultiAlphabetPolynomial colored_h(const ColoredComposition& ce, const Widths& widths)
{
    return colored_h(h_partition_of(ce), widths);
}

MultiAlphabetPolynomial qsym_generating_function(std::span<const ColoredPermutation> elements,
                                                 const Widths& widths)
{
    MultiAlphabetPolynomial out(widths);
    if (elements.empty())
        return out;
    const int n = elements.front().size();
    const int r = elements.front().colors_count();
    std::map<ColoredComposition, Integer> counts;
    for (const auto& a : elements) {
        if (a.size() != n || a.colors_count() != r)
            throw DimensionError("qsym_generating_function: elements differ in n or r");
        counts[colored_descent_composition(a)] += 1;
    }
    for (const auto& [ce, count] : counts)
        out.add_scaled(colored_F(ce, widths), count);
    return out;
}

SchurExpansion expand_in_colored_schur(const MultiAlphabetPolynomial& p, int n)
{
    SchurExpansion out;
    out.n = n;
    out.r = p.colors_count();
    if (p.is_zero())
        return out;
    if (p.homogeneous_degree() != n)
        throw NotInSpanError("expand_in_colored_schur: polynomial is not homogeneous of degree " +
                             std::to_string(n));
    for (const auto& [e, c] : p.terms())
        for (int j = 0; j < p.colors_count(); ++j)
            if (p.alphabet_degree(e, j) > p.widths()[j])
                throw DomainError("expand_in_colored_schur: alphabet " + std::to_string(j) +
                                  " is narrower than the degree it carries");
    if (!p.is_symmetric())
        throw NotInSpanError("expand_in_colored_schur: polynomial is not symmetric in each alphabet");

    MultiAlphabetPolynomial rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().rbegin();
        std::vector<Partition> components;
        for (int j = 0; j < p.colors_count(); ++j) {
            std::vector<int> parts;
            for (int i = 1; i <= p.widths()[j]; ++i) {
                const int x = lead[rest.slot(j, i)];
                if (!parts.empty() && x > parts.back())
                    throw NotInSpanError("expand_in_colored_schur: leading exponent is not a partition");
                if (x > 0)
                    parts.push_back(x);
                else
                    parts.push_back(0);
            }
            while (!parts.empty() && parts.back() == 0)
                parts.pop_back();
            components.emplace_back(std::move(parts));
        }
        RPartitePartition shape(std::move(components));
        const Integer coefficient = c;
        rest.add_scaled(cached_colored_schur(shape, p.widths()), -coefficient);
        out.add(shape, coefficient);
    }
    return out;
}

MultiAlphabetPolynomial evaluate(const SchurExpansion& e, const Widths& widths)
{
    MultiAlphabetPolynomial out(widths);
    for (const auto& [shape, c] : e.coefficients)
        out.add_scaled(colored_schur(shape, widths), c);
    return out;
}

MultiAlphabetPolynomial evaluate(const HExpansion& e, const Widths& widths)
{
    MultiAlphabetPolynomial out(widths);
    for (const auto& [shape, c] : e.coefficients)
        out.add_scaled(colored_h(shape, widths), c);
    return out;
}

MultiAlphabetPolynomial evaluate(const FExpansion& e, const Widths& widths)
{
    MultiAlphabetPolynomial out(widths);
    for (const auto& [ce, c] : e.coefficients)
        out.add_scaled(colored_F(ce, widths), c);
    return out;
}

namespace {

// Counts straight r-partite tableaux whose colored descent composition is
// ce, keyed by shape. With `bound`, shapes are confined inside it.
std::map<RPartitePartition, Integer> guided_tableau_count(const ColoredComposition& ce,
                                                          const RPartitePartition* bound)
{
    const int n = ce.size();
    const int r = ce.colors_count();
    const ColorVector z = extend_color_vector(ce);
    std::vector<bool> descent(n + 1, false);
    for (int s : descent_positions(ce.composition()))
        descent[s] = true;

    std::vector<std::vector<int>> rows(r);
    std::map<RPartitePartition, Integer> counts;
    auto recurse = [&](auto&& self, int i, int previous_row) -> void {
        if (i > n) {
            std::vector<Partition> components;
            for (const auto& lengths : rows)
                components.emplace_back(lengths);
            counts[RPartitePartition(std::move(components))] += 1;
            return;
        }
        const Color c = z[i];
        const bool same_color = i > 1 && z[i - 1] == c;
        auto& lengths = rows[c];
        const int height = static_cast<int>(lengths.size());
        for (int k = 0; k <= height; ++k) {
            const int current = k < height ? lengths[k] : 0;
            if (k > 0 && lengths[k - 1] <= current)
                continue;
            if (bound && current >= bound->components()[c].row(k))
                continue;
            if (same_color && ((k > previous_row) != descent[i - 1]))
                continue;
            if (k == height)
                lengths.push_back(1);
            else
                ++lengths[k];
            self(self, i + 1, k);
            if (k == height)
                lengths.pop_back();
            else
                --lengths[k];
        }
    };
    recurse(recurse, 1, -1);
    return counts;
}

} // namespace

Integer schur_coeff_by_tableau_count(const ColoredComposition& ce, const RPartitePartition& shape)
{
    if (shape.colors_count() != ce.colors_count())
        throw DimensionError("schur_coeff_by_tableau_count: r differs");
    if (shape.size() != ce.size())
        return 0;
    const auto counts = guided_tableau_count(ce, &shape);
    auto it = counts.find(shape);
    return it == counts.end() ? Integer(0) : it->second;
}

SchurExpansion schur_expansion_by_tableau_count(const ColoredComposition& ce)
{
    SchurExpansion out;
    out.n = ce.size();
    out.r = ce.colors_count();
    for (const auto& [shape, count] : guided_tableau_count(ce, nullptr))
        out.add(shape, count);
    return out;
}

HExpansion ribbon_h_expansion(const ColoredComposition& ce)
{
    HExpansion out;
    out.n = ce.size();
    out.r = ce.colors_count();
    for (const auto& coarser : coarsenings(ce)) {
        const int sign = (ce.length() - coarser.length()) % 2 == 0 ? 1 : -1;
        out.add(h_partition_of(coarser), sign);
    }
    return out;
}

FExpansion ribbon_f_expansion(const ColoredComposition& ce)
{
    FExpansion out;
    out.n = ce.size();
    out.r = ce.colors_count();
    for (const auto& a : conj_inverse_descent_class(ce))
        out.coefficients[colored_descent_composition(a)] += 1;
    return out;
}

} // namespace colqsym
