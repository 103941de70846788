#include "colqsym/permutations.hpp"

#include "colqsym/errors.hpp"
#include "colqsym/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace colqsym {

namespace {

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t power(std::uint64_t base, int exponent)
{
    std::uint64_t p = 1;
    for (int i = 0; i < exponent; ++i)
        p *= base;
    return p;
}

// Lexicographic unranking via the factorial number system.
std::vector<int> permutation_at(int n, std::uint64_t rank)
{
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> word;
    word.reserve(n);
    for (int i = n; i >= 1; --i) {
        const std::uint64_t block = factorial(i - 1);
        const auto pick = static_cast<std::size_t>(rank / block);
        rank %= block;
        word.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return word;
}

void check_same_group(const ColoredPermutation& a, const ColoredPermutation& b)
{
    if (a.size() != b.size() || a.colors_count() != b.colors_count())
        throw DimensionError("colored permutations differ in n or r");
}

} // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word))
{
    std::vector<int> sorted = word_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw DomainError("word is not a permutation of [" + std::to_string(word_.size()) + "]");
}

Permutation Permutation::identity(int n)
{
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    return Permutation(std::move(word));
}

Permutation compose(const Permutation& pi, const Permutation& tau)
{
    if (pi.size() != tau.size())
        throw DimensionError("compose: permutations of different size");
    std::vector<int> word(pi.size());
    for (int i = 1; i <= pi.size(); ++i)
        word[i - 1] = pi(tau(i));
    return Permutation(std::move(word));
}

Permutation inverse(const Permutation& pi)
{
    std::vector<int> word(pi.size());
    for (int i = 1; i <= pi.size(); ++i)
        word[pi(i) - 1] = i;
    return Permutation(std::move(word));
}

PositionSet descent_set(const Permutation& pi)
{
    PositionSet out;
    for (int i = 1; i < pi.size(); ++i)
        if (pi(i) > pi(i + 1))
            out.push_back(i);
    return out;
}

Composition descent_composition(const Permutation& pi)
{
    return composition_of_set(pi.size(), descent_set(pi));
}

ColoredPermutation::ColoredPermutation(Permutation perm, ColorVector colors)
    : perm_(std::move(perm)), colors_(std::move(colors))
{
    if (perm_.size() != colors_.size())
        throw DomainError("colored permutation: word and color vector lengths differ");
}

ColoredPermutation ColoredPermutation::identity(int n, int r)
{
    return ColoredPermutation(Permutation::identity(n), ColorVector(std::vector<Color>(n, 0), r));
}

ColorVector permute_colors(const Permutation& tau, const ColorVector& z)
{
    if (tau.size() != z.size())
        throw DimensionError("permute_colors: length mismatch");
    std::vector<Color> out(z.size());
    for (int i = 1; i <= tau.size(); ++i)
        out[i - 1] = z[tau(i)];
    return ColorVector(std::move(out), z.colors_count());
}

ColoredPermutation multiply(const ColoredPermutation& a, const ColoredPermutation& b)
{
    check_same_group(a, b);
    const int r = a.colors_count();
    const ColorVector moved = permute_colors(b.perm(), a.colors());
    std::vector<Color> colors(a.size());
    for (int i = 1; i <= a.size(); ++i)
        colors[i - 1] = (b.colors()[i] + moved[i]) % r;
    return ColoredPermutation(compose(a.perm(), b.perm()), ColorVector(std::move(colors), r));
}

ColoredPermutation inverse(const ColoredPermutation& a)
{
    const int r = a.colors_count();
    const Permutation inv = inverse(a.perm());
    std::vector<Color> colors = permute_colors(inv, a.colors()).entries();
    for (Color& c : colors)
        c = (r - c) % r;
    return ColoredPermutation(inv, ColorVector(std::move(colors), r));
}

ColoredPermutation conjugate(const ColoredPermutation& a)
{
    const int r = a.colors_count();
    std::vector<Color> colors = a.colors().entries();
    for (Color& c : colors)
        c = (r - c) % r;
    return ColoredPermutation(a.perm(), ColorVector(std::move(colors), r));
}

ColoredPermutation conj_inverse(const ColoredPermutation& a)
{
    const Permutation inv = inverse(a.perm());
    return ColoredPermutation(inv, permute_colors(inv, a.colors()));
}

ColoredSet colored_descent_set(const ColoredPermutation& a)
{
    const int n = a.size();
    const auto& pi = a.perm();
    const auto& z = a.colors();
    std::vector<ColoredInteger> pairs;
    for (int i = 1; i < n; ++i)
        if (z[i] != z[i + 1] || pi(i) > pi(i + 1))
            pairs.push_back({i, z[i]});
    pairs.push_back({n, z[n]});
    return ColoredSet(n, a.colors_count(), std::move(pairs));
}

ColoredComposition colored_descent_composition(const ColoredPermutation& a)
{
    return colored_set_to_colored_comp(colored_descent_set(a));
}

PositionSet steingrimsson_descent_set(const ColoredPermutation& a)
{
    // z_{n+1} = 0 is a sentinel; the equal-color clause uses the classical
    // Des(pi), a subset of [n-1], so that n is a descent iff z_n > 0.
    const int n = a.size();
    auto color = [&](int i) { return i <= n ? a.colors()[i] : 0; };
    PositionSet out;
    for (int i = 1; i <= n; ++i) {
        const bool classical = i < n && a.perm()(i) > a.perm()(i + 1);
        if (color(i) > color(i + 1) || (color(i) == color(i + 1) && classical))
            out.push_back(i);
    }
    return out;
}

std::vector<ColoredPermutation> descent_class(const ColoredComposition& ce)
{
    const int n = ce.size();
    if (n > kMaxDescentClassSize)
        throw ResourceError("descent_class: n = " + std::to_string(n) + " exceeds bound " +
                            std::to_string(kMaxDescentClassSize));
    const ColorVector z = extend_color_vector(ce);
    std::vector<ColoredPermutation> out;
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    do {
        ColoredPermutation a(Permutation(word), z);
        if (colored_descent_composition(a) == ce)
            out.push_back(std::move(a));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<ColoredPermutation> conj_inverse_descent_class(const ColoredComposition& ce)
{
    std::vector<ColoredPermutation> out;
    for (const auto& a : descent_class(ce))
        out.push_back(conj_inverse(a));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> enumerate_permutations(int n)
{
    std::vector<Permutation> out;
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::uint64_t colored_permutation_count(int n, int r)
{
    return factorial(n) * power(static_cast<std::uint64_t>(r), n);
}

ColoredPermutation colored_permutation_at(int n, int r, std::uint64_t index)
{
    if (n < 1 || r < 1)
        throw DomainError("colored_permutation_at needs n, r >= 1");
    if (index >= colored_permutation_count(n, r))
        throw DomainError("colored permutation index out of range");
    const std::uint64_t colorings = power(static_cast<std::uint64_t>(r), n);
    std::uint64_t color_rank = index % colorings;
    std::vector<Color> colors(n);
    for (int i = n - 1; i >= 0; --i) {
        colors[i] = static_cast<Color>(color_rank % static_cast<std::uint64_t>(r));
        color_rank /= static_cast<std::uint64_t>(r);
    }
    return ColoredPermutation(Permutation(permutation_at(n, index / colorings)),
                              ColorVector(std::move(colors), r));
}

void for_each_colored_permutation(int n, int r, unsigned jobs,
                                  const std::function<void(std::uint64_t, const ColoredPermutation&)>& visit)
{
    if (n < 1 || r < 1)
        throw DomainError("for_each_colored_permutation needs n, r >= 1");
    const std::uint64_t colorings = power(static_cast<std::uint64_t>(r), n);
    parallel_for(static_cast<std::size_t>(factorial(n)), jobs, [&](std::size_t begin, std::size_t end) {
        std::vector<int> word = permutation_at(n, begin);
        for (std::size_t rank = begin; rank < end; ++rank) {
            const Permutation pi(word);
            std::vector<Color> colors(n, 0);
            for (std::uint64_t c = 0; c < colorings; ++c) {
                visit(rank * colorings + c, ColoredPermutation(pi, ColorVector(colors, r)));
                int k = n - 1;
                while (k >= 0 && colors[k] == r - 1)
                    colors[k--] = 0;
                if (k >= 0)
                    ++colors[k];
            }
            std::next_permutation(word.begin(), word.end());
        }
    });
}

} // namespace colqsym
