#pragma once

#include "colqsym/compositions.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace colqsym {

// One-line notation pi_1 ... pi_n of a permutation of [n].
class Permutation {
public:
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    const std::vector<int>& word() const noexcept { return word_; }
    int size() const noexcept { return static_cast<int>(word_.size()); }
    // pi_i for 1 <= i <= n.
    int operator()(int i) const { return word_[i - 1]; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

// (pi tau)(i) = pi(tau(i)), i.e. evaluated right to left.
Permutation compose(const Permutation& pi, const Permutation& tau);
Permutation inverse(const Permutation& pi);

PositionSet descent_set(const Permutation& pi);
Composition descent_composition(const Permutation& pi);

// Element (pi, z) of the wreath product Z_r wr S_n, written in window
// notation pi_1^{z_1} ... pi_n^{z_n}.
class ColoredPermutation {
public:
    ColoredPermutation(Permutation perm, ColorVector colors);

    static ColoredPermutation identity(int n, int r);

    const Permutation& perm() const noexcept { return perm_; }
    const ColorVector& colors() const noexcept { return colors_; }
    int size() const noexcept { return perm_.size(); }
    int colors_count() const noexcept { return colors_.colors_count(); }

    auto operator<=>(const ColoredPermutation&) const = default;

private:
    Permutation perm_;
    ColorVector colors_;
};

// tau(z) = (z_{tau_1}, ..., z_{tau_n}).
ColorVector permute_colors(const Permutation& tau, const ColorVector& z);

// (pi, z)(tau, w) = (pi tau, w + tau(z)) with colors added mod r.
ColoredPermutation multiply(const ColoredPermutation& a, const ColoredPermutation& b);
// (pi^-1, -pi^-1(z)).
ColoredPermutation inverse(const ColoredPermutation& a);
// (pi, -z).
ColoredPermutation conjugate(const ColoredPermutation& a);
// (pi^-1, pi^-1(z)), the inverse of the conjugate.
ColoredPermutation conj_inverse(const ColoredPermutation& a);

// Ends of the maximal increasing monochromatic runs, with their colors.
ColoredSet colored_descent_set(const ColoredPermutation& a);
ColoredComposition colored_descent_composition(const ColoredPermutation& a);

// {i in [n] : z_i > z_{i+1}, or z_i = z_{i+1} and i in Des(pi)} with
// z_{n+1} = 0. Here Des(pi) is the classical descent set, so n belongs to
// the result exactly when z_n > 0.
PositionSet steingrimsson_descent_set(const ColoredPermutation& a);

// Largest n accepted by descent_class and conj_inverse_descent_class.
inline constexpr int kMaxDescentClassSize = 10;

// All a with co(a) = ce, sorted. The color vector of every member equals
// the extended color vector of ce, so only pi is searched.
std::vector<ColoredPermutation> descent_class(const ColoredComposition& ce);
// All a with co(conj_inverse(a)) = ce, sorted.
std::vector<ColoredPermutation> conj_inverse_descent_class(const ColoredComposition& ce);

std::vector<Permutation> enumerate_permutations(int n);

// n! r^n.
std::uint64_t colored_permutation_count(int n, int r);

// The index-th element of S_{n,r} in lexicographic order on (word, colors).
ColoredPermutation colored_permutation_at(int n, int r, std::uint64_t index);

// Visits S_{n,r} in lexicographic order, split across `jobs` workers.
// `visit(index, element)` may be called concurrently for distinct indices.
void for_each_colored_permutation(int n, int r, unsigned jobs,
                                  const std::function<void(std::uint64_t, const ColoredPermutation&)>& visit);

} // namespace colqsym
