#include "colqsym/errors.hpp"
#include "colqsym/permutations.hpp"

#include "support.hpp"

#include <set>

using namespace colqsym;
using test::cc;
using test::cp;

namespace {

// Monomial matrix P_pi D(z) over the r-th roots of unity. Entry (i, j) holds
// the exponent k of omega^k, or -1 for zero.
using RootMatrix = std::vector<std::vector<int>>;

RootMatrix matrix_of(const ColoredPermutation& a)
{
    const int n = a.size();
    RootMatrix m(n, std::vector<int>(n, -1));
    for (int i = 1; i <= n; ++i)
        m[a.perm()(i) - 1][i - 1] = a.colors()[i];
    return m;
}

RootMatrix product(const RootMatrix& a, const RootMatrix& b, int r)
{
    const std::size_t n = a.size();
    RootMatrix out(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a[i][k] >= 0 && b[k][j] >= 0) {
                    REQUIRE(out[i][j] < 0);
                    out[i][j] = (a[i][k] + b[k][j]) % r;
                }
    return out;
}

std::vector<ColoredPermutation> all_of(int n, int r)
{
    std::vector<ColoredPermutation> out;
    for (std::uint64_t i = 0; i < colored_permutation_count(n, r); ++i)
        out.push_back(colored_permutation_at(n, r, i));
    return out;
}

} // namespace

TEST_CASE("classical permutations")
{
    CHECK(descent_set(test::perm({1, 3, 2, 4})) == PositionSet{2});
    CHECK(descent_set(Permutation::identity(5)).empty());
    CHECK(descent_set(test::perm({4, 3, 2, 1})) == PositionSet{1, 2, 3});
    CHECK(descent_composition(test::perm({1, 3, 2, 4})) == test::comp({2, 2}));
    CHECK(inverse(test::perm({2, 3, 1})) == test::perm({3, 1, 2}));
    CHECK(compose(test::perm({2, 3, 1}), test::perm({2, 1, 3})) == test::perm({3, 2, 1}));
    CHECK_THROWS_AS(Permutation({1, 1}), DomainError);
    CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
    CHECK(enumerate_permutations(4).size() == 24);
}

TEST_CASE("group law examples")
{
    const auto id3 = ColoredPermutation::identity(3, 2);
    const auto a = cp("2^1,1^0,3^1", 2);
    CHECK(multiply(a, id3) == a);
    CHECK(multiply(id3, a) == a);
    CHECK(multiply(a, inverse(a)) == id3);

    const auto x = cp("2^1,1^0", 2);
    const auto y = cp("2^0,1^1", 2);
    CHECK(multiply(x, y) == ColoredPermutation::identity(2, 2));
    CHECK(inverse(x) == cp("2^0,1^1", 2));
    CHECK(inverse(ColoredPermutation::identity(4, 3)) == ColoredPermutation::identity(4, 3));

    CHECK(conjugate(cp("1^1,2^2,3^0", 3)) == cp("1^2,2^1,3^0", 3));
    CHECK(conjugate(cp("3^0,1^0,2^0", 1)) == cp("3^0,1^0,2^0", 1));
    CHECK(conjugate(cp("2^1,1^1", 2)) == cp("2^1,1^1", 2));

    CHECK_THROWS_AS(multiply(a, ColoredPermutation::identity(3, 3)), DimensionError);
    CHECK_THROWS_AS(multiply(a, ColoredPermutation::identity(2, 2)), DimensionError);
}

TEST_CASE("multiply agrees with the monomial matrix realization")
{
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto all = all_of(n, r);
            for (const auto& a : all)
                for (const auto& b : all)
                    CHECK(matrix_of(multiply(a, b)) == product(matrix_of(a), matrix_of(b), r));
        }
}

TEST_CASE("group axioms on S_{3,3}")
{
    const auto all = all_of(3, 3);
    CHECK(all.size() == 162);
    CHECK(std::set<ColoredPermutation>(all.begin(), all.end()).size() == 162);
    const auto id = ColoredPermutation::identity(3, 3);
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& a = all[i];
        CHECK(multiply(a, inverse(a)) == id);
        CHECK(multiply(inverse(a), a) == id);
        CHECK(inverse(inverse(a)) == a);
        CHECK(conj_inverse(conj_inverse(a)) == a);
        const auto& b = all[(i * 7 + 3) % all.size()];
        const auto& c = all[(i * 13 + 5) % all.size()];
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("conjugate inverse")
{
    const auto a = cp("2^0,3^0,7^1,10^1,5^1,6^3,1^1,8^1,9^1,4^2", 4);
    CHECK(conj_inverse(a) == cp("7^1,1^0,2^0,10^2,5^1,6^3,3^1,8^1,9^1,4^1", 4));
    CHECK(conj_inverse(ColoredPermutation::identity(4, 2)) == ColoredPermutation::identity(4, 2));
    for (const auto& x : all_of(4, 2)) {
        CHECK(conj_inverse(x) == inverse(conjugate(x)));
        CHECK(conj_inverse(x) == conjugate(inverse(x)));
    }
}

TEST_CASE("colored descent set and composition")
{
    // Runs 2 4 | 6 | 1 5 | 10 | 3 7 9 | 8. Positions 8 and 9 hold 7^1 9^1, an
    // ascent of constant color, so 8 is not in the set.
    const auto a = cp("2^3,4^3,6^1,1^1,5^1,10^3,3^1,7^1,9^1,8^0", 4);
    CHECK(colored_descent_set(a) == test::cs(10, 4, {{2, 3}, {3, 1}, {5, 1}, {6, 3}, {9, 1}, {10, 0}}));
    CHECK(colored_descent_composition(a) == cc("2^3,1^1,2^1,1^3,3^1,1^0", 4));
    // Swapping 7 and 9 makes 8 a descent.
    const auto b = cp("2^3,4^3,6^1,1^1,5^1,10^3,3^1,9^1,7^1,8^0", 4);
    CHECK(colored_descent_set(b) == test::cs(10, 4, {{2, 3}, {3, 1}, {5, 1}, {6, 3}, {8, 1}, {9, 1}, {10, 0}}));

    CHECK(colored_descent_set(ColoredPermutation::identity(5, 1)) == test::cs(5, 1, {{5, 0}}));
    CHECK(colored_descent_composition(cp("1^2,2^2,3^2", 3)) == cc("3^2", 3));
    CHECK(colored_descent_composition(cp("2^1,1^0", 2)) == cc("1^1,1^0", 2));

    for (const auto& x : all_of(3, 3)) {
        const auto s = colored_descent_set(x);
        CHECK(s.pairs().back() == ColoredInteger{3, x.colors()[3]});
        CHECK(extend_color_vector(s) == x.colors());
    }
}

TEST_CASE("Steingrimsson descent set")
{
    CHECK(steingrimsson_descent_set(ColoredPermutation::identity(4, 1)).empty());
    CHECK(steingrimsson_descent_set(cp("1^1,2^0", 2)) == PositionSet{1});
    for (const auto& x : all_of(3, 3)) {
        const auto s = steingrimsson_descent_set(x);
        const bool has_n = !s.empty() && s.back() == 3;
        CHECK(has_n == (x.colors()[3] > 0));
    }
    for (const auto& p : enumerate_permutations(4)) {
        const ColoredPermutation x(p, ColorVector(std::vector<int>(4, 0), 1));
        CHECK(steingrimsson_descent_set(x) == descent_set(p));
    }
}

TEST_CASE("descent classes")
{
    std::vector<Permutation> words;
    for (const auto& x : descent_class(cc("2^0,2^0", 1)))
        words.push_back(x.perm());
    const std::vector<Permutation> expected = {
        test::perm({1, 3, 2, 4}), test::perm({1, 4, 2, 3}), test::perm({2, 3, 1, 4}),
        test::perm({2, 4, 1, 3}), test::perm({3, 4, 1, 2})};
    CHECK(words == expected);

    words.clear();
    for (const auto& x : conj_inverse_descent_class(cc("2^0,2^0", 1)))
        words.push_back(x.perm());
    const std::vector<Permutation> expected_inverse = {
        test::perm({1, 3, 2, 4}), test::perm({1, 3, 4, 2}), test::perm({3, 1, 2, 4}),
        test::perm({3, 1, 4, 2}), test::perm({3, 4, 1, 2})};
    CHECK(words == expected_inverse);

    CHECK(descent_class(cc("4^2", 3)) == std::vector<ColoredPermutation>{cp("1^2,2^2,3^2,4^2", 3)});
    CHECK(conj_inverse_descent_class(cc("3^0", 2)).size() == 1);

    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r) {
            std::set<ColoredPermutation> seen;
            std::size_t total = 0;
            for (const auto& ce : enumerate_colored_compositions(n, r)) {
                const auto cls = descent_class(ce);
                CHECK(cls.size() == conj_inverse_descent_class(ce).size());
                for (const auto& x : cls)
                    CHECK(colored_descent_composition(x) == ce);
                total += cls.size();
                seen.insert(cls.begin(), cls.end());
            }
            CHECK(total == colored_permutation_count(n, r));
            CHECK(seen.size() == total);
        }
    CHECK_THROWS_AS(descent_class(cc("11^0", 1)), ResourceError);
}

TEST_CASE("parallel enumeration visits every element once")
{
    const std::uint64_t total = colored_permutation_count(4, 2);
    std::vector<int> hits(total, 0);
    for_each_colored_permutation(4, 2, 4, [&](std::uint64_t i, const ColoredPermutation& a) {
        CHECK(a == colored_permutation_at(4, 2, i));
        ++hits[i];
    });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}
