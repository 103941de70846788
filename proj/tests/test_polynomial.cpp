#include "colqsym/errors.hpp"
#include "colqsym/polynomial.hpp"

#include <doctest.h>

using namespace colqsym;
using P = MultiAlphabetPolynomial;

TEST_CASE("ring operations")
{
    const std::vector<int> w{2};
    const P x1 = P::variable(w, 0, 1);
    const P x2 = P::variable(w, 0, 2);
    const P product = (x1 + x2) * (x1 - x2);
    CHECK(product == x1 * x1 - x2 * x2);
    CHECK(product.term_count() == 2);
    CHECK(product.coefficient({2, 0}) == 1);
    CHECK(product.coefficient({0, 2}) == -1);
    CHECK(product.coefficient({1, 1}) == 0);
    CHECK(product.homogeneous_degree() == 2);

    CHECK((x1 - x1).is_zero());
    CHECK_FALSE((x1 - x1).homogeneous_degree());
    CHECK_FALSE((x1 + P::constant(w, 1)).homogeneous_degree());
    CHECK(P::constant(w, 0).is_zero());
    CHECK(x1 * Integer(3) == x1 + x1 + x1);
    CHECK(-x1 == x1 * Integer(-1));

    P acc(w);
    acc.add_scaled(x2, Integer(5));
    acc.add_scaled(x2, Integer(-5));
    CHECK(acc.is_zero());
}

TEST_CASE("coefficients beyond 64 bits stay exact")
{
    const std::vector<int> w{1};
    P p = P::constant(w, 1) + P::variable(w, 0, 1);
    P q = P::constant(w, 1);
    for (int i = 0; i < 100; ++i)
        q = q * p;
    // binomial(100, 50)
    CHECK(q.coefficient({50}) == Integer("100891344545564193334812497256"));
}

TEST_CASE("symmetry in each alphabet")
{
    const std::vector<int> w{2, 2};
    const P x1 = P::variable(w, 0, 1);
    const P x2 = P::variable(w, 0, 2);
    const P y1 = P::variable(w, 1, 1);
    const P y2 = P::variable(w, 1, 2);

    const P sym = (x1 + x2) * (y1 * y2);
    CHECK(sym.is_symmetric_in(0));
    CHECK(sym.is_symmetric_in(1));
    CHECK(sym.is_symmetric());

    const P mixed = x1 * (y1 + y2);
    CHECK_FALSE(mixed.is_symmetric_in(0));
    CHECK(mixed.is_symmetric_in(1));
    CHECK_FALSE(mixed.is_symmetric());
    CHECK(mixed.swap_variables(0, 1) == x2 * (y1 + y2));
    CHECK(mixed.alphabet_degree(mixed.terms().begin()->first, 1) == 1);
}

TEST_CASE("errors")
{
    const P a = P::variable({2}, 0, 1);
    const P b = P::variable({3}, 0, 1);
    CHECK_THROWS_AS(a + b, DimensionError);
    CHECK_THROWS_AS(a * b, DimensionError);
    CHECK_THROWS_AS(P::variable({2}, 0, 3), DomainError);
    CHECK_THROWS_AS(P::variable({2}, 1, 1), DomainError);
    CHECK_THROWS_AS(P(std::vector<int>{}), DomainError);

    P big({1});
    big.add_term({200}, 1);
    CHECK_THROWS_AS(big * big, ResourceError);
    P wrong({2});
    CHECK_THROWS_AS(wrong.add_term({1}, 1), DimensionError);
}

TEST_CASE("text form")
{
    const std::vector<int> w{2, 1};
    const P x1 = P::variable(w, 0, 1);
    const P x2 = P::variable(w, 0, 2);
    const P y1 = P::variable(w, 1, 1);
    CHECK(P(w).to_string() == "0");
    CHECK(P::constant(w, 7).to_string() == "7");
    CHECK((x1 * x1 * y1 * Integer(2) - x2).to_string() == "2*x1^2*y1 - x2");
    CHECK((-x2).to_string() == "-x2");
}
