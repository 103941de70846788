#include "colqsym/errors.hpp"
#include "colqsym/json_io.hpp"
#include "colqsym/text_io.hpp"

#include "support.hpp"

using namespace colqsym;
using test::bll;
using test::cc;
using test::cp;

namespace {

std::string token_of(const char* text, bool permutation, std::optional<int> r = std::nullopt)
{
    try {
        if (permutation)
            parse_colored_permutation(text, r);
        else
            parse_colored_composition(text, r);
    } catch (const ParseError& e) {
        return e.token();
    }
    return "<no error>";
}

} // namespace

TEST_CASE("caret text round trips")
{
    const auto ce = parse_colored_composition(" 2^0, 2^1 ,1^1,1^3,3^1,1^2 ");
    CHECK(ce.colors_count() == 4);
    CHECK(format(ce) == "2^0,2^1,1^1,1^3,3^1,1^2");
    CHECK(parse_colored_composition("2,2").colors_count() == 1);
    CHECK(parse_colored_composition("2,2", 3).colors_count() == 3);
    CHECK(format(parse_colored_composition("2,2")) == "2^0,2^0");

    const auto a = parse_colored_permutation("2^0,3^0,7^1,10^1,5^1,6^3,1^1,8^1,9^1,4^2");
    CHECK(a.size() == 10);
    CHECK(format(a) == "2^0,3^0,7^1,10^1,5^1,6^3,1^1,8^1,9^1,4^2");
    CHECK(parse_colored_permutation(format(a), 4) == a);

    for (const auto& x : enumerate_colored_compositions(4, 3))
        CHECK(parse_colored_composition(format(x), 3) == x);

    CHECK(format(test::cs(10, 4, {{2, 0}, {4, 1}, {10, 2}})) == "{2^0,4^1,10^2}");
    CHECK(format(test::part({3, 2, 1})) == "(3,2,1)");
    CHECK(format(bll({{2}, {}, {1, 1}})) == "((2),(),(1,1))");
}

TEST_CASE("parse errors name the offending token")
{
    CHECK(token_of("2^0,2x", false) == "2x");
    CHECK(token_of("2^0,^1", false) == "^1");
    CHECK(token_of("2^0,0^1", false) == "0^1");
    CHECK(token_of("2^0,2^5", false, 3) == "2^5");
    CHECK(token_of("1,1", true) == "1^0");
    CHECK(token_of("1,3", true) == "3^0");
    CHECK(token_of("1,,2", true) == "");
    CHECK_THROWS_AS(parse_colored_composition(""), ParseError);
    CHECK_THROWS_AS(parse_colored_permutation("   "), ParseError);
}

TEST_CASE("JSON schemas")
{
    CHECK(dump(encode(cc("2^0,2^1", 2))) == R"({"n":4,"r":2,"parts":[2,2],"colors":[0,1]})");
    CHECK(dump(encode(cp("2^1,1^0", 2))) == R"({"n":2,"r":2,"word":[2,1],"colors":[1,0]})");
    CHECK(dump(encode(test::cs(2, 2, {{1, 1}, {2, 0}}))) == R"({"n":2,"r":2,"pairs":[[1,1],[2,0]]})");
    CHECK(dump(encode(bll({{2}, {1, 1}}))) == "[[2],[1,1]]");

    SchurExpansion s;
    s.n = 4;
    s.r = 1;
    s.add(bll({{3, 1}}), 1);
    s.add(bll({{2, 2}}), 1);
    CHECK(dump(encode(s)) ==
          R"({"n":4,"r":1,"basis":"schur","terms":[{"index":[[2,2]],"coeff":1},{"index":[[3,1]],"coeff":1}]})");

    HExpansion h;
    h.n = 4;
    h.r = 1;
    h.add(bll({{4}}), -1);
    CHECK(dump(encode(h)) == R"({"n":4,"r":1,"basis":"h","terms":[{"index":[[4]],"coeff":-1}]})");

    FExpansion f;
    f.n = 2;
    f.r = 2;
    f.coefficients[cc("1^1,1^0", 2)] = 3;
    CHECK(dump(encode(f)) == R"({"n":2,"r":2,"basis":"f","terms":[{"index":[[1,1],[1,0]],"coeff":3}]})");

    const auto poly = MultiAlphabetPolynomial::variable({2, 1}, 0, 2) * Integer(5);
    CHECK(dump(encode(poly)) == R"({"widths":[2,1],"terms":[{"exponents":[[0,1],[0]],"coeff":5}]})");
}

TEST_CASE("integers beyond 64 bits are encoded as strings")
{
    CHECK(encode(Integer(42)) == Json(42));
    CHECK(encode(Integer(-7)) == Json(-7));
    const Integer big = Integer(1) << 70;
    CHECK(encode(big) == Json("1180591620717411303424"));
    CHECK(encode(Integer(-big)) == Json("-1180591620717411303424"));
}

TEST_CASE("table formats")
{
    HExpansion h;
    h.n = 4;
    h.r = 1;
    h.add(bll({{2, 2}}), 1);
    h.add(bll({{4}}), -1);
    const std::string t = format_table(h);
    CHECK(t.find("h expansion (n=4, r=1)") == 0);
    CHECK(t.find("+ 1 * h_((2,2))") != std::string::npos);
    CHECK(t.find("- 1 * h_((4))") != std::string::npos);
}
