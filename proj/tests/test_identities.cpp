#include "colqsym/errors.hpp"
#include "colqsym/identities.hpp"

#include <doctest.h>

using namespace colqsym;

namespace {

std::uint64_t power(std::uint64_t b, int e)
{
    std::uint64_t out = 1;
    while (e-- > 0)
        out *= b;
    return out;
}

// Sum of |Comp(n, r)| = r (r+1)^(n-1) over the range.
std::uint64_t colored_comp_total(int max_n, int max_r)
{
    std::uint64_t total = 0;
    for (int n = 1; n <= max_n; ++n)
        for (int r = 1; r <= max_r; ++r)
            total += static_cast<std::uint64_t>(r) * power(r + 1, n - 1);
    return total;
}

// Sum of |S_{n,r}| = n! r^n over the range.
std::uint64_t colored_perm_total(int max_n, int max_r)
{
    std::uint64_t total = 0;
    for (int n = 1; n <= max_n; ++n) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i)
            f *= static_cast<std::uint64_t>(i);
        for (int r = 1; r <= max_r; ++r)
            total += f * power(r, n);
    }
    return total;
}

void check_clean(const VerificationReport& r)
{
    INFO(r.identity);
    CHECK(r.passed());
    CHECK(r.failures.empty());
    CHECK(r.cases_checked > 0);
    CHECK(r.cases_checked == r.expected_cases);
}

} // namespace

TEST_CASE("every verifier passes on a small range")
{
    check_clean(verify_reading_word_bijection(4, 2));
    check_clean(verify_skew_schur_f_expansion(4, 2));
    check_clean(verify_colored_schur_f_expansion(3, 2, 2));
    check_clean(verify_ribbon_schur_positivity(4, 2));
    check_clean(verify_ribbon_h_alternating_sum(4, 2));
    check_clean(verify_colored_tableau_bijection(3, 2, 2));
    check_clean(verify_width_stability(3, 2, 2));
    check_clean(verify_single_color_reduction(3, 2));

    const auto zigzag = verify_colored_zigzag_count(4, 3, 2);
    check_clean(zigzag);
    CHECK(zigzag.expected_cases == colored_comp_total(4, 3));

    const auto schur = verify_colored_ribbon_schur_positivity(3, 2, 2);
    check_clean(schur);
    CHECK(schur.expected_cases == colored_comp_total(3, 2));
    const auto h = verify_colored_ribbon_h_alternating_sum(3, 2, 2);
    check_clean(h);
    CHECK(h.expected_cases == colored_comp_total(3, 2));

    const auto rsk = verify_colored_rsk(3, 2, 2);
    check_clean(rsk);
    CHECK(rsk.expected_cases >= colored_perm_total(3, 2));
}

TEST_CASE("shared ribbon tables")
{
    std::vector<RibbonTable> tables;
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 2; ++r)
            tables.push_back(build_ribbon_table(n, r, 2));
    CHECK(tables.back().compositions.size() == 18);
    CHECK(tables.back().ribbons.size() == 18);
    check_clean(verify_colored_ribbon_schur_positivity(tables, 2));
    check_clean(verify_colored_ribbon_h_alternating_sum(tables, 2));
}

TEST_CASE("reports do not depend on the number of workers")
{
    const auto a = run_identity("colored-ribbon-h-alternating-sum", 3, 2, 1);
    const auto b = run_identity("colored-ribbon-h-alternating-sum", 3, 2, 4);
    CHECK(dump(encode_reports(a)) == dump(encode_reports(b)));
    CHECK(format_report_table(a, false) == format_report_table(b, false));
}

TEST_CASE("run_identity and report encodings")
{
    const auto all = run_identity("all", 3, 2, 2);
    CHECK(all.size() == identity_names().size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].identity == identity_names()[i]);
        check_clean(all[i]);
    }
    const Json j = encode_reports(all);
    CHECK(j["passed"] == true);
    CHECK(j["note"].is_string());
    CHECK(j["reports"].size() == all.size());
    const Json& first = j["reports"][0];
    for (const char* key : {"identity", "n_range", "r_range", "cases_checked", "expected_cases", "failure_count",
                            "passed", "failures"})
        CHECK(first.contains(key));
    CHECK_FALSE(first.contains("wall_seconds"));

    const std::string table = format_report_table(all, false);
    CHECK(table.find("PASS") != std::string::npos);
    CHECK(table.find("FAIL") == std::string::npos);
    CHECK(table.find("seconds") == std::string::npos);
    CHECK(format_report_table(all, true).find("seconds") != std::string::npos);

    CHECK_THROWS_AS(run_identity("no-such-identity", 3, 2, 1), DomainError);
    CHECK_THROWS_AS(run_identity("colored-rsk", 0, 2, 1), DomainError);
}

TEST_CASE("a failing report is visible")
{
    VerificationReport r;
    r.identity = "example";
    r.failure_count = 1;
    r.failures.push_back({Json("in"), Json(1), Json(2)});
    CHECK_FALSE(r.passed());
    const Json j = encode(r);
    CHECK(j["passed"] == false);
    CHECK(j["failures"].size() == 1);
    CHECK(format_report_table({r}, false).find("FAIL") != std::string::npos);
}
