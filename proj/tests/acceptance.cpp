// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or overruns its time limit.

#include "colqsym/bijections.hpp"
#include "colqsym/identities.hpp"
#include "colqsym/parallel.hpp"
#include "colqsym/symfun.hpp"
#include "colqsym/text_io.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace colqsym;

namespace {

struct Check {
    std::ostringstream log;
    bool ok = true;

    void expect(bool condition, const std::string& what)
    {
        if (!condition) {
            ok = false;
            log << "    failed: " << what << "\n";
        }
    }
    void report(const VerificationReport& r)
    {
        expect(r.passed(), r.identity + " has " + std::to_string(r.failure_count) + " failures");
        expect(r.cases_checked == r.expected_cases, r.identity + " checked " + std::to_string(r.cases_checked) +
                                                        " of " + std::to_string(r.expected_cases) + " cases");
        for (const auto& w : r.failures)
            log << "    witness " << dump(w.input) << " expected " << dump(w.expected) << " actual "
                << dump(w.actual) << "\n";
    }
};

RPartitePartition bll(std::vector<std::vector<int>> parts)
{
    std::vector<Partition> out;
    for (auto& p : parts)
        out.emplace_back(std::move(p));
    return RPartitePartition(std::move(out));
}

StandardTableau straight(std::vector<std::vector<int>> rows)
{
    std::vector<int> lengths;
    for (const auto& r : rows)
        lengths.push_back(static_cast<int>(r.size()));
    return StandardTableau(SkewShape(Partition(lengths)), std::move(rows));
}

ColoredSet colored_set(int n, int r, std::vector<std::pair<int, int>> pairs)
{
    std::vector<ColoredInteger> out;
    for (auto [v, c] : pairs)
        out.push_back({v, c});
    return ColoredSet(n, r, std::move(out));
}

std::uint64_t comp_total(int max_n, int max_r)
{
    std::uint64_t total = 0;
    for (int n = 1; n <= max_n; ++n)
        for (int r = 1; r <= max_r; ++r) {
            std::uint64_t c = static_cast<std::uint64_t>(r);
            for (int i = 1; i < n; ++i)
                c *= static_cast<std::uint64_t>(r + 1);
            total += c;
        }
    return total;
}

void classical_example(Check& c)
{
    const auto a = parse_colored_composition("2^0,2^0", 1);
    std::vector<std::vector<int>> words;
    for (const auto& x : conj_inverse_descent_class(a))
        words.push_back(x.perm().word());
    c.expect(words == std::vector<std::vector<int>>{{1, 3, 2, 4}, {1, 3, 4, 2}, {3, 1, 2, 4}, {3, 1, 4, 2}, {3, 4, 1, 2}},
             "conjugate-inverse descent class of (2,2)");

    const auto f = ribbon_f_expansion(a);
    FExpansion expected_f{4, 1, {}};
    expected_f.coefficients[parse_colored_composition("2,2", 1)] = 2;
    expected_f.coefficients[parse_colored_composition("3,1", 1)] = 1;
    expected_f.coefficients[parse_colored_composition("1,3", 1)] = 1;
    expected_f.coefficients[parse_colored_composition("1,2,1", 1)] = 1;
    c.expect(f == expected_f, "F-expansion 2F22 + F31 + F13 + F121");

    SchurExpansion expected_s;
    expected_s.n = 4;
    expected_s.add(bll({{2, 2}}), 1);
    expected_s.add(bll({{3, 1}}), 1);
    const auto s = schur_expansion_by_tableau_count(a);
    c.expect(s == expected_s, "Schur expansion s22 + s31");

    HExpansion expected_h;
    expected_h.n = 4;
    expected_h.add(bll({{2, 2}}), 1);
    expected_h.add(bll({{4}}), -1);
    c.expect(ribbon_h_expansion(a) == expected_h, "h-expansion h22 - h4");

    const Widths w{4};
    const auto ribbon = colored_ribbon(a, w);
    c.expect(evaluate(f, w) == ribbon && evaluate(expected_s, w) == ribbon && evaluate(expected_h, w) == ribbon,
             "all three expansions evaluate to the ribbon polynomial");
    c.expect(expand_in_colored_schur(ribbon, 4) == expected_s, "peeling the ribbon polynomial");
}

void colored_example(Check& c)
{
    const auto ce = parse_colored_composition("2^0,2^1,1^1,1^3,3^1,1^2", 4);
    c.expect(colored_comp_to_colored_set(ce) == colored_set(10, 4, {{2, 0}, {4, 1}, {5, 1}, {6, 3}, {9, 1}, {10, 2}}),
             "colored set");
    const std::vector<RainbowBlock> blocks = {{Composition({2}), 0},
                                              {Composition({2, 1}), 1},
                                              {Composition({1}), 3},
                                              {Composition({3}), 1},
                                              {Composition({1}), 2}};
    c.expect(rainbow_decomposition(ce).blocks == blocks, "rainbow blocks");

    SchurExpansion expected_s;
    expected_s.n = 10;
    expected_s.r = 4;
    for (const auto& middle : std::vector<std::vector<int>>{{3, 2, 1}, {4, 1, 1}, {4, 2}, {5, 1}})
        expected_s.add(bll({{2}, middle, {1}, {1}}), 1);
    c.expect(schur_expansion_by_tableau_count(ce) == expected_s, "Schur expansion by tableau counting");

    HExpansion expected_h;
    expected_h.n = 10;
    expected_h.r = 4;
    expected_h.add(h_partition_of(ce), 1);
    expected_h.add(h_partition_of(parse_colored_composition("2^0,3^1,1^3,3^1,1^2", 4)), -1);
    c.expect(expected_h.coefficients.size() == 2 && ribbon_h_expansion(ce) == expected_h, "two-term h-expansion");

    const Widths w{6};
    const auto lhs = colored_h(bll({{3, 2, 1}}), w) - colored_h(bll({{3, 3}}), w);
    SchurExpansion single;
    single.n = 6;
    for (const auto& l : std::vector<std::vector<int>>{{3, 2, 1}, {4, 1, 1}, {4, 2}, {5, 1}})
        single.add(bll({l}), 1);
    c.expect(expand_in_colored_schur(lhs, 6) == single, "h321 - h33 = s321 + s411 + s42 + s51 at width 6");
}

void worked_bijection(Check& c)
{
    const auto a = parse_colored_permutation("2^0,3^0,7^1,10^1,5^1,6^3,1^1,8^1,9^1,4^2", 4);
    const auto bq = colored_class_to_tableau(a);
    const RPartiteTableau expected({straight({{2, 3}}),
                                    StandardTableau(SkewShape(Partition({5, 2, 2}), Partition({2, 1})),
                                                    {{1, 8, 9}, {5}, {7, 10}}),
                                    straight({{4}}), straight({{6}})});
    c.expect(bq == expected, "4-partite tableau");
    const auto sdes = colored_set(10, 4, {{1, 1}, {3, 0}, {4, 2}, {5, 1}, {6, 3}, {9, 1}, {10, 1}});
    c.expect(rpartite_descent_set(bq) == sdes, "descent set of the tableau");
    const auto ci = conj_inverse(a);
    c.expect(ci == parse_colored_permutation("7^1,1^0,2^0,10^2,5^1,6^3,3^1,8^1,9^1,4^1", 4), "conjugate inverse");
    c.expect(colored_descent_set(ci) == sdes, "descent set of the conjugate inverse");
}

struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    std::function<void(Check&)> body;
};

} // namespace

int main()
{
    const unsigned jobs = default_jobs();
    std::vector<RibbonTable> tables;

    const std::vector<Criterion> criteria = {
        {1, "classical (2,2) ribbon: descent class, F, Schur and h expansions", 1.0, classical_example},
        {2, "colored running example and the width-6 single-alphabet identity", 60.0, colored_example},
        {3, "worked colored permutation to 4-partite tableau", 1.0, worked_bijection},
        {4, "colored ribbons are Schur positive with tableau-count coefficients, n<=5 r<=3", 600.0,
         [&](Check& c) {
             for (int n = 1; n <= 5; ++n)
                 for (int r = 1; r <= 3; ++r)
                     tables.push_back(build_ribbon_table(n, r, jobs));
             c.expect(tables.back().compositions.size() == 768, "768 colored compositions at (5,3)");
             const auto report = verify_colored_ribbon_schur_positivity(tables, jobs);
             c.report(report);
             c.expect(report.expected_cases == comp_total(5, 3), "case count");
         }},
        {5, "colored ribbons equal the alternating h sum over coarsenings, same tables", 600.0,
         [&](Check& c) {
             c.expect(!tables.empty(), "ribbon tables from criterion 4");
             const auto report = verify_colored_ribbon_h_alternating_sum(tables, jobs);
             c.report(report);
             c.expect(report.expected_cases == comp_total(5, 3), "case count");
         }},
        {6, "colored zigzag shapes number r(r+1)^(n-1), n<=7 r<=4", 60.0,
         [&](Check& c) {
             const auto report = verify_colored_zigzag_count(7, 4, jobs);
             c.report(report);
             c.expect(report.expected_cases == comp_total(7, 4), "case count");
         }},
        {7, "colored RSK over S_{n,r}, n<=4 r<=3", 300.0,
         [&](Check& c) {
             c.report(verify_colored_rsk(4, 3, jobs));
             std::uint64_t pairs = 0;
             for (const auto& l : enumerate_rpartite_partitions(4, 3)) {
                 const std::uint64_t f = enumerate_rpartite_syt(RPartiteSkewShape(l)).size();
                 pairs += f * f;
             }
             c.expect(pairs == 1944 && colored_permutation_count(4, 3) == 1944, "sum of squares at (4,3)");
         }},
        {8, "reading-word bijection n<=6 and colored tableau bijection n<=5 r<=3", 600.0,
         [&](Check& c) {
             c.report(verify_reading_word_bijection(6, jobs));
             c.report(verify_colored_tableau_bijection(5, 3, jobs));
         }},
        {9, "skew Schur and colored Schur F-expansions, width stability", 600.0,
         [&](Check& c) {
             c.report(verify_skew_schur_f_expansion(6, jobs));
             c.report(verify_colored_schur_f_expansion(5, 3, jobs));
             c.report(verify_width_stability(5, 3, jobs));
         }},
        {10, "single-color reduction to the classical objects, n<=5", 600.0,
         [&](Check& c) { c.report(verify_single_color_reduction(5, jobs)); }},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.log << "    exception: " << e.what() << "\n";
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > criterion.limit_seconds) {
            check.ok = false;
            check.log << "    over the time limit of " << criterion.limit_seconds << " s\n";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", seconds);
        std::cout << (check.ok ? "PASS" : "FAIL") << " criterion " << criterion.number << " [" << timing << "] "
                  << criterion.title << "\n"
                  << check.log.str() << std::flush;
        failed += check.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
