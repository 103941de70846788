#include "colqsym/identities.hpp"

#include "colqsym/errors.hpp"
#include "colqsym/parallel.hpp"
#include "colqsym/text_io.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace colqsym {

namespace {

using Outcome = std::optional<Witness>;
using Clock = std::chrono::steady_clock;

constexpr const char* kCertificationNote =
    "alternating character formulas for descent representations are certified only through their "
    "symmetric-function images (the ribbon h-expansions below)";

Witness witness(Json input, Json expected, Json actual)
{
    return Witness{std::move(input), std::move(expected), std::move(actual)};
}

class ReportBuilder {
public:
    ReportBuilder(std::string identity, int max_n, int max_r) : start_(Clock::now())
    {
        report_.identity = std::move(identity);
        report_.max_n = max_n;
        report_.max_r = max_r;
    }

    void expect(std::uint64_t cases) { report_.expected_cases += cases; }

    void fail(Witness w)
    {
        ++report_.failure_count;
        if (report_.failures.size() < kMaxWitnesses)
            report_.failures.push_back(std::move(w));
    }

    // Evaluates check(i) for i in [0, count) in parallel; exceptions become
    // failures carrying the message. Results are merged in index order.
    void run(std::size_t count, unsigned jobs, const std::function<Json(std::size_t)>& describe,
             const std::function<Outcome(std::size_t)>& check)
    {
        std::vector<Outcome> results(count);
        parallel_for(count, jobs, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                try {
                    results[i] = check(i);
                } catch (const std::exception& e) {
                    results[i] = witness(describe(i), "no exception", std::string("exception: ") + e.what());
                }
            }
        });
        for (auto& result : results) {
            ++report_.cases_checked;
            if (result)
                fail(std::move(*result));
        }
    }

    VerificationReport finish()
    {
        if (report_.cases_checked != report_.expected_cases)
            fail(witness({{"identity", report_.identity}}, encode(Integer(report_.expected_cases)),
                         encode(Integer(report_.cases_checked))));
        report_.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return std::move(report_);
    }

private:
    VerificationReport report_;
    Clock::time_point start_;
};

ColoredComposition single_color(const Composition& a)
{
    return ColoredComposition(a.parts(), std::vector<Color>(a.length(), 0), 1);
}

ColoredPermutation single_color(const Permutation& p)
{
    return ColoredPermutation(p, ColorVector(std::vector<Color>(p.size(), 0), 1));
}

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

// colored F for every ce in Comp(n, r) at widths n.
std::map<ColoredComposition, MultiAlphabetPolynomial> colored_f_table(int n, int r, unsigned jobs)
{
    const auto comps = enumerate_colored_compositions(n, r);
    const Widths widths = uniform_widths(r, n);
    std::vector<std::optional<MultiAlphabetPolynomial>> values(comps.size());
    parallel_for(comps.size(), jobs, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            values[i] = colored_F(comps[i], widths);
    });
    std::map<ColoredComposition, MultiAlphabetPolynomial> out;
    for (std::size_t i = 0; i < comps.size(); ++i)
        out.emplace(comps[i], std::move(*values[i]));
    return out;
}

std::vector<RibbonTable> build_tables(int max_n, int max_r, unsigned jobs)
{
    std::vector<RibbonTable> tables;
    for (int n = 1; n <= max_n; ++n)
        for (int r = 1; r <= max_r; ++r)
            tables.push_back(build_ribbon_table(n, r, jobs));
    return tables;
}

struct TableCase {
    std::size_t table;
    std::size_t index;
};

std::vector<TableCase> flatten(const std::vector<RibbonTable>& tables)
{
    std::vector<TableCase> cases;
    for (std::size_t t = 0; t < tables.size(); ++t)
        for (std::size_t i = 0; i < tables[t].compositions.size(); ++i)
            cases.push_back({t, i});
    return cases;
}

void expect_table_ranges(ReportBuilder& builder, const std::vector<RibbonTable>& tables)
{
    for (const auto& t : tables)
        builder.expect(colored_composition_count(t.n, t.r));
}

std::pair<int, int> table_bounds(const std::vector<RibbonTable>& tables)
{
    int max_n = 0, max_r = 1;
    for (const auto& t : tables) {
        max_n = std::max(max_n, t.n);
        max_r = std::max(max_r, t.r);
    }
    return {max_n, max_r};
}

Outcome check_ribbon_schur(const ColoredComposition& ce, const MultiAlphabetPolynomial& ribbon)
{
    const auto generated = qsym_generating_function(conj_inverse_descent_class(ce), ribbon.widths());
    if (generated != ribbon)
        return witness(encode(ce), encode(ribbon), encode(generated));
    const SchurExpansion peeled = expand_in_colored_schur(ribbon, ce.size());
    const SchurExpansion counted = schur_expansion_by_tableau_count(ce);
    if (peeled != counted)
        return witness(encode(ce), encode(counted), encode(peeled));
    for (const auto& [shape, c] : peeled.coefficients)
        if (c < 0)
            return witness(encode(ce), "nonnegative coefficients", encode(peeled));
    return std::nullopt;
}

Outcome check_ribbon_h(const ColoredComposition& ce, const MultiAlphabetPolynomial& ribbon)
{
    const HExpansion h = ribbon_h_expansion(ce);
    const auto value = evaluate(h, ribbon.widths());
    if (value != ribbon)
        return witness(encode(ce), encode(expand_in_colored_schur(ribbon, ce.size())),
                       encode(expand_in_colored_schur(value, ce.size())));
    return std::nullopt;
}

VerificationReport ribbon_schur_over(std::string name, const std::vector<RibbonTable>& tables, unsigned jobs)
{
    const auto [max_n, max_r] = table_bounds(tables);
    ReportBuilder builder(std::move(name), max_n, max_r);
    expect_table_ranges(builder, tables);
    const auto cases = flatten(tables);
    auto at = [&](std::size_t i) -> const ColoredComposition& {
        return tables[cases[i].table].compositions[cases[i].index];
    };
    builder.run(
        cases.size(), jobs, [&](std::size_t i) { return encode(at(i)); },
        [&](std::size_t i) { return check_ribbon_schur(at(i), tables[cases[i].table].ribbons[cases[i].index]); });
    return builder.finish();
}

VerificationReport ribbon_h_over(std::string name, const std::vector<RibbonTable>& tables, unsigned jobs)
{
    const auto [max_n, max_r] = table_bounds(tables);
    ReportBuilder builder(std::move(name), max_n, max_r);
    expect_table_ranges(builder, tables);
    const auto cases = flatten(tables);
    auto at = [&](std::size_t i) -> const ColoredComposition& {
        return tables[cases[i].table].compositions[cases[i].index];
    };
    builder.run(
        cases.size(), jobs, [&](std::size_t i) { return encode(at(i)); },
        [&](std::size_t i) { return check_ribbon_h(at(i), tables[cases[i].table].ribbons[cases[i].index]); });
    return builder.finish();
}

// Partitions inside a rows x cols box, including the empty one.
void box_partitions(int rows, int cols, std::vector<int>& prefix, std::vector<Partition>& out)
{
    out.emplace_back(prefix);
    if (static_cast<int>(prefix.size()) == rows)
        return;
    const int cap = prefix.empty() ? cols : prefix.back();
    for (int part = 1; part <= cap; ++part) {
        prefix.push_back(part);
        box_partitions(rows, cols, prefix, out);
        prefix.pop_back();
    }
}

// Partitions mu inside lambda with |mu| = size.
void inner_partitions(const Partition& lambda, int size, std::vector<int>& prefix, std::vector<Partition>& out)
{
    const int used = std::accumulate(prefix.begin(), prefix.end(), 0);
    if (used == size) {
        out.emplace_back(prefix);
        return;
    }
    const std::size_t i = prefix.size();
    if (static_cast<int>(i) >= lambda.length())
        return;
    const int cap = std::min(lambda.row(static_cast<int>(i)), prefix.empty() ? lambda.row(0) : prefix.back());
    for (int part = std::min(cap, size - used); part >= 1; --part) {
        prefix.push_back(part);
        inner_partitions(lambda, size, prefix, out);
        prefix.pop_back();
    }
}

std::vector<SkewShape> skew_shapes_with_cells(int cells)
{
    std::vector<Partition> outers;
    std::vector<int> prefix;
    box_partitions(cells, cells, prefix, outers);
    std::set<SkewShape> shapes;
    for (const auto& lambda : outers) {
        if (lambda.size() < cells)
            continue;
        std::vector<Partition> inners;
        inner_partitions(lambda, lambda.size() - cells, prefix, inners);
        for (auto& mu : inners)
            shapes.insert(SkewShape(lambda, std::move(mu)));
    }
    return {shapes.begin(), shapes.end()};
}

} // namespace

RibbonTable build_ribbon_table(int n, int r, unsigned jobs)
{
    RibbonTable table;
    table.n = n;
    table.r = r;
    table.compositions = enumerate_colored_compositions(n, r);
    const Widths widths = uniform_widths(r, n);
    std::vector<std::optional<MultiAlphabetPolynomial>> values(table.compositions.size());
    parallel_for(values.size(), jobs, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            values[i] = colored_ribbon(table.compositions[i], widths);
    });
    for (auto& v : values)
        table.ribbons.push_back(std::move(*v));
    return table;
}

VerificationReport verify_reading_word_bijection(int max_n, unsigned jobs)
{
    ReportBuilder builder("reading-word-bijection", max_n, 1);
    std::vector<Composition> cases;
    for (int n = 1; n <= max_n; ++n) {
        builder.expect(std::uint64_t{1} << (n - 1));
        for (auto& a : enumerate_compositions(n))
            cases.push_back(std::move(a));
    }
    builder.run(
        cases.size(), jobs, [&](std::size_t i) { return encode(cases[i]); },
        [&](std::size_t i) -> Outcome {
            const Composition& a = cases[i];
            const auto tableaux = enumerate_syt(zigzag_of(a).shape, {std::max(12, a.size())});
            std::set<StandardTableau> images;
            for (const auto& member : descent_class(single_color(a))) {
                const Permutation& pi = member.perm();
                const StandardTableau q = reading_word_inverse(pi, a);
                if (reading_word(q) != pi)
                    return witness(encode(pi), encode(pi), encode(reading_word(q)));
                if (tableau_descent_set(q) != descent_set(inverse(pi)))
                    return witness(encode(pi), Json(descent_set(inverse(pi))), Json(tableau_descent_set(q)));
                images.insert(q);
            }
            if (images != std::set<StandardTableau>(tableaux.begin(), tableaux.end()))
                return witness(encode(a), encode(Integer(tableaux.size())), encode(Integer(images.size())));
            return std::nullopt;
        });
    return builder.finish();
}

VerificationReport verify_skew_schur_f_expansion(int max_cells, unsigned jobs)
{
    if (max_cells > 8)
        throw DomainError("skew Schur F-expansion check is bounded at 8 cells");
    ReportBuilder builder("skew-schur-f-expansion", max_cells, 1);
    std::vector<SkewShape> cases;
    for (int c = 1; c <= max_cells; ++c)
        for (auto& s : skew_shapes_with_cells(c))
            cases.push_back(std::move(s));
    builder.expect(cases.size());
    builder.run(
        cases.size(), jobs, [&](std::size_t i) { return encode(cases[i]); },
        [&](std::size_t i) -> Outcome {
            const SkewShape& s = cases[i];
            const Widths widths{s.cells()};
            const auto lhs = schur_poly(s, 0, widths);
            std::map<Composition, Integer> counts;
            for (const auto& q : enumerate_syt(s, {std::max(12, s.cells())}))
                counts[composition_of_set(s.cells(), tableau_descent_set(q))] += 1;
            MultiAlphabetPolynomial rhs(widths);
            for (const auto& [a, c] : counts)
                rhs.add_scaled(fundamental_F(a, 0, widths), c);
            if (lhs != rhs)
                return witness(encode(s), encode(lhs), encode(rhs));
            return std::nullopt;
        });
    return builder.finish();
}

VerificationReport verify_colored_schur_f_expansion(int max_n, int max_r, unsigned jobs)
{
    ReportBuilder builder("colored-schur-f-expansion", max_n, max_r);
    for (int n = 1; n <= max_n; ++n) {
        for (int r = 1; r <= max_r; ++r) {
            const auto f_table = colored_f_table(n, r, jobs);
            const auto shapes = enumerate_rpartite_partitions(n, r);
            const Widths widths = uniform_widths(r, n);
            builder.expect(shapes.size());
            builder.run(
                shapes.size(), jobs, [&](std::size_t i) { return encode(shapes[i]); },
                [&](std::size_t i) -> Outcome {
                    const auto lhs = colored_schur(shapes[i], widths);
                    std::map<ColoredComposition, Integer> counts;
                    for (const auto& bq : enumerate_rpartite_syt(RPartiteSkewShape(shapes[i]), {std::max(12, n)}))
                        counts[rpartite_descent_composition(bq)] += 1;
                    MultiAlphabetPolynomial rhs(widths);
                    for (const auto& [ce, c] : counts)
                        rhs.add_scaled(f_table.at(ce), c);
                    if (lhs != rhs)
                        return witness(encode(shapes[i]), encode(lhs), encode(rhs));
                    return std::nullopt;
                });
        }
    }
    return builder.finish();
}

VerificationReport verify_ribbon_schur_positivity(int max_n, unsigned jobs)
{
    return ribbon_schur_over("ribbon-schur-positivity", build_tables(max_n, 1, jobs), jobs);
}

VerificationReport verify_ribbon_h_alternating_sum(int max_n, unsigned jobs)
{
    return ribbon_h_over("ribbon-h-alternating-sum", build_tables(max_n, 1, jobs), jobs);
}

VerificationReport verify_colored_zigzag_count(int max_n, int max_r, unsigned jobs)
{
    ReportBuilder builder("colored-zigzag-count", max_n, max_r);
    for (int n = 1; n <= max_n; ++n) {
        for (int r = 1; r <= max_r; ++r) {
            const auto comps = enumerate_colored_compositions(n, r);
            const std::uint64_t formula = colored_composition_count(n, r);
            builder.expect(formula);
            std::vector<ColoredZigzagShape> shapes(comps.size());
            builder.run(
                comps.size(), jobs, [&](std::size_t i) { return encode(comps[i]); },
                [&](std::size_t i) -> Outcome {
                    shapes[i] = colored_zigzag_of(comps[i]);
                    const auto& z = shapes[i];
                    for (std::size_t k = 0; k < z.zigzags.size(); ++k) {
                        if (!is_ribbon(z.zigzags[k].shape))
                            return witness(encode(comps[i]), "ribbon components", encode(z.zigzags[k].shape));
                        if (k > 0 && z.colors[k] == z.colors[k - 1])
                            return witness(encode(comps[i]), "adjacent colors distinct", Json(z.colors));
                    }
                    const auto back = colored_composition_of(z, r);
                    if (back != comps[i])
                        return witness(encode(comps[i]), encode(comps[i]), encode(back));
                    return std::nullopt;
                });
            const std::set<ColoredZigzagShape> distinct(shapes.begin(), shapes.end());
            if (distinct.size() != formula)
                builder.fail(witness({{"n", n}, {"r", r}}, encode(Integer(formula)), encode(Integer(distinct.size()))));
        }
    }
    return builder.finish();
}

VerificationReport verify_colored_tableau_bijection(int max_n, int max_r, unsigned jobs)
{
    ReportBuilder builder("colored-tableau-bijection", max_n, max_r);
    std::vector<ColoredComposition> cases;
    for (int n = 1; n <= max_n; ++n) {
        for (int r = 1; r <= max_r; ++r) {
            builder.expect(colored_composition_count(n, r));
            for (auto& ce : enumerate_colored_compositions(n, r))
                cases.push_back(std::move(ce));
        }
    }
    builder.run(
        cases.size(), jobs, [&](std::size_t i) { return encode(cases[i]); },
        [&](std::size_t i) -> Outcome {
            const ColoredComposition& ce = cases[i];
            const int r = ce.colors_count();
            const RPartiteSkewShape shape = rpartite_shape_of(colored_zigzag_of(ce), r);
            std::set<RPartiteTableau> images;
            for (const auto& a : descent_class(ce)) {
                const RPartiteTableau bq = colored_class_to_tableau(a);
                if (bq.shape() != shape)
                    return witness(encode(a), encode(ce), encode(bq));
                if (colored_tableau_to_class(bq, ce) != a)
                    return witness(encode(a), encode(a), encode(colored_tableau_to_class(bq, ce)));
                const ColoredSet expected = colored_descent_set(conj_inverse(a));
                const ColoredSet actual = rpartite_descent_set(bq);
                if (expected != actual)
                    return witness(encode(a), encode(expected), encode(actual));
                images.insert(bq);
            }
            const auto tableaux = enumerate_rpartite_syt(shape, {std::max(12, ce.size())});
            if (images != std::set<RPartiteTableau>(tableaux.begin(), tableaux.end()))
                return witness(encode(ce), encode(Integer(tableaux.size())), encode(Integer(images.size())));

            std::map<ColoredSet, int> from_class, from_tableaux;
            for (const auto& b : conj_inverse_descent_class(ce))
                ++from_class[colored_descent_set(b)];
            for (const auto& bq : tableaux)
                ++from_tableaux[rpartite_descent_set(bq)];
            if (from_class != from_tableaux)
                return witness(encode(ce), encode(Integer(from_class.size())), encode(Integer(from_tableaux.size())));
            return std::nullopt;
        });
    return builder.finish();
}

VerificationReport verify_colored_ribbon_schur_positivity(const std::vector<RibbonTable>& tables, unsigned jobs)
{
    return ribbon_schur_over("colored-ribbon-schur-positivity", tables, jobs);
}

VerificationReport verify_colored_ribbon_schur_positivity(int max_n, int max_r, unsigned jobs)
{
    return verify_colored_ribbon_schur_positivity(build_tables(max_n, max_r, jobs), jobs);
}

VerificationReport verify_colored_ribbon_h_alternating_sum(const std::vector<RibbonTable>& tables,
                                                           unsigned jobs)
{
    return ribbon_h_over("colored-ribbon-h-alternating-sum", tables, jobs);
}

VerificationReport verify_colored_ribbon_h_alternating_sum(int max_n, int max_r, unsigned jobs)
{
    return verify_colored_ribbon_h_alternating_sum(build_tables(max_n, max_r, jobs), jobs);
}

VerificationReport verify_colored_rsk(int max_n, int max_r, unsigned jobs)
{
    ReportBuilder builder("colored-rsk", max_n, max_r);
    for (int n = 1; n <= max_n; ++n) {
        for (int r = 1; r <= max_r; ++r) {
            const std::uint64_t total = colored_permutation_count(n, r);
            builder.expect(total);
            builder.run(
                total, jobs, [&](std::size_t i) { return encode(colored_permutation_at(n, r, i)); },
                [&](std::size_t i) -> Outcome {
                    const ColoredPermutation a = colored_permutation_at(n, r, i);
                    const TableauPair pq = colored_rsk(a);
                    if (pq.insertion.shape() != pq.recording.shape())
                        return witness(encode(a), encode(pq.insertion), encode(pq.recording));
                    const ColoredPermutation back = colored_rsk_inverse(pq.insertion, pq.recording);
                    if (back != a)
                        return witness(encode(a), encode(a), encode(back));
                    if (colored_descent_set(a) != rpartite_descent_set(pq.recording))
                        return witness(encode(a), encode(colored_descent_set(a)),
                                       encode(rpartite_descent_set(pq.recording)));
                    const ColoredSet of_conj_inverse = colored_descent_set(conj_inverse(a));
                    if (of_conj_inverse != rpartite_descent_set(pq.insertion))
                        return witness(encode(a), encode(of_conj_inverse), encode(rpartite_descent_set(pq.insertion)));
                    return std::nullopt;
                });

            Integer pairs = 0;
            for (const auto& shape : enumerate_rpartite_partitions(n, r)) {
                const Integer count = enumerate_rpartite_syt(RPartiteSkewShape(shape), {std::max(12, n)}).size();
                pairs += count * count;
            }
            if (pairs != Integer(total))
                builder.fail(witness({{"n", n}, {"r", r}}, encode(Integer(total)), encode(pairs)));
        }
    }
    return builder.finish();
}

VerificationReport verify_width_stability(int max_n, int max_r, unsigned jobs)
{
    constexpr std::size_t kSample = 20;
    ReportBuilder builder("width-stability", max_n, max_r);
    std::vector<ColoredComposition> cases;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<ColoredComposition> pool;
        for (int r = 1; r <= max_r; ++r)
            for (auto& ce : enumerate_colored_compositions(n, r))
                pool.push_back(std::move(ce));
        const std::size_t take = std::min(kSample, pool.size());
        builder.expect(take);
        for (std::size_t k = 0; k < take; ++k)
            cases.push_back(pool[k * pool.size() / take]);
    }
    builder.run(
        cases.size(), jobs, [&](std::size_t i) { return encode(cases[i]); },
        [&](std::size_t i) -> Outcome {
            const ColoredComposition& ce = cases[i];
            const int n = ce.size();
            const int r = ce.colors_count();
            const auto at_n = expand_in_colored_schur(colored_ribbon(ce, uniform_widths(r, n)), n);
            const auto at_n1 = expand_in_colored_schur(colored_ribbon(ce, uniform_widths(r, n + 1)), n);
            if (at_n != at_n1)
                return witness(encode(ce), encode(at_n), encode(at_n1));
            Widths tight(r, 0);
            for (int k = 0; k < ce.length(); ++k)
                tight[ce.colors()[k]] += ce.parts()[k];
            const auto at_tight = expand_in_colored_schur(colored_ribbon(ce, tight), n);
            if (at_n != at_tight)
                return witness(encode(ce), encode(at_n), encode(at_tight));
            return std::nullopt;
        });
    return builder.finish();
}

VerificationReport verify_single_color_reduction(int max_n, unsigned jobs)
{
    ReportBuilder builder("single-color-reduction", max_n, 1);
    struct Case {
        std::optional<Composition> composition;
        std::optional<Permutation> permutation;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= max_n; ++n) {
        builder.expect((std::uint64_t{1} << (n - 1)) + factorial(n));
        for (auto& a : enumerate_compositions(n))
            cases.push_back({std::move(a), std::nullopt});
        for (auto& p : enumerate_permutations(n))
            cases.push_back({std::nullopt, std::move(p)});
    }
    auto describe = [&](std::size_t i) {
        return cases[i].composition ? encode(*cases[i].composition) : encode(*cases[i].permutation);
    };

    auto check_composition = [](const Composition& a) -> Outcome {
        const int n = a.size();
        const ColoredComposition ce = single_color(a);
        const Widths widths{n};
        if (colored_F(ce, widths) != fundamental_F(a, 0, widths))
            return witness(encode(a), encode(fundamental_F(a, 0, widths)), encode(colored_F(ce, widths)));
        if (colored_ribbon(ce, widths) != ribbon_schur(a, 0, widths))
            return witness(encode(a), encode(ribbon_schur(a, 0, widths)), encode(colored_ribbon(ce, widths)));

        const ColoredSet cs = colored_comp_to_colored_set(ce);
        std::vector<int> values;
        for (const auto& p : cs.pairs()) {
            if (p.color != 0)
                return witness(encode(a), "color 0 throughout", encode(cs));
            values.push_back(p.value);
        }
        if (values != comp_to_augmented_set(a).elements())
            return witness(encode(a), Json(comp_to_augmented_set(a).elements()), Json(values));

        std::vector<Permutation> expected_class;
        for (const auto& p : enumerate_permutations(n))
            if (descent_composition(p) == a)
                expected_class.push_back(p);
        std::vector<Permutation> actual_class;
        for (const auto& m : descent_class(ce))
            actual_class.push_back(m.perm());
        std::sort(actual_class.begin(), actual_class.end());
        if (actual_class != expected_class)
            return witness(encode(a), encode(Integer(expected_class.size())), encode(Integer(actual_class.size())));

        const ColoredZigzagShape z = colored_zigzag_of(ce);
        if (z.zigzags.size() != 1 || z.zigzags[0] != zigzag_of(a))
            return witness(encode(a), encode(zigzag_of(a).shape), "several or different zigzags");

        // Classical alternating sum over subsets of the descent positions.
        const PositionSet s = descent_positions(a);
        HExpansion classical;
        classical.n = n;
        classical.r = 1;
        for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
            PositionSet kept;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (mask & (1u << k))
                    kept.push_back(s[k]);
            std::vector<int> parts = composition_of_set(n, kept).parts();
            std::sort(parts.begin(), parts.end(), std::greater<>());
            const int sign = (s.size() - kept.size()) % 2 == 0 ? 1 : -1;
            classical.add(RPartitePartition({Partition(parts)}), sign);
        }
        if (ribbon_h_expansion(ce) != classical)
            return witness(encode(a), encode(classical), encode(ribbon_h_expansion(ce)));
        return std::nullopt;
    };

    auto check_permutation = [](const Permutation& pi) -> Outcome {
        const int n = pi.size();
        const ColoredPermutation a = single_color(pi);
        PositionSet with_n = descent_set(pi);
        with_n.push_back(n);

        const ColoredSet cs = colored_descent_set(a);
        PositionSet values;
        for (const auto& p : cs.pairs())
            values.push_back(p.value);
        if (values != with_n)
            return witness(encode(pi), Json(with_n), encode(cs));
        if (steingrimsson_descent_set(a) != descent_set(pi))
            return witness(encode(pi), Json(descent_set(pi)), Json(steingrimsson_descent_set(a)));
        if (colored_descent_composition(a) != single_color(descent_composition(pi)))
            return witness(encode(pi), encode(descent_composition(pi)), encode(colored_descent_composition(a)));

        if (inverse(a) != single_color(inverse(pi)) || conj_inverse(a) != single_color(inverse(pi)) ||
            conjugate(a) != a)
            return witness(encode(pi), encode(inverse(pi)), encode(inverse(a)));
        std::vector<int> reversed(pi.word().rbegin(), pi.word().rend());
        const Permutation tau(reversed);
        if (multiply(a, single_color(tau)) != single_color(compose(pi, tau)))
            return witness(encode(pi), encode(compose(pi, tau)), encode(multiply(a, single_color(tau))));

        // Plain Schensted insertion.
        std::vector<std::vector<int>> p_rows, q_rows;
        for (int i = 1; i <= n; ++i) {
            const int row = row_insert(p_rows, pi(i));
            if (row == static_cast<int>(q_rows.size()))
                q_rows.emplace_back();
            q_rows[row].push_back(i);
        }
        const TableauPair pq = colored_rsk(a);
        if (pq.insertion.components()[0].rows() != p_rows || pq.recording.components()[0].rows() != q_rows)
            return witness(encode(pi), {{"P", p_rows}, {"Q", q_rows}}, encode(pq));

        const StandardTableau ribbon_tableau = reading_word_inverse(pi, descent_composition(pi));
        const RPartiteTableau colored = colored_class_to_tableau(a);
        if (colored.components()[0] != ribbon_tableau)
            return witness(encode(pi), encode(ribbon_tableau), encode(colored));
        return std::nullopt;
    };

    builder.run(cases.size(), jobs, describe, [&](std::size_t i) -> Outcome {
        return cases[i].composition ? check_composition(*cases[i].composition)
                                    : check_permutation(*cases[i].permutation);
    });
    return builder.finish();
}

const std::vector<std::string>& identity_names()
{
    static const std::vector<std::string> names = {
        "reading-word-bijection",
        "skew-schur-f-expansion",
        "colored-schur-f-expansion",
        "ribbon-schur-positivity",
        "ribbon-h-alternating-sum",
        "colored-zigzag-count",
        "colored-tableau-bijection",
        "colored-ribbon-schur-positivity",
        "colored-ribbon-h-alternating-sum",
        "colored-rsk",
        "width-stability",
        "single-color-reduction",
    };
    return names;
}

std::vector<VerificationReport> run_identity(const std::string& name, std::optional<int> max_n,
                                             std::optional<int> max_r, unsigned jobs)
{
    auto n_or = [&](int fallback) { return max_n.value_or(fallback); };
    auto r_or = [&](int fallback) { return max_r.value_or(fallback); };
    if (max_n && *max_n < 1)
        throw DomainError("max-n must be at least 1");
    if (max_r && *max_r < 1)
        throw DomainError("max-r must be at least 1");

    if (name == "all") {
        std::vector<VerificationReport> out;
        for (const auto& each : identity_names()) {
            if (each == "colored-ribbon-schur-positivity") {
                const auto tables = build_tables(n_or(5), r_or(3), jobs);
                out.push_back(verify_colored_ribbon_schur_positivity(tables, jobs));
                out.push_back(verify_colored_ribbon_h_alternating_sum(tables, jobs));
            } else if (each != "colored-ribbon-h-alternating-sum") {
                auto one = run_identity(each, max_n, max_r, jobs);
                out.push_back(std::move(one.front()));
            }
        }
        return out;
    }
    if (name == "reading-word-bijection")
        return {verify_reading_word_bijection(n_or(6), jobs)};
    if (name == "skew-schur-f-expansion")
        return {verify_skew_schur_f_expansion(n_or(6), jobs)};
    if (name == "colored-schur-f-expansion")
        return {verify_colored_schur_f_expansion(n_or(5), r_or(3), jobs)};
    if (name == "ribbon-schur-positivity")
        return {verify_ribbon_schur_positivity(n_or(6), jobs)};
    if (name == "ribbon-h-alternating-sum")
        return {verify_ribbon_h_alternating_sum(n_or(6), jobs)};
    if (name == "colored-zigzag-count")
        return {verify_colored_zigzag_count(n_or(7), r_or(4), jobs)};
    if (name == "colored-tableau-bijection")
        return {verify_colored_tableau_bijection(n_or(5), r_or(3), jobs)};
    if (name == "colored-ribbon-schur-positivity")
        return {verify_colored_ribbon_schur_positivity(n_or(5), r_or(3), jobs)};
    if (name == "colored-ribbon-h-alternating-sum")
        return {verify_colored_ribbon_h_alternating_sum(n_or(5), r_or(3), jobs)};
    if (name == "colored-rsk")
        return {verify_colored_rsk(n_or(4), r_or(3), jobs)};
    if (name == "width-stability")
        return {verify_width_stability(n_or(5), r_or(3), jobs)};
    if (name == "single-color-reduction")
        return {verify_single_color_reduction(n_or(5), jobs)};
    throw DomainError("unknown identity '" + name + "'");
}

Json encode(const VerificationReport& report)
{
    Json failures = Json::array();
    for (const auto& w : report.failures)
        failures.push_back({{"input", w.input}, {"expected", w.expected}, {"actual", w.actual}});
    return {{"identity", report.identity},
            {"n_range", {report.min_n, report.max_n}},
            {"r_range", {report.min_r, report.max_r}},
            {"cases_checked", report.cases_checked},
            {"expected_cases", report.expected_cases},
            {"failure_count", report.failure_count},
            {"passed", report.passed()},
            {"failures", std::move(failures)}};
}

Json encode_reports(const std::vector<VerificationReport>& reports)
{
    Json list = Json::array();
    bool all = true;
    for (const auto& r : reports) {
        list.push_back(encode(r));
        all = all && r.passed();
    }
    return {{"note", kCertificationNote}, {"passed", all}, {"reports", std::move(list)}};
}

std::string format_report_table(const std::vector<VerificationReport>& reports, bool timing)
{
    std::ostringstream os;
    os << "note: " << kCertificationNote << "\n";
    os << std::left << std::setw(34) << "identity" << std::setw(8) << "n<=" << std::setw(8) << "r<="
       << std::setw(16) << "cases" << std::setw(10) << "failures" << "verdict";
    if (timing)
        os << "  seconds";
    os << "\n";
    for (const auto& r : reports) {
        os << std::left << std::setw(34) << r.identity << std::setw(8) << r.max_n << std::setw(8) << r.max_r
           << std::setw(16) << (std::to_string(r.cases_checked) + "/" + std::to_string(r.expected_cases))
           << std::setw(10) << r.failure_count << (r.passed() ? "PASS" : "FAIL");
        if (timing)
            os << "  " << std::fixed << std::setprecision(3) << r.wall_seconds;
        os << "\n";
        for (const auto& w : r.failures)
            os << "    input " << dump(w.input) << "\n      expected " << dump(w.expected) << "\n      actual   "
               << dump(w.actual) << "\n";
    }
    return os.str();
}

} // namespace colqsym
