#pragma once

// Exhaustive verifiers. Each one sweeps every case in its range, checks the
// identity exactly, and records up to kMaxWitnesses failing inputs together
// with both sides of the comparison.
//
// The alternating character formulas for descent representations are not
// checked at the level of characters. They are certified only through their
// symmetric-function images, which are the ribbon h-expansions verified here.

#include "colqsym/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace colqsym {

inline constexpr std::size_t kMaxWitnesses = 10;

struct Witness {
    Json input;
    Json expected;
    Json actual;
};

struct VerificationReport {
    std::string identity;
    int min_n = 1;
    int max_n = 0;
    int min_r = 1;
    int max_r = 1;
    std::uint64_t cases_checked = 0;
    std::uint64_t expected_cases = 0;
    std::uint64_t failure_count = 0;
    std::vector<Witness> failures;
    double wall_seconds = 0;

    bool passed() const noexcept { return failure_count == 0; }
};

// Colored ribbon polynomials of every ce in Comp(n, r), at widths n. Both
// ribbon theorems read the same table.
struct RibbonTable {
    int n = 0;
    int r = 1;
    std::vector<ColoredComposition> compositions;
    std::vector<MultiAlphabetPolynomial> ribbons;
};
RibbonTable build_ribbon_table(int n, int r, unsigned jobs);

// Reading-word bijection between D_alpha and SYT(Z_alpha), with
// Des(Q) = Des(pi^-1).
VerificationReport verify_reading_word_bijection(int max_n, unsigned jobs);

// s_{lambda/mu} equals the sum of F_co(Q) over SYT(lambda/mu), for every
// normalized skew shape inside a max_cells square with at most max_cells
// cells.
VerificationReport verify_skew_schur_f_expansion(int max_cells, unsigned jobs);

// s_bll equals the sum of colored F_co(bQ) over SYT(bll).
VerificationReport verify_colored_schur_f_expansion(int max_n, int max_r, unsigned jobs);

// Classical ribbons: r_alpha = F(D_alpha^-1), Schur-positive, coefficients
// counted by tableaux.
VerificationReport verify_ribbon_schur_positivity(int max_n, unsigned jobs);

// Classical ribbons: r_alpha is the alternating sum of h_beta over the
// coarsenings beta of alpha.
VerificationReport verify_ribbon_h_alternating_sum(int max_n, unsigned jobs);

// Colored zigzag shapes are in bijection with Comp(n, r), r(r+1)^(n-1) of them.
VerificationReport verify_colored_zigzag_count(int max_n, int max_r, unsigned jobs);

// Descent class to r-partite tableaux of the colored zigzag shape, with
// sDes(bQ) = sDes of the conjugate inverse.
VerificationReport verify_colored_tableau_bijection(int max_n, int max_r, unsigned jobs);

// Colored ribbon = F of the conjugate-inverse descent class, its Schur
// expansion equals the tableau counts, and all coefficients are >= 0.
VerificationReport verify_colored_ribbon_schur_positivity(const std::vector<RibbonTable>& tables, unsigned jobs);
VerificationReport verify_colored_ribbon_schur_positivity(int max_n, int max_r, unsigned jobs);

// Colored ribbon = alternating sum of h over coarsenings.
VerificationReport verify_colored_ribbon_h_alternating_sum(const std::vector<RibbonTable>& tables,
                                                           unsigned jobs);
VerificationReport verify_colored_ribbon_h_alternating_sum(int max_n, int max_r, unsigned jobs);

// Colored RSK over all of S_{n,r}: inverse round trip, common shapes,
// sDes(w) = sDes(Q), sDes of the conjugate inverse = sDes(P), and the
// square-sum count of tableau pairs.
VerificationReport verify_colored_rsk(int max_n, int max_r, unsigned jobs);

// Schur expansions of colored ribbons agree at widths n and n + 1, on a
// strided sample of up to 20 colored compositions per degree.
VerificationReport verify_width_stability(int max_n, int max_r, unsigned jobs);

// At r = 1 every colored operation matches its classical counterpart.
VerificationReport verify_single_color_reduction(int max_n, unsigned jobs);

// Names accepted by run_identity, in the order "all" runs them.
const std::vector<std::string>& identity_names();

// Runs one named identity (or every one for "all") over n <= max_n and
// r <= max_r. An absent bound takes the identity's default range. Throws
// DomainError for an unknown name.
std::vector<VerificationReport> run_identity(const std::string& name, std::optional<int> max_n,
                                             std::optional<int> max_r, unsigned jobs);

Json encode(const VerificationReport& report);
// One header line with the certification note, then a row per report.
std::string format_report_table(const std::vector<VerificationReport>& reports, bool timing);
Json encode_reports(const std::vector<VerificationReport>& reports);

} // namespace colqsym
