#pragma once

#include "colqsym/permutations.hpp"
#include "colqsym/polynomial.hpp"
#include "colqsym/shapes.hpp"

#include <map>
#include <span>
#include <vector>

namespace colqsym {

using Widths = std::vector<int>;

// Widths n, ..., n for r alphabets: enough to separate every element of
// degree n.
inline Widths uniform_widths(int r, int n) { return Widths(static_cast<std::size_t>(r), n); }

// Coefficients on a basis indexed by r-partite partitions of n.
template <class Tag>
struct Expansion {
    int n = 0;
    int r = 1;
    std::map<RPartitePartition, Integer> coefficients;

    void add(const RPartitePartition& index, const Integer& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = coefficients.try_emplace(index, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                coefficients.erase(it);
        }
    }
    Integer coefficient(const RPartitePartition& index) const
    {
        auto it = coefficients.find(index);
        return it == coefficients.end() ? Integer(0) : it->second;
    }
    bool operator==(const Expansion&) const = default;
};

struct SchurBasisTag {
    static constexpr const char* name = "schur";
};
struct HBasisTag {
    static constexpr const char* name = "h";
};
using SchurExpansion = Expansion<SchurBasisTag>;
using HExpansion = Expansion<HBasisTag>;

// Coefficients on colored fundamental quasisymmetric functions.
struct FExpansion {
    int n = 0;
    int r = 1;
    std::map<ColoredComposition, Integer> coefficients;

    bool operator==(const FExpansion&) const = default;
};

// Skew Schur polynomial in one alphabet, summed over semistandard fillings
// with entries bounded by that alphabet's width.
MultiAlphabetPolynomial schur_poly(const SkewShape& shape, int alphabet, const Widths& widths);
MultiAlphabetPolynomial schur_poly(const Partition& shape, int alphabet, const Widths& widths);

MultiAlphabetPolynomial h_poly(int k, int alphabet, const Widths& widths);
MultiAlphabetPolynomial e_poly(int k, int alphabet, const Widths& widths);

// Gessel's F_alpha: weakly increasing index chains, strict at S(alpha).
MultiAlphabetPolynomial fundamental_F(const Composition& a, int alphabet, const Widths& widths);

// Colored F_(alpha, epsilon): chain position t uses alphabet eps~_t and the
// step r_j -> r_j + 1 is strict exactly when eps_j >= eps_{j+1}.
MultiAlphabetPolynomial colored_F(const ColoredComposition& ce, const Widths& widths);

// The same element computed from a representative permutation: strict
// steps at Des(pi, z) minus {n}, alphabet z_t at position t.
MultiAlphabetPolynomial colored_F_of_permutation(const ColoredPermutation& a, const Widths& widths);

MultiAlphabetPolynomial colored_schur(const RPartiteSkewShape& shape, const Widths& widths);
MultiAlphabetPolynomial colored_schur(const RPartitePartition& shape, const Widths& widths);

// r_alpha = s_{Z_alpha} in one alphabet.
MultiAlphabetPolynomial ribbon_schur(const Composition& a, int alphabet, const Widths& widths);

// Product of the rainbow blocks' ribbon Schur polynomials, each block in
// the alphabet of its color.
MultiAlphabetPolynomial colored_ribbon(const ColoredComposition& ce, const Widths& widths);

// lambda_(alpha, epsilon): parts grouped by color, each group sorted
// decreasingly.
RPartitePartition h_partition_of(const ColoredComposition& ce);
MultiAlphabetPolynomial colored_h(const RPartitePartition& shape, const Widths& widths);
MultiAlphabetPolynomial colored_h(const ColoredComposition& ce, const Widths& widths);

// Sum of colored F over the colored descent compositions of the members.
MultiAlphabetPolynomial qsym_generating_function(std::span<const ColoredPermutation> elements,
                                                 const Widths& widths);

// Leading-monomial peeling. Requires a homogeneous degree-n polynomial,
// symmetric in each alphabet, with each width at least the degree carried
// by that alphabet. Throws NotInSpanError otherwise.
SchurExpansion expand_in_colored_schur(const MultiAlphabetPolynomial& p, int n);

MultiAlphabetPolynomial evaluate(const SchurExpansion& e, const Widths& widths);
MultiAlphabetPolynomial evaluate(const HExpansion& e, const Widths& widths);
MultiAlphabetPolynomial evaluate(const FExpansion& e, const Widths& widths);

// Number of bQ in SYT(bll) with co(bQ) = ce.
Integer schur_coeff_by_tableau_count(const ColoredComposition& ce, const RPartitePartition& shape);

// All c_bll(ce) at once: grows straight r-partite shapes with entry i forced
// into component eps~_i and the descent pattern forced by ce.
SchurExpansion schur_expansion_by_tableau_count(const ColoredComposition& ce);

// Alternating sum over the coarsenings of ce of h_(beta, delta).
HExpansion ribbon_h_expansion(const ColoredComposition& ce);

// F-expansion of the ribbon via the conjugate-inverse descent class.
FExpansion ribbon_f_expansion(const ColoredComposition& ce);

} // namespace colqsym
