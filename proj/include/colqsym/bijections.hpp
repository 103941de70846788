#pragma once

#include "colqsym/permutations.hpp"
#include "colqsym/shapes.hpp"

#include <utility>

namespace colqsym {

// Reads a ribbon tableau row by row from the bottom row upwards, each row
// left to right. For Q in SYT(Z_alpha) the result lies in D_alpha and
// Des(Q) = Des(result^-1). Throws ShapeError for non-ribbon shapes.
Permutation reading_word(const StandardTableau& q);

// The ribbon tableau of shape Z_alpha whose reading word is p.
// Throws DomainError unless co(p) = alpha.
StandardTableau reading_word_inverse(const Permutation& p, const Composition& a);

// Per rainbow block of a: fill the block's ribbon with the block's letters
// in reading order, then direct-sum the ribbons of each color in block
// order. The result has shape lambda_{Z_co(a)} and
// sDes(result) = sDes(conj_inverse(a)).
RPartiteTableau colored_class_to_tableau(const ColoredPermutation& a);

// Inverse of colored_class_to_tableau on D_ce. Throws DomainError when bq
// does not have the shape lambda_{Z_ce}.
ColoredPermutation colored_tableau_to_class(const RPartiteTableau& bq, const ColoredComposition& ce);

struct TableauPair {
    RPartiteTableau insertion;  // P
    RPartiteTableau recording;  // Q

    auto operator<=>(const TableauPair&) const = default;
};

// Straight-shape row insertion with the usual bumping rule. Returns the row
// in which a new cell was created.
int row_insert(std::vector<std::vector<int>>& rows, int value);

// For i = 1..n insert pi_i into the P-component of color z_i and record i
// in the Q-component of the same color at the new cell.
TableauPair colored_rsk(const ColoredPermutation& a);

// Throws DomainError unless P and Q have the same straight r-partite shape.
ColoredPermutation colored_rsk_inverse(const RPartiteTableau& p, const RPartiteTableau& q);

} // namespace colqsym
