#pragma once

#include "colqsym/bijections.hpp"
#include "colqsym/symfun.hpp"

#include <json.hpp>

namespace colqsym {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal
// strings.
Json encode(const Integer& value);

Json encode(const Composition& a);
Json encode(const ColoredComposition& ce);
Json encode(const ColoredSet& cs);
Json encode(const Permutation& p);
Json encode(const ColoredPermutation& a);
Json encode(const Partition& l);
Json encode(const SkewShape& s);
Json encode(const StandardTableau& t);
Json encode(const RPartitePartition& bll);
Json encode(const RPartiteTableau& bq);
Json encode(const TableauPair& pair);
Json encode(const SchurExpansion& e);
Json encode(const HExpansion& e);
Json encode(const FExpansion& e);
// Full term list, leading term first.
Json encode(const MultiAlphabetPolynomial& p);

// Compact single-line rendering used in witnesses and CLI output.
std::string dump(const Json& j);

} // namespace colqsym
