#include "colqsym/json_io.hpp"

#include <limits>

namespace colqsym {

namespace {

template <class Tag>
Json encode_partition_expansion(const Expansion<Tag>& e)
{
    Json terms = Json::array();
    for (const auto& [index, c] : e.coefficients)
        terms.push_back({{"index", encode(index)}, {"coeff", encode(c)}});
    return {{"n", e.n}, {"r", e.r}, {"basis", Tag::name}, {"terms", std::move(terms)}};
}

Json rows_of(const StandardTableau& t) { return t.rows(); }

} // namespace

Json encode(const Integer& value)
{
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return value.convert_to<std::int64_t>();
    return value.str();
}

Json encode(const Composition& a) { return {{"n", a.size()}, {"parts", a.parts()}}; }

Json encode(const ColoredComposition& ce)
{
    return {{"n", ce.size()}, {"r", ce.colors_count()}, {"parts", ce.parts()}, {"colors", ce.colors()}};
}

Json encode(const ColoredSet& cs)
{
    Json pairs = Json::array();
    for (const auto& p : cs.pairs())
        pairs.push_back({p.value, p.color});
    return {{"n", cs.n()}, {"r", cs.colors_count()}, {"pairs", std::move(pairs)}};
}

Json encode(const Permutation& p) { return p.word(); }

Json encode(const ColoredPermutation& a)
{
    return {{"n", a.size()},
            {"r", a.colors_count()},
            {"word", a.perm().word()},
            {"colors", a.colors().entries()}};
}

Json encode(const Partition& l) { return l.parts(); }

Json encode(const SkewShape& s) { return {{"outer", s.outer().parts()}, {"inner", s.inner().parts()}}; }

Json encode(const StandardTableau& t) { return rows_of(t); }

Json encode(const RPartitePartition& bll)
{
    Json out = Json::array();
    for (const auto& l : bll.components())
        out.push_back(encode(l));
    return out;
}

Json encode(const RPartiteTableau& bq)
{
    Json out = Json::array();
    for (const auto& t : bq.components())
        out.push_back(rows_of(t));
    return out;
}

Json encode(const TableauPair& pair) { return {{"P", encode(pair.insertion)}, {"Q", encode(pair.recording)}}; }

Json encode(const SchurExpansion& e) { return encode_partition_expansion(e); }

Json encode(const HExpansion& e) { return encode_partition_expansion(e); }

Json encode(const FExpansion& e)
{
    Json terms = Json::array();
    for (const auto& [ce, c] : e.coefficients)
        terms.push_back({{"index", {ce.parts(), ce.colors()}}, {"coeff", encode(c)}});
    return {{"n", e.n}, {"r", e.r}, {"basis", "f"}, {"terms", std::move(terms)}};
}

Json encode(const MultiAlphabetPolynomial& p)
{
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json exponents = Json::array();
        for (int j = 0; j < p.colors_count(); ++j) {
            Json row = Json::array();
            for (int i = 1; i <= p.widths()[j]; ++i)
                row.push_back(static_cast<int>(it->first[p.slot(j, i)]));
            exponents.push_back(std::move(row));
        }
        terms.push_back({{"exponents", std::move(exponents)}, {"coeff", encode(it->second)}});
    }
    return {{"widths", p.widths()}, {"terms", std::move(terms)}};
}

std::string dump(const Json& j) { return j.dump(); }

} // namespace colqsym
