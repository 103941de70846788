#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace colqsym {

using Integer = boost::multiprecision::cpp_int;

// Exponents of all variables, alphabet 0 first, variables in index order.
using Exponents = std::vector<std::uint8_t>;

// Sparse polynomial with exact integer coefficients in r truncated
// alphabets x^(0), ..., x^(r-1), alphabet j having widths[j] variables.
//
// Terms are kept in a std::map keyed by exponent vectors, so iteration runs
// in lexicographic order and the last term is the leading one. Zero
// coefficients are never stored.
class MultiAlphabetPolynomial {
public:
    using Terms = std::map<Exponents, Integer>;

    explicit MultiAlphabetPolynomial(std::vector<int> widths);

    static MultiAlphabetPolynomial constant(std::vector<int> widths, const Integer& value);
    // x_index^(alphabet), index 1-based.
    static MultiAlphabetPolynomial variable(std::vector<int> widths, int alphabet, int index);

    const std::vector<int>& widths() const noexcept { return widths_; }
    int colors_count() const noexcept { return static_cast<int>(widths_.size()); }
    int variable_count() const noexcept { return total_; }
    // Flat position of x_index^(alphabet).
    int slot(int alphabet, int index) const { return offsets_[alphabet] + index - 1; }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Integer coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Integer& c);

    // Common total degree of all terms; nullopt for zero or inhomogeneous.
    std::optional<int> homogeneous_degree() const;
    // Degree contributed by one alphabet in a term.
    int alphabet_degree(const Exponents& e, int alphabet) const;

    // Exchanges x_index and x_{index+1} within one alphabet.
    MultiAlphabetPolynomial swap_variables(int alphabet, int index) const;
    bool is_symmetric_in(int alphabet) const;
    bool is_symmetric() const;

    MultiAlphabetPolynomial& operator+=(const MultiAlphabetPolynomial& other);
    MultiAlphabetPolynomial& operator-=(const MultiAlphabetPolynomial& other);
    MultiAlphabetPolynomial& operator*=(const Integer& scalar);
    // Adds scalar * other without a temporary.
    void add_scaled(const MultiAlphabetPolynomial& other, const Integer& scalar);

    friend MultiAlphabetPolynomial operator+(MultiAlphabetPolynomial a, const MultiAlphabetPolynomial& b)
    {
        return a += b;
    }
    friend MultiAlphabetPolynomial operator-(MultiAlphabetPolynomial a, const MultiAlphabetPolynomial& b)
    {
        return a -= b;
    }
    friend MultiAlphabetPolynomial operator-(MultiAlphabetPolynomial a)
    {
        return a *= Integer(-1);
    }
    friend MultiAlphabetPolynomial operator*(MultiAlphabetPolynomial a, const Integer& s)
    {
        return a *= s;
    }
    friend MultiAlphabetPolynomial operator*(const MultiAlphabetPolynomial& a, const MultiAlphabetPolynomial& b);

    bool operator==(const MultiAlphabetPolynomial& other) const;

    // e.g. "2*x1^2*y1 - x2"; alphabets named x, y, z, w, then a4, a5, ...
    std::string to_string() const;

private:
    void check_compatible(const MultiAlphabetPolynomial& other, const char* op) const;

    std::vector<int> widths_;
    std::vector<int> offsets_;
    int total_ = 0;
    Terms terms_;
};

} // namespace colqsym
