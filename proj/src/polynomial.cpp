#include "colqsym/polynomial.hpp"

#include "colqsym/errors.hpp"

#include <sstream>

namespace colqsym {

MultiAlphabetPolynomial::MultiAlphabetPolynomial(std::vector<int> widths) : widths_(std::move(widths))
{
    if (widths_.empty())
        throw DomainError("polynomial needs at least one alphabet");
    for (int w : widths_) {
        if (w < 0)
            throw DomainError("alphabet width must be nonnegative");
        offsets_.push_back(total_);
        total_ += w;
    }
}

MultiAlphabetPolynomial MultiAlphabetPolynomial::constant(std::vector<int> widths, const Integer& value)
{
    MultiAlphabetPolynomial p(std::move(widths));
    p.add_term(Exponents(p.total_, 0), value);
    return p;
}

MultiAlphabetPolynomial MultiAlphabetPolynomial::variable(std::vector<int> widths, int alphabet, int index)
{
    MultiAlphabetPolynomial p(std::move(widths));
    if (alphabet < 0 || alphabet >= p.colors_count() || index < 1 || index > p.widths_[alphabet])
        throw DomainError("variable outside the truncated alphabets");
    Exponents e(p.total_, 0);
    e[p.slot(alphabet, index)] = 1;
    p.add_term(e, 1);
    return p;
}

Integer MultiAlphabetPolynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void MultiAlphabetPolynomial::add_term(const Exponents& e, const Integer& c)
{
    if (static_cast<int>(e.size()) != total_)
        throw DimensionError("exponent vector length does not match the alphabets");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<int> MultiAlphabetPolynomial::homogeneous_degree() const
{
    std::optional<int> degree;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (auto x : e)
            d += x;
        if (degree && *degree != d)
            return std::nullopt;
        degree = d;
    }
    return degree;
}

int MultiAlphabetPolynomial::alphabet_degree(const Exponents& e, int alphabet) const
{
    int d = 0;
    for (int i = 0; i < widths_[alphabet]; ++i)
        d += e[offsets_[alphabet] + i];
    return d;
}

MultiAlphabetPolynomial MultiAlphabetPolynomial::swap_variables(int alphabet, int index) const
{
    MultiAlphabetPolynomial out(widths_);
    const int a = slot(alphabet, index);
    const int b = slot(alphabet, index + 1);
    for (const auto& [e, c] : terms_) {
        Exponents swapped = e;
        std::swap(swapped[a], swapped[b]);
        out.terms_.emplace(std::move(swapped), c);
    }
    return out;
}

bool MultiAlphabetPolynomial::is_symmetric_in(int alphabet) const
{
    for (int i = 1; i < widths_[alphabet]; ++i)
        if (swap_variables(alphabet, i) != *this)
            return false;
    return true;
}

bool MultiAlphabetPolynomial::is_symmetric() const
{
    for (int j = 0; j < colors_count(); ++j)
        if (!is_symmetric_in(j))
            return false;
    return true;
}

void MultiAlphabetPolynomial::check_compatible(const MultiAlphabetPolynomial& other, const char* op) const
{
    if (widths_ != other.widths_)
        throw DimensionError(std::string(op) + ": polynomials over different alphabets");
}

MultiAlphabetPolynomial& MultiAlphabetPolynomial::operator+=(const MultiAlphabetPolynomial& other)
{
    add_scaled(other, 1);
    return *this;
}

MultiAlphabetPolynomial& MultiAlphabetPolynomial::operator-=(const MultiAlphabetPolynomial& other)
{
    add_scaled(other, -1);
    return *this;
}

MultiAlphabetPolynomial& MultiAlphabetPolynomial::operator*=(const Integer& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= scalar;
    return *this;
}

void MultiAlphabetPolynomial::add_scaled(const MultiAlphabetPolynomial& other, const Integer& scalar)
{
    check_compatible(other, "add");
    if (scalar == 0)
        return;
    for (const auto& [e, c] : other.terms_)
        add_term(e, c * scalar);
}

MultiAlphabetPolynomial operator*(const MultiAlphabetPolynomial& a, const MultiAlphabetPolynomial& b)
{
    a.check_compatible(b, "multiply");
    MultiAlphabetPolynomial out(a.widths_);
    Exponents e(a.total_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.total_; ++i) {
                const int sum = ea[i] + eb[i];
                if (sum > 255)
                    throw ResourceError("exponent overflow in polynomial product");
                e[i] = static_cast<std::uint8_t>(sum);
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool MultiAlphabetPolynomial::operator==(const MultiAlphabetPolynomial& other) const
{
    return widths_ == other.widths_ && terms_ == other.terms_;
}

std::string MultiAlphabetPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    static const char* names[] = {"x", "y", "z", "w"};
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer magnitude = c < 0 ? Integer(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (magnitude != 1) {
            os << magnitude;
            wrote = true;
        }
        for (int j = 0; j < colors_count(); ++j) {
            for (int i = 1; i <= widths_[j]; ++i) {
                const int power = e[slot(j, i)];
                if (power == 0)
                    continue;
                if (wrote)
                    os << '*';
                if (j < 4)
                    os << names[j] << i;
                else
                    os << 'a' << j << '_' << i;
                if (power > 1)
                    os << '^' << power;
                wrote = true;
            }
        }
        if (!wrote)
            os << 1;
    }
    return os.str();
}

} // namespace colqsym
