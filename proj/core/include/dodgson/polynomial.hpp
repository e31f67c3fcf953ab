#ifndef DODGSON_POLYNOMIAL_HPP
#define DODGSON_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dodgson/rational.hpp"

namespace dodgson {

/// Index of a symbolic variable. Displayed as "x0", "x1", ...
struct VarId {
    std::uint32_t index = 0;

    std::string name() const { return "x" + std::to_string(index); }

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Variable binding used for evaluation (the limit point of a repair).
using Assignment = std::map<VarId, Rational>;

/// Product of variables raised to positive powers. The empty monomial is 1.
class Monomial {
public:
    using Factor = std::pair<VarId, std::uint32_t>;

    Monomial() = default;
    static Monomial variable(VarId v, std::uint32_t exponent = 1);

    bool is_one() const { return factors_.empty(); }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t exponent(VarId v) const;
    const std::vector<Factor>& factors() const { return factors_; }

    bool divides(const Monomial& other) const;
    /// Requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    /// Graded-lexicographic comparison with x0 > x1 > ...
    friend std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

    std::string to_string() const;

private:
    // Sorted by variable index, exponents never zero.
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

/// Orders monomials from largest to smallest under graded-lex.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

struct Term {
    Monomial monomial;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are stored in strictly descending graded-lex order with nonzero
/// coefficients, so the zero polynomial has no terms and equality is
/// structural.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
    Polynomial(std::int64_t constant) : Polynomial(Rational(constant)) {}  // NOLINT
    static Polynomial variable(VarId v);
    static Polynomial monomial(Monomial m, Rational coefficient);

    /// Parses the canonical text form, e.g. "-55*x0 + 213" or "x0^2 - 47/12*x1".
    static Polynomial parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one()); }
    /// Throws Error when the polynomial is not constant.
    Rational constant_value() const;
    std::uint32_t total_degree() const;
    std::set<VarId> variables() const;
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const { return terms_.front(); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Exact quotient by single-divisor division under graded-lex order.
    /// Throws DivisionByZero when `den` is zero and InexactDivision when the
    /// remainder is nonzero.
    Polynomial exact_div(const Polynomial& den) const;

    /// Throws UnboundVariable when a variable of the polynomial is missing
    /// from `point`.
    Rational evaluate(const Assignment& point) const;

    std::string to_string() const;

private:
    explicit Polynomial(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

    static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract);
    // this - coeff * mono * d
    void subtract_scaled(const Term& scale, const Polynomial& d);

    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_exact_div(const Polynomial& num, const Polynomial& den);
Rational poly_eval(const Polynomial& p, const Assignment& point);
bool poly_is_zero(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace dodgson

#endif  // DODGSON_POLYNOMIAL_HPP
