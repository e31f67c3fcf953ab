#ifndef DODGSON_RATIONAL_HPP
#define DODGSON_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dodgson {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "[+-]digits[.digits]" or "[+-]p/q". Throws ParseError on a
    /// malformed literal and DivisionByZero when q = 0.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws DivisionByZero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const;
    Rational inverse() const;

    /// "p/q" when q != 1, else "p".
    std::string to_string() const;

    std::size_t hash() const;

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_{0};
};

Rational rat_from_decimal_string(std::string_view text);
Rational rat_add(const Rational& a, const Rational& b);
Rational rat_sub(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
Rational rat_div(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dodgson

template <>
struct std::hash<dodgson::Rational> {
    std::size_t operator()(const dodgson::Rational& r) const noexcept { return r.hash(); }
};

#endif  // DODGSON_RATIONAL_HPP
