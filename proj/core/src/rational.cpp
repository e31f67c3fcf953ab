#include "dodgson/rational.hpp"

#include <cctype>
#include <climits>
#include <functional>
#include <ostream>

#include "dodgson/errors.hpp"

namespace dodgson {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    // mpz_class has no portable int64_t constructor; go through the string form
    // only when the value does not fit a long.
    if (value >= LONG_MIN && value <= LONG_MAX) {
        value_ = mpq_class(mpz_class(static_cast<long>(value)));
    } else {
        value_ = mpq_class(mpz_class(std::to_string(value), 10));
    }
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view original = text;
    text = trim(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto fail = [&]() -> Rational {
        throw ParseError("malformed rational literal '" + std::string(original) + "'");
    };

    mpz_class num;
    mpz_class den = 1;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto p = text.substr(0, slash);
        auto q = text.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) return fail();
        num = mpz_class(std::string(p), 10);
        den = mpz_class(std::string(q), 10);
        if (den == 0) throw DivisionByZero();
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) return fail();
        num = mpz_class(std::string(whole) + std::string(frac), 10);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    } else {
        if (!all_digits(text)) return fail();
        num = mpz_class(std::string(text), 10);
    }
    if (negative) num = -num;
    return Rational(num, den);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const {
    std::string out = value_.get_num().get_str();
    if (value_.get_den() != 1) {
        out += '/';
        out += value_.get_den().get_str();
    }
    return out;
}

std::size_t Rational::hash() const {
    // Low limbs of numerator and denominator are enough to spread values.
    const auto num = mpz_get_si(value_.get_num_mpz_t());
    const auto den = mpz_get_ui(value_.get_den_mpz_t());
    std::size_t h = std::hash<long>{}(num);
    h ^= std::hash<unsigned long>{}(den) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Rational rat_from_decimal_string(std::string_view text) { return Rational::parse(text); }
Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
Rational rat_sub(const Rational& a, const Rational& b) { return a - b; }
Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
Rational rat_div(const Rational& a, const Rational& b) { return a / b; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace dodgson
