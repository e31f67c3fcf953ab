#include "dodgson/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "dodgson/errors.hpp"

namespace dodgson {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(VarId v, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(v, exponent);
        m.degree_ = exponent;
    }
    return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, VarId id) { return f.first < id; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    auto it = other.factors_.begin();
    for (const auto& [var, exp] : factors_) {
        while (it != other.factors_.end() && it->first < var) ++it;
        if (it == other.factors_.end() || it->first != var || it->second < exp) return false;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    Monomial out;
    auto it = divisor.factors_.begin();
    for (const auto& [var, exp] : factors_) {
        std::uint32_t sub = 0;
        if (it != divisor.factors_.end() && it->first == var) {
            sub = it->second;
            ++it;
        }
        if (exp > sub) out.factors_.emplace_back(var, exp - sub);
    }
    out.degree_ = degree_ - divisor.degree_;
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
        // A smaller variable index present in only one monomial makes it larger.
        if (i->first != j->first) return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
        if (i->second != j->second) return i->second <=> j->second;
    }
    // Equal degrees and identical prefix imply identical monomials.
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [var, exp] : factors_) {
        if (!out.empty()) out += '*';
        out += var.name();
        if (exp != 1) out += '^' + std::to_string(exp);
    }
    return out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Rational constant) {
    if (!constant.is_zero()) terms_.push_back(Term{Monomial{}, std::move(constant)});
}

Polynomial Polynomial::variable(VarId v) { return monomial(Monomial::variable(v), Rational(1)); }

Polynomial Polynomial::monomial(Monomial m, Rational coefficient) {
    Polynomial p;
    if (!coefficient.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(coefficient)});
    return p;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("polynomial '" + to_string() + "' is not constant");
    return terms_.front().coefficient;
}

std::uint32_t Polynomial::total_degree() const {
    // Graded order: the leading term has maximal degree.
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::set<VarId> Polynomial::variables() const {
    std::set<VarId> vars;
    for (const auto& t : terms_) {
        for (const auto& f : t.monomial.factors()) vars.insert(f.first);
    }
    return vars;
}

std::vector<Term> Polynomial::merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        const auto c = grlex_compare(i->monomial, j->monomial);
        if (c > 0) {
            out.push_back(*i++);
        } else if (c < 0) {
            out.push_back(subtract ? Term{j->monomial, -j->coefficient} : *j);
            ++j;
        } else {
            Rational sum = subtract ? i->coefficient - j->coefficient : i->coefficient + j->coefficient;
            if (!sum.is_zero()) out.push_back(Term{i->monomial, std::move(sum)});
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, a.end());
    for (; j != b.end(); ++j) out.push_back(subtract ? Term{j->monomial, -j->coefficient} : *j);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    terms_ = merge(terms_, rhs.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    terms_ = merge(terms_, rhs.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return Polynomial(Polynomial::merge(a.terms_, b.terms_, false)); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return Polynomial(Polynomial::merge(a.terms_, b.terms_, true)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    if (a.terms_.size() == 1 && a.terms_.front().monomial.is_one()) {
        Polynomial out = b;
        for (auto& t : out.terms_) t.coefficient *= a.terms_.front().coefficient;
        return out;
    }
    if (b.terms_.size() == 1 && b.terms_.front().monomial.is_one()) return b * a;

    std::map<Monomial, Rational, GrlexDescending> acc;
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, s.coefficient);
            if (inserted) {
                it->second *= t.coefficient;
            } else {
                it->second += s.coefficient * t.coefficient;
            }
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
    }
    return Polynomial(std::move(out));
}

void Polynomial::subtract_scaled(const Term& scale, const Polynomial& d) {
    std::vector<Term> scaled;
    scaled.reserve(d.terms_.size());
    // Multiplying by a monomial preserves the term order.
    for (const auto& t : d.terms_) scaled.push_back(Term{scale.monomial * t.monomial, scale.coefficient * t.coefficient});
    terms_ = merge(terms_, scaled, true);
}

Polynomial Polynomial::exact_div(const Polynomial& den) const {
    if (den.is_zero()) throw DivisionByZero();
    if (den.is_constant()) {
        const Rational inv = den.constant_value().inverse();
        Polynomial out = *this;
        for (auto& t : out.terms_) t.coefficient *= inv;
        return out;
    }

    const Term& lead = den.leading_term();
    Polynomial rest = *this;
    std::vector<Term> quotient;
    while (!rest.is_zero()) {
        const Term& top = rest.leading_term();
        // In single-divisor division a term that misses the divisor's leading
        // monomial lands in the remainder and is never touched again.
        if (!lead.monomial.divides(top.monomial)) {
            throw InexactDivision("(" + to_string() + ") is not divisible by (" + den.to_string() + ")");
        }
        Term q{top.monomial.quotient(lead.monomial), top.coefficient / lead.coefficient};
        rest.subtract_scaled(q, den);
        quotient.push_back(std::move(q));
    }
    // Leading terms strictly decrease, so quotient terms arrive in order.
    return Polynomial(std::move(quotient));
}

Rational Polynomial::evaluate(const Assignment& point) const {
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational value = t.coefficient;
        for (const auto& [var, exp] : t.monomial.factors()) {
            auto it = point.find(var);
            if (it == point.end()) throw UnboundVariable(var.index);
            for (std::uint32_t e = 0; e < exp; ++e) value *= it->second;
        }
        sum += value;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coefficient.sign() < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = t.coefficient.abs();
        if (t.monomial.is_one()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += t.monomial.to_string();
        } else {
            out += mag.to_string() + "*" + t.monomial.to_string();
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        Polynomial result;
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
            skip_ws();
        }
        while (true) {
            Polynomial term = parse_term();
            result += negative ? -term : term;
            skip_ws();
            if (at_end()) break;
            const char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            negative = op == '-';
            skip_ws();
        }
        return result;
    }

private:
    Polynomial parse_term() {
        Polynomial term = parse_factor();
        while (true) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            get();
            skip_ws();
            term *= parse_factor();
        }
        return term;
    }

    Polynomial parse_factor() {
        if (at_end()) fail("unexpected end of input");
        if (peek() == 'x') {
            get();
            const auto index = parse_unsigned();
            std::uint32_t exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                get();
                skip_ws();
                exponent = parse_unsigned();
            }
            return Polynomial::monomial(Monomial::variable(VarId{index}, exponent), Rational(1));
        }
        const std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '/')) get();
        if (start == pos_) fail("expected a number or variable");
        return Polynomial(Rational::parse(text_.substr(start, pos_ - start)));
    }

    std::uint32_t parse_unsigned() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
        if (start == pos_ || pos_ - start > 9) fail("expected a small unsigned integer");
        return static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bad polynomial '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_sub(const Polynomial& a, const Polynomial& b) { return a - b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial poly_exact_div(const Polynomial& num, const Polynomial& den) { return num.exact_div(den); }
Rational poly_eval(const Polynomial& p, const Assignment& point) { return p.evaluate(point); }
bool poly_is_zero(const Polynomial& p) { return p.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace dodgson
