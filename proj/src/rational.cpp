#include "semitoric/rational.hpp"

#include "semitoric/errors.hpp"

#include <cctype>

namespace semitoric {

Rational::Rational(Int n, Int d) {
    if (d == 0) throw DomainError(ErrorKind::InvalidInput, "zero denominator");
    if (d < 0) { n = neg(n); d = neg(d); }
    Int g = gcd(n, d);
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
}

Rational Rational::parse(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> Rational { throw ParseError(i, what); };
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    auto digits = [&](Int& value, Int& scale) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = add(mul(value, 10), text[i] - '0');
            scale = mul(scale, 10);
            ++i;
        }
        return i > start;
    };
    Int whole = 0, unused = 1;
    bool have_whole = digits(whole, unused);
    Rational result(whole);
    if (i < text.size() && text[i] == '.') {
        ++i;
        Int frac = 0, scale = 1;
        bool have_frac = digits(frac, scale);
        if (!have_whole && !have_frac) return fail("expected digits");
        result = Rational(add(mul(whole, scale), frac), scale);
    } else if (i < text.size() && text[i] == '/') {
        if (!have_whole) return fail("expected numerator");
        ++i;
        Int den = 0;
        if (!digits(den, unused)) return fail("expected denominator");
        if (den == 0) return fail("zero denominator");
        result = Rational(whole, den);
    } else if (!have_whole) {
        return fail("expected a number");
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) return fail("trailing characters");
    return negative ? -result : result;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    Int g = gcd(a.den_, b.den_);
    Int bd = b.den_ / g;
    return Rational(add(mul(a.num_, bd), mul(b.num_, a.den_ / g)), mul(a.den_, bd));
}

Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = neg(a.num_);
    r.den_ = a.den_;
    return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError(ErrorKind::InvalidInput, "division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return mul(a.num_, b.den_) <=> mul(b.num_, a.den_);
}

}  // namespace semitoric
