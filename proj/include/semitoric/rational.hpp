#pragma once

#include "semitoric/lattice.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace semitoric {

// Exact rational with overflow-checked 64-bit parts, kept in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(Int n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(Int n, Int d);

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    // Accepts "3", "-7/2", "-3.5", "+0.25".
    static Rational parse(std::string_view text);
    std::string str() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    Int num_ = 0;
    Int den_ = 1;
};

struct RPoint {
    Rational x, y;
    friend bool operator==(const RPoint&, const RPoint&) = default;
};

}  // namespace semitoric
