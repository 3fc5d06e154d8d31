#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

namespace semitoric {

using Int = std::int64_t;

// Overflow-checked arithmetic. All throw DomainError(Overflow).
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);
Int gcd(Int a, Int b);
Int floor_div(Int a, Int b);

struct Vec2 {
    Int x = 0;
    Int y = 0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

Vec2 operator+(Vec2 a, Vec2 b);
Vec2 operator-(Vec2 a, Vec2 b);
Vec2 operator-(Vec2 a);
Vec2 operator*(Int k, Vec2 v);

Int det(Vec2 u, Vec2 w);
Int dot(Vec2 u, Vec2 w);
bool is_primitive(Vec2 v);
Int sup_norm(Vec2 v);

// [[a, b], [c, d]]; columns are (a, c) and (b, d).
struct Mat2 {
    Int a = 1, b = 0, c = 0, d = 1;

    static Mat2 identity() { return {}; }
    static Mat2 from_columns(Vec2 first, Vec2 second) {
        return {first.x, second.x, first.y, second.y};
    }
    Vec2 col0() const { return {a, c}; }
    Vec2 col1() const { return {b, d}; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& m, const Mat2& n);
Vec2 operator*(const Mat2& m, Vec2 v);
Mat2 operator-(const Mat2& m);
Int det(const Mat2& m);
Int trace(const Mat2& m);
// Inverse of a determinant-one matrix; throws NotUnimodular otherwise.
Mat2 inverse(const Mat2& m);

Mat2 mat_s();
Mat2 mat_t(Int power = 1);
// Applies T^k to a vector: (x + k y, y).
Vec2 shear(Int k, Vec2 v);

// Some w with det(u, w) = 1 for primitive u.
Vec2 unimodular_partner(Vec2 u);

std::string to_string(Vec2 v);
std::string to_string(const Mat2& m);
std::ostream& operator<<(std::ostream& os, Vec2 v);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace semitoric
