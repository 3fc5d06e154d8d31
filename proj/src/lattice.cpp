#include "semitoric/lattice.hpp"

#include "semitoric/errors.hpp"

#include <limits>

namespace semitoric {

namespace {
[[noreturn]] void overflow(const char* op) {
    throw DomainError(ErrorKind::Overflow, std::string("integer overflow in ") + op);
}
}  // namespace

Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) overflow("add");
    return r;
}

Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
    return r;
}

Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
    return r;
}

Int neg(Int a) {
    if (a == std::numeric_limits<Int>::min()) overflow("neg");
    return -a;
}

Int gcd(Int a, Int b) {
    a = a < 0 ? neg(a) : a;
    b = b < 0 ? neg(b) : b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int floor_div(Int a, Int b) {
    if (b == 0) throw DomainError(ErrorKind::InvalidInput, "division by zero");
    if (a == std::numeric_limits<Int>::min() && b == -1) overflow("div");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Vec2 operator+(Vec2 a, Vec2 b) { return {add(a.x, b.x), add(a.y, b.y)}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {sub(a.x, b.x), sub(a.y, b.y)}; }
Vec2 operator-(Vec2 a) { return {neg(a.x), neg(a.y)}; }
Vec2 operator*(Int k, Vec2 v) { return {mul(k, v.x), mul(k, v.y)}; }

Int det(Vec2 u, Vec2 w) { return sub(mul(u.x, w.y), mul(u.y, w.x)); }
Int dot(Vec2 u, Vec2 w) { return add(mul(u.x, w.x), mul(u.y, w.y)); }

bool is_primitive(Vec2 v) { return gcd(v.x, v.y) == 1; }

Int sup_norm(Vec2 v) {
    Int ax = v.x < 0 ? neg(v.x) : v.x;
    Int ay = v.y < 0 ? neg(v.y) : v.y;
    return ax > ay ? ax : ay;
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {add(mul(m.a, n.a), mul(m.b, n.c)), add(mul(m.a, n.b), mul(m.b, n.d)),
            add(mul(m.c, n.a), mul(m.d, n.c)), add(mul(m.c, n.b), mul(m.d, n.d))};
}

Vec2 operator*(const Mat2& m, Vec2 v) {
    return {add(mul(m.a, v.x), mul(m.b, v.y)), add(mul(m.c, v.x), mul(m.d, v.y))};
}

Mat2 operator-(const Mat2& m) { return {neg(m.a), neg(m.b), neg(m.c), neg(m.d)}; }

Int det(const Mat2& m) { return sub(mul(m.a, m.d), mul(m.b, m.c)); }
Int trace(const Mat2& m) { return add(m.a, m.d); }

Mat2 inverse(const Mat2& m) {
    if (det(m) != 1) throw DomainError(ErrorKind::NotUnimodular, to_string(m));
    return {m.d, neg(m.b), neg(m.c), m.a};
}

Mat2 mat_s() { return {0, -1, 1, 0}; }
Mat2 mat_t(Int power) { return {1, power, 0, 1}; }

Vec2 shear(Int k, Vec2 v) { return {add(v.x, mul(k, v.y)), v.y}; }

Vec2 unimodular_partner(Vec2 u) {
    // Extended Euclid: find (s, t) with s*u.x + t*u.y = 1, then w = (-t, s).
    Int old_r = u.x, r = u.y, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = floor_div(old_r, r);
        Int nr = sub(old_r, mul(q, r));
        old_r = r; r = nr;
        Int ns = sub(old_s, mul(q, s));
        old_s = s; s = ns;
        Int nt = sub(old_t, mul(q, t));
        old_t = t; t = nt;
    }
    if (old_r == -1) { old_s = neg(old_s); old_t = neg(old_t); old_r = 1; }
    if (old_r != 1) throw DomainError(ErrorKind::NotPrimitive, to_string(u));
    return {neg(old_t), old_s};
}

std::string to_string(Vec2 v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::string to_string(const Mat2& m) {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" +
           std::to_string(m.c) + "," + std::to_string(m.d) + "]]";
}

std::ostream& operator<<(std::ostream& os, Vec2 v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << to_string(m); }

}  // namespace semitoric
