#include "semitoric/helix.hpp"

#include "semitoric/cyclic.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/winding.hpp"

#include <set>

namespace semitoric {

Vec2 SemitoricHelix::at(Int i) const {
    Int n = static_cast<Int>(vectors.size());
    if (n == 0) throw DomainError(ErrorKind::TooShort, "empty helix");
    Int q = floor_div(i, n);
    Int r = sub(i, mul(q, n));
    return shear(mul(c, q), vectors[static_cast<std::size_t>(r)]);
}

Mat2 SemitoricHelix::seed() const { return Mat2::from_columns(at(0), at(1)); }

Int helix_geometric_winding(const SemitoricHelix& h) {
    std::vector<Vec2> arcs = h.vectors;
    arcs.push_back(h.at(static_cast<Int>(h.d())));
    return arc_then_segment_winding(arcs);
}

void helix_validate(const SemitoricHelix& h) {
    const auto& v = h.vectors;
    if (v.empty()) throw DomainError(ErrorKind::TooShort, "empty helix");
    if (h.c < 0) throw DomainError(ErrorKind::InvalidInput, "complexity must be non-negative");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_primitive(v[i])) throw DomainError(ErrorKind::NotPrimitive, to_string(v[i]), i);
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (det(v[i], v[i + 1]) != 1) throw DomainError(ErrorKind::BadDeterminant, {}, i);
    if (det(v.back(), shear(h.c, v.front())) != 1)
        throw DomainError(ErrorKind::SeamViolation, "det(v_{d-1}, T^c v_0) != 1");
    if (helix_geometric_winding(h) != 1)
        throw DomainError(ErrorKind::BadWinding, "helix does not wind once per period");
}

std::vector<Int> helix_integers(const SemitoricHelix& h) {
    std::vector<Int> a(h.d());
    for (std::size_t i = 0; i < h.d(); ++i) {
        Int k = static_cast<Int>(i);
        a[i] = det(h.at(k), h.at(k + 2));
    }
    return a;
}

Word helix_word(const SemitoricHelix& h) {
    Word w;
    for (Int e : helix_integers(h)) {
        w.append(Letter::S, 1);
        w.append(Letter::T, e);
    }
    Word x = matrix_to_word(h.seed()).to_word();
    Word rhs = Word::s(4) * conjugate(Word::t(h.c), x);
    if (!eq_g(w, rhs)) throw DomainError(ErrorKind::HelixEquationViolated, render(w));
    return w;
}

SemitoricHelix helix_from_word(Int c, const std::vector<Int>& a, std::optional<Mat2> seed) {
    if (a.empty()) throw DomainError(ErrorKind::TooShort, "empty integer list");
    Word w;
    for (Int e : a) {
        w.append(Letter::S, 1);
        w.append(Letter::T, e);
    }
    if (winding_twelfths(w) != sub(12, c))
        throw DomainError(ErrorKind::NotAHelixWord, render(w), std::nullopt, "WrongWinding");
    Mat2 m = eval(w);
    Mat2 x;
    if (seed) {
        if (det(*seed) != 1) throw DomainError(ErrorKind::NotUnimodular, to_string(*seed));
        if (*seed * m * inverse(*seed) != mat_t(c))
            throw DomainError(ErrorKind::NotAHelixWord, render(w), std::nullopt, "NotConjugateToTc");
        x = *seed;
    } else {
        auto found = conjugator_to_tc(m, c);
        if (!found)
            throw DomainError(ErrorKind::NotAHelixWord, render(w), std::nullopt, "NotConjugateToTc");
        x = *found;
    }
    SemitoricHelix h;
    h.c = c;
    h.vectors.push_back(x.col0());
    if (a.size() >= 2) h.vectors.push_back(x.col1());
    for (std::size_t i = 0; i + 2 < a.size(); ++i)
        h.vectors.push_back(a[i] * h.vectors[i + 1] - h.vectors[i]);
    helix_validate(h);
    return h;
}

SemitoricHelix helix_from_fan(const ToricFan& fan) {
    fan_validate(fan);
    return SemitoricHelix{0, fan.vectors};
}

SemitoricHelix helix_blowup(const SemitoricHelix& h, std::size_t i) {
    if (i >= h.d()) throw DomainError(ErrorKind::IndexOutOfRange, {}, i);
    SemitoricHelix out = h;
    Int k = static_cast<Int>(i);
    out.vectors.insert(out.vectors.begin() + static_cast<std::ptrdiff_t>(i + 1),
                       h.at(k) + h.at(k + 1));
    return out;
}

static bool is_site(const SemitoricHelix& h, std::size_t i) {
    Int k = static_cast<Int>(i);
    return h.at(k) == h.at(k - 1) + h.at(k + 1);
}

SemitoricHelix helix_blowdown(const SemitoricHelix& h, std::size_t i) {
    if (i >= h.d()) throw DomainError(ErrorKind::IndexOutOfRange, {}, i);
    if (!is_site(h, i)) throw DomainError(ErrorKind::NotBlowdownSite, {}, i);
    std::size_t min_len = h.c == 0 ? 3 : 2;
    if (h.d() - 1 < min_len) throw DomainError(ErrorKind::MinimumLength, {}, i);
    SemitoricHelix out = h;
    out.vectors.erase(out.vectors.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

static std::optional<std::size_t> first_site(const SemitoricHelix& h) {
    std::size_t min_len = h.c == 0 ? 3 : 2;
    if (h.d() <= min_len) return std::nullopt;
    for (std::size_t i = 0; i < h.d(); ++i)
        if (is_site(h, i)) return i;
    return std::nullopt;
}

bool helix_is_minimal(const SemitoricHelix& h) {
    for (std::size_t i = 0; i < h.d(); ++i)
        if (is_site(h, i)) return false;
    return true;
}

HelixMinimizeResult helix_minimize(const SemitoricHelix& h) {
    helix_validate(h);
    HelixMinimizeResult r{h, {}};
    while (auto i = first_site(r.helix)) {
        r.helix = helix_blowdown(r.helix, *i);
        r.blowdowns.push_back(*i);
    }
    return r;
}

std::string HelixKey::render() const {
    std::string s = std::to_string(d) + ":" + std::to_string(c) + ":(";
    for (std::size_t i = 0; i < integers.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(integers[i]);
    }
    return s + ")";
}

HelixKey helix_key(std::size_t d, Int c, const std::vector<Int>& integers) {
    return {d, c, least_rotation(integers)};
}

HelixKey helix_canonical(const SemitoricHelix& h) {
    return helix_key(h.d(), h.c, helix_integers(h));
}

std::vector<HelixKey> helix_reachable_minimal(const SemitoricHelix& h) {
    helix_validate(h);
    std::set<HelixKey> found, seen;
    std::vector<SemitoricHelix> stack{h};
    while (!stack.empty()) {
        SemitoricHelix cur = std::move(stack.back());
        stack.pop_back();
        HelixKey key = helix_canonical(cur);
        if (!seen.insert(key).second) continue;
        bool any = false;
        std::size_t min_len = cur.c == 0 ? 3 : 2;
        if (cur.d() > min_len) {
            for (std::size_t i = 0; i < cur.d(); ++i) {
                if (is_site(cur, i)) {
                    any = true;
                    stack.push_back(helix_blowdown(cur, i));
                }
            }
        }
        if (!any) found.insert(key);
    }
    return {found.begin(), found.end()};
}

bool helix_equivalent(const SemitoricHelix& x, const SemitoricHelix& y, bool allow_sign) {
    if (x.d() != y.d() || x.c != y.c) return false;
    Int n = static_cast<Int>(x.d());
    Mat2 xs = x.seed();
    for (Int shift = 0; shift < n; ++shift) {
        Mat2 ys = Mat2::from_columns(y.at(shift), y.at(shift + 1));
        Mat2 g = xs * inverse(ys);
        // g must be T^k, or -T^k when a sign is allowed
        if (g.c != 0 || g.a != g.d) continue;
        if (g.a != 1 && !(allow_sign && g.a == -1)) continue;
        bool ok = true;
        for (Int i = 0; i < n && ok; ++i) ok = x.at(i) == g * y.at(i + shift);
        if (ok) return true;
    }
    return false;
}

bool contains_horizontal(const SemitoricHelix& h) {
    for (const auto& v : h.vectors)
        if (v.y == 0) return true;
    return false;
}

std::string render_vectors(const std::vector<Vec2>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s;
}

}  // namespace semitoric
