#include "semitoric/polygon.hpp"

#include "semitoric/errors.hpp"
#include "semitoric/winding.hpp"

#include <algorithm>

namespace semitoric {

const char* corner_name(CornerKind k) {
    switch (k) {
    case CornerKind::Delzant: return "Delzant";
    case CornerKind::Hidden: return "Hidden";
    case CornerKind::Fake: return "Fake";
    case CornerKind::Invalid: return "Invalid";
    }
    return "?";
}

CornerKind corner_classify(Vec2 u, Vec2 w, std::optional<Int> twist) {
    if (!twist) return det(u, w) == 1 ? CornerKind::Delzant : CornerKind::Invalid;
    Int d = det(shear(*twist, u), w);
    if (d == 1) return CornerKind::Hidden;
    if (d == 0 && det(u, w) > 0) return CornerKind::Fake;
    return CornerKind::Invalid;
}

namespace {

Rational cross(const RPoint& a, const RPoint& b) { return a.x * b.y - a.y * b.x; }
RPoint minus(const RPoint& a, const RPoint& b) { return {a.x - b.x, a.y - b.y}; }

Int lcm(Int a, Int b) { return mul(a / gcd(a, b), b); }

Vec2 primitive_direction(const RPoint& d) {
    Int l = lcm(d.x.den(), d.y.den());
    Int x = mul(d.x.num(), l / d.x.den());
    Int y = mul(d.y.num(), l / d.y.den());
    Int g = gcd(x, y);
    return {x / g, y / g};
}

[[noreturn]] void invalid(const std::string& what) {
    throw DomainError(ErrorKind::InvalidPolygon, what);
}

}  // namespace

PolygonAnalysis polygon_analyze(const SemitoricPolygon& p) {
    PolygonAnalysis a;
    a.vertices = p.vertices;
    const std::size_t m = a.vertices.size();
    if (m < 3) invalid("need at least 3 vertices");
    Rational area2;
    for (std::size_t i = 0; i < m; ++i) area2 = area2 + cross(a.vertices[i], a.vertices[(i + 1) % m]);
    if (area2 == Rational(0)) invalid("zero area");
    if (area2 < Rational(0)) std::reverse(a.vertices.begin() + 1, a.vertices.end());
    const auto& v = a.vertices;

    std::vector<RPoint> edges(m);
    for (std::size_t i = 0; i < m; ++i) edges[i] = minus(v[(i + 1) % m], v[i]);
    for (std::size_t i = 0; i < m; ++i) {
        if (edges[i] == RPoint{}) invalid("repeated vertex " + std::to_string(i));
        if (!(cross(edges[(i + m - 1) % m], edges[i]) > Rational(0)))
            invalid("not strictly convex at vertex " + std::to_string(i));
    }
    a.normals.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Vec2 d = primitive_direction(edges[i]);
        a.normals[i] = {neg(d.y), d.x};
    }

    Rational xmin = v[0].x, xmax = v[0].x;
    for (const auto& q : v) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
    }
    a.corners.assign(m, {});
    for (std::size_t j = 0; j < p.cuts.size(); ++j) {
        const Cut& cut = p.cuts[j];
        if (cut.eps != 1 && cut.eps != -1) invalid("cut sign must be +1 or -1");
        if (j > 0 && !(p.cuts[j - 1].lambda < cut.lambda)) invalid("cuts must be strictly increasing");
        if (!(xmin < cut.lambda && cut.lambda < xmax)) invalid("cut outside the polygon");

        // Section of the polygon over x = lambda.
        std::optional<Rational> lo, hi;
        for (std::size_t i = 0; i < m; ++i) {
            const RPoint& s = v[i];
            const RPoint& t = v[(i + 1) % m];
            if ((s.x <= cut.lambda && cut.lambda <= t.x) || (t.x <= cut.lambda && cut.lambda <= s.x)) {
                if (s.x == t.x) continue;
                Rational y = s.y + (t.y - s.y) * (cut.lambda - s.x) / (t.x - s.x);
                if (!lo || y < *lo) lo = y;
                if (!hi || y > *hi) hi = y;
            }
        }
        RPoint end{cut.lambda, cut.eps == 1 ? *hi : *lo};
        auto it = std::find(v.begin(), v.end(), end);
        if (it == v.end())
            throw DomainError(ErrorKind::HiddenCornerUnsupported,
                              "cut at " + cut.lambda.str() + " meets an edge interior");
        std::size_t i = static_cast<std::size_t>(it - v.begin());
        CornerKind k = corner_classify(a.normals[(i + m - 1) % m], a.normals[i], kCutTwist);
        if (k == CornerKind::Hidden)
            throw DomainError(ErrorKind::HiddenCornerUnsupported, "hidden corner", i);
        if (k != CornerKind::Fake) throw DomainError(ErrorKind::InvalidCorner, "cut corner", i);
        a.corners[i] = {CornerKind::Fake, j};
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (a.corners[i].cut) continue;
        CornerKind k = corner_classify(a.normals[(i + m - 1) % m], a.normals[i], std::nullopt);
        if (k != CornerKind::Delzant) throw DomainError(ErrorKind::InvalidCorner, {}, i);
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!a.corners[i].cut) {
            a.seam = i;
            break;
        }
    }
    return a;
}

void polygon_validate(const SemitoricPolygon& p) { (void)polygon_analyze(p); }

SemitoricHelix polygon_to_helix(const SemitoricPolygon& p) {
    PolygonAnalysis a = polygon_analyze(p);
    const std::size_t m = a.normals.size();
    SemitoricHelix h;
    h.c = static_cast<Int>(p.cuts.size());
    Int power = 0;
    for (std::size_t step = 0; step < m; ++step) {
        std::size_t i = (a.seam + step) % m;
        if (step > 0 && a.corners[i].cut) power = add(power, 1);
        Vec2 w = shear(power, a.normals[i]);
        if (!h.vectors.empty() && h.vectors.back() == w) continue;
        h.vectors.push_back(w);
    }
    helix_validate(h);
    return h;
}

SemitoricPolygon helix_to_polygon(const SemitoricHelix& h) {
    helix_validate(h);
    const std::size_t d = h.d();
    std::vector<Vec2> normals;
    std::vector<bool> fake_after;  // corner between normals[i] and normals[i+1]
    int eps = 1;
    std::size_t k = 0;
    if (h.c > 0) {
        auto pick = [&](auto pred) -> std::optional<std::size_t> {
            for (std::size_t i = 0; i < d; ++i)
                if (pred(h.vectors[i])) return i;
            return std::nullopt;
        };
        auto top = pick([](Vec2 v) { return v.y < 0; });
        if (top) {
            k = *top;
        } else {
            auto bottom = pick([](Vec2 v) { return v.y > 0; });
            if (!bottom) throw DomainError(ErrorKind::Infeasible, "no non-horizontal vector");
            k = *bottom;
            eps = -1;
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        Int p = i <= k ? 0 : neg(h.c);
        normals.push_back(shear(p, h.vectors[i]));
        fake_after.push_back(false);
        if (i == k) {
            for (Int t = 1; t <= h.c; ++t) {
                fake_after.back() = true;
                normals.push_back(shear(neg(t), h.vectors[k]));
                fake_after.push_back(false);
            }
        }
    }
    const std::size_t m = normals.size();
    if (m < 3 || path_winding(normals, true).turns() != 1)
        throw DomainError(ErrorKind::Infeasible, "normals do not wind once");

    std::vector<Vec2> dirs(m);
    for (std::size_t i = 0; i < m; ++i) dirs[i] = {normals[i].y, neg(normals[i].x)};
    Vec2 total{0, 0};
    for (const auto& e : dirs) total = total + e;

    std::optional<std::pair<Rational, Rational>> best_len;
    std::pair<std::size_t, std::size_t> best_pair;
    Rational best_sum;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            Int dd = det(dirs[i], dirs[j]);
            if (dd == 0) continue;
            Vec2 rhs = -(total - dirs[i] - dirs[j]);
            Rational li(det(rhs, dirs[j]), dd), lj(det(dirs[i], rhs), dd);
            if (li < Rational(1) || lj < Rational(1)) continue;
            Rational sum = li + lj;
            if (!best_len || sum < best_sum) {
                best_len = {li, lj};
                best_pair = {i, j};
                best_sum = sum;
            }
        }
    }
    if (!best_len) throw DomainError(ErrorKind::Infeasible, "no edge lengths >= 1 close the polygon");

    SemitoricPolygon out;
    RPoint cur{Rational(0), Rational(0)};
    for (std::size_t i = 0; i < m; ++i) {
        out.vertices.push_back(cur);
        Rational len = i == best_pair.first ? best_len->first
                       : i == best_pair.second ? best_len->second
                                               : Rational(1);
        cur = {cur.x + len * Rational(dirs[i].x), cur.y + len * Rational(dirs[i].y)};
        if (fake_after[i]) out.cuts.push_back({cur.x, eps});
    }
    std::sort(out.cuts.begin(), out.cuts.end(),
              [](const Cut& x, const Cut& y) { return x.lambda < y.lambda; });
    return out;
}

}  // namespace semitoric
