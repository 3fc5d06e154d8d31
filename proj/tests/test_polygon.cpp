#include <doctest.h>

#include "semitoric/errors.hpp"
#include "semitoric/polygon.hpp"
#include "semitoric/verify.hpp"
#include "semitoric/winding.hpp"

#include <random>

using namespace semitoric;

static RPoint pt(const char* x, const char* y) { return {Rational::parse(x), Rational::parse(y)}; }

static SemitoricPolygon coupled_spin() {
    return {{pt("-3.5", "0"), pt("1.5", "0"), pt("3.5", "2"), pt("-1.5", "2")},
            {{Rational::parse("-1.5"), 1}}};
}

TEST_CASE("exact rationals") {
    CHECK(Rational::parse("-3.5") == Rational(-7, 2));
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("+0.25") == Rational(1, 4));
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("3").str() == "3");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
    CHECK((Rational(1, 2) / Rational(-1, 4)) == Rational(-2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
}

TEST_CASE("corner classification") {
    CHECK(corner_classify({1, -1}, {0, 1}, std::nullopt) == CornerKind::Delzant);
    CHECK(corner_classify({0, 1}, {-1, 1}, std::nullopt) == CornerKind::Delzant);
    CHECK(corner_classify({0, -1}, {1, -1}, -1) == CornerKind::Fake);
    CHECK(corner_classify({1, 0}, {1, 1}, std::nullopt) == CornerKind::Delzant);
    CHECK(corner_classify({1, 0}, {1, 2}, std::nullopt) == CornerKind::Invalid);
    // det(T^-1 u, w) = 1: u = (0,-1), T^-1 u = (1,-1), w = (1,0)
    CHECK(corner_classify({0, -1}, {1, 0}, -1) == CornerKind::Hidden);
    CHECK(corner_classify({0, -1}, {3, 1}, -1) == CornerKind::Invalid);
}

TEST_CASE("coupled spin polygon") {
    SemitoricHelix h = polygon_to_helix(coupled_spin());
    CHECK(h.c == 1);
    CHECK(h.vectors == std::vector<Vec2>{{0, 1}, {-1, 1}, {0, -1}});
    // the same polygon listed clockwise
    SemitoricPolygon cw{{pt("-3.5", "0"), pt("-1.5", "2"), pt("3.5", "2"), pt("1.5", "0")},
                        {{Rational::parse("-7/2") + Rational(2), 1}}};
    CHECK(polygon_to_helix(cw).vectors == h.vectors);
    PolygonAnalysis a = polygon_analyze(coupled_spin());
    CHECK(a.corners[3].kind == CornerKind::Fake);
    CHECK(a.seam == 0);
}

TEST_CASE("polygon errors") {
    auto tag = [](const SemitoricPolygon& p) -> std::string {
        try {
            polygon_to_helix(p);
        } catch (const DomainError& e) {
            return kind_name(e.kind());
        }
        return "ok";
    };
    SemitoricPolygon p = coupled_spin();
    p.cuts[0].lambda = Rational(0);  // meets the top edge in its interior
    CHECK(tag(p) == "HiddenCornerUnsupported");
    p.cuts[0].lambda = Rational(5);
    CHECK(tag(p) == "InvalidPolygon");
    p = coupled_spin();
    p.cuts.clear();  // the corner at (-1.5, 2) is then tested as Delzant and passes
    CHECK(tag(p) == "ok");
    SemitoricPolygon bad{{pt("0", "0"), pt("2", "0"), pt("0", "1")}, {}};
    CHECK(tag(bad) == "InvalidCorner");
    SemitoricPolygon flat{{pt("0", "0"), pt("1", "0"), pt("2", "0")}, {}};
    CHECK(tag(flat) == "InvalidPolygon");
    SemitoricPolygon collinear{{pt("0", "0"), pt("1", "0"), pt("2", "0"), pt("0", "2")}, {}};
    CHECK(tag(collinear) == "InvalidPolygon");
}

TEST_CASE("delzant polygons give fans") {
    SemitoricPolygon square{{pt("0", "0"), pt("1", "0"), pt("1", "1"), pt("0", "1")}, {}};
    SemitoricHelix h = polygon_to_helix(square);
    CHECK(h.c == 0);
    CHECK(h.vectors == std::vector<Vec2>{{0, 1}, {-1, 0}, {0, -1}, {1, 0}});
}

static bool closes_with_minimum(const SemitoricPolygon& p) {
    // Every edge has lattice length >= 1 and at least one vertex-enumeration
    // argument: no edge length can be lowered while keeping closure, which for
    // two free lengths means at most two edges are longer than 1.
    PolygonAnalysis a = polygon_analyze(p);
    std::size_t longer = 0;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        const RPoint& s = a.vertices[i];
        const RPoint& t = a.vertices[(i + 1) % a.vertices.size()];
        Vec2 n = a.normals[i];
        Vec2 e{n.y, -n.x};
        Rational len = e.x != 0 ? (t.x - s.x) / Rational(e.x) : (t.y - s.y) / Rational(e.y);
        if (len < Rational(1)) return false;
        if (len > Rational(1)) ++longer;
    }
    return longer <= 2;
}

TEST_CASE("helix to polygon and back") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 200; ++t) {
        SemitoricHelix h = random_helix(rng, 3);
        SemitoricPolygon p = helix_to_polygon(h);
        CHECK(p.cuts.size() == static_cast<std::size_t>(h.c));
        CHECK(p.vertices.size() == h.d() + static_cast<std::size_t>(h.c));
        CHECK(closes_with_minimum(p));
        SemitoricHelix back = polygon_to_helix(p);
        CHECK(helix_canonical(back) == helix_canonical(h));
        CHECK(helix_equivalent(back, h, false));
    }
}

TEST_CASE("minimal polygon for the coupled spin helix") {
    SemitoricPolygon p = helix_to_polygon({1, {{0, 1}, {-1, 1}, {0, -1}}});
    // lengths (1, 1, 1, 1) close up: bottom (1,0), slope (1,1), top (-1,0) twice.
    CHECK(p.vertices.size() == 4);
    CHECK(p.cuts.size() == 1);
    CHECK(p.cuts[0].eps == 1);
}
