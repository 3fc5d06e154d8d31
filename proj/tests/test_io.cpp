#include <doctest.h>

#include "semitoric/errors.hpp"
#include "semitoric/io.hpp"

using namespace semitoric;

TEST_CASE("helix json round trip") {
    SemitoricHelix h{2, {{-1, 2}, {-2, 3}, {1, -2}}};
    std::string text = to_json(h);
    CHECK(text == R"({"c":2,"d":3,"format":1,"vectors":[[-1,2],[-2,3],[1,-2]]})");
    CHECK(helix_from_json(text) == h);
}

TEST_CASE("fan json round trip") {
    ToricFan f{{{1, 0}, {0, 1}, {-1, -1}}};
    CHECK(fan_from_json(to_json(f)) == f);
}

TEST_CASE("polygon json with exact rationals") {
    auto p = polygon_from_json(
        R"({"format":1,"vertices":[["-7/2","0"],["3/2","0"],["3.5","2"],[-1.5,2]],"cuts":[{"lambda":"-3/2","eps":1}]})");
    REQUIRE(p.vertices.size() == 4);
    CHECK(p.vertices[2].x == Rational(7, 2));
    CHECK(p.vertices[3].x == Rational(-3, 2));
    CHECK(p.cuts[0].lambda == Rational(-3, 2));
    CHECK(polygon_from_json(to_json(p)) == p);
}

TEST_CASE("json errors") {
    CHECK_THROWS_AS(helix_from_json("{\"c\":1,\"vectors\":[[0,1],"), ParseError);
    CHECK_THROWS_AS(helix_from_json("{\"vectors\":[[0,1]]}"), DomainError);
    CHECK_THROWS_AS(helix_from_json("{\"format\":2,\"c\":1,\"vectors\":[]}"), DomainError);
    CHECK_THROWS_AS(helix_from_json("{\"d\":3,\"c\":1,\"vectors\":[[0,1]]}"), DomainError);
    CHECK_THROWS_AS(fan_from_json("{\"vectors\":[[0,\"x\"]]}"), DomainError);
}

TEST_CASE("vector and matrix text") {
    CHECK(parse_vectors("(0,1),(-1,1),(0,-1)") == std::vector<Vec2>{{0, 1}, {-1, 1}, {0, -1}});
    CHECK(parse_vectors("[[1,0],[0,1]]") == std::vector<Vec2>{{1, 0}, {0, 1}});
    CHECK(parse_matrix("[[-1,-2],[2,3]]") == Mat2{-1, -2, 2, 3});
    CHECK_THROWS_AS(parse_vectors("(1,2),(3)"), ParseError);
    CHECK_THROWS_AS(parse_vectors("(1;2)"), ParseError);
}

TEST_CASE("svg output") {
    std::string helix = render_svg(SemitoricHelix{1, {{0, 1}, {-1, 1}, {0, -1}}});
    CHECK(helix.find("<svg") != std::string::npos);
    CHECK(helix.find("version=\"1.1\"") != std::string::npos);
    CHECK(helix.find("c = 1") != std::string::npos);
    SemitoricPolygon p{{{Rational::parse("-3.5"), Rational(0)}, {Rational::parse("1.5"), Rational(0)},
                        {Rational::parse("3.5"), Rational(2)}, {Rational::parse("-1.5"), Rational(2)}},
                       {{Rational::parse("-1.5"), 1}}};
    std::string poly = render_svg(p);
    CHECK(poly.find("stroke-dasharray") != std::string::npos);
    CHECK(poly.find("<circle") != std::string::npos);
    CHECK(render_svg(ToricFan{{{1, 0}, {0, 1}, {-1, -1}}}).find("</svg>") != std::string::npos);
}
