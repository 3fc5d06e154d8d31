#pragma once

#include "semitoric/helix.hpp"
#include "semitoric/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semitoric {

struct Cut {
    Rational lambda;
    int eps = 1;  // +1: cut runs to the top boundary, -1: to the bottom
    friend bool operator==(const Cut&, const Cut&) = default;
};

struct SemitoricPolygon {
    std::vector<RPoint> vertices;
    std::vector<Cut> cuts;
    friend bool operator==(const SemitoricPolygon&, const SemitoricPolygon&) = default;
};

enum class CornerKind { Delzant, Hidden, Fake, Invalid };
const char* corner_name(CornerKind k);

// Exponent of T applied to the incoming normal at a corner that lies on a cut.
inline constexpr Int kCutTwist = -1;

// u, w: inward normals of the incoming and outgoing edge. Without a twist
// only the Delzant test applies; with one, the hidden and fake tests
// det(T^twist u, w) = 1 and = 0 apply instead.
CornerKind corner_classify(Vec2 u, Vec2 w, std::optional<Int> twist);

struct PolygonCorner {
    CornerKind kind = CornerKind::Delzant;
    std::optional<std::size_t> cut;  // index of the cut ending here
};

struct PolygonAnalysis {
    std::vector<RPoint> vertices;   // counter-clockwise, same first vertex
    std::vector<Vec2> normals;      // inward normal of edge i = (P_i, P_{i+1})
    std::vector<PolygonCorner> corners;  // corner i sits at P_i
    std::size_t seam = 0;           // first Delzant vertex not on a cut
};

PolygonAnalysis polygon_analyze(const SemitoricPolygon& p);
void polygon_validate(const SemitoricPolygon& p);

SemitoricHelix polygon_to_helix(const SemitoricPolygon& p);

// Convex polygon with d Delzant and c fake corners whose helix is h. Edge
// lengths minimise their sum subject to every length being at least 1.
SemitoricPolygon helix_to_polygon(const SemitoricHelix& h);

}  // namespace semitoric
