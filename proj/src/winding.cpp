#include "semitoric/winding.hpp"

#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

int half_index(Vec2 v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

void check_step(Vec2 u, Vec2 w, std::size_t i) {
    if (u == Vec2{0, 0} || w == Vec2{0, 0} || det(u, w) == 0)
        throw DomainError(ErrorKind::DegenerateStep, to_string(u) + " -> " + to_string(w), i);
}

}  // namespace

bool angle_less(Vec2 u, Vec2 w) {
    int hu = half_index(u), hw = half_index(w);
    if (hu != hw) return hu < hw;
    return det(u, w) > 0;
}

std::string PathWinding::render() const {
    if (is_whole()) return std::to_string(turns());
    return std::to_string(half_turns) + "/2";
}

PathWinding path_winding(std::span<const Vec2> path, bool closed) {
    if (path.empty()) return {};
    Int wraps = 0;
    std::size_t steps = closed ? path.size() : path.size() - 1;
    for (std::size_t i = 0; i < steps; ++i) {
        Vec2 u = path[i], w = path[(i + 1) % path.size()];
        check_step(u, w, i);
        if (angle_less(w, u)) ++wraps;
    }
    if (closed) return {mul(2, wraps)};
    Vec2 first = path.front(), last = path.back();
    // floor((theta_last - theta_first) / pi), with theta in [0, 2pi)
    Int base = half_index(last) - half_index(first);
    Vec2 rf = half_index(first) ? -first : first;
    Vec2 rl = half_index(last) ? -last : last;
    if (det(rf, rl) < 0) base -= 1;
    return {add(mul(2, wraps), base)};
}

Int arc_then_segment_winding(std::span<const Vec2> arcs) {
    if (arcs.size() < 2) throw DomainError(ErrorKind::TooShort, "need at least two vectors");
    Int wraps = 0;
    for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
        check_step(arcs[i], arcs[i + 1], i);
        if (angle_less(arcs[i + 1], arcs[i])) ++wraps;
    }
    Vec2 u = arcs.back(), w = arcs.front();
    Int d = det(u, w);
    if (u == w) return wraps;
    if (d == 0) throw DomainError(ErrorKind::DegenerateStep, "return segment passes through origin");
    if (d > 0) {
        if (angle_less(w, u)) ++wraps;
    } else {
        if (angle_less(u, w)) --wraps;
    }
    return wraps;
}

}  // namespace semitoric
