#pragma once

#include "semitoric/lattice.hpp"

#include <span>
#include <string>

namespace semitoric {

// Total counter-clockwise turning of a path, each step turning by an angle
// in (0, 2pi), counted in half turns (floor of angle / pi).
struct PathWinding {
    Int half_turns = 0;

    bool is_whole() const { return half_turns % 2 == 0; }
    Int turns() const { return half_turns / 2; }
    std::string render() const;
};

// Open paths report floor(total / pi). Closed paths include the step from the
// last vector back to the first and always give a whole number of turns.
PathWinding path_winding(std::span<const Vec2> path, bool closed);

// Winding number of the loop that follows `arcs` counter-clockwise step by
// step and then returns from the last vector to the first along a straight
// segment (which must not pass through the origin).
Int arc_then_segment_winding(std::span<const Vec2> arcs);

// Strict order on directions by angle in [0, 2pi).
bool angle_less(Vec2 u, Vec2 w);

}  // namespace semitoric
