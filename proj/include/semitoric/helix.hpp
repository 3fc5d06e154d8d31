#pragma once

#include "semitoric/fans.hpp"
#include "semitoric/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semitoric {

// Window v_0 .. v_{d-1} of a bi-infinite sequence with v_{i+d} = T^c v_i.
struct SemitoricHelix {
    Int c = 0;
    std::vector<Vec2> vectors;

    std::size_t d() const { return vectors.size(); }
    // Any index, extended by the periodicity rule.
    Vec2 at(Int i) const;
    Mat2 seed() const;  // [v_0, v_1]

    friend bool operator==(const SemitoricHelix&, const SemitoricHelix&) = default;
};

// Order of checks: primitivity, consecutive determinants, seam
// det(v_{d-1}, T^c v_0) = 1, counter-clockwise winding once.
void helix_validate(const SemitoricHelix& h);

// a_i with v_i + v_{i+2} = a_i v_{i+1}, for i = 0 .. d-1.
std::vector<Int> helix_integers(const SemitoricHelix& h);

// S T^{a0} ... S T^{a_{d-1}}; throws HelixEquationViolated if the word is not
// G-equal to S^4 X^-1 T^c X for X = [v_0, v_1].
Word helix_word(const SemitoricHelix& h);

// Builds the helix of a word S T^{a0} ... S T^{a_{d-1}}. Without a seed the
// conjugator is computed; with one it is checked.
SemitoricHelix helix_from_word(Int c, const std::vector<Int>& a,
                               std::optional<Mat2> seed = std::nullopt);

SemitoricHelix helix_from_fan(const ToricFan& fan);

SemitoricHelix helix_blowup(const SemitoricHelix& h, std::size_t i);
SemitoricHelix helix_blowdown(const SemitoricHelix& h, std::size_t i);
bool helix_is_minimal(const SemitoricHelix& h);

struct HelixMinimizeResult {
    SemitoricHelix helix;
    std::vector<std::size_t> blowdowns;
};

HelixMinimizeResult helix_minimize(const SemitoricHelix& h);

struct HelixKey {
    std::size_t d = 0;
    Int c = 0;
    std::vector<Int> integers;  // least cyclic rotation

    std::string render() const;  // "d:c:(a0,...)"
    friend bool operator==(const HelixKey&, const HelixKey&) = default;
    friend auto operator<=>(const HelixKey&, const HelixKey&) = default;
};

HelixKey helix_canonical(const SemitoricHelix& h);
HelixKey helix_key(std::size_t d, Int c, const std::vector<Int>& integers);

// Keys of every minimal helix reachable by some blowdown order.
std::vector<HelixKey> helix_reachable_minimal(const SemitoricHelix& h);

// Equal up to T^k, index shift and, when allowed, a global sign.
bool helix_equivalent(const SemitoricHelix& x, const SemitoricHelix& y, bool allow_sign);

bool contains_horizontal(const SemitoricHelix& h);

// Winding of v_0 .. v_{d-1}, T^c v_0 followed by the straight return to v_0.
Int helix_geometric_winding(const SemitoricHelix& h);

std::string render_vectors(const std::vector<Vec2>& v);

}  // namespace semitoric
