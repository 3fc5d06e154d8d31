#pragma once

#include "semitoric/lattice.hpp"

#include <string>
#include <vector>

namespace semitoric {

struct ToricFan {
    std::vector<Vec2> vectors;
    friend bool operator==(const ToricFan&, const ToricFan&) = default;
};

// Checks, in order: primitivity, length >= 3, unit consecutive determinants
// (index d-1 is the wrap-around pair), counter-clockwise winding once.
void fan_validate(const ToricFan& fan);

// a_i with v_i + v_{i+2} = a_i v_{i+1}, indices cyclic.
std::vector<Int> fan_integers(const ToricFan& fan);

ToricFan fan_blowup(const ToricFan& fan, std::size_t i);
ToricFan fan_blowdown(const ToricFan& fan, std::size_t i);
bool fan_is_minimal(const ToricFan& fan);

struct FanMinimizeResult {
    ToricFan fan;
    std::vector<std::size_t> blowdowns;  // index used at each step
};

// Greedy: always blows down at the lowest available index.
FanMinimizeResult fan_minimize(const ToricFan& fan);

struct FanClass {
    enum class Kind { CP2, Square, Hirzebruch };
    Kind kind = Kind::CP2;
    Int k = 0;  // Hirzebruch parameter

    std::string render() const;
    friend bool operator==(const FanClass&, const FanClass&) = default;
    friend auto operator<=>(const FanClass&, const FanClass&) = default;
};

FanClass fan_classify_minimal(const ToricFan& fan);

// Hirzebruch(k) and Hirzebruch(-k) are the same fan up to SL2(Z) and a
// rotation; this maps both to k > 0.
FanClass normalized(FanClass cls);

// Every minimal model reachable through any blowdown order (length <= 10),
// normalized.
std::vector<FanClass> fan_reachable_minimal(const ToricFan& fan);

ToricFan fan_model(const FanClass& cls);

}  // namespace semitoric
