#pragma once

#include "semitoric/helix.hpp"
#include "semitoric/standard_form.hpp"

#include <string>

namespace semitoric {

struct HelixClass {
    int type = 0;              // 1 .. 7
    Int k = 0;                 // types 3, 5, 6
    Int c = 0;
    StandardForm seed_form;    // type 7 only; b = 0

    std::string render() const;
    friend bool operator==(const HelixClass&, const HelixClass&) = default;
};

// Minimal helices with c > 0. When a helix fits several rows of the table the
// lowest type wins, then the largest parameter.
HelixClass helix_classify_minimal(const SemitoricHelix& h);

// The table's representative helix for a class (parameters are checked).
SemitoricHelix helix_representative(const HelixClass& cls);

// Whether a standard form may seed a type 7 helix: b = 0, length >= 2 and a
// last exponent outside {0, 1}.
bool seed_form_admissible(const StandardForm& f);

// S^2 . sf(A0^-1) . T^c . sf(A0) as a helix with v_0, v_1 the columns of A0.
SemitoricHelix type7_from_seed(Int c, const Mat2& seed);

// Integers a_i of S T^{a0} ... S T^{a_{d-1}} for a word with positive S
// exponents that starts with S.
std::vector<Int> integers_of_word(const Word& w);

}  // namespace semitoric
