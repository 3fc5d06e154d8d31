#pragma once

#include "semitoric/lattice.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semitoric {

enum class Letter { S, T };

struct Syllable {
    Letter letter;
    Int exp;
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Word in the free group on S and T, kept fused: adjacent syllables use
// different letters and no exponent is zero.
class Word {
public:
    Word() = default;
    static Word s(Int exp = 1);
    static Word t(Int exp = 1);
    static Word from_syllables(const std::vector<Syllable>& syllables);

    Word& append(Letter letter, Int exp);
    Word& append(const Word& other);

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    std::size_t size() const { return syl_.size(); }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Syllable> syl_;
};

Word operator*(const Word& a, const Word& b);

// Grammar: factor* where factor = atom ['^' exponent], atom is S, T, I or a
// parenthesised word, exponent is a signed integer optionally in braces.
Word parse_word(std::string_view text);
std::string render(const Word& w);

Mat2 eval(const Word& w);

// Winding number measured in twelfths: S counts 3, T counts -1.
Int winding_twelfths(const Word& w);
std::string render_twelfths(Int twelfths);

bool eq_psl2(const Word& u, const Word& v);
bool eq_g(const Word& u, const Word& v);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
// x^-1 w x
Word conjugate(const Word& w, const Word& x);

// T^b S T^{a0} S T^{a1} ... S T^{a_{d-1}}
struct SPositiveForm {
    Int b = 0;
    std::vector<Int> a;

    Word to_word() const;
    friend bool operator==(const SPositiveForm&, const SPositiveForm&) = default;
};

// Exact decomposition of a word whose S exponents are all positive.
std::optional<SPositiveForm> s_positive_form(const Word& w);
// Same, after replacing every S^e with e < 0 by S^(e mod 2). Equal in PSL2(Z) only.
SPositiveForm to_s_positive(const Word& w);

// Euclidean column reduction with floor quotients. The result evaluates to m
// exactly (an S^2 is appended when the reduction lands on -m).
SPositiveForm matrix_to_word(const Mat2& m);

// Some X with X m X^-1 = T^c, or nullopt when none exists.
std::optional<Mat2> conjugator_to_tc(const Mat2& m, Int c);

}  // namespace semitoric
