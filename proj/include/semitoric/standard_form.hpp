#pragma once

#include "semitoric/words.hpp"

#include <string>
#include <vector>

namespace semitoric {

// T^b S T^{a0} ... S T^{a_{d-1}} with a_i > 1 for every i <= d-2.
struct StandardForm {
    Int b = 0;
    std::vector<Int> a;

    Word to_word() const;
    SPositiveForm to_s_positive() const { return {b, a}; }
    friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

enum class Rule { R1, R2, R3 };

struct RewriteStep {
    Rule rule;
    std::size_t position;  // syllable index of the match start
    std::string before;
    std::string after;
};

// Rewrites with S^2 -> I, S T^-n S -> (TST)^n (n > 0), STS -> T^-1 S T^-1.
// The highest-priority rule with a match is applied at its leftmost match.
StandardForm reduce(const SPositiveForm& word, std::vector<RewriteStep>* trace = nullptr);
StandardForm reduce(const Word& word, std::vector<RewriteStep>* trace = nullptr);

StandardForm standard_form_of_matrix(const Mat2& m);
bool is_standard(const SPositiveForm& f);

const char* rule_name(Rule r);

}  // namespace semitoric
