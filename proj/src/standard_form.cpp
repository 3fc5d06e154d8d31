#include "semitoric/standard_form.hpp"

#include "semitoric/errors.hpp"

#include <optional>

namespace semitoric {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    }
    return "?";
}

Word StandardForm::to_word() const { return SPositiveForm{b, a}.to_word(); }

namespace {

using Syls = std::vector<Syllable>;

// Replaces syls[first, last) with the syllables of `middle`, fusing at both seams.
Syls splice(const Syls& syls, std::size_t first, std::size_t last, const Syls& middle) {
    Word w;
    for (std::size_t i = 0; i < first; ++i) w.append(syls[i].letter, syls[i].exp);
    for (const auto& s : middle) w.append(s.letter, s.exp);
    for (std::size_t i = last; i < syls.size(); ++i) w.append(syls[i].letter, syls[i].exp);
    return w.syllables();
}

bool is_single_s(const Syls& syls, std::size_t i) {
    return i < syls.size() && syls[i].letter == Letter::S && syls[i].exp == 1;
}

struct Match {
    Rule rule;
    std::size_t pos;
};

std::optional<Match> find_match(const Syls& syls) {
    for (std::size_t i = 0; i < syls.size(); ++i)
        if (syls[i].letter == Letter::S && syls[i].exp >= 2) return Match{Rule::R1, i};
    for (std::size_t i = 0; i + 2 < syls.size(); ++i)
        if (is_single_s(syls, i) && syls[i + 1].exp < 0 && is_single_s(syls, i + 2))
            return Match{Rule::R2, i};
    for (std::size_t i = 0; i + 2 < syls.size(); ++i)
        if (is_single_s(syls, i) && syls[i + 1].exp == 1 && is_single_s(syls, i + 2))
            return Match{Rule::R3, i};
    return std::nullopt;
}

std::string render_syls(const Syls& s) { return render(Word::from_syllables(s)); }

}  // namespace

StandardForm reduce(const SPositiveForm& word, std::vector<RewriteStep>* trace) {
    Syls syls = word.to_word().syllables();
    while (auto m = find_match(syls)) {
        Syls before, after;
        std::size_t last = 0;
        switch (m->rule) {
        case Rule::R1: {
            Int e = syls[m->pos].exp;
            before = {syls[m->pos]};
            if (e > 2) after = {{Letter::S, e - 2}};
            last = m->pos + 1;
            break;
        }
        case Rule::R2: {
            Int n = neg(syls[m->pos + 1].exp);
            before = {syls[m->pos], syls[m->pos + 1], syls[m->pos + 2]};
            Word rep;
            for (Int k = 0; k < n; ++k) {
                rep.append(Letter::T, 1);
                rep.append(Letter::S, 1);
                rep.append(Letter::T, 1);
            }
            after = rep.syllables();
            last = m->pos + 3;
            break;
        }
        case Rule::R3:
            before = {syls[m->pos], syls[m->pos + 1], syls[m->pos + 2]};
            after = {{Letter::T, -1}, {Letter::S, 1}, {Letter::T, -1}};
            last = m->pos + 3;
            break;
        }
        if (trace)
            trace->push_back({m->rule, m->pos, render_syls(before), render_syls(after)});
        syls = splice(syls, m->pos, last, after);
    }
    auto f = s_positive_form(Word::from_syllables(syls));
    return StandardForm{f->b, f->a};
}

StandardForm reduce(const Word& word, std::vector<RewriteStep>* trace) {
    return reduce(to_s_positive(word), trace);
}

StandardForm standard_form_of_matrix(const Mat2& m) { return reduce(matrix_to_word(m)); }

bool is_standard(const SPositiveForm& f) {
    for (std::size_t i = 0; i + 1 < f.a.size(); ++i)
        if (f.a[i] <= 1) return false;
    return true;
}

}  // namespace semitoric
