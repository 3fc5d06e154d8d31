#include "semitoric/classify.hpp"

#include "semitoric/cyclic.hpp"
#include "semitoric/errors.hpp"

#include <optional>

namespace semitoric {

std::string HelixClass::render() const {
    switch (type) {
    case 3: return "Type3(k=" + std::to_string(k) + ")";
    case 5: return "Type5(k=" + std::to_string(k) + ")";
    case 6: return "Type6(k=" + std::to_string(k) + ")";
    case 7:
        return "Type7(A0=" + semitoric::render(seed_form.to_word()) + ", c=" + std::to_string(c) + ")";
    default: return "Type" + std::to_string(type);
    }
}

bool seed_form_admissible(const StandardForm& f) {
    if (f.b != 0 || f.a.size() < 2) return false;
    Int last = f.a.back();
    return last != 0 && last != 1;
}

std::vector<Int> integers_of_word(const Word& w) {
    auto f = s_positive_form(w);
    if (!f || f->b != 0 || (!w.empty() && w.syllables().front().letter != Letter::S))
        throw DomainError(ErrorKind::InvalidInput, "word does not start with S: " + render(w));
    return f->a;
}

SemitoricHelix type7_from_seed(Int c, const Mat2& seed) {
    if (c <= 0) throw DomainError(ErrorKind::InvalidInput, "complexity must be positive");
    StandardForm sf = standard_form_of_matrix(seed);
    if (!seed_form_admissible(sf))
        throw DomainError(ErrorKind::SeedNotInS, render(sf.to_word()));
    StandardForm inv = standard_form_of_matrix(inverse(seed));
    Word w = Word::s(2) * inv.to_word() * Word::t(c) * sf.to_word();
    std::vector<Int> a = integers_of_word(w);
    SemitoricHelix h = helix_from_word(c, a, seed);
    if (!helix_is_minimal(h) || h.d() <= 5)
        throw DomainError(ErrorKind::SeedNotInS, "seed does not give a minimal helix of length > 5");
    return h;
}

namespace {

struct Candidate {
    int type;
    Int k;
};

void consider(std::optional<Candidate>& best, Candidate c) {
    if (!best || c.type < best->type || (c.type == best->type && c.k > best->k)) best = c;
}

}  // namespace

HelixClass helix_classify_minimal(const SemitoricHelix& h) {
    helix_validate(h);
    if (h.c <= 0) throw DomainError(ErrorKind::NotClassifiable, "complexity 0 is a toric fan");
    if (!helix_is_minimal(h)) throw DomainError(ErrorKind::NotMinimal);
    const Int c = h.c;
    const std::vector<Int> a = helix_integers(h);
    const std::size_t d = a.size();

    std::optional<Candidate> best;
    for (std::size_t r = 0; r < d; ++r) {
        auto x = rotate_left(a, r);
        if (d == 2) {
            if (c == 1 && x == std::vector<Int>{-1, -4}) consider(best, {1, 0});
            if (c == 2 && x == std::vector<Int>{-2, -2}) consider(best, {2, 0});
        } else if (d == 3) {
            if (c == 1 && x[0] == 0 && x[2] == -x[1] - 2) {
                Int k = -x[1] - 1;
                if (k != 2 && k != -2) consider(best, {3, k});
            }
            if (c != 2 && x[0] == -1 && x[1] == -1 && x[2] == c - 1) consider(best, {4, 0});
        } else if (d == 4) {
            if (c != 1 && x[0] == 0 && x[2] == c && x[3] == -x[1]) {
                Int k = -x[1];
                if (k != 0 && k != 1 && k != -1) consider(best, {5, k});
            }
            if (x[0] == 0 && x[2] == 0 && x[3] == c - x[1]) {
                Int k = -x[1];
                if (k != -1 && k != 1 - c) consider(best, {6, k});
            }
        }
    }
    if (best) {
        HelixClass cls;
        cls.type = best->type;
        cls.k = best->k;
        cls.c = c;
        return cls;
    }
    if (d > 5) {
        for (std::size_t r = 0; r < d; ++r) {
            if (a[r] != 0) continue;
            auto x = rotate_left(a, r);
            Word w;
            for (Int e : x) {
                w.append(Letter::S, 1);
                w.append(Letter::T, e);
            }
            auto conj = conjugator_to_tc(eval(w), c);
            if (!conj) continue;
            StandardForm sf = standard_form_of_matrix(*conj);
            Mat2 seed = mat_t(neg(sf.b)) * *conj;
            sf.b = 0;
            if (!seed_form_admissible(sf)) continue;
            SemitoricHelix rebuilt;
            try {
                rebuilt = type7_from_seed(c, seed);
            } catch (const DomainError&) {
                continue;
            }
            if (helix_integers(rebuilt) != x) continue;
            HelixClass cls;
            cls.type = 7;
            cls.c = c;
            cls.seed_form = sf;
            return cls;
        }
    }
    throw DomainError(ErrorKind::NotClassifiable, helix_canonical(h).render());
}

SemitoricHelix helix_representative(const HelixClass& cls) {
    const Int c = cls.c, k = cls.k;
    auto bad = [&] { throw DomainError(ErrorKind::InvalidInput, "parameters outside the table: " + cls.render()); };
    SemitoricHelix h;
    h.c = c;
    switch (cls.type) {
    case 1:
        if (c != 1) bad();
        h.vectors = {{0, 1}, {-1, -2}};
        break;
    case 2:
        if (c != 2) bad();
        h.vectors = {{0, 1}, {-1, -1}};
        break;
    case 3:
        if (c != 1 || k == 2 || k == -2) bad();
        h.vectors = {{0, 1}, {-1, k}, {0, -1}};
        break;
    case 4:
        if (c == 2 || c <= 0) bad();
        h.vectors = {{1, 0}, {0, 1}, {-1, -1}};
        break;
    case 5:
        if (c == 1 || c <= 0 || k == 0 || k == 1 || k == -1) bad();
        h.vectors = {{1, 0}, {0, 1}, {-1, k}, {0, -1}};
        break;
    case 6:
        if (c <= 0 || k == -1 || k == 1 - c) bad();
        h.vectors = {{1, 0}, {0, 1}, {-1, 0}, {k, -1}};
        break;
    case 7: {
        StandardForm sf = cls.seed_form;
        return type7_from_seed(c, eval(sf.to_word()));
    }
    default: bad();
    }
    helix_validate(h);
    return h;
}

}  // namespace semitoric
