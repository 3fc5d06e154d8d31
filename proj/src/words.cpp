#include "semitoric/words.hpp"

#include "semitoric/errors.hpp"

#include <cctype>

namespace semitoric {

Word Word::s(Int exp) { return Word{}.append(Letter::S, exp); }
Word Word::t(Int exp) { return Word{}.append(Letter::T, exp); }

Word Word::from_syllables(const std::vector<Syllable>& syllables) {
    Word w;
    for (const auto& s : syllables) w.append(s.letter, s.exp);
    return w;
}

Word& Word::append(Letter letter, Int exp) {
    if (exp == 0) return *this;
    if (!syl_.empty() && syl_.back().letter == letter) {
        syl_.back().exp = add(syl_.back().exp, exp);
        if (syl_.back().exp == 0) syl_.pop_back();
    } else {
        syl_.push_back({letter, exp});
    }
    return *this;
}

Word& Word::append(const Word& other) {
    for (const auto& s : other.syl_) append(s.letter, s.exp);
    return *this;
}

Word operator*(const Word& a, const Word& b) { return concat(a, b); }

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Word parse_all() {
        Word w = parse_sequence();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    [[noreturn]] void fail(const std::string& what) { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Word parse_sequence() {
        Word w;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] == ')') return w;
            w.append(parse_factor());
        }
    }

    Word parse_factor() {
        Word atom;
        bool group = false;
        char ch = text_[pos_];
        if (ch == 'S') { atom = Word::s(); ++pos_; }
        else if (ch == 'T') { atom = Word::t(); ++pos_; }
        else if (ch == 'I') { ++pos_; }
        else if (ch == '(') {
            ++pos_;
            if (++depth_ > 64) fail("nesting too deep");
            atom = parse_sequence();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            --depth_;
            group = true;
        } else {
            fail("unexpected character '" + std::string(1, ch) + "'");
        }
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            Int e = parse_exponent();
            if (!group) {
                if (atom.empty()) return atom;
                return Word{}.append(atom.syllables()[0].letter, e);
            }
            if (e > 100000 || e < -100000) fail("group exponent too large");
            Word base = e < 0 ? invert(atom) : atom;
            Word out;
            for (Int i = 0; i < (e < 0 ? -e : e); ++i) out.append(base);
            return out;
        }
        return atom;
    }

    Int parse_exponent() {
        skip_ws();
        bool braced = false;
        if (pos_ < text_.size() && text_[pos_] == '{') { braced = true; ++pos_; skip_ws(); }
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        Int value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            try {
                value = add(mul(value, 10), text_[pos_] - '0');
            } catch (const DomainError&) {
                fail("exponent out of range");
            }
            ++pos_;
        }
        if (pos_ == start) fail("expected exponent");
        if (braced) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '}') fail("expected '}'");
            ++pos_;
        }
        return negative ? -value : value;
    }
};

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Word& w) {
    if (w.empty()) return "I";
    std::string out;
    for (const auto& s : w.syllables()) {
        out += s.letter == Letter::S ? 'S' : 'T';
        if (s.exp != 1) out += "^" + std::to_string(s.exp);
    }
    return out;
}

static Mat2 power(const Mat2& base, Int e) {
    Mat2 result;
    Mat2 b = e < 0 ? inverse(base) : base;
    Int n = e < 0 ? neg(e) : e;
    while (n > 0) {
        if (n & 1) result = result * b;
        n >>= 1;
        if (n > 0) b = b * b;
    }
    return result;
}

Mat2 eval(const Word& w) {
    Mat2 m;
    for (const auto& s : w.syllables()) {
        if (s.letter == Letter::T) {
            m = m * mat_t(s.exp);
        } else {
            Int r = ((s.exp % 4) + 4) % 4;
            m = m * power(mat_s(), r);
        }
    }
    return m;
}

Int winding_twelfths(const Word& w) {
    Int total = 0;
    for (const auto& s : w.syllables())
        total = add(total, s.letter == Letter::S ? mul(3, s.exp) : neg(s.exp));
    return total;
}

std::string render_twelfths(Int twelfths) { return std::to_string(twelfths) + "/12"; }

bool eq_psl2(const Word& u, const Word& v) {
    Mat2 a = eval(u), b = eval(v);
    return a == b || a == -b;
}

bool eq_g(const Word& u, const Word& v) {
    return eval(u) == eval(v) && winding_twelfths(u) == winding_twelfths(v);
}

Word invert(const Word& w) {
    Word out;
    const auto& s = w.syllables();
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.append(it->letter, neg(it->exp));
    return out;
}

Word concat(const Word& u, const Word& v) {
    Word out = u;
    out.append(v);
    return out;
}

Word conjugate(const Word& w, const Word& x) { return invert(x) * w * x; }

Word SPositiveForm::to_word() const {
    Word w = Word::t(b);
    for (Int e : a) {
        w.append(Letter::S, 1);
        w.append(Letter::T, e);
    }
    return w;
}

std::optional<SPositiveForm> s_positive_form(const Word& w) {
    SPositiveForm f;
    bool open = false;  // an S has been seen and its T exponent is pending
    for (const auto& s : w.syllables()) {
        if (s.letter == Letter::T) {
            if (open) f.a.back() = s.exp;
            else f.b = s.exp;
        } else {
            if (s.exp < 0) return std::nullopt;
            for (Int i = 0; i < s.exp; ++i) f.a.push_back(0);
            open = true;
        }
    }
    return f;
}

SPositiveForm to_s_positive(const Word& w) {
    Word pos;
    for (const auto& s : w.syllables()) {
        Int e = s.exp;
        if (s.letter == Letter::S && e < 0) e = ((e % 2) + 2) % 2;
        pos.append(s.letter, e);
    }
    return *s_positive_form(pos);
}

SPositiveForm matrix_to_word(const Mat2& m) {
    if (det(m) != 1) throw DomainError(ErrorKind::NotUnimodular, to_string(m));
    SPositiveForm f;
    std::vector<Int> quotients;
    Mat2 cur = m;
    while (cur.c != 0) {
        Int k = floor_div(cur.a, cur.c);
        quotients.push_back(k);
        // cur = T^k S cur'  =>  cur' = S^-1 T^-k cur
        Mat2 sheared{sub(cur.a, mul(k, cur.c)), sub(cur.b, mul(k, cur.d)), cur.c, cur.d};
        cur = Mat2{sheared.c, sheared.d, neg(sheared.a), neg(sheared.b)};
    }
    // cur is +-T^q now.
    bool negated = cur.a == -1;
    Int q = negated ? neg(cur.b) : cur.b;
    if (quotients.empty()) {
        if (!negated) {
            f.b = q;
        } else {
            f.a = {0, q};
        }
        return f;
    }
    f.b = quotients[0];
    for (std::size_t i = 1; i < quotients.size(); ++i) f.a.push_back(quotients[i]);
    if (!negated) {
        f.a.push_back(q);
    } else {
        f.a.push_back(0);
        f.a.push_back(0);
        f.a.push_back(q);
    }
    return f;
}

std::optional<Mat2> conjugator_to_tc(const Mat2& m, Int c) {
    if (det(m) != 1) throw DomainError(ErrorKind::NotUnimodular, to_string(m));
    if (c == 0) {
        if (m == Mat2::identity()) return Mat2::identity();
        return std::nullopt;
    }
    if (trace(m) != 2 || m == Mat2::identity()) return std::nullopt;
    Vec2 u{neg(m.b), sub(m.a, 1)};
    if (u == Vec2{0, 0}) u = Vec2{sub(m.d, 1), neg(m.c)};
    Int g = gcd(u.x, u.y);
    u = {u.x / g, u.y / g};
    Vec2 w = unimodular_partner(u);
    Mat2 basis = Mat2::from_columns(u, w);
    Mat2 x = inverse(basis);
    Mat2 conj = x * m * basis;
    // conj = [[1, t], [0, 1]]; t is a conjugacy invariant in SL2(Z).
    if (conj.a != 1 || conj.c != 0 || conj.d != 1) return std::nullopt;
    if (conj.b != c) return std::nullopt;
    return x;
}

}  // namespace semitoric
