#include <doctest.h>

#include "oracles.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/standard_form.hpp"

#include <map>
#include <random>

using namespace semitoric;

static std::string sf(const char* w) { return render(reduce(parse_word(w)).to_word()); }

TEST_CASE("reduction examples") {
    CHECK(sf("S^2T^-1ST^2ST^3ST^2ST^2") == "T^-1ST^2ST^3ST^2ST^2");
    CHECK(sf("STS") == "T^-1ST^-1");
    CHECK(sf("ST^-1S") == "TST");
    CHECK(sf("S^2") == "I");
    CHECK(sf("S^4") == "I");
    CHECK(sf("ST^-3S") == "TST^2ST^2ST");
}

TEST_CASE("reduction trace") {
    std::vector<RewriteStep> trace;
    reduce(parse_word("STS"), &trace);
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].rule == Rule::R3);
    CHECK(trace[0].position == 0);
    trace.clear();
    reduce(parse_word("S^2ST^-1S"), &trace);
    REQUIRE(trace.size() >= 2);
    CHECK(trace[0].rule == Rule::R1);
    CHECK(trace[1].rule == Rule::R2);
}

TEST_CASE("reduction preserves the PSL2 class and lands in standard form") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        Word w = oracle::random_word(rng, 1 + i % 7, 3);
        StandardForm f = reduce(w);
        CHECK(is_standard(f.to_s_positive()));
        CHECK(eq_psl2(f.to_word(), w));
    }
}

TEST_CASE("standard form agrees with the continued fraction oracle") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 1000; ++i) {
        Mat2 m = oracle::eval(oracle::random_word(rng, 1 + i % 8, 4));
        StandardForm f = standard_form_of_matrix(m);
        oracle::Form o = oracle::hj_standard_form(m);
        CHECK(f.b == o.b);
        CHECK(f.a == o.a);
    }
}

TEST_CASE("uniqueness: two decompositions reduce to the same form") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 500; ++i) {
        Word w = oracle::random_word(rng, 1 + i % 6, 4);
        CHECK(reduce(w) == reduce(matrix_to_word(eval(w))));
    }
}

TEST_CASE("is_standard") {
    CHECK(is_standard({-1, {2, 3, 2, 2}}));
    CHECK(is_standard({0, {}}));
    CHECK(is_standard({5, {-7}}));
    CHECK_FALSE(is_standard({0, {1, 2}}));
    CHECK_FALSE(is_standard({0, {0, 2}}));
}

TEST_CASE("standard form never has larger winding than the input") {
    // Every S-positive word with at most 4 S letters and exponents in [-3, 3].
    std::size_t n = 0;
    for (int d = 0; d <= 4; ++d) {
        std::vector<Int> digits(static_cast<std::size_t>(d + 1), -3);
        for (;;) {
            SPositiveForm f{digits[0], {digits.begin() + 1, digits.end()}};
            Word w = f.to_word();
            StandardForm s = standard_form_of_matrix(eval(w));
            CHECK(winding_twelfths(s.to_word()) <= winding_twelfths(w));
            CHECK(reduce(f) == s);
            ++n;
            std::size_t i = 0;
            while (i < digits.size() && digits[i] == 3) digits[i++] = -3;
            if (i == digits.size()) break;
            ++digits[i];
        }
    }
    CHECK(n > 2000);
}

TEST_CASE("W of X-bar plus W of the inverse's standard form is one half") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 500; ++i) {
        Mat2 x = oracle::eval(oracle::random_word(rng, 1 + i % 6, 4));
        if (x.c == 0) continue;  // T powers are excluded
        Int sum = winding_twelfths(standard_form_of_matrix(x).to_word()) +
                  winding_twelfths(standard_form_of_matrix(inverse(x)).to_word());
        CHECK(sum == 6);
    }
}

TEST_CASE("wrap-around: last exponent of X-bar plus b of the inverse") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 500; ++i) {
        Mat2 x = oracle::eval(oracle::random_word(rng, 1 + i % 6, 4));
        StandardForm f = standard_form_of_matrix(x), g = standard_form_of_matrix(inverse(x));
        if (f.a.empty()) continue;
        Int sum = f.a.back() + g.b;
        bool short_form = f.a.size() == 1;  // X = T^k S T^a
        CHECK(sum == (short_form ? 0 : 1));
    }
}

TEST_CASE("standard form of a conjugate of T^c") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 500; ++i) {
        Int c = 1 + i % 5;
        Mat2 x = oracle::eval(oracle::random_word(rng, 1 + i % 5, 3));
        Word lhs = standard_form_of_matrix(inverse(x) * mat_t(c) * x).to_word();
        Word rhs = standard_form_of_matrix(inverse(x)).to_word() * Word::t(c) *
                   standard_form_of_matrix(x).to_word();
        CHECK(eq_psl2(lhs, rhs));
        CHECK(winding_twelfths(lhs) == winding_twelfths(rhs));
    }
    // X = T^k S T^a, c = 1: T^-a S T S T^a reduces by one braid move.
    for (Int k = -3; k <= 3; ++k)
        for (Int a = -3; a <= 3; ++a) {
            Mat2 x = mat_t(k) * mat_s() * mat_t(a);
            StandardForm f = standard_form_of_matrix(inverse(x) * mat_t(1) * x);
            CHECK(f.b == -a - 1);
            CHECK(f.a == std::vector<Int>{a - 1});
        }
}

TEST_CASE("structure of words equal to the identity") {
    // T^b S T^{a0} ... S T^{a_{d-1}} = +-I with d = 2 forces (a0, a1) = (0, -b);
    // with d > 2 some a_i with i <= d-2 lies in {0, 1, -1}.
    for (int d = 1; d <= 4; ++d) {
        std::vector<Int> digits(static_cast<std::size_t>(d + 1), -4);
        for (;;) {
            SPositiveForm f{digits[0], {digits.begin() + 1, digits.end()}};
            Mat2 m = oracle::eval(f.to_word());
            if (m == Mat2::identity() || m == -Mat2::identity()) {
                if (d == 2) {
                    CHECK(f.a[0] == 0);
                    CHECK(f.a[1] == -f.b);
                }
                if (d > 2) {
                    bool small = false;
                    for (std::size_t i = 0; i + 1 < f.a.size(); ++i)
                        small = small || (f.a[i] >= -1 && f.a[i] <= 1);
                    CHECK(small);
                }
            }
            std::size_t i = 0;
            while (i < digits.size() && digits[i] == 4) digits[i++] = -4;
            if (i == digits.size()) break;
            ++digits[i];
        }
    }
}

TEST_CASE("S-positive words equal to the identity have non-negative winding") {
    for (int d = 1; d <= 5; ++d) {
        std::vector<Int> a(static_cast<std::size_t>(d), -3);
        for (;;) {
            Word w;
            for (Int x : a) {
                w.append(Letter::S, 1);
                w.append(Letter::T, x);
            }
            if (oracle::eval(w) == Mat2::identity()) {
                CHECK(oracle::twelfths(w) > 0);
            }
            std::size_t i = 0;
            while (i < a.size() && a[i] == 3) a[i++] = -3;
            if (i == a.size()) break;
            ++a[i];
        }
    }
}
