#include <doctest.h>

#include "oracles.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/words.hpp"

#include <random>

using namespace semitoric;

TEST_CASE("parse and render") {
    CHECK(render(parse_word("ST^-1ST^-4")) == "ST^-1ST^-4");
    CHECK(render(parse_word("S S")) == "S^2");
    CHECK(render(parse_word("I")) == "I");
    CHECK(render(parse_word("")) == "I");
    CHECK(render(parse_word("T^{-3} S^{2}")) == "T^-3S^2");
    CHECK(render(parse_word("TT^-1")) == "I");
    CHECK(render(parse_word("ST^0S")) == "S^2");
    CHECK(render(parse_word("(ST^2)^2")) == "ST^2ST^2");
    CHECK(render(parse_word("(ST^2)^-1")) == "T^-2S^-1");
    CHECK(render(parse_word("S^4 (ST^2ST^2)^-1 T^2 (ST^2ST^2)")) == "S^4T^-2S^-1T^-2S^-1T^2ST^2ST^2");
}

TEST_CASE("parse errors carry byte offsets") {
    auto offset = [](const char* text) -> std::size_t {
        try {
            parse_word(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return 9999;
    };
    CHECK(offset("S^x") == 2);
    CHECK(offset("STX") == 2);
    CHECK(offset("(ST") == 3);
    CHECK(offset("S^{2") == 4);
    CHECK(offset("  Q") == 2);
}

TEST_CASE("evaluation matches the letter-by-letter product") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Word w = oracle::random_word(rng, 1 + i % 6, 5);
        w.append(Letter::S, -(i % 5));
        CHECK(eval(w) == oracle::eval(w));
    }
    CHECK(to_string(eval(parse_word("ST^2ST^2"))) == "[[-1,-2],[2,3]]");
    CHECK(eval(parse_word("S^4")) == Mat2::identity());
    CHECK(eval(parse_word("S^2")) == -Mat2::identity());
}

TEST_CASE("winding numbers in twelfths") {
    CHECK(winding_twelfths(Word::s()) == 3);
    CHECK(winding_twelfths(Word::t()) == -1);
    CHECK(winding_twelfths(parse_word("S^4")) == 12);
    CHECK(render_twelfths(winding_twelfths(parse_word("S^4"))) == "12/12");
    CHECK(winding_twelfths(parse_word("S^2T^-1ST^2ST^3ST^2ST^2")) == 10);
    CHECK(winding_twelfths(parse_word("T^-1ST^2ST^3ST^2ST^2")) == 4);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Word w = oracle::random_word(rng, 4, 6);
        CHECK(winding_twelfths(w) == oracle::twelfths(w));
        CHECK(winding_twelfths(invert(w)) == -winding_twelfths(w));
    }
}

TEST_CASE("equality in SL2, PSL2 and G") {
    // The braid relation holds in G, S^4 is trivial only in SL2(Z).
    CHECK(eq_g(parse_word("STS"), parse_word("T^-1ST^-1")));
    CHECK(eval(parse_word("S^4")) == eval(Word{}));
    CHECK_FALSE(eq_g(parse_word("S^4"), Word{}));
    CHECK(eq_psl2(parse_word("S^2"), Word{}));
    CHECK_FALSE(eq_psl2(parse_word("T"), Word{}));
    CHECK(eq_g(parse_word("ST^-1ST^-4"), parse_word("S^4 (ST^-2)^-1 T (ST^-2)")));
    CHECK(eq_g(parse_word("ST^-2ST^-2"), parse_word("S^4 (ST^-1)^-1 T^2 (ST^-1)")));
}

TEST_CASE("invert, concat and conjugate") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        Word u = oracle::random_word(rng, 3, 4), x = oracle::random_word(rng, 2, 4);
        CHECK((u * invert(u)).empty());
        CHECK(eval(conjugate(u, x)) == inverse(eval(x)) * eval(u) * eval(x));
        CHECK(eval(concat(u, x)) == eval(u) * eval(x));
    }
}

TEST_CASE("S-positive decompositions") {
    auto f = s_positive_form(parse_word("T^2S^2T^-1S"));
    REQUIRE(f);
    CHECK(f->b == 2);
    CHECK(f->a == std::vector<Int>{0, -1, 0});
    CHECK(f->to_word() == parse_word("T^2S^2T^-1S"));
    CHECK_FALSE(s_positive_form(parse_word("S^-1")));
    CHECK(eq_psl2(to_s_positive(parse_word("S^-1T^3S^-3")).to_word(), parse_word("S^-1T^3S^-3")));
}

TEST_CASE("matrix_to_word reproduces the matrix exactly") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        Word w = oracle::random_word(rng, 1 + i % 8, 4);
        Mat2 m = oracle::eval(w);
        CHECK(oracle::eval(matrix_to_word(m).to_word()) == m);
        CHECK(oracle::eval(matrix_to_word(-m).to_word()) == -m);
    }
    CHECK(matrix_to_word(Mat2::identity()).to_word().empty());
    CHECK(oracle::eval(matrix_to_word(-Mat2::identity()).to_word()) == -Mat2::identity());
    CHECK_THROWS_AS(matrix_to_word(Mat2{2, 0, 0, 1}), DomainError);
}

TEST_CASE("conjugator to T^c") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        Int c = 1 + i % 4;
        Mat2 x = oracle::eval(oracle::random_word(rng, 1 + i % 5, 3));
        Mat2 m = inverse(x) * mat_t(c) * x;
        auto found = conjugator_to_tc(m, c);
        REQUIRE(found);
        CHECK(*found * m * inverse(*found) == mat_t(c));
        CHECK_FALSE(conjugator_to_tc(m, c + 1));
        // T^-c is not conjugate to T^c in SL2(Z)
        CHECK_FALSE(conjugator_to_tc(inverse(m), c));
    }
    CHECK_FALSE(conjugator_to_tc(mat_s(), 1));
    CHECK_FALSE(conjugator_to_tc(Mat2::identity(), 1));
}

TEST_CASE("conjugator agrees with a brute-force search over short products") {
    // Every product of at most 6 generators X; the matrices X^-1 T^c X for
    // c = 1, 2 must be found, and other parabolic matrices must not.
    std::vector<Mat2> xs{Mat2::identity()};
    const std::vector<Mat2> gens{mat_s(), inverse(mat_s()), mat_t(), mat_t(-1)};
    std::vector<Mat2> frontier = xs;
    for (int len = 1; len <= 6; ++len) {
        std::vector<Mat2> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) next.push_back(oracle::mm(x, g));
        xs.insert(xs.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    for (Int c = 1; c <= 2; ++c) {
        for (std::size_t i = 0; i < xs.size(); i += 7) {
            Mat2 m = inverse(xs[i]) * mat_t(c) * xs[i];
            CHECK(conjugator_to_tc(m, c).has_value());
            Mat2 other = inverse(xs[i]) * mat_t(-c) * xs[i];
            bool brute = false;
            for (const auto& x : xs) brute = brute || (x * other * inverse(x) == mat_t(c));
            CHECK(brute == conjugator_to_tc(other, c).has_value());
        }
    }
}
