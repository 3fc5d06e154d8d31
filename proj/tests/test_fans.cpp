#include <doctest.h>

#include "semitoric/errors.hpp"
#include "semitoric/fans.hpp"
#include "semitoric/verify.hpp"
#include "semitoric/winding.hpp"

#include <cmath>
#include <random>

using namespace semitoric;

static ErrorKind kind_of(const ToricFan& f) {
    try {
        fan_validate(f);
    } catch (const DomainError& e) {
        return e.kind();
    }
    return ErrorKind::InvalidInput;  // stands for "no error"
}

TEST_CASE("fan validation") {
    CHECK_NOTHROW(fan_validate({{{1, 0}, {0, 1}, {-1, -1}}}));
    CHECK_NOTHROW(fan_validate({{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}}));
    CHECK(kind_of({{{1, 0}, {0, 2}}}) == ErrorKind::NotPrimitive);
    try {
        fan_validate({{{1, 0}, {0, 2}}});
    } catch (const DomainError& e) {
        CHECK(e.tag() == "NotPrimitive(1)");
    }
    CHECK(kind_of({{{1, 0}, {0, 1}}}) == ErrorKind::TooShort);
    CHECK(kind_of({{{1, 0}, {0, 1}, {-1, 0}}}) == ErrorKind::BadDeterminant);
    // Clockwise order fails the determinant test first.
    CHECK(kind_of({{{1, 0}, {-1, -1}, {0, 1}}}) == ErrorKind::BadDeterminant);
}

TEST_CASE("a sequence with unit determinants can still wind twice") {
    // CP2 fan traversed twice: determinants are all 1, the winding is 2.
    ToricFan twice{{{1, 0}, {0, 1}, {-1, -1}, {1, 0}, {0, 1}, {-1, -1}}};
    CHECK(kind_of(twice) == ErrorKind::NotCounterClockwise);
}

TEST_CASE("blowup and blowdown") {
    ToricFan cp2{{{1, 0}, {0, 1}, {-1, -1}}};
    for (std::size_t i = 0; i < 3; ++i) {
        ToricFan up = fan_blowup(cp2, i);
        CHECK_NOTHROW(fan_validate(up));
        CHECK(up.vectors.size() == 4);
        CHECK(fan_blowdown(up, i + 1) == cp2);
    }
    CHECK(fan_blowup(cp2, 2).vectors.back() == Vec2{0, -1});
    CHECK_THROWS_AS(fan_blowup(cp2, 3), DomainError);
    try {
        fan_blowdown(cp2, 0);
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::NotBlowdownSite);
    }
}

TEST_CASE("classification of the minimal models") {
    CHECK(fan_classify_minimal({{{1, 0}, {0, 1}, {-1, -1}}}).render() == "CP2");
    CHECK(fan_classify_minimal({{{0, 1}, {-1, 0}, {0, -1}, {1, 0}}}).render() == "Square");
    CHECK(fan_classify_minimal({{{1, 0}, {0, 1}, {-1, -2}, {0, -1}}}).render() == "Hirzebruch(-2)");
    CHECK(fan_classify_minimal({{{1, 0}, {0, 1}, {-1, 3}, {0, -1}}}).render() == "Hirzebruch(3)");
    // an SL2(Z) image and rotation of CP2
    Mat2 g = mat_t(2) * mat_s() * mat_t(-1);
    ToricFan moved{{g * Vec2{0, 1}, g * Vec2{-1, -1}, g * Vec2{1, 0}}};
    CHECK(fan_classify_minimal(moved).render() == "CP2");
    CHECK_THROWS_AS(fan_classify_minimal(fan_blowup({{{1, 0}, {0, 1}, {-1, -1}}}, 0)), DomainError);
}

TEST_CASE("minimize by greedy and exhaustive blowdowns") {
    ToricFan f = fan_model({FanClass::Kind::Square, 0});
    f = fan_blowup(fan_blowup(fan_blowup(f, 0), 2), 4);
    auto r = fan_minimize(f);
    CHECK(fan_is_minimal(r.fan));
    CHECK(r.blowdowns.size() <= f.vectors.size() - 3);
    auto all = fan_reachable_minimal(f);
    CHECK_FALSE(all.empty());
    bool has = false;
    for (auto& c : all) has = has || c == normalized(fan_classify_minimal(r.fan));
    CHECK(has);
    // A blowup of CP2 at a corner is the first Hirzebruch surface, which
    // blows down only to CP2.
    auto one = fan_reachable_minimal(fan_blowup(fan_model({FanClass::Kind::CP2, 0}), 0));
    REQUIRE(one.size() == 1);
    CHECK(one[0].render() == "CP2");
}

TEST_CASE("Fulton suite, depth 3") {
    auto r = verify_fulton(3);
    CHECK(r.ok);
    CHECK(r.checked > 50);
}

TEST_CASE("path winding against a floating point angle sum") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<Int> coord(-6, 6);
    for (int t = 0; t < 2000; ++t) {
        std::vector<Vec2> path;
        int n = 2 + t % 6;
        while (static_cast<int>(path.size()) < n) {
            Vec2 v{coord(rng), coord(rng)};
            if (v == Vec2{0, 0}) continue;
            if (!path.empty() && det(path.back(), v) == 0) continue;
            path.push_back(v);
        }
        double total = 0;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            double a0 = std::atan2(double(path[i].y), double(path[i].x));
            double a1 = std::atan2(double(path[i + 1].y), double(path[i + 1].x));
            double step = a1 - a0;
            while (step <= 0) step += 2 * M_PI;
            while (step > 2 * M_PI) step -= 2 * M_PI;
            total += step;
        }
        Int expect = static_cast<Int>(std::floor(total / M_PI + 1e-12));
        CHECK(path_winding(path, false).half_turns == expect);
    }
    std::vector<Vec2> square{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    CHECK(path_winding(square, true).turns() == 1);
    CHECK(path_winding(square, true).render() == "1");
    CHECK_THROWS_AS(path_winding(std::vector<Vec2>{{1, 0}, {2, 0}}, false), DomainError);
}

TEST_CASE("word winding equals geometric winding on random fans") {
    auto r = verify_winding_oracle(200, 5);
    CHECK(r.ok);
}
