#include "semitoric/verify.hpp"

#include "semitoric/errors.hpp"
#include "semitoric/winding.hpp"

#include "semitoric/cyclic.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace semitoric {

void SuiteResult::fail(std::string what) {
    ok = false;
    if (failures.size() < 10) failures.push_back(std::move(what));
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<FanClass> fan_models(Int hirzebruch_bound) {
    std::vector<FanClass> out{{FanClass::Kind::CP2, 0}, {FanClass::Kind::Square, 0}};
    for (Int k = -hirzebruch_bound; k <= hirzebruch_bound; ++k)
        if (k != 0 && k != 1 && k != -1) out.push_back({FanClass::Kind::Hirzebruch, k});
    return out;
}

bool within(const std::vector<Int>& a, Int bound) {
    for (Int x : a)
        if (x > bound || x < -bound) return false;
    return true;
}

}  // namespace

SuiteResult verify_fulton(int depth, Int hirzebruch_bound) {
    auto t0 = Clock::now();
    SuiteResult r;
    std::set<std::vector<Int>> seen;
    std::size_t sequences = 0;
    std::function<void(const ToricFan&, int)> walk = [&](const ToricFan& fan, int left) {
        ++sequences;
        if (seen.insert(least_rotation(fan_integers(fan))).second) {
            ++r.checked;
            try {
                auto greedy = fan_minimize(fan);
                FanClass g = normalized(fan_classify_minimal(greedy.fan));
                auto all = fan_reachable_minimal(fan);
                if (all.empty()) r.fail("no minimal model reached from " + render_vectors(fan.vectors));
                bool found = false;
                for (const auto& c : all) found = found || c == g;
                if (!found) r.fail("greedy result missing from exhaustive set");
                if (greedy.blowdowns.size() > fan.vectors.size() - 3) r.fail("too many blowdowns");
            } catch (const DomainError& e) {
                r.fail(render_vectors(fan.vectors) + ": " + e.what());
            }
        }
        if (left == 0) return;
        for (std::size_t i = 0; i < fan.vectors.size(); ++i) walk(fan_blowup(fan, i), left - 1);
    };
    for (const auto& m : fan_models(hirzebruch_bound)) walk(fan_model(m), depth);
    r.seconds = since(t0);
    r.summary = std::to_string(sequences) + " blowup sequences, " + std::to_string(r.checked) +
                " distinct fans within " + std::to_string(depth) + " blowups";
    return r;
}

std::vector<HelixKey> table_instances(int max_d, Int bound, Int c) {
    std::set<HelixKey> out;
    auto put = [&](std::vector<Int> a) {
        if (static_cast<int>(a.size()) <= max_d && within(a, bound))
            out.insert(helix_key(a.size(), c, a));
    };
    if (c == 1) put({-1, -4});
    if (c == 2) put({-2, -2});
    for (Int a = -bound - 2; a <= bound + 2; ++a) {
        if (c == 1 && a != 1 && a != -3) put({0, a, -a - 2});
        if (c != 1 && a != 1 && a != -1 && a != 0) put({0, a, c, -a});
        if (a != 1 && a != c - 1) put({0, a, 0, c - a});
    }
    if (c != 2) put({-1, -1, c - 1});
    return {out.begin(), out.end()};
}

SuiteResult verify_minimal_words(int max_d, Int bound, const std::vector<Int>& complexities) {
    auto t0 = Clock::now();
    SuiteResult r;
    std::size_t hits_total = 0;
    for (Int c : complexities) {
        std::set<HelixKey> found;
        for (int d = 1; d <= max_d; ++d) {
            std::vector<Int> a(static_cast<std::size_t>(d), -bound);
            for (;;) {
                ++r.checked;
                Int sum = 0;
                bool minimal = true;
                for (Int x : a) {
                    sum += x;
                    minimal = minimal && x != 1;
                }
                // W = 3d - sum must equal 12 - c.
                if (minimal && 3 * d - sum == 12 - c) {
                    Word w;
                    for (Int x : a) {
                        w.append(Letter::S, 1);
                        w.append(Letter::T, x);
                    }
                    if (conjugator_to_tc(eval(w), c)) found.insert(helix_key(a.size(), c, a));
                }
                std::size_t i = 0;
                while (i < a.size() && a[i] == bound) a[i++] = -bound;
                if (i == a.size()) break;
                ++a[i];
            }
        }
        auto expected = table_instances(max_d, bound, c);
        std::set<HelixKey> want(expected.begin(), expected.end());
        for (const auto& k : found)
            if (!want.count(k)) r.fail("unexpected minimal word " + k.render());
        for (const auto& k : want)
            if (!found.count(k)) r.fail("missing table instance " + k.render());
        for (const auto& k : found) {
            try {
                SemitoricHelix h = helix_from_word(c, k.integers);
                HelixClass cls = helix_classify_minimal(h);
                if (cls.type < 1 || cls.type > 6) r.fail(k.render() + " classified as " + cls.render());
                if (helix_canonical(helix_representative(cls)) != k)
                    r.fail(k.render() + " representative mismatch for " + cls.render());
                if (cls.type == 5 && (cls.k == 0 || cls.k == 1 || cls.k == -1))
                    r.fail("type 5 with excluded parameter");
                if (k.d >= 5) r.fail("minimal word of length " + std::to_string(k.d));
            } catch (const DomainError& e) {
                r.fail(k.render() + ": " + e.what());
            }
        }
        hits_total += found.size();
    }
    r.seconds = since(t0);
    r.summary = std::to_string(r.checked) + " words, " + std::to_string(hits_total) +
                " minimal helix words";
    return r;
}

std::vector<StandardForm> type7_seed_forms(int max_length, Int bound) {
    std::vector<StandardForm> out;
    for (int len = 2; len <= max_length; ++len) {
        std::vector<Int> a(static_cast<std::size_t>(len), 2);
        a.back() = -bound;
        for (;;) {
            if (a.back() != 0 && a.back() != 1) out.push_back({0, a});
            std::size_t i = a.size() - 1;
            // last digit runs over [-bound, bound], the others over [2, bound]
            if (a[i] < bound) {
                ++a[i];
                continue;
            }
            a[i] = -bound;
            bool done = true;
            for (std::size_t j = a.size() - 1; j-- > 0;) {
                if (a[j] < bound) {
                    ++a[j];
                    done = false;
                    break;
                }
                a[j] = 2;
            }
            if (done) break;
        }
    }
    return out;
}

SuiteResult verify_jmax(int depth, const std::vector<Int>& complexities, Int param_bound,
                        int seed_length, Int seed_bound) {
    auto t0 = Clock::now();
    SuiteResult r;
    std::size_t roots = 0;
    SemitoricHelix type2 = helix_representative({2, 0, 2, {}});
    std::function<void(const SemitoricHelix&, int)> walk = [&](const SemitoricHelix& h, int left) {
        ++r.checked;
        if (!contains_horizontal(h)) {
            if (!(h.c == 2 && helix_equivalent(h, type2, true)))
                r.fail("no horizontal vector: c=" + std::to_string(h.c) + " " + render_vectors(h.vectors));
        }
        if (left == 0) return;
        for (std::size_t i = 0; i < h.d(); ++i) walk(helix_blowup(h, i), left - 1);
    };
    for (Int c : complexities) {
        std::vector<HelixClass> models;
        if (c == 1) models.push_back({1, 0, c, {}});
        if (c == 2) models.push_back({2, 0, c, {}});
        if (c != 2) models.push_back({4, 0, c, {}});
        for (Int k = -param_bound; k <= param_bound; ++k) {
            if (c == 1 && k != 2 && k != -2) models.push_back({3, k, c, {}});
            if (c != 1 && k != 0 && k != 1 && k != -1) models.push_back({5, k, c, {}});
            if (k != -1 && k != 1 - c) models.push_back({6, k, c, {}});
        }
        for (const auto& sf : type7_seed_forms(seed_length, seed_bound)) models.push_back({7, 0, c, sf});
        for (const auto& m : models) {
            try {
                SemitoricHelix root = helix_representative(m);
                ++roots;
                walk(root, depth);
            } catch (const DomainError& e) {
                r.fail(m.render() + ": " + e.what());
            }
        }
    }
    r.seconds = since(t0);
    r.summary = std::to_string(r.checked) + " helices from " + std::to_string(roots) +
                " minimal models";
    return r;
}

ToricFan random_fan(std::mt19937_64& rng, int max_blowups) {
    std::uniform_int_distribution<int> pick_model(0, 2);
    std::uniform_int_distribution<Int> pick_k(2, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    FanClass cls;
    switch (pick_model(rng)) {
    case 0: cls = {FanClass::Kind::CP2, 0}; break;
    case 1: cls = {FanClass::Kind::Square, 0}; break;
    default: cls = {FanClass::Kind::Hirzebruch, coin(rng) ? pick_k(rng) : -pick_k(rng)};
    }
    ToricFan fan = fan_model(cls);
    int n = std::uniform_int_distribution<int>(0, max_blowups)(rng);
    for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> at(0, fan.vectors.size() - 1);
        fan = fan_blowup(fan, at(rng));
    }
    Mat2 g;
    for (int i = 0; i < 4; ++i)
        g = g * (coin(rng) ? mat_s() : mat_t(std::uniform_int_distribution<Int>(-3, 3)(rng)));
    for (auto& v : fan.vectors) v = g * v;
    std::size_t shift = std::uniform_int_distribution<std::size_t>(0, fan.vectors.size() - 1)(rng);
    std::rotate(fan.vectors.begin(), fan.vectors.begin() + static_cast<std::ptrdiff_t>(shift),
                fan.vectors.end());
    return fan;
}

SemitoricHelix random_helix(std::mt19937_64& rng, int max_blowups) {
    std::uniform_int_distribution<Int> pick_c(1, 4);
    std::uniform_int_distribution<Int> pick_k(-4, 4);
    std::uniform_int_distribution<int> pick_type(1, 7);
    SemitoricHelix h;
    for (;;) {
        Int c = pick_c(rng);
        HelixClass cls{pick_type(rng), pick_k(rng), c, {}};
        if (cls.type == 7) {
            static const auto seeds = type7_seed_forms(3, 3);
            cls.seed_form = seeds[std::uniform_int_distribution<std::size_t>(0, seeds.size() - 1)(rng)];
        }
        try {
            h = helix_representative(cls);
            break;
        } catch (const DomainError&) {
            continue;  // parameters outside the table, draw again
        }
    }
    int n = std::uniform_int_distribution<int>(0, max_blowups)(rng);
    for (int i = 0; i < n; ++i)
        h = helix_blowup(h, std::uniform_int_distribution<std::size_t>(0, h.d() - 1)(rng));
    Int k = pick_k(rng);
    for (auto& v : h.vectors) v = shear(k, v);
    return h;
}

SuiteResult verify_winding_oracle(std::size_t samples, std::uint64_t seed) {
    auto t0 = Clock::now();
    SuiteResult r;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        ToricFan fan = random_fan(rng, 6);
        ++r.checked;
        try {
            fan_validate(fan);
            Word w;
            for (Int a : fan_integers(fan)) {
                w.append(Letter::S, 1);
                w.append(Letter::T, a);
            }
            Int geometric = path_winding(fan.vectors, true).turns();
            if (winding_twelfths(w) != 12 * geometric)
                r.fail("fan " + render_vectors(fan.vectors) + ": W=" +
                       render_twelfths(winding_twelfths(w)) + " geometric=" + std::to_string(geometric));
        } catch (const DomainError& e) {
            r.fail(render_vectors(fan.vectors) + ": " + e.what());
        }
        SemitoricHelix h = random_helix(rng, 6);
        ++r.checked;
        try {
            Int geometric = helix_geometric_winding(h);
            Int w = winding_twelfths(helix_word(h));
            if (w != 12 * geometric - h.c)
                r.fail("helix " + render_vectors(h.vectors) + ": W=" + render_twelfths(w));
        } catch (const DomainError& e) {
            r.fail(render_vectors(h.vectors) + ": " + e.what());
        }
    }
    r.seconds = since(t0);
    r.summary = std::to_string(r.checked) + " random fans and helices";
    return r;
}

}  // namespace semitoric
