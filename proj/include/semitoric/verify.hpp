#pragma once

#include "semitoric/classify.hpp"
#include "semitoric/fans.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace semitoric {

struct SuiteResult {
    bool ok = true;
    std::size_t checked = 0;
    double seconds = 0;
    std::string summary;
    std::vector<std::string> failures;  // first few only

    void fail(std::string what);
};

// Every fan within `depth` blowups of a minimal model minimizes (greedily
// and along every blowdown order) to a minimal model.
SuiteResult verify_fulton(int depth, Int hirzebruch_bound = 3);

// Brute force over S T^{a0} ... S T^{a_{d-1}} with d <= max_d, |a_i| <= bound:
// the minimal helix words found must be exactly the table's types 1-6.
SuiteResult verify_minimal_words(int max_d, Int bound, const std::vector<Int>& complexities);

// Every helix within `depth` blowups of a minimal model with the given
// complexities either contains +-(1,0) or is the minimal type 2 helix.
SuiteResult verify_jmax(int depth, const std::vector<Int>& complexities, Int param_bound,
                        int seed_length, Int seed_bound);

// Winding number of the word equals the geometric winding, on random fans
// and random helices.
SuiteResult verify_winding_oracle(std::size_t samples, std::uint64_t seed);

ToricFan random_fan(std::mt19937_64& rng, int max_blowups);
SemitoricHelix random_helix(std::mt19937_64& rng, int max_blowups);

// Type 7 seeds A0 = S T^{a0} ... S T^{a_{l-1}} with 2 <= l <= max_length,
// interior exponents in [2, bound] and last exponent in [-bound, bound] \ {0, 1}.
std::vector<StandardForm> type7_seed_forms(int max_length, Int bound);

// Table instances (types 1-6) with every integer of absolute value <= bound.
std::vector<HelixKey> table_instances(int max_d, Int bound, Int c);

}  // namespace semitoric
