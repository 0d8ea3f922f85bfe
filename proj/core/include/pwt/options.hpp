#pragma once

#include <cstdint>

namespace pwt {

enum class IndecStrategy { Auto, Brute, Nakayama };
enum class TripleStrategy { Auto, Structural, Brute };

// Knobs shared across the library. Seeds make every sampling step
// reproducible; caps make every semi-decision explicit.
struct Options {
    std::uint64_t seed = 0;
    int syzygy_cap = 64;
    int dim_bound = 2;
    int threads = 1;

    // Sampling budget of the isomorphism test, after which a negative answer
    // is confirmed through decompositions.
    int iso_sample_budget = 256;
    // Trial budget of the splitting search inside decompose().
    int split_trial_budget = 512;
    // Exhaustive search threshold: scan all of a GF(p)-space when its size
    // p^dim stays below this.
    long long exhaust_cap = 100000;
    // Hard cap on candidates visited by brute-force enumeration.
    long long enumeration_budget = 5000000;
    // Re-run brute enumeration with bounds+1 and fail if new classes appear.
    bool check_stability = false;

    IndecStrategy indec_strategy = IndecStrategy::Auto;
    TripleStrategy triple_strategy = TripleStrategy::Auto;
};

}  // namespace pwt
