#pragma once

#include "agsync/io.hpp"
#include "agsync/random.hpp"

#include <cstdint>
#include <utility>

namespace agsync {

struct McOptions {
    unsigned n = 0;
    unsigned k = 2;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double confidence = 0.99;
    unsigned threads = 1;
    std::uint64_t max_rejects = default_max_rejects;
    /// Samples per RNG stream. Block i always uses stream i, so the thread
    /// count never changes the outcome.
    std::uint64_t block_size = 1 << 14;
};

struct McEstimate {
    unsigned n = 0;
    unsigned k = 0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;     // non-synchronizing among accepted samples
    std::uint64_t rejected = 0; // draws that were not strongly connected
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 0;
    double confidence = 0;
    double asymptote = 0;
    /// p_hat·n^(2(k-1)) / (2^(k-1) - 1)
    double ratio = 0;
    std::uint64_t seed = 0;
    std::uint64_t block_size = 0;
};

/// Wilson score interval for `hits` successes out of `trials`.
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials,
                                          double confidence);

/// Samples strongly connected members of G(n,k) by rejection and counts the
/// non-synchronizing ones. Requires n >= 3, k >= 2 and samples >= 1.
McEstimate run_montecarlo(const McOptions &options);

ordered_json montecarlo_to_json(const McEstimate &estimate);

} // namespace agsync
