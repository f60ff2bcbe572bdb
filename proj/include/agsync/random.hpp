#pragma once

#include "agsync/automaton.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace agsync {

/// Counter-based generator: output i of stream s under seed x is a fixed
/// mixing function of (x, s, i). Workers take distinct stream indices and
/// never share state.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    result_type operator()() noexcept;

    /// Uniform integer in [0, bound), bound >= 1. Unbiased.
    std::uint64_t below(std::uint64_t bound) noexcept;

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Fisher-Yates shuffle of the identity.
std::vector<State> random_permutation(Rng &rng, std::size_t n);

/// Uniform over the (n-1)·n! almost-permutations: a dangling point x0, a
/// permutation of the other n-1 points, and an image for x0 among them.
/// Throws DomainTooSmall for n < 2.
std::vector<State> random_almost_permutation(Rng &rng, std::size_t n);

/// Uniform member of G(n,k): letter 0 an almost-permutation, the rest
/// permutations.
Automaton random_almost_group_automaton(Rng &rng, std::size_t n, std::size_t k);

struct SampledAutomaton {
    Automaton automaton;
    std::uint64_t rejections = 0;
};

inline constexpr std::uint64_t default_max_rejects = 10'000;

/// Rejection sampling on strong connectivity. Throws RejectionExhausted
/// once max_rejects draws have been rejected.
SampledAutomaton random_sc_almost_group_automaton(Rng &rng, std::size_t n, std::size_t k,
                                                  std::uint64_t max_rejects = default_max_rejects);

} // namespace agsync
