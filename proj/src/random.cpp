#include "agsync/random.hpp"

#include "agsync/errors.hpp"
#include "agsync/structure.hpp"

#include <numeric>
#include <utility>

namespace agsync {

namespace {

constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream),
      key_(mix64(seed ^ mix64(stream * golden_gamma + 0x632be59bd9b4e019ULL))) {}

Rng::result_type Rng::operator()() noexcept {
    return mix64(key_ + (++counter_) * golden_gamma);
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
    // Lemire's multiply-and-reject.
    auto m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>((*this)()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

std::vector<State> random_permutation(Rng &rng, std::size_t n) {
    std::vector<State> perm(n);
    std::iota(perm.begin(), perm.end(), State{0});
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

std::vector<State> random_almost_permutation(Rng &rng, std::size_t n) {
    if (n < 2)
        throw DomainTooSmall("almost-permutations need at least 2 points");
    const auto x0 = static_cast<State>(rng.below(n));
    std::vector<State> others;
    others.reserve(n - 1);
    for (State q = 0; q < n; ++q)
        if (q != x0)
            others.push_back(q);
    const auto perm = random_permutation(rng, n - 1);
    std::vector<State> map(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        map[others[i]] = others[perm[i]];
    map[x0] = others[rng.below(n - 1)];
    return map;
}

Automaton random_almost_group_automaton(Rng &rng, std::size_t n, std::size_t k) {
    if (k == 0)
        throw ShapeMismatch("need at least one letter");
    std::vector<State> delta(n * k);
    const auto first = random_almost_permutation(rng, n);
    for (std::size_t q = 0; q < n; ++q)
        delta[q * k] = first[q];
    for (std::size_t l = 1; l < k; ++l) {
        const auto perm = random_permutation(rng, n);
        for (std::size_t q = 0; q < n; ++q)
            delta[q * k + l] = perm[q];
    }
    return Automaton(n, k, std::move(delta));
}

SampledAutomaton random_sc_almost_group_automaton(Rng &rng, std::size_t n, std::size_t k,
                                                  std::uint64_t max_rejects) {
    std::uint64_t rejections = 0;
    while (true) {
        auto a = random_almost_group_automaton(rng, n, k);
        if (is_strongly_connected(a))
            return {std::move(a), rejections};
        if (++rejections >= max_rejects)
            throw RejectionExhausted(rejections);
    }
}

} // namespace agsync
