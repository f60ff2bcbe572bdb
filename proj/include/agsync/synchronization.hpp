#pragma once

#include "agsync/automaton.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace agsync {

struct StatePair {
    State first;
    State second;
    auto operator<=>(const StatePair &) const = default;
};

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Flat index of the unordered pair {p, q} with p < q.
inline std::size_t pair_index(std::size_t n, State p, State q) {
    return p * n - static_cast<std::size_t>(p) * (p + 1) / 2 + (q - p - 1);
}

StatePair pair_from_index(std::size_t n, std::size_t index);

/// Mergeable, deadlock and stable pairs of an automaton.
///
/// A pair is mergeable when some word maps it to a single state and a
/// deadlock otherwise. It is stable when every pair reachable from it is
/// mergeable; stable pairs together with the diagonal form a congruence.
/// Flags are indexed by pair_index().
class PairAnalysis {
public:
    PairAnalysis(std::size_t n, std::vector<std::uint8_t> mergeable,
                 std::vector<std::uint8_t> stable);

    std::size_t states() const noexcept { return n_; }

    bool is_mergeable(State p, State q) const;
    bool is_deadlock(State p, State q) const { return p != q && !is_mergeable(p, q); }
    /// Reflexive: a state is always stable with itself.
    bool is_stable(State p, State q) const;

    std::size_t mergeable_count() const noexcept { return mergeable_count_; }
    std::size_t stable_count() const noexcept { return stable_count_; }
    bool synchronizing() const noexcept { return mergeable_count_ == pair_count(n_); }

    std::vector<StatePair> mergeable_pairs() const;
    std::vector<StatePair> deadlocks() const;
    std::vector<StatePair> stable_pairs() const;

private:
    std::size_t n_;
    std::vector<std::uint8_t> mergeable_;
    std::vector<std::uint8_t> stable_;
    std::size_t mergeable_count_ = 0;
    std::size_t stable_count_ = 0;
};

/// Two backward sweeps over the pair graph, O(k·n²).
PairAnalysis pair_analysis(const Automaton &a);

/// Pairwise-merging criterion. Reuses a per-thread workspace, so repeated
/// calls from a sampling loop do not allocate.
bool is_synchronizing(const Automaton &a);

inline constexpr std::size_t default_reset_word_limit = 20;
inline constexpr std::size_t default_fclique_limit = 12;

/// Breadth-first search over subsets from the full state set. Among the
/// shortest reset words the lexicographically smallest is returned.
/// std::nullopt means the automaton is not synchronizing.
/// Throws LimitExceeded when n > max_states.
std::optional<Word> shortest_reset_word(const Automaton &a,
                                        std::size_t max_states = default_reset_word_limit);

/// All maximum cliques of the deadlock graph, as sorted state sets in
/// lexicographic order. Without deadlocks these are the n singletons.
std::vector<StateSet> f_cliques(const Automaton &a, const PairAnalysis &pairs,
                                std::size_t max_states = default_fclique_limit);
std::vector<StateSet> f_cliques(const Automaton &a,
                                std::size_t max_states = default_fclique_limit);

struct FCliqueDifferenceReport {
    std::size_t clique_count = 0;
    /// Clique pairs (S, T) with |S \ T| = |T \ S| = 1.
    std::size_t checked = 0;
    /// The {p, q} of every checked instance that was not stable.
    std::vector<StatePair> violations;
    bool ok() const { return violations.empty(); }
};

/// For F-cliques S, T differing in exactly one state each, S \ T = {p} and
/// T \ S = {q}, checks that {p, q} is stable.
FCliqueDifferenceReport check_fclique_difference_lemma(const PairAnalysis &pairs,
                                                       const std::vector<StateSet> &cliques);
FCliqueDifferenceReport check_fclique_difference_lemma(
    const Automaton &a, std::size_t max_states = default_fclique_limit);

/// Counts (clique, letter) combinations whose image is not an F-clique of
/// the same size. Zero on every automaton.
std::size_t fclique_image_violations(const Automaton &a, const std::vector<StateSet> &cliques);

enum class CycleExponent { Lcm, Product };

/// {p0, p0·a0^d} for the dangling state p0 of the almost-permutation letter
/// a0, where d fixes every cyclic point of a0. The returned pair is ordered
/// (dangling state first). Returns std::nullopt when the automaton is not a
/// strongly connected almost-group automaton with n >= 2.
///
/// The result is checked before returning: the states differ, the pair is
/// stable and a0 merges it. A failed check throws LemmaViolation.
std::optional<StatePair> dangling_stable_pair(const Automaton &a,
                                              CycleExponent exponent = CycleExponent::Lcm);
std::optional<StatePair> dangling_stable_pair(const Automaton &a, const AutomatonClass &cls,
                                              const PairAnalysis &pairs, bool strongly_connected,
                                              CycleExponent exponent = CycleExponent::Lcm);

} // namespace agsync
