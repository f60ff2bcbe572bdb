#pragma once

#include "agsync/automaton.hpp"
#include "agsync/bigcount.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace agsync {

/// Permutation with lexicographic rank `rank` among all permutations of
/// 0..n-1, compared as image sequences.
std::vector<State> unrank_permutation(std::size_t n, std::uint64_t rank);

/// Almost-permutation number `rank` in (x0, permutation of the rest, image
/// of x0) lexicographic order; x0 varies slowest.
std::vector<State> unrank_almost_permutation(std::size_t n, std::uint64_t rank);

std::vector<std::vector<State>> enumerate_almost_permutations(std::size_t n);

inline constexpr std::uint64_t default_enumeration_budget = 10'000'000;

/// |G(n,k)| as a machine integer. Throws BudgetExceeded above `budget`.
std::uint64_t size_G(std::size_t n, std::size_t k, std::uint64_t budget = default_enumeration_budget);
/// n!^k, the number of group automata. Throws BudgetExceeded above `budget`.
std::uint64_t size_group_automata(std::size_t n, std::size_t k,
                                  std::uint64_t budget = default_enumeration_budget);

/// Walks G(n,k) in a fixed order: letter 0 is the most significant digit
/// (almost-permutation order above), then letters 1..k-1 in lexicographic
/// permutation order. Any index range [begin, end) can be visited on its
/// own, which is how census shards split the work.
class AlmostGroupCursor {
public:
    AlmostGroupCursor(std::size_t n, std::size_t k, std::uint64_t index);

    Automaton automaton() const;
    std::uint64_t index() const noexcept { return index_; }
    void advance();

private:
    std::size_t n_, k_;
    std::uint64_t index_;
    State x0_;
    std::vector<State> rest_perm_; // permutation of 0..n-2 acting on E_n \ {x0}
    std::size_t image_;            // image of x0 among E_n \ {x0}
    std::vector<std::vector<State>> perms_; // letters 1..k-1
};

using AutomatonVisitor = std::function<void(const Automaton &)>;

void for_each_G(std::size_t n, std::size_t k, std::uint64_t begin, std::uint64_t end,
                const AutomatonVisitor &visit);

/// Every member of G(n,k) exactly once.
std::vector<Automaton> enumerate_G(std::size_t n, std::size_t k,
                                   std::uint64_t budget = default_enumeration_budget);

/// Every k-tuple of permutations, letter 0 most significant.
void for_each_group_automaton(std::size_t n, std::size_t k, std::uint64_t begin,
                              std::uint64_t end, const AutomatonVisitor &visit);

/// Strongly connected group automata on n states, by filtered enumeration.
std::vector<Automaton> enumerate_sc_group_automata(std::size_t n, std::size_t k,
                                                   std::uint64_t budget = default_enumeration_budget);

/// Builds F(n,k) member by member: choose (p0, p, q), a strongly connected
/// group automaton on the other n - 2 states, reroute the letter-0 preimage
/// q' of q to p, set p·a0 = p0·a0 = q, and pick the action (swap or fix) of
/// each other letter on {p0, p} with at least one swap. Requires n >= 3 and
/// k >= 2.
void for_each_F(std::size_t n, std::size_t k, const AutomatonVisitor &visit,
                std::uint64_t budget = default_enumeration_budget);
std::vector<Automaton> generate_F(std::size_t n, std::size_t k,
                                  std::uint64_t budget = default_enumeration_budget);

/// Membership in F(n,k) checked condition by condition, without the
/// generator:
///   1. some p != p0 such that every letter a != a0 swaps p and p0 or fixes both,
///   2. at least one of those letters swaps them,
///   3. q = p·a0 lies outside {p, p0} (a0 permutes Q \ {p0}),
///   4. p0·a0 = q,
///   5. deleting p and p0 and setting q'·a0 = q, where q' is the a0-preimage
///      of p, leaves a strongly connected group automaton.
/// Letter 0 must be the almost-permutation letter.
bool is_member_F(const Automaton &a);

} // namespace agsync
