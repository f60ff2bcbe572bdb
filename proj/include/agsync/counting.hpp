#pragma once

#include "agsync/bigcount.hpp"

#include <compare>
#include <vector>

namespace agsync {

/// Class-size profile of a non-synchronizing instance: b classes of size
/// ell + 1 (the dangling class among them) and s classes of size ell.
struct SignatureTriple {
    std::size_t ell = 1;
    std::size_t b = 1;
    std::size_t s = 0;
    auto operator<=>(const SignatureTriple &) const = default;
};

/// (n - 1)·n!
BigCount count_almost_permutations(unsigned n);
/// |G(n,k)| = (n - 1)·n!^k
BigCount count_G(unsigned n, unsigned k);

/// Over-count of group automata that are not strongly connected:
/// sum over r = 1..floor(n/2) of C(n,r)·(r!(n-r)!)^k.
BigCount Z(unsigned n, unsigned k);

/// Over-count of members of G(n,k) that are not strongly connected:
/// (n - 1)·sum over r = 1..n-1 of C(n,r)·r!^k·(n-r)!^k.
BigCount nonsc_almost_group_bound(unsigned n, unsigned k);

/// Exact number of strongly connected group automata on m states, i.e.
/// k-tuples of permutations generating a transitive group. Splitting by the
/// orbit of state 0 gives m!^k = sum_j C(m-1, j-1)·t_j·(m-j)!^k.
BigCount sc_group_count(unsigned m, unsigned k);

/// All (ell, b, s) with 1 <= ell <= n/2, b >= 1, s >= 0, b + s >= 2 and
/// b(ell + 1) + s·ell = n, ordered by ell then b.
std::vector<SignatureTriple> signatures(unsigned n);

/// Upper bound on the non-synchronizing strongly connected members of
/// G(n,k) with signature `sig`, n! factor included:
///   n!·(n-2)!^(k-1)·(n-2)·(2^(k-1) - 1)            for (1, 1, n-2),
///   n!·max(1,s)·ell·(b!·s!·(ell+1)!^b·ell!^s)^(k-1)  otherwise.
BigCount N_term(unsigned n, unsigned k, const SignatureTriple &sig);

/// |F(n,k)| = (2^(k-1) - 1)·n(n-1)(n-2)·sc_group_count(n-2, k).
BigCount lower_bound(unsigned n, unsigned k);

/// Sum of N_term over signatures(n).
BigCount upper_bound_sum(unsigned n, unsigned k);

/// n·(2^(k-1) - 1)·n!·(n-2)!^(k-1), the leading term of the upper bound.
BigCount upper_bound_leading_term(unsigned n, unsigned k);

/// (2^(k-1) - 1) / n^(2(k-1)), the limiting non-synchronization probability.
double non_sync_asymptote(unsigned n, unsigned k);

} // namespace agsync
