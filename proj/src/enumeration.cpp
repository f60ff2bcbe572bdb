#include "agsync/enumeration.hpp"

#include "agsync/counting.hpp"
#include "agsync/errors.hpp"
#include "agsync/structure.hpp"

#include <algorithm>
#include <numeric>

namespace agsync {

namespace {

std::uint64_t factorial_u64(std::size_t n) {
    std::uint64_t out = 1;
    for (std::size_t i = 2; i <= n; ++i)
        out *= i;
    return out;
}

std::uint64_t checked(const BigCount &size, std::uint64_t budget) {
    if (size > budget)
        throw BudgetExceeded(to_decimal(size), budget);
    return size.convert_to<std::uint64_t>();
}

std::vector<State> identity(std::size_t n) {
    std::vector<State> out(n);
    std::iota(out.begin(), out.end(), State{0});
    return out;
}

} // namespace

std::vector<State> unrank_permutation(std::size_t n, std::uint64_t rank) {
    std::vector<State> pool = identity(n);
    std::vector<State> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto block = factorial_u64(n - 1 - i);
        const auto digit = rank / block;
        rank %= block;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

std::vector<State> unrank_almost_permutation(std::size_t n, std::uint64_t rank) {
    if (n < 2)
        throw DomainTooSmall("almost-permutations need at least 2 points");
    const std::uint64_t per_x0 = factorial_u64(n - 1) * (n - 1);
    const auto x0 = static_cast<State>(rank / per_x0);
    rank %= per_x0;
    const auto perm = unrank_permutation(n - 1, rank / (n - 1));
    const auto image = rank % (n - 1);
    auto other = [x0](std::size_t i) { return static_cast<State>(i < x0 ? i : i + 1); };
    std::vector<State> map(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        map[other(i)] = other(perm[i]);
    map[x0] = other(image);
    return map;
}

std::vector<std::vector<State>> enumerate_almost_permutations(std::size_t n) {
    if (n < 2)
        return {};
    const auto total = checked(count_almost_permutations(static_cast<unsigned>(n)),
                               default_enumeration_budget);
    std::vector<std::vector<State>> out;
    out.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r)
        out.push_back(unrank_almost_permutation(n, r));
    return out;
}

std::uint64_t size_G(std::size_t n, std::size_t k, std::uint64_t budget) {
    return checked(count_G(static_cast<unsigned>(n), static_cast<unsigned>(k)), budget);
}

std::uint64_t size_group_automata(std::size_t n, std::size_t k, std::uint64_t budget) {
    return checked(pow(factorial(static_cast<unsigned>(n)), static_cast<unsigned>(k)), budget);
}

AlmostGroupCursor::AlmostGroupCursor(std::size_t n, std::size_t k, std::uint64_t index)
    : n_(n), k_(k), index_(index) {
    if (n < 2)
        throw DomainTooSmall("G(n,k) is empty for n < 2");
    const auto nf = factorial_u64(n);
    std::uint64_t rest = index;
    perms_.resize(k - 1);
    for (std::size_t l = k - 1; l >= 1; --l) {
        perms_[l - 1] = unrank_permutation(n, rest % nf);
        rest /= nf;
    }
    const std::uint64_t per_x0 = factorial_u64(n - 1) * (n - 1);
    x0_ = static_cast<State>(rest / per_x0);
    rest %= per_x0;
    rest_perm_ = unrank_permutation(n - 1, rest / (n - 1));
    image_ = rest % (n - 1);
}

void AlmostGroupCursor::advance() {
    ++index_;
    for (std::size_t l = k_ - 1; l >= 1; --l)
        if (std::next_permutation(perms_[l - 1].begin(), perms_[l - 1].end()))
            return;
    if (++image_ < n_ - 1)
        return;
    image_ = 0;
    if (std::next_permutation(rest_perm_.begin(), rest_perm_.end()))
        return;
    ++x0_;
}

Automaton AlmostGroupCursor::automaton() const {
    std::vector<State> delta(n_ * k_);
    auto other = [this](std::size_t i) { return static_cast<State>(i < x0_ ? i : i + 1); };
    for (std::size_t i = 0; i + 1 < n_; ++i)
        delta[other(i) * k_] = other(rest_perm_[i]);
    delta[x0_ * k_] = other(image_);
    for (std::size_t l = 1; l < k_; ++l)
        for (std::size_t q = 0; q < n_; ++q)
            delta[q * k_ + l] = perms_[l - 1][q];
    return Automaton(n_, k_, std::move(delta));
}

void for_each_G(std::size_t n, std::size_t k, std::uint64_t begin, std::uint64_t end,
                const AutomatonVisitor &visit) {
    if (begin >= end)
        return;
    AlmostGroupCursor cursor(n, k, begin);
    for (std::uint64_t i = begin; i < end; ++i) {
        visit(cursor.automaton());
        if (i + 1 < end)
            cursor.advance();
    }
}

std::vector<Automaton> enumerate_G(std::size_t n, std::size_t k, std::uint64_t budget) {
    const auto total = size_G(n, k, budget);
    std::vector<Automaton> out;
    out.reserve(total);
    if (total > 0)
        for_each_G(n, k, 0, total, [&](const Automaton &a) { out.push_back(a); });
    return out;
}

void for_each_group_automaton(std::size_t n, std::size_t k, std::uint64_t begin,
                              std::uint64_t end, const AutomatonVisitor &visit) {
    if (begin >= end)
        return;
    const auto nf = factorial_u64(n);
    std::vector<std::vector<State>> perms(k);
    std::uint64_t rest = begin;
    for (std::size_t l = k; l-- > 0;) {
        perms[l] = unrank_permutation(n, rest % nf);
        rest /= nf;
    }
    std::vector<State> delta(n * k);
    for (std::uint64_t i = begin; i < end; ++i) {
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t q = 0; q < n; ++q)
                delta[q * k + l] = perms[l][q];
        visit(Automaton(n, k, delta));
        for (std::size_t l = k; l-- > 0;)
            if (std::next_permutation(perms[l].begin(), perms[l].end()))
                break;
    }
}

std::vector<Automaton> enumerate_sc_group_automata(std::size_t n, std::size_t k,
                                                   std::uint64_t budget) {
    const auto total = size_group_automata(n, k, budget);
    std::vector<Automaton> out;
    for_each_group_automaton(n, k, 0, total, [&](const Automaton &a) {
        if (is_strongly_connected(a))
            out.push_back(a);
    });
    return out;
}

void for_each_F(std::size_t n, std::size_t k, const AutomatonVisitor &visit, std::uint64_t budget) {
    if (n < 3 || k < 2)
        throw DomainTooSmall("F(n,k) needs n >= 3 and k >= 2");
    checked(lower_bound(static_cast<unsigned>(n), static_cast<unsigned>(k)), budget);
    const std::size_t m = n - 2;
    const auto groups = enumerate_sc_group_automata(m, k, budget);
    const std::size_t swap_masks = (std::size_t{1} << (k - 1)) - 1;

    std::vector<State> delta(n * k);
    std::vector<State> rest;
    rest.reserve(m);
    for (State p0 = 0; p0 < n; ++p0)
        for (State p = 0; p < n; ++p) {
            if (p == p0)
                continue;
            rest.clear();
            for (State x = 0; x < n; ++x)
                if (x != p && x != p0)
                    rest.push_back(x);
            for (std::size_t qi = 0; qi < m; ++qi) {
                const State q = rest[qi];
                for (const auto &g : groups) {
                    for (std::size_t i = 0; i < m; ++i)
                        for (Letter l = 0; l < k; ++l)
                            delta[rest[i] * k + l] = rest[g.next(static_cast<State>(i), l)];
                    // Reroute the letter-0 preimage of q through p.
                    for (std::size_t i = 0; i < m; ++i)
                        if (delta[rest[i] * k] == q) {
                            delta[rest[i] * k] = p;
                            break;
                        }
                    delta[p * k] = q;
                    delta[p0 * k] = q;
                    for (std::size_t mask = 1; mask <= swap_masks; ++mask) {
                        for (Letter l = 1; l < k; ++l) {
                            const bool swap = (mask >> (l - 1)) & 1U;
                            delta[p * k + l] = swap ? p0 : p;
                            delta[p0 * k + l] = swap ? p : p0;
                        }
                        visit(Automaton(n, k, delta));
                    }
                }
            }
        }
}

std::vector<Automaton> generate_F(std::size_t n, std::size_t k, std::uint64_t budget) {
    std::vector<Automaton> out;
    for_each_F(n, k, [&](const Automaton &a) { out.push_back(a); }, budget);
    return out;
}

bool is_member_F(const Automaton &a) {
    const std::size_t n = a.states(), k = a.letters();
    if (n < 3 || k < 2)
        return false;
    const auto first = classify_letter(a, 0);
    if (first.kind != LetterKind::AlmostPermutation)
        return false;
    for (Letter l = 1; l < k; ++l)
        if (classify_letter(a, l).kind != LetterKind::Permutation)
            return false;

    const State p0 = *first.dangling;
    const State q = a.next(p0, 0);
    // Conditions 3 and 4: p is the other letter-0 preimage of q = p0·a0.
    State p = static_cast<State>(n);
    for (State x = 0; x < n; ++x)
        if (x != p0 && a.next(x, 0) == q)
            p = x;
    if (p == n || q == p)
        return false;

    // Conditions 1 and 2.
    bool swapped = false;
    for (Letter l = 1; l < k; ++l) {
        const State pa = a.next(p, l), p0a = a.next(p0, l);
        if (pa == p0 && p0a == p)
            swapped = true;
        else if (!(pa == p && p0a == p0))
            return false;
    }
    if (!swapped)
        return false;

    // Condition 5.
    State q_prime = static_cast<State>(n);
    for (State x = 0; x < n; ++x)
        if (a.next(x, 0) == p)
            q_prime = x;
    if (q_prime == n || q_prime == p || q_prime == p0)
        return false;
    std::vector<State> index(n, static_cast<State>(n));
    std::vector<State> rest;
    for (State x = 0; x < n; ++x)
        if (x != p && x != p0) {
            index[x] = static_cast<State>(rest.size());
            rest.push_back(x);
        }
    std::vector<State> delta(rest.size() * k);
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (Letter l = 0; l < k; ++l) {
            State target = a.next(rest[i], l);
            if (l == 0 && rest[i] == q_prime)
                target = q;
            if (index[target] == n)
                return false;
            delta[i * k + l] = index[target];
        }
    const Automaton reduced(rest.size(), k, std::move(delta));
    return classify(reduced).verdict == Verdict::GroupAutomaton && is_strongly_connected(reduced);
}

} // namespace agsync
