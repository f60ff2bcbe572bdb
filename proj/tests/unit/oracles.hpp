#pragma once

// Slow, obviously-correct reference implementations used to cross-check the
// library. Nothing here shares code with src/.

#include "agsync/automaton.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using agsync::Automaton;
using agsync::State;
using agsync::StateSet;

inline StateSet image(const Automaton &a, const StateSet &s, unsigned letter) {
    std::set<State> out;
    for (auto q : s)
        out.insert(a.next(q, letter));
    return {out.begin(), out.end()};
}

// Breadth-first search over subsets; returns the length of a shortest reset
// word or -1.
inline int shortest_reset_length(const Automaton &a) {
    StateSet all(a.states());
    for (State q = 0; q < a.states(); ++q)
        all[q] = q;
    std::map<StateSet, int> dist{{all, 0}};
    std::queue<StateSet> todo;
    todo.push(all);
    while (!todo.empty()) {
        auto s = todo.front();
        todo.pop();
        if (s.size() <= 1)
            return dist[s];
        for (unsigned l = 0; l < a.letters(); ++l) {
            auto t = image(a, s, l);
            if (dist.emplace(t, dist[s] + 1).second)
                todo.push(t);
        }
    }
    return -1;
}

// Set of pairs reachable forward from {p,q} in the pair graph, diagonal
// pairs included.
inline std::set<std::pair<State, State>> pair_closure(const Automaton &a, State p, State q) {
    std::set<std::pair<State, State>> seen{{std::min(p, q), std::max(p, q)}};
    std::vector<std::pair<State, State>> stack(seen.begin(), seen.end());
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (unsigned l = 0; l < a.letters(); ++l) {
            State u = a.next(x, l), v = a.next(y, l);
            std::pair<State, State> e{std::min(u, v), std::max(u, v)};
            if (seen.insert(e).second)
                stack.push_back(e);
        }
    }
    return seen;
}

inline bool mergeable(const Automaton &a, State p, State q) {
    for (auto [x, y] : pair_closure(a, p, q))
        if (x == y)
            return true;
    return false;
}

// Stable: every pair reachable from {p,q} can still be merged.
inline bool stable(const Automaton &a, State p, State q) {
    for (auto [x, y] : pair_closure(a, p, q))
        if (x != y && !mergeable(a, x, y))
            return false;
    return true;
}

inline bool strongly_connected(const Automaton &a) {
    const auto n = a.states();
    for (State s = 0; s < n; ++s) {
        std::vector<bool> seen(n);
        std::vector<State> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto q = stack.back();
            stack.pop_back();
            for (unsigned l = 0; l < a.letters(); ++l)
                if (!seen[a.next(q, l)]) {
                    seen[a.next(q, l)] = true;
                    stack.push_back(a.next(q, l));
                }
        }
        if (std::count(seen.begin(), seen.end(), true) != static_cast<long>(n))
            return false;
    }
    return true;
}

inline bool is_permutation(const std::vector<State> &m) {
    std::vector<State> s(m);
    std::sort(s.begin(), s.end());
    for (State i = 0; i < s.size(); ++i)
        if (s[i] != i)
            return false;
    return true;
}

// Exactly one state x0 has no preimage, and the map restricted to the other
// states permutes them.
inline bool is_almost_permutation(const std::vector<State> &m) {
    std::vector<int> in(m.size());
    for (auto x : m)
        ++in[x];
    if (std::count(in.begin(), in.end(), 0) != 1)
        return false;
    const auto x0 = static_cast<State>(std::find(in.begin(), in.end(), 0) - in.begin());
    std::vector<bool> hit(m.size());
    for (State q = 0; q < m.size(); ++q)
        if (q != x0) {
            if (m[q] == x0 || hit[m[q]])
                return false;
            hit[m[q]] = true;
        }
    return true;
}

// All maps E_n -> E_n, letter by letter, in lexicographic order.
inline std::vector<std::vector<State>> all_maps(std::size_t n) {
    std::vector<std::vector<State>> out;
    std::vector<State> m(n, 0);
    while (true) {
        out.push_back(m);
        std::size_t i = n;
        while (i > 0 && m[i - 1] == n - 1)
            m[--i] = 0;
        if (i == 0)
            break;
        ++m[i - 1];
    }
    return out;
}

} // namespace oracle
