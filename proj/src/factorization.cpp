#include "agsync/factorization.hpp"

#include "agsync/errors.hpp"
#include "agsync/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace agsync {

namespace {

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

// Shortest stable path p -> q; its first three states form a witness.
NotTransitive transitivity_witness(const PairAnalysis &pairs, State p, State q) {
    const std::size_t n = pairs.states();
    std::vector<std::int64_t> prev(n, -1);
    std::vector<State> queue{p};
    prev[p] = p;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const State x = queue[head];
        for (State y = 0; y < n; ++y)
            if (prev[y] < 0 && pairs.is_stable(x, y)) {
                prev[y] = x;
                queue.push_back(y);
            }
    }
    std::vector<State> path;
    for (State x = q; x != p; x = static_cast<State>(prev[x]))
        path.push_back(x);
    path.push_back(p);
    std::reverse(path.begin(), path.end());
    return NotTransitive(path[0], path[1], path[2]);
}

std::string describe(const StateSet &s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? "," : "") << s[i];
    out << '}';
    return out.str();
}

} // namespace

StabilityPartition stability_partition(const Automaton &a, const PairAnalysis &pairs) {
    const std::size_t n = a.states();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto &[p, q] : pairs.stable_pairs())
        parent[find_root(parent, p)] = find_root(parent, q);

    StabilityPartition out;
    out.class_of.assign(n, 0);
    std::vector<std::size_t> class_of_root(n, n);
    for (State q = 0; q < n; ++q) {
        const auto root = find_root(parent, q);
        if (class_of_root[root] == n) {
            class_of_root[root] = out.classes.size();
            out.classes.emplace_back();
        }
        out.class_of[q] = class_of_root[root];
        out.classes[out.class_of[q]].push_back(q);
    }

    for (const auto &c : out.classes)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!pairs.is_stable(c[i], c[j]))
                    throw transitivity_witness(pairs, c[i], c[j]);

    for (std::size_t i = 0; i < out.classes.size(); ++i)
        for (Letter l = 0; l < a.letters(); ++l) {
            const auto target = out.class_of[a.next(out.classes[i].front(), l)];
            for (auto q : out.classes[i])
                if (out.class_of[a.next(q, l)] != target)
                    throw NotCongruence(i, l);
        }
    return out;
}

StabilityPartition stability_partition(const Automaton &a) {
    return stability_partition(a, pair_analysis(a));
}

FactorAutomaton factor_automaton(const Automaton &a, const StabilityPartition &partition) {
    const std::size_t m = partition.size(), k = a.letters();
    std::vector<State> delta(m * k);
    for (std::size_t i = 0; i < m; ++i)
        for (Letter l = 0; l < k; ++l)
            delta[i * k + l] =
                static_cast<State>(partition.class_of[a.next(partition.classes[i].front(), l)]);
    return {Automaton(m, k, std::move(delta)), partition.class_of};
}

void check_factor_is_group(const FactorAutomaton &factor) {
    if (classify(factor.base).verdict != Verdict::GroupAutomaton)
        throw LemmaViolation("factor automaton is not a group automaton");
    if (!is_strongly_connected(factor.base))
        throw LemmaViolation("factor automaton is not strongly connected");
}

BSDecomposition bs_decomposition(const Automaton &a, const AutomatonClass &cls,
                                 const StabilityPartition &partition,
                                 const FactorAutomaton &factor) {
    if (cls.verdict != Verdict::AlmostGroupAutomaton)
        throw Error("B/S decomposition needs an almost-group automaton");
    const std::size_t n = a.states();
    const Letter a0 = *cls.dangling_letter;
    const State p0 = *cls.dangling_state;

    BSDecomposition out;
    out.dangling_class = partition.class_of[p0];
    if (partition.size() == 1) {
        out.trivial = true;
        out.big = {0};
        out.ell = n - 1;
        out.b = 1;
        out.s = 0;
        return out;
    }

    const std::size_t dsize = partition.classes[out.dangling_class].size();
    if (dsize < 2)
        throw BulletViolation(1, "dangling class " + describe(partition.classes[out.dangling_class]) +
                                     " is a singleton");
    out.ell = dsize - 1;
    std::vector<std::uint8_t> is_big(partition.size(), 0);
    for (std::size_t i = 0; i < partition.size(); ++i) {
        const auto size = partition.classes[i].size();
        if (size == dsize) {
            out.big.push_back(i);
            is_big[i] = 1;
        } else if (size == dsize - 1) {
            out.small.push_back(i);
        } else {
            throw BulletViolation(2, "class " + describe(partition.classes[i]) + " has size " +
                                         std::to_string(size) + ", dangling class has " +
                                         std::to_string(dsize));
        }
    }
    out.b = out.big.size();
    out.s = out.small.size();

    const auto d = out.dangling_class;
    const auto f0 = factor.base.letter_map(a0);
    {
        std::size_t steps = 0;
        for (auto x = f0[d]; x != d; x = f0[x]) {
            if (is_big[x])
                throw BulletViolation(3, "a0-cycle through D visits B-class " +
                                             describe(partition.classes[x]));
            if (++steps > partition.size())
                throw BulletViolation(3, "D is not on an a0-cycle of the factor");
        }
    }

    for (Letter l = 0; l < a.letters(); ++l) {
        const auto summary = functional_summary(factor.base, l);
        for (const auto &cycle : summary.cycles) {
            if (l == a0 && std::find(cycle.begin(), cycle.end(), d) != cycle.end())
                continue;
            for (auto c : cycle)
                if (is_big[c] != is_big[cycle.front()])
                    throw BulletViolation(4, "cycle of letter " + std::to_string(l) +
                                                 " mixes B and S at class " +
                                                 describe(partition.classes[c]));
        }
    }

    if (out.b * (out.ell + 1) + out.s * out.ell != n)
        throw BulletViolation(5, "b(ell+1) + s*ell != n");
    return out;
}

BSDecomposition bs_decomposition(const Automaton &a) {
    const auto cls = classify(a);
    if (cls.verdict != Verdict::AlmostGroupAutomaton || !is_strongly_connected(a))
        throw Error("B/S decomposition needs a strongly connected almost-group automaton");
    const auto partition = stability_partition(a);
    const auto factor = factor_automaton(a, partition);
    return bs_decomposition(a, cls, partition, factor);
}

bool non_sync_criterion(const Automaton &a) {
    const auto cls = classify(a);
    if (cls.verdict != Verdict::AlmostGroupAutomaton || !is_strongly_connected(a))
        throw Error("criterion needs a strongly connected almost-group automaton");
    return stability_partition(a).size() > 1;
}

} // namespace agsync
