#include "agsync/automaton.hpp"

#include "agsync/errors.hpp"
#include "agsync/structure.hpp"

#include <algorithm>
#include <string>

namespace agsync {

Automaton::Automaton(std::size_t n, std::size_t k, std::vector<State> delta)
    : n_(n), k_(k), delta_(std::move(delta)) {
    if (n_ == 0 || k_ == 0)
        throw ShapeMismatch("automaton needs n >= 1 and k >= 1");
    if (delta_.size() != n_ * k_)
        throw ShapeMismatch("transition table has " + std::to_string(delta_.size()) +
                            " entries, expected " + std::to_string(n_ * k_));
    for (std::size_t q = 0; q < n_; ++q)
        for (std::size_t a = 0; a < k_; ++a)
            if (delta_[q * k_ + a] >= n_)
                throw OutOfRangeEntry(q, a, delta_[q * k_ + a]);
}

Automaton Automaton::validate(const std::vector<std::vector<std::int64_t>> &raw,
                              std::size_t n, std::size_t k) {
    if (n == 0 || k == 0)
        throw ShapeMismatch("automaton needs n >= 1 and k >= 1");
    if (raw.size() != n)
        throw ShapeMismatch("expected " + std::to_string(n) + " rows, got " +
                            std::to_string(raw.size()));
    std::vector<State> delta;
    delta.reserve(n * k);
    for (std::size_t q = 0; q < n; ++q) {
        if (raw[q].size() != k)
            throw ShapeMismatch("row " + std::to_string(q) + " has " +
                                std::to_string(raw[q].size()) + " entries, expected " +
                                std::to_string(k));
        for (std::size_t a = 0; a < k; ++a) {
            const auto v = raw[q][a];
            if (v < 0 || static_cast<std::uint64_t>(v) >= n)
                throw OutOfRangeEntry(q, a, v);
            delta.push_back(static_cast<State>(v));
        }
    }
    return Automaton(n, k, std::move(delta));
}

Automaton Automaton::from_letter_maps(const std::vector<std::vector<State>> &maps) {
    if (maps.empty())
        throw ShapeMismatch("need at least one letter");
    const std::size_t k = maps.size();
    const std::size_t n = maps[0].size();
    std::vector<State> delta(n * k);
    for (std::size_t a = 0; a < k; ++a) {
        if (maps[a].size() != n)
            throw ShapeMismatch("letter maps have different sizes");
        for (std::size_t q = 0; q < n; ++q)
            delta[q * k + a] = maps[a][q];
    }
    return Automaton(n, k, std::move(delta));
}

std::vector<State> Automaton::letter_map(Letter a) const {
    std::vector<State> map(n_);
    for (std::size_t q = 0; q < n_; ++q)
        map[q] = delta_[q * k_ + a];
    return map;
}

LetterClassification classify_letter(const Automaton &a, Letter letter) {
    auto summary = functional_summary(a, letter);
    LetterClassification out;
    out.cyclic_count = summary.cyclic_points.size();
    out.cycles = std::move(summary.cycles);
    const std::size_t n = a.states();
    if (out.cyclic_count == n) {
        out.kind = LetterKind::Permutation;
    } else if (out.cyclic_count + 1 == n) {
        out.kind = LetterKind::AlmostPermutation;
        out.dangling = summary.non_cyclic.front();
    } else {
        out.kind = LetterKind::Other;
    }
    return out;
}

AutomatonClass classify(const Automaton &a) {
    AutomatonClass out;
    std::size_t permutations = 0;
    std::size_t almost = 0;
    for (Letter l = 0; l < a.letters(); ++l) {
        out.per_letter.push_back(classify_letter(a, l));
        const auto &c = out.per_letter.back();
        if (c.kind == LetterKind::Permutation) {
            ++permutations;
        } else if (c.kind == LetterKind::AlmostPermutation) {
            if (almost++ == 0) {
                out.dangling_letter = l;
                out.dangling_state = c.dangling;
            }
        }
    }
    if (permutations == a.letters()) {
        out.verdict = Verdict::GroupAutomaton;
    } else if (almost == 1 && permutations + 1 == a.letters()) {
        out.verdict = Verdict::AlmostGroupAutomaton;
    } else {
        out.verdict = Verdict::OtherDFA;
        out.dangling_letter.reset();
        out.dangling_state.reset();
    }
    return out;
}

const char *to_string(LetterKind kind) {
    switch (kind) {
    case LetterKind::Permutation: return "permutation";
    case LetterKind::AlmostPermutation: return "almost-permutation";
    case LetterKind::Other: return "other";
    }
    return "?";
}

const char *to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::GroupAutomaton: return "group";
    case Verdict::AlmostGroupAutomaton: return "almost-group";
    case Verdict::OtherDFA: return "other";
    }
    return "?";
}

namespace {

void check_word(const Automaton &a, std::span<const Letter> w) {
    for (auto l : w)
        if (l >= a.letters())
            throw Error("letter " + std::to_string(l) + " outside alphabet of size " +
                        std::to_string(a.letters()));
}

void check_state(const Automaton &a, State q) {
    if (q >= a.states())
        throw Error("state " + std::to_string(q) + " outside 0.." +
                    std::to_string(a.states() - 1));
}

} // namespace

State apply_word(const Automaton &a, State q, std::span<const Letter> w) {
    check_state(a, q);
    check_word(a, w);
    for (auto l : w)
        q = a.next(q, l);
    return q;
}

StateSet image_of_set(const Automaton &a, std::span<const State> s, std::span<const Letter> w) {
    check_word(a, w);
    StateSet out;
    out.reserve(s.size());
    for (auto q : s) {
        check_state(a, q);
        State r = q;
        for (auto l : w)
            r = a.next(r, l);
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

StateSet states_without_preimage(const Automaton &a, Letter letter) {
    std::vector<std::uint32_t> indegree(a.states(), 0);
    for (State q = 0; q < a.states(); ++q)
        ++indegree[a.next(q, letter)];
    StateSet out;
    for (State q = 0; q < a.states(); ++q)
        if (indegree[q] == 0)
            out.push_back(q);
    return out;
}

Automaton relabel(const Automaton &a, std::span<const State> perm) {
    const std::size_t n = a.states(), k = a.letters();
    if (perm.size() != n)
        throw ShapeMismatch("relabeling has wrong size");
    std::vector<State> delta(n * k);
    for (State q = 0; q < n; ++q)
        for (Letter l = 0; l < k; ++l)
            delta[perm[q] * k + l] = perm[a.next(q, l)];
    return Automaton(n, k, std::move(delta));
}

} // namespace agsync
