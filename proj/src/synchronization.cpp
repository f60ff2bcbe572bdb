#include "agsync/synchronization.hpp"

#include "agsync/errors.hpp"
#include "agsync/structure.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace agsync {

StatePair pair_from_index(std::size_t n, std::size_t index) {
    State p = 0;
    std::size_t row = n - 1;
    while (index >= row) {
        index -= row;
        --row;
        ++p;
    }
    return {p, static_cast<State>(p + 1 + index)};
}

PairAnalysis::PairAnalysis(std::size_t n, std::vector<std::uint8_t> mergeable,
                           std::vector<std::uint8_t> stable)
    : n_(n), mergeable_(std::move(mergeable)), stable_(std::move(stable)) {
    if (mergeable_.size() != pair_count(n_) || stable_.size() != pair_count(n_))
        throw ShapeMismatch("pair flag vectors have the wrong size");
    mergeable_count_ = static_cast<std::size_t>(std::count(mergeable_.begin(), mergeable_.end(), 1));
    stable_count_ = static_cast<std::size_t>(std::count(stable_.begin(), stable_.end(), 1));
}

bool PairAnalysis::is_mergeable(State p, State q) const {
    if (p == q)
        return true;
    if (p > q)
        std::swap(p, q);
    return mergeable_[pair_index(n_, p, q)] != 0;
}

bool PairAnalysis::is_stable(State p, State q) const {
    if (p == q)
        return true;
    if (p > q)
        std::swap(p, q);
    return stable_[pair_index(n_, p, q)] != 0;
}

namespace {

std::vector<StatePair> collect(std::size_t n, const std::vector<std::uint8_t> &flags,
                               std::uint8_t want) {
    std::vector<StatePair> out;
    std::size_t i = 0;
    for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q, ++i)
            if (flags[i] == want)
                out.push_back({p, q});
    return out;
}

/// Preimage lists of every letter plus a reusable queue for backward sweeps
/// over the pair graph.
class PairSweep {
public:
    void build(const Automaton &a) {
        n_ = a.states();
        k_ = a.letters();
        const auto &delta = a.table();
        offset_.assign(k_ * (n_ + 1), 0);
        pre_.resize(k_ * n_);
        for (std::size_t q = 0; q < n_; ++q)
            for (std::size_t l = 0; l < k_; ++l)
                ++offset_[l * (n_ + 1) + delta[q * k_ + l] + 1];
        for (std::size_t l = 0; l < k_; ++l) {
            auto *off = offset_.data() + l * (n_ + 1);
            for (std::size_t q = 0; q < n_; ++q)
                off[q + 1] += off[q];
        }
        fill_.resize(k_ * n_);
        for (std::size_t l = 0; l < k_; ++l)
            for (std::size_t q = 0; q < n_; ++q)
                fill_[l * n_ + q] = offset_[l * (n_ + 1) + q];
        for (std::size_t q = 0; q < n_; ++q)
            for (std::size_t l = 0; l < k_; ++l) {
                const State r = delta[q * k_ + l];
                pre_[l * n_ + fill_[l * n_ + r]++] = static_cast<State>(q);
            }
    }

    /// Marks every pair of distinct states sharing an image.
    void seed_merging(std::vector<std::uint8_t> &flags) {
        queue_.clear();
        for (std::size_t l = 0; l < k_; ++l) {
            const auto *off = offset_.data() + l * (n_ + 1);
            const auto *pre = pre_.data() + l * n_;
            for (std::size_t r = 0; r < n_; ++r)
                for (auto i = off[r]; i < off[r + 1]; ++i)
                    for (auto j = i + 1; j < off[r + 1]; ++j)
                        mark(flags, pre[i], pre[j]);
        }
    }

    void seed_unset(std::vector<std::uint8_t> &flags, const std::vector<std::uint8_t> &from) {
        queue_.clear();
        std::size_t i = 0;
        for (State p = 0; p < n_; ++p)
            for (State q = p + 1; q < n_; ++q, ++i)
                if (!from[i]) {
                    flags[i] = 1;
                    queue_.push_back({p, q});
                }
    }

    /// Closes the flagged set under predecessors in the pair graph.
    void close_backward(std::vector<std::uint8_t> &flags) {
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const auto [r, s] = queue_[head];
            for (std::size_t l = 0; l < k_; ++l) {
                const auto *off = offset_.data() + l * (n_ + 1);
                const auto *pre = pre_.data() + l * n_;
                for (auto i = off[r]; i < off[r + 1]; ++i)
                    for (auto j = off[s]; j < off[s + 1]; ++j)
                        mark(flags, pre[i], pre[j]);
            }
        }
    }

    std::size_t marked() const { return queue_.size(); }

private:
    void mark(std::vector<std::uint8_t> &flags, State p, State q) {
        if (p > q)
            std::swap(p, q);
        auto &f = flags[pair_index(n_, p, q)];
        if (!f) {
            f = 1;
            queue_.push_back({p, q});
        }
    }

    std::size_t n_ = 0, k_ = 0;
    std::vector<std::uint32_t> offset_;
    std::vector<std::uint32_t> fill_;
    std::vector<State> pre_;
    std::vector<StatePair> queue_;
};

} // namespace

std::vector<StatePair> PairAnalysis::mergeable_pairs() const { return collect(n_, mergeable_, 1); }
std::vector<StatePair> PairAnalysis::deadlocks() const { return collect(n_, mergeable_, 0); }
std::vector<StatePair> PairAnalysis::stable_pairs() const { return collect(n_, stable_, 1); }

PairAnalysis pair_analysis(const Automaton &a) {
    const std::size_t n = a.states();
    const std::size_t pairs = pair_count(n);
    PairSweep sweep;
    sweep.build(a);

    std::vector<std::uint8_t> mergeable(pairs, 0);
    sweep.seed_merging(mergeable);
    sweep.close_backward(mergeable);

    // Pairs that can reach a deadlock are exactly the backward closure of
    // the deadlocks; everything else is stable.
    std::vector<std::uint8_t> unstable(pairs, 0);
    sweep.seed_unset(unstable, mergeable);
    sweep.close_backward(unstable);

    std::vector<std::uint8_t> stable(pairs, 0);
    for (std::size_t i = 0; i < pairs; ++i)
        stable[i] = mergeable[i] && !unstable[i];
    return PairAnalysis(n, std::move(mergeable), std::move(stable));
}

bool is_synchronizing(const Automaton &a) {
    const std::size_t n = a.states();
    if (n == 1)
        return true;
    thread_local PairSweep sweep;
    thread_local std::vector<std::uint8_t> flags;
    sweep.build(a);
    flags.assign(pair_count(n), 0);
    sweep.seed_merging(flags);
    sweep.close_backward(flags);
    return sweep.marked() == pair_count(n);
}

std::optional<Word> shortest_reset_word(const Automaton &a, std::size_t max_states) {
    const std::size_t n = a.states(), k = a.letters();
    constexpr std::size_t mask_bits = 31;
    if (n > max_states || n > mask_bits)
        throw LimitExceeded(n, std::min(max_states, mask_bits));
    if (n == 1)
        return Word{};

    using Mask = std::uint32_t;
    struct Link {
        Mask parent;
        Letter letter;
    };
    const auto &delta = a.table();
    auto image = [&](Mask m, Letter l) {
        Mask out = 0;
        while (m) {
            const auto q = static_cast<std::size_t>(std::countr_zero(m));
            m &= m - 1;
            out |= Mask{1} << delta[q * k + l];
        }
        return out;
    };

    const Mask full = (Mask{1} << n) - 1;
    std::unordered_map<Mask, Link> seen;
    std::vector<Mask> queue{full};
    seen.emplace(full, Link{0, 0});
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Mask cur = queue[head];
        for (Letter l = 0; l < k; ++l) {
            const Mask next = image(cur, l);
            if (!seen.emplace(next, Link{cur, l}).second)
                continue;
            if (std::has_single_bit(next)) {
                Word w;
                for (Mask m = next; m != full;) {
                    const auto &link = seen.at(m);
                    w.push_back(link.letter);
                    m = link.parent;
                }
                std::reverse(w.begin(), w.end());
                return w;
            }
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

namespace {

using CliqueMask = std::uint64_t;

std::vector<CliqueMask> max_clique_masks(const PairAnalysis &pairs) {
    const std::size_t n = pairs.states();
    std::vector<CliqueMask> adj(n, 0);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            if (pairs.is_deadlock(p, q))
                adj[p] |= CliqueMask{1} << q;

    std::vector<CliqueMask> best;
    int best_size = 0;
    // Extends a clique with candidates larger than its last vertex.
    auto extend = [&](auto &self, CliqueMask clique, int size, CliqueMask candidates) -> void {
        if (size > best_size) {
            best_size = size;
            best.clear();
        }
        if (size == best_size)
            best.push_back(clique);
        if (size + std::popcount(candidates) < best_size)
            return;
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            self(self, clique | (CliqueMask{1} << v), size + 1, candidates & adj[v]);
        }
    };
    for (State v = 0; v < n; ++v) {
        const CliqueMask higher = v + 1 < 64 ? ~((CliqueMask{2} << v) - 1) : 0;
        extend(extend, CliqueMask{1} << v, 1, adj[v] & higher);
    }
    std::sort(best.begin(), best.end());
    return best;
}

StateSet mask_to_set(CliqueMask m) {
    StateSet out;
    while (m) {
        out.push_back(static_cast<State>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

CliqueMask set_to_mask(const StateSet &s) {
    CliqueMask m = 0;
    for (auto q : s)
        m |= CliqueMask{1} << q;
    return m;
}

} // namespace

std::vector<StateSet> f_cliques(const Automaton &a, const PairAnalysis &pairs,
                                std::size_t max_states) {
    constexpr std::size_t mask_bits = 64;
    if (a.states() > max_states || a.states() > mask_bits)
        throw LimitExceeded(a.states(), std::min(max_states, mask_bits));
    std::vector<StateSet> out;
    for (auto m : max_clique_masks(pairs))
        out.push_back(mask_to_set(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StateSet> f_cliques(const Automaton &a, std::size_t max_states) {
    if (a.states() > max_states)
        throw LimitExceeded(a.states(), max_states);
    return f_cliques(a, pair_analysis(a), max_states);
}

FCliqueDifferenceReport check_fclique_difference_lemma(const PairAnalysis &pairs,
                                                       const std::vector<StateSet> &cliques) {
    FCliqueDifferenceReport report;
    report.clique_count = cliques.size();
    std::vector<CliqueMask> masks;
    masks.reserve(cliques.size());
    for (const auto &c : cliques)
        masks.push_back(set_to_mask(c));
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            const CliqueMask only_s = masks[i] & ~masks[j];
            const CliqueMask only_t = masks[j] & ~masks[i];
            if (std::popcount(only_s) != 1 || std::popcount(only_t) != 1)
                continue;
            ++report.checked;
            const auto p = static_cast<State>(std::countr_zero(only_s));
            const auto q = static_cast<State>(std::countr_zero(only_t));
            if (!pairs.is_stable(p, q))
                report.violations.push_back({std::min(p, q), std::max(p, q)});
        }
    return report;
}

FCliqueDifferenceReport check_fclique_difference_lemma(const Automaton &a, std::size_t max_states) {
    const auto pairs = pair_analysis(a);
    return check_fclique_difference_lemma(pairs, f_cliques(a, pairs, max_states));
}

std::size_t fclique_image_violations(const Automaton &a, const std::vector<StateSet> &cliques) {
    std::vector<CliqueMask> masks;
    for (const auto &c : cliques)
        masks.push_back(set_to_mask(c));
    std::sort(masks.begin(), masks.end());
    std::size_t violations = 0;
    for (const auto &c : cliques)
        for (Letter l = 0; l < a.letters(); ++l) {
            const auto img = image_of_set(a, c, std::span<const Letter>(&l, 1));
            if (img.size() != c.size() ||
                !std::binary_search(masks.begin(), masks.end(), set_to_mask(img)))
                ++violations;
        }
    return violations;
}

std::optional<StatePair> dangling_stable_pair(const Automaton &a, const AutomatonClass &cls,
                                              const PairAnalysis &pairs, bool strongly_connected,
                                              CycleExponent exponent) {
    if (cls.verdict != Verdict::AlmostGroupAutomaton || !strongly_connected || a.states() < 2)
        return std::nullopt;
    const Letter a0 = *cls.dangling_letter;
    const State p0 = *cls.dangling_state;
    const auto map = a.letter_map(a0);
    const auto summary = functional_summary(map);
    const BigCount &d =
        exponent == CycleExponent::Lcm ? summary.cycle_length_lcm : summary.cycle_length_product;
    const State r = power_image(map, p0, d);

    if (r == p0)
        throw LemmaViolation("dangling state is fixed by its power");
    if (!pairs.is_stable(p0, r))
        throw LemmaViolation("pair {" + std::to_string(p0) + ", " + std::to_string(r) +
                             "} containing the dangling state is not stable");
    if (map[p0] != map[r])
        throw LemmaViolation("dangling pair is not merged by its letter");
    return StatePair{p0, r};
}

std::optional<StatePair> dangling_stable_pair(const Automaton &a, CycleExponent exponent) {
    const auto cls = classify(a);
    if (cls.verdict != Verdict::AlmostGroupAutomaton)
        return std::nullopt;
    const bool sc = is_strongly_connected(a);
    if (!sc)
        return std::nullopt;
    return dangling_stable_pair(a, cls, pair_analysis(a), sc, exponent);
}

} // namespace agsync
