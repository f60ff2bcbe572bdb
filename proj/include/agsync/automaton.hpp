#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace agsync {

using State = std::uint32_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;
/// Sorted, duplicate-free list of states.
using StateSet = std::vector<State>;

/// Complete deterministic automaton on states 0..n-1 and letters 0..k-1.
///
/// The transition table is stored state-major: the image of state q by
/// letter a lives at delta[q * k + a]. Instances are immutable once built and
/// every entry is guaranteed to lie in [0, n).
class Automaton {
public:
    /// Builds from a flat state-major table, validating every entry.
    Automaton(std::size_t n, std::size_t k, std::vector<State> delta);

    /// Validates a raw row-per-state table (delta[q][a]).
    static Automaton validate(const std::vector<std::vector<std::int64_t>> &raw,
                              std::size_t n, std::size_t k);

    /// Builds from one self-map per letter (maps[a][q] = q·a).
    static Automaton from_letter_maps(const std::vector<std::vector<State>> &maps);

    std::size_t states() const noexcept { return n_; }
    std::size_t letters() const noexcept { return k_; }

    State next(State q, Letter a) const noexcept { return delta_[q * k_ + a]; }
    std::span<const State> row(State q) const noexcept {
        return {delta_.data() + q * k_, k_};
    }
    const std::vector<State> &table() const noexcept { return delta_; }

    /// The action of one letter as a self-map of the state set.
    std::vector<State> letter_map(Letter a) const;

    bool operator==(const Automaton &) const = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<State> delta_;
};

enum class LetterKind { Permutation, AlmostPermutation, Other };

struct LetterClassification {
    LetterKind kind = LetterKind::Other;
    std::optional<State> dangling;
    std::vector<std::vector<State>> cycles;
    std::size_t cyclic_count = 0;
};

enum class Verdict { GroupAutomaton, AlmostGroupAutomaton, OtherDFA };

struct AutomatonClass {
    Verdict verdict = Verdict::OtherDFA;
    std::vector<LetterClassification> per_letter;
    std::optional<Letter> dangling_letter;
    std::optional<State> dangling_state;
};

LetterClassification classify_letter(const Automaton &a, Letter letter);
AutomatonClass classify(const Automaton &a);

const char *to_string(LetterKind kind);
const char *to_string(Verdict verdict);

/// q·w, folding left to right.
State apply_word(const Automaton &a, State q, std::span<const Letter> w);

/// S·w as a sorted set.
StateSet image_of_set(const Automaton &a, std::span<const State> s, std::span<const Letter> w);

/// States with no preimage under a letter. Independent of the cyclic-point
/// computation; used as a cross-check for dangling states.
StateSet states_without_preimage(const Automaton &a, Letter letter);

/// Simultaneous relabeling: state q becomes perm[q].
Automaton relabel(const Automaton &a, std::span<const State> perm);

} // namespace agsync
