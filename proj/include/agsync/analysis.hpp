#pragma once

#include "agsync/automaton.hpp"
#include "agsync/factorization.hpp"
#include "agsync/io.hpp"
#include "agsync/structure.hpp"
#include "agsync/synchronization.hpp"

#include <optional>
#include <string>
#include <vector>

namespace agsync {

struct AnalysisOptions {
    std::size_t reset_word_limit = default_reset_word_limit;
    std::size_t fclique_limit = default_fclique_limit;
};

/// Everything the library can say about one automaton.
struct AnalysisReport {
    Automaton automaton;
    AutomatonClass cls;
    SccDecomposition components;
    PairAnalysis pairs;
    bool synchronizing;
    /// Unset when n exceeds the reset-word limit.
    std::optional<std::optional<Word>> reset_word;
    StabilityPartition partition;
    FactorAutomaton factor;
    /// Only for strongly connected almost-group automata.
    std::optional<BSDecomposition> bs;
    std::optional<StatePair> dangling_pair;
    /// Unset when n exceeds the F-clique limit.
    std::optional<std::vector<StateSet>> fcliques;
};

AnalysisReport analyze(const Automaton &a, const AnalysisOptions &options = {});

/// One-line verdict, e.g.
/// "almost-group; dangling state 1 (letter a); NOT strongly connected;
///  terminal component {4,5}; not synchronizing".
std::string analysis_summary(const AnalysisReport &report);
std::string analysis_to_text(const AnalysisReport &report);
ordered_json analysis_to_json(const AnalysisReport &report);

} // namespace agsync
