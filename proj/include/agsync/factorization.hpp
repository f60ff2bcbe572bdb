#pragma once

#include "agsync/automaton.hpp"
#include "agsync/synchronization.hpp"

#include <vector>

namespace agsync {

/// Classes of the stability relation, sorted by their smallest state.
struct StabilityPartition {
    std::vector<StateSet> classes;
    std::vector<std::size_t> class_of;

    std::size_t size() const { return classes.size(); }
};

/// Connected components of the stable-pair graph. Verifies that every
/// component is a clique of stable pairs (NotTransitive) and that each
/// letter maps every class into a single class (NotCongruence).
StabilityPartition stability_partition(const Automaton &a, const PairAnalysis &pairs);
StabilityPartition stability_partition(const Automaton &a);

struct FactorAutomaton {
    Automaton base;
    std::vector<std::size_t> class_map;
};

/// Automaton on the classes: C_i·x = C_j iff C_i·x is contained in C_j.
FactorAutomaton factor_automaton(const Automaton &a, const StabilityPartition &partition);

/// Throws LemmaViolation unless the factor is a strongly connected group
/// automaton. Only meaningful for strongly connected almost-group inputs.
void check_factor_is_group(const FactorAutomaton &factor);

struct BSDecomposition {
    /// Single stability class: the automaton is synchronizing, D is the whole
    /// state set, b = 1, s = 0 and ell = n - 1.
    bool trivial = false;
    std::size_t dangling_class = 0;
    std::vector<std::size_t> big;   // classes of size ell + 1, D among them
    std::vector<std::size_t> small; // classes of size ell
    std::size_t ell = 0;
    std::size_t b = 0;
    std::size_t s = 0;
};

/// Splits the stability classes of a strongly connected almost-group
/// automaton around the class D of the dangling state and verifies:
///   1. every class in B has |D| states (and every class is in B or S),
///   2. every class in S has |D| - 1 states,
///   3. the a0-cycle through D in the factor visits only S besides D,
///   4. every other cycle of every letter stays inside B or inside S,
///   5. b(ell + 1) + s·ell = n.
/// A failed bullet throws BulletViolation. Throws Error when the input is not
/// a strongly connected almost-group automaton.
BSDecomposition bs_decomposition(const Automaton &a, const AutomatonClass &cls,
                                 const StabilityPartition &partition,
                                 const FactorAutomaton &factor);
BSDecomposition bs_decomposition(const Automaton &a);

/// More than one stability class. Requires a strongly connected
/// almost-group automaton, where it is equivalent to non-synchronization.
bool non_sync_criterion(const Automaton &a);

} // namespace agsync
