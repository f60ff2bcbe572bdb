#pragma once

#include "agsync/automaton.hpp"
#include "agsync/bigcount.hpp"

#include <span>
#include <vector>

namespace agsync {

/// Decomposition of a self-map into cyclic points and everything else.
struct FunctionalGraphSummary {
    StateSet cyclic_points;
    /// Disjoint cycles, ordered by their smallest state; each starts at it.
    std::vector<std::vector<State>> cycles;
    StateSet non_cyclic;
    /// lcm of the cycle lengths: the smallest power fixing every cyclic point.
    BigCount cycle_length_lcm = 1;
    /// Product of the cycle lengths. Also fixes every cyclic point.
    BigCount cycle_length_product = 1;
};

/// Linear-time walk of the functional graph of `map` (map[q] is the image of q).
FunctionalGraphSummary functional_summary(std::span<const State> map);
FunctionalGraphSummary functional_summary(const Automaton &a, Letter letter);

/// q·letter^exponent without materialising the power.
State power_image(std::span<const State> map, State q, const BigCount &exponent);

struct SccDecomposition {
    /// Components in reverse topological order of the condensation (sinks first).
    std::vector<StateSet> components;
    std::vector<std::size_t> component_of;
    /// terminal[i] holds iff component i is closed under every letter.
    std::vector<bool> terminal;
    bool is_strongly_connected = false;

    std::vector<std::size_t> terminal_components() const;
};

/// Iterative Tarjan over the transition digraph; O(n·k), no recursion.
SccDecomposition scc(const Automaton &a);

/// Forward and backward reachability from state 0 only.
bool is_strongly_connected(const Automaton &a);

} // namespace agsync
