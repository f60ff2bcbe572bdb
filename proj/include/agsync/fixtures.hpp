#pragma once

#include "agsync/automaton.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace agsync {

/// Černý automaton on n >= 2 states: letter 0 sends 0 to 1 and fixes the
/// rest (an almost-permutation with dangling state 0), letter 1 is the
/// cyclic shift i -> i + 1 mod n. Its shortest reset word has length (n-1)².
Automaton cerny(std::size_t n);

/// Seven-state almost-group automaton whose letter 0 leaves state 1 without
/// preimage and whose states {4, 5} form a terminal component.
Automaton fig1();

std::vector<std::string> fixture_names();

/// Throws UnknownFixture for names outside fixture_names().
Automaton fixture(std::string_view name, std::size_t n);

} // namespace agsync
