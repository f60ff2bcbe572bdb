#pragma once

#include "agsync/automaton.hpp"
#include "agsync/bigcount.hpp"
#include "agsync/factorization.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace agsync {

using ordered_json = nlohmann::ordered_json;

/// {"n":..,"k":..,"delta":[[..],..]} with delta[state][letter].
ordered_json automaton_to_json(const Automaton &a);
/// Canonical single-line encoding, no trailing newline.
std::string encode_automaton(const Automaton &a);

/// Throws ParseError with the line and field of the problem, or the
/// validation errors of Automaton::validate.
Automaton decode_automaton(std::string_view text);
Automaton automaton_from_json(const nlohmann::json &j);

Automaton read_automaton(const std::filesystem::path &path);
void write_text(const std::filesystem::path &path, std::string_view text);

/// Numbers that fit in 64 bits stay numbers; larger ones become decimal strings.
ordered_json big_to_json(const BigCount &x);

std::string letter_name(Letter l);
std::string format_set(const StateSet &s);
std::string format_word(const Word &w);

/// Graphviz digraph: one node per state, one edge per (state, letter), the
/// dangling state filled grey.
std::string automaton_to_dot(const Automaton &a, std::string_view name = "automaton");
/// Same for the factor automaton, nodes labelled by their classes.
std::string factor_to_dot(const FactorAutomaton &factor, const StabilityPartition &partition,
                          std::string_view name = "factor");

} // namespace agsync
