#include "agsync/analysis.hpp"

#include <sstream>

namespace agsync {

AnalysisReport analyze(const Automaton &a, const AnalysisOptions &options) {
    auto cls = classify(a);
    auto components = scc(a);
    auto pairs = pair_analysis(a);
    const bool sync = pairs.synchronizing();
    auto partition = stability_partition(a, pairs);
    auto factor = factor_automaton(a, partition);

    AnalysisReport r{a,     std::move(cls),       std::move(components), std::move(pairs), sync,
                     {},    std::move(partition), std::move(factor),     {},               {},
                     {}};
    if (a.states() <= options.reset_word_limit)
        r.reset_word = shortest_reset_word(a, options.reset_word_limit);
    if (a.states() <= options.fclique_limit)
        r.fcliques = f_cliques(a, r.pairs, options.fclique_limit);
    if (r.cls.verdict == Verdict::AlmostGroupAutomaton && r.components.is_strongly_connected) {
        r.dangling_pair = dangling_stable_pair(a, r.cls, r.pairs, true);
        r.bs = bs_decomposition(a, r.cls, r.partition, r.factor);
    }
    return r;
}

namespace {

std::string cycles_text(const std::vector<std::vector<State>> &cycles) {
    std::string out;
    for (const auto &c : cycles) {
        out += "(";
        for (std::size_t i = 0; i < c.size(); ++i)
            out += (i ? " " : "") + std::to_string(c[i]);
        out += ")";
    }
    return out;
}

} // namespace

std::string analysis_summary(const AnalysisReport &r) {
    std::ostringstream out;
    out << to_string(r.cls.verdict);
    // The summary names letters a, b, c, ... like the usual two-letter
    // drawings; everywhere else they are a0, a1, ...
    if (r.cls.dangling_state) {
        const auto l = *r.cls.dangling_letter;
        out << "; dangling state " << *r.cls.dangling_state << " (letter "
            << (l < 26 ? std::string(1, static_cast<char>('a' + l)) : letter_name(l)) << ")";
    }
    if (r.components.is_strongly_connected) {
        out << "; strongly connected";
    } else {
        out << "; NOT strongly connected";
        const auto terminal = r.components.terminal_components();
        for (auto t : terminal)
            out << "; terminal component " << format_set(r.components.components[t]);
    }
    out << (r.synchronizing ? "; synchronizing" : "; not synchronizing");
    if (r.reset_word && *r.reset_word) {
        const auto &w = **r.reset_word;
        if (w.empty())
            out << "; reset word ε";
        else
            out << "; shortest reset word length " << w.size();
    }
    return out.str();
}

std::string analysis_to_text(const AnalysisReport &r) {
    const auto &a = r.automaton;
    std::ostringstream out;
    out << analysis_summary(r) << "\n";
    out << "states " << a.states() << ", letters " << a.letters() << "\n";
    for (Letter l = 0; l < a.letters(); ++l) {
        const auto &c = r.cls.per_letter[l];
        out << "  " << letter_name(l) << ": " << to_string(c.kind) << ", cycles "
            << cycles_text(c.cycles);
        if (c.dangling)
            out << ", dangling " << *c.dangling;
        out << "\n";
    }
    out << "components:";
    for (std::size_t i = 0; i < r.components.components.size(); ++i)
        out << " " << format_set(r.components.components[i])
            << (r.components.terminal[i] ? "*" : "");
    out << "  (* terminal)\n";
    out << "pairs: " << r.pairs.mergeable_count() << " mergeable, "
        << pair_count(a.states()) - r.pairs.mergeable_count() << " deadlocks, "
        << r.pairs.stable_count() << " stable\n";
    if (!r.reset_word)
        out << "shortest reset word: skipped (n above limit)\n";
    else if (*r.reset_word)
        out << "shortest reset word: " << format_word(**r.reset_word) << " (length "
            << (*r.reset_word)->size() << ")\n";
    else
        out << "shortest reset word: none\n";
    out << "stable classes:";
    for (const auto &c : r.partition.classes)
        out << " " << format_set(c);
    out << "\n";
    out << "factor automaton: " << r.factor.base.states() << " states, "
        << to_string(classify(r.factor.base).verdict) << "\n";
    if (r.fcliques) {
        out << "F-cliques:";
        for (const auto &c : *r.fcliques)
            out << " " << format_set(c);
        out << "\n";
    }
    if (r.dangling_pair)
        out << "dangling stable pair: {" << r.dangling_pair->first << ", "
            << r.dangling_pair->second << "}\n";
    if (r.bs) {
        if (r.bs->trivial)
            out << "B/S decomposition: trivial (single class)\n";
        else
            out << "B/S decomposition: ell=" << r.bs->ell << " b=" << r.bs->b << " s=" << r.bs->s
                << ", D = " << format_set(r.partition.classes[r.bs->dangling_class]) << "\n";
    }
    return out.str();
}

ordered_json analysis_to_json(const AnalysisReport &r) {
    const auto &a = r.automaton;
    ordered_json j;
    j["automaton"] = automaton_to_json(a);
    j["summary"] = analysis_summary(r);
    j["class"] = to_string(r.cls.verdict);
    j["dangling_letter"] = r.cls.dangling_letter ? ordered_json(*r.cls.dangling_letter) : nullptr;
    j["dangling_state"] = r.cls.dangling_state ? ordered_json(*r.cls.dangling_state) : nullptr;
    auto letters = ordered_json::array();
    for (const auto &c : r.cls.per_letter)
        letters.push_back({{"kind", to_string(c.kind)},
                           {"cycles", c.cycles},
                           {"dangling", c.dangling ? ordered_json(*c.dangling) : nullptr}});
    j["letters"] = std::move(letters);
    j["strongly_connected"] = r.components.is_strongly_connected;
    j["components"] = r.components.components;
    auto terminal = ordered_json::array();
    for (auto t : r.components.terminal_components())
        terminal.push_back(r.components.components[t]);
    j["terminal_components"] = std::move(terminal);
    j["synchronizing"] = r.synchronizing;
    if (!r.reset_word)
        j["shortest_reset_word"] = "skipped";
    else if (*r.reset_word)
        j["shortest_reset_word"] = **r.reset_word;
    else
        j["shortest_reset_word"] = nullptr;
    auto pairs_json = [](const std::vector<StatePair> &ps) {
        auto arr = ordered_json::array();
        for (const auto &p : ps)
            arr.push_back({p.first, p.second});
        return arr;
    };
    j["deadlocks"] = pairs_json(r.pairs.deadlocks());
    j["stable_pairs"] = pairs_json(r.pairs.stable_pairs());
    j["stable_classes"] = r.partition.classes;
    j["factor"] = automaton_to_json(r.factor.base);
    if (r.fcliques)
        j["f_cliques"] = *r.fcliques;
    if (r.dangling_pair)
        j["dangling_stable_pair"] = {r.dangling_pair->first, r.dangling_pair->second};
    if (r.bs) {
        if (r.bs->trivial)
            j["bs_decomposition"] = "trivial";
        else
            j["bs_decomposition"] = {{"ell", r.bs->ell},
                                     {"b", r.bs->b},
                                     {"s", r.bs->s},
                                     {"D", r.partition.classes[r.bs->dangling_class]}};
    }
    return j;
}

} // namespace agsync
