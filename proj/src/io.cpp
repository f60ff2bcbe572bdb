#include "agsync/io.hpp"

#include "agsync/errors.hpp"

#include <fstream>
#include <sstream>

namespace agsync {

ordered_json automaton_to_json(const Automaton &a) {
    ordered_json j;
    j["n"] = a.states();
    j["k"] = a.letters();
    auto rows = ordered_json::array();
    for (State q = 0; q < a.states(); ++q) {
        auto row = ordered_json::array();
        for (auto r : a.row(q))
            row.push_back(r);
        rows.push_back(std::move(row));
    }
    j["delta"] = std::move(rows);
    return j;
}

std::string encode_automaton(const Automaton &a) { return automaton_to_json(a).dump(); }

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

std::size_t get_size(const nlohmann::json &j, const char *field) {
    if (!j.contains(field))
        throw ParseError(std::string("missing field \"") + field + "\"");
    const auto &v = j.at(field);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
        throw ParseError(std::string("field \"") + field + "\" must be a positive integer");
    return v.get<std::size_t>();
}

} // namespace

Automaton automaton_from_json(const nlohmann::json &j) {
    if (!j.is_object())
        throw ParseError("automaton must be a JSON object");
    const auto n = get_size(j, "n");
    const auto k = get_size(j, "k");
    if (!j.contains("delta") || !j.at("delta").is_array())
        throw ParseError("field \"delta\" must be an array of rows");
    std::vector<std::vector<std::int64_t>> raw;
    for (std::size_t q = 0; q < j.at("delta").size(); ++q) {
        const auto &row = j.at("delta")[q];
        if (!row.is_array())
            throw ParseError("field \"delta[" + std::to_string(q) + "]\" must be an array");
        auto &out = raw.emplace_back();
        for (std::size_t a = 0; a < row.size(); ++a) {
            if (!row[a].is_number_integer())
                throw ParseError("field \"delta[" + std::to_string(q) + "][" + std::to_string(a) +
                                 "]\" must be an integer");
            out.push_back(row[a].get<std::int64_t>());
        }
    }
    return Automaton::validate(raw, n, k);
}

Automaton decode_automaton(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
    return automaton_from_json(j);
}

Automaton read_automaton(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return decode_automaton(buf.str());
}

void write_text(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path.string());
    out << text;
    if (!out)
        throw ParseError("write failed for " + path.string());
}

ordered_json big_to_json(const BigCount &x) {
    if (fits_u64(x))
        return x.convert_to<std::uint64_t>();
    return to_decimal(x);
}

std::string letter_name(Letter l) { return "a" + std::to_string(l); }

std::string format_set(const StateSet &s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string format_word(const Word &w) {
    if (w.empty())
        return "ε";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += " ";
        out += letter_name(w[i]);
    }
    return out;
}

std::string automaton_to_dot(const Automaton &a, std::string_view name) {
    const auto cls = classify(a);
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (State q = 0; q < a.states(); ++q) {
        out << "  " << q;
        if (cls.dangling_state && *cls.dangling_state == q)
            out << " [style=filled, fillcolor=gray85]";
        out << ";\n";
    }
    for (State q = 0; q < a.states(); ++q)
        for (Letter l = 0; l < a.letters(); ++l)
            out << "  " << q << " -> " << a.next(q, l) << " [label=\"" << letter_name(l)
                << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string factor_to_dot(const FactorAutomaton &factor, const StabilityPartition &partition,
                          std::string_view name) {
    const auto &base = factor.base;
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box];\n";
    for (State c = 0; c < base.states(); ++c)
        out << "  " << c << " [label=\"" << format_set(partition.classes[c]) << "\"];\n";
    for (State c = 0; c < base.states(); ++c)
        for (Letter l = 0; l < base.letters(); ++l)
            out << "  " << c << " -> " << base.next(c, l) << " [label=\"" << letter_name(l)
                << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace agsync
