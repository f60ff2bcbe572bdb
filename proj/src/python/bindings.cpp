#include "agsync/analysis.hpp"
#include "agsync/census.hpp"
#include "agsync/counting.hpp"
#include "agsync/enumeration.hpp"
#include "agsync/errors.hpp"
#include "agsync/factorization.hpp"
#include "agsync/fixtures.hpp"
#include "agsync/io.hpp"
#include "agsync/montecarlo.hpp"
#include "agsync/random.hpp"
#include "agsync/structure.hpp"
#include "agsync/synchronization.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace agsync;

namespace {

// Counts leave C++ as decimal strings and come back as Python ints.
py::object big(const BigCount &x) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(to_decimal(x).c_str(), nullptr, 10));
}

py::object to_py(const ordered_json &j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::tuple pair(const StatePair &p) { return py::make_tuple(p.first, p.second); }

py::list pairs(const std::vector<StatePair> &v) {
    py::list out;
    for (const auto &p : v)
        out.append(pair(p));
    return out;
}

py::dict signature(const SignatureTriple &t) {
    py::dict d;
    d["ell"] = t.ell;
    d["b"] = t.b;
    d["s"] = t.s;
    return d;
}

} // namespace

PYBIND11_MODULE(_agsync, m) {
    m.doc() = "Synchronization of almost-group automata";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<OutOfRangeEntry>(m, "OutOfRangeEntry", error);
    py::register_exception<ShapeMismatch>(m, "ShapeMismatch", error);
    py::register_exception<ParseError>(m, "ParseError", error);
    py::register_exception<LimitExceeded>(m, "LimitExceeded", error);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error);
    py::register_exception<RejectionExhausted>(m, "RejectionExhausted", error);
    py::register_exception<DomainTooSmall>(m, "DomainTooSmall", error);
    py::register_exception<UnknownFixture>(m, "UnknownFixture", error);

    py::class_<Automaton>(m, "Automaton")
        .def(py::init([](const std::vector<std::vector<std::int64_t>> &rows) {
                 const std::size_t k = rows.empty() ? 0 : rows.front().size();
                 return Automaton::validate(rows, rows.size(), k);
             }),
             py::arg("delta"), "Build from delta[q][a]; entries are checked.")
        .def_static("from_letter_maps", &Automaton::from_letter_maps)
        .def_static("from_json", [](const std::string &text) { return decode_automaton(text); })
        .def_property_readonly("n", &Automaton::states)
        .def_property_readonly("k", &Automaton::letters)
        .def("next", [](const Automaton &a, State q, Letter l) {
            if (q >= a.states() || l >= a.letters())
                throw py::index_error("state or letter out of range");
            return a.next(q, l);
        })
        .def("letter_map", &Automaton::letter_map)
        .def("rows",
             [](const Automaton &a) {
                 std::vector<std::vector<State>> out(a.states());
                 for (State q = 0; q < a.states(); ++q)
                     out[q].assign(a.row(q).begin(), a.row(q).end());
                 return out;
             })
        .def("to_json", &encode_automaton)
        .def("to_dot", [](const Automaton &a) { return automaton_to_dot(a); })
        .def(py::self == py::self)
        .def("__repr__", [](const Automaton &a) {
            return "<Automaton n=" + std::to_string(a.states()) +
                   " k=" + std::to_string(a.letters()) + ">";
        });

    m.def("classify", [](const Automaton &a) {
        const auto c = classify(a);
        py::dict d;
        d["verdict"] = to_string(c.verdict);
        py::list kinds;
        for (const auto &l : c.per_letter)
            kinds.append(to_string(l.kind));
        d["letters"] = kinds;
        d["dangling_letter"] = c.dangling_letter ? py::cast(*c.dangling_letter) : py::none();
        d["dangling_state"] = c.dangling_state ? py::cast(*c.dangling_state) : py::none();
        return d;
    });
    m.def("is_strongly_connected", &is_strongly_connected);
    m.def("is_synchronizing", &is_synchronizing);
    m.def("shortest_reset_word", &shortest_reset_word, py::arg("a"),
          py::arg("max_states") = default_reset_word_limit);
    m.def("f_cliques", py::overload_cast<const Automaton &, std::size_t>(&f_cliques),
          py::arg("a"), py::arg("max_states") = default_fclique_limit);
    m.def("pair_analysis", [](const Automaton &a) {
        const auto p = pair_analysis(a);
        py::dict d;
        d["mergeable"] = pairs(p.mergeable_pairs());
        d["deadlocks"] = pairs(p.deadlocks());
        d["stable"] = pairs(p.stable_pairs());
        return d;
    });
    m.def("dangling_stable_pair", [](const Automaton &a) -> py::object {
        const auto p = dangling_stable_pair(a);
        return p ? py::object(pair(*p)) : py::none();
    });
    m.def("stability_classes",
          [](const Automaton &a) { return stability_partition(a).classes; });
    m.def("factor_automaton", [](const Automaton &a) {
        return factor_automaton(a, stability_partition(a)).base;
    });
    m.def("bs_decomposition", [](const Automaton &a) {
        const auto bs = bs_decomposition(a);
        py::dict d;
        d["trivial"] = bs.trivial;
        d["dangling_class"] = bs.dangling_class;
        d["big"] = bs.big;
        d["small"] = bs.small;
        d["signature"] = signature({bs.ell, bs.b, bs.s});
        return d;
    });
    m.def("analyze", [](const Automaton &a, std::size_t reset_limit, std::size_t fclique_limit) {
        return to_py(analysis_to_json(analyze(a, {reset_limit, fclique_limit})));
    }, py::arg("a"), py::arg("reset_limit") = default_reset_word_limit,
       py::arg("fclique_limit") = default_fclique_limit);
    m.def("summary", [](const Automaton &a) { return analysis_summary(analyze(a)); });

    m.def("count_almost_permutations", [](unsigned n) { return big(count_almost_permutations(n)); });
    m.def("count_G", [](unsigned n, unsigned k) { return big(count_G(n, k)); });
    m.def("Z", [](unsigned n, unsigned k) { return big(Z(n, k)); });
    m.def("nonsc_bound", [](unsigned n, unsigned k) { return big(nonsc_almost_group_bound(n, k)); });
    m.def("sc_group_count", [](unsigned m_, unsigned k) { return big(sc_group_count(m_, k)); });
    m.def("signatures", [](unsigned n) {
        py::list out;
        for (const auto &t : signatures(n))
            out.append(signature(t));
        return out;
    });
    m.def("N_term", [](unsigned n, unsigned k, std::size_t ell, std::size_t b, std::size_t s) {
        return big(N_term(n, k, {ell, b, s}));
    }, py::arg("n"), py::arg("k"), py::arg("ell"), py::arg("b"), py::arg("s"));
    m.def("lower_bound", [](unsigned n, unsigned k) { return big(lower_bound(n, k)); });
    m.def("upper_bound_sum", [](unsigned n, unsigned k) { return big(upper_bound_sum(n, k)); });
    m.def("upper_bound_leading_term",
          [](unsigned n, unsigned k) { return big(upper_bound_leading_term(n, k)); });
    m.def("non_sync_asymptote", &non_sync_asymptote);

    m.def("fixture", &fixture, py::arg("name"), py::arg("n") = 0);
    m.def("cerny", &cerny);
    m.def("fig1", &fig1);
    m.def("enumerate_G", &enumerate_G, py::arg("n"), py::arg("k"),
          py::arg("budget") = default_enumeration_budget);
    m.def("generate_F", &generate_F, py::arg("n"), py::arg("k"),
          py::arg("budget") = default_enumeration_budget);
    m.def("is_member_F", &is_member_F);

    m.def("sample", [](std::size_t n, std::size_t k, std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t max_rejects) {
        if (n < 2 || k < 2)
            throw DomainTooSmall("sampling needs n >= 2 and k >= 2");
        Rng rng(seed, stream);
        auto s = random_sc_almost_group_automaton(rng, n, k, max_rejects);
        return py::make_tuple(std::move(s.automaton), s.rejections);
    }, py::arg("n"), py::arg("k") = 2, py::arg("seed") = 1, py::arg("stream") = 0,
       py::arg("max_rejects") = default_max_rejects,
       "Uniform strongly connected almost-group automaton and the rejections spent.");
    m.def("montecarlo", [](unsigned n, unsigned k, std::uint64_t samples, std::uint64_t seed,
                           double confidence, unsigned threads, std::uint64_t max_rejects) {
        McOptions o;
        o.n = n;
        o.k = k;
        o.samples = samples;
        o.seed = seed;
        o.confidence = confidence;
        o.threads = threads;
        o.max_rejects = max_rejects;
        McEstimate e;
        {
            py::gil_scoped_release release;
            e = run_montecarlo(o);
        }
        return to_py(montecarlo_to_json(e));
    }, py::arg("n"), py::arg("k") = 2, py::arg("samples") = 10000, py::arg("seed") = 1,
       py::arg("confidence") = 0.99, py::arg("threads") = 1,
       py::arg("max_rejects") = default_max_rejects);
    m.def("wilson_interval", &wilson_interval);
    m.def("census", [](unsigned n, unsigned k, unsigned threads, std::uint64_t budget,
                       bool checks) {
        CensusOptions o;
        o.threads = threads;
        o.budget = budget;
        o.checks.run_checks = checks;
        CensusReport r;
        {
            py::gil_scoped_release release;
            r = run_census(n, k, o);
        }
        return to_py(census_to_json(r));
    }, py::arg("n"), py::arg("k") = 2, py::arg("threads") = 1,
       py::arg("budget") = default_enumeration_budget, py::arg("checks") = true);
    m.def("instance_record", [](const Automaton &a) { return to_py(instance_record(a)); });
}
