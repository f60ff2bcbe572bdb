// agsync: command-line front end for the almost-group synchronization toolkit.
//
// Exit codes: 0 success, 2 usage error, 3 budget or limit refusal,
// 4 I/O or parse failure.

#include "agsync/analysis.hpp"
#include "agsync/census.hpp"
#include "agsync/counting.hpp"
#include "agsync/enumeration.hpp"
#include "agsync/errors.hpp"
#include "agsync/fixtures.hpp"
#include "agsync/io.hpp"
#include "agsync/montecarlo.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <limits>
#include <sstream>

namespace {

enum ExitCode { ok = 0, usage = 2, refused = 3, io_failure = 4 };

void emit(const std::string &out_path, const std::string &text) {
    if (out_path.empty())
        std::cout << text << std::flush;
    else
        agsync::write_text(out_path, text);
}

std::uint64_t budget_for(bool force, std::uint64_t budget) {
    return force ? std::numeric_limits<std::uint64_t>::max() : budget;
}

} // namespace

int main(int argc, char **argv) {
    using namespace agsync;

    CLI::App app{"Synchronization of almost-group automata: analysis, census, sampling"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format;
    unsigned n = 0, k = 2, threads = 1;
    std::uint64_t seed = 1, samples = 0, max_rejects = default_max_rejects;
    std::uint64_t budget = default_enumeration_budget;
    double confidence = 0.99;
    bool force = false;
    std::size_t reset_limit = default_reset_word_limit;
    std::size_t fclique_limit = default_fclique_limit;

    auto add_out = [&](CLI::App *cmd) {
        cmd->add_option("--out", out_path, "Output file (default: stdout)");
    };
    auto add_nk = [&](CLI::App *cmd) {
        cmd->add_option("--n", n, "Number of states")->required();
        cmd->add_option("--k", k, "Alphabet size")->capture_default_str();
    };

    auto *analyze_cmd = app.add_subcommand("analyze", "Analyze one automaton given as JSON");
    std::string input;
    analyze_cmd->add_option("input", input, "Automaton JSON file")->required();
    analyze_cmd->add_option("--format", format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    analyze_cmd->add_option("--reset-limit", reset_limit, "Largest n for the subset search")
        ->capture_default_str();
    analyze_cmd->add_option("--fclique-limit", fclique_limit, "Largest n for F-clique search")
        ->capture_default_str();
    add_out(analyze_cmd);

    auto *census_cmd = app.add_subcommand("census", "Classify every member of G(n,k)");
    add_nk(census_cmd);
    census_cmd->add_option("--threads", threads)->capture_default_str();
    census_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    census_cmd->add_option("--budget", budget, "Refuse enumerations larger than this")
        ->capture_default_str();
    census_cmd->add_option("--fclique-limit", fclique_limit)->capture_default_str();
    census_cmd->add_flag("--force", force, "Ignore the enumeration budget");
    add_out(census_cmd);

    auto *mc_cmd = app.add_subcommand("montecarlo", "Estimate the non-synchronization probability");
    add_nk(mc_cmd);
    mc_cmd->add_option("--samples", samples)->required();
    mc_cmd->add_option("--seed", seed)->capture_default_str();
    mc_cmd->add_option("--confidence", confidence)->capture_default_str()->check(
        CLI::Range(0.0, 1.0));
    mc_cmd->add_option("--threads", threads)->capture_default_str();
    mc_cmd->add_option("--max-rejects", max_rejects)->capture_default_str();
    mc_cmd->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
    add_out(mc_cmd);

    auto *family_cmd = app.add_subcommand("family", "Emit every member of F(n,k) as JSONL");
    add_nk(family_cmd);
    family_cmd->add_option("--budget", budget)->capture_default_str();
    family_cmd->add_flag("--force", force);
    family_cmd->add_option("--format", format, "jsonl")->check(CLI::IsMember({"jsonl"}));
    add_out(family_cmd);

    auto *bounds_cmd = app.add_subcommand("bounds", "Print the exact counting formulas");
    add_nk(bounds_cmd);
    bounds_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    add_out(bounds_cmd);

    auto *sample_cmd = app.add_subcommand(
        "sample", "Emit random strongly connected members of G(n,k) as JSONL");
    add_nk(sample_cmd);
    sample_cmd->add_option("--samples", samples)->required();
    sample_cmd->add_option("--seed", seed)->capture_default_str();
    sample_cmd->add_option("--max-rejects", max_rejects)->capture_default_str();
    sample_cmd->add_option("--format", format, "jsonl")->check(CLI::IsMember({"jsonl"}));
    add_out(sample_cmd);

    auto *fixture_cmd = app.add_subcommand("fixture", "Emit a built-in automaton");
    std::string fixture_name;
    fixture_cmd->add_option("name", fixture_name, "cerny or fig1")->required();
    fixture_cmd->add_option("--n", n, "Number of states (cerny)");
    fixture_cmd->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    add_out(fixture_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*analyze_cmd) {
            const auto a = read_automaton(input);
            const auto report = analyze(a, {reset_limit, fclique_limit});
            if (format == "json")
                emit(out_path, analysis_to_json(report).dump(2) + "\n");
            else if (format == "dot")
                emit(out_path, automaton_to_dot(a) +
                                   factor_to_dot(report.factor, report.partition));
            else
                emit(out_path, analysis_to_text(report));
        } else if (*census_cmd) {
            CensusOptions options;
            options.threads = threads;
            options.budget = budget_for(force, budget);
            options.checks.fclique_limit = fclique_limit;
            const auto report = run_census(n, k, options);
            emit(out_path, format == "csv" ? census_to_csv(report)
                                           : census_to_json(report).dump(2) + "\n");
        } else if (*mc_cmd) {
            McOptions options;
            options.n = n;
            options.k = k;
            options.samples = samples;
            options.seed = seed;
            options.confidence = confidence;
            options.threads = threads;
            options.max_rejects = max_rejects;
            emit(out_path, montecarlo_to_json(run_montecarlo(options)).dump(2) + "\n");
        } else if (*family_cmd) {
            std::ostringstream out;
            for_each_F(
                n, k, [&](const Automaton &a) { out << instance_record(a).dump() << "\n"; },
                budget_for(force, budget));
            emit(out_path, out.str());
        } else if (*bounds_cmd) {
            ordered_json j;
            j["n"] = n;
            j["k"] = k;
            j["count_G"] = big_to_json(count_G(n, k));
            j["count_almost_permutations"] = big_to_json(count_almost_permutations(n));
            j["Z"] = big_to_json(Z(n, k));
            j["nonsc_bound"] = big_to_json(nonsc_almost_group_bound(n, k));
            j["lower_bound"] = big_to_json(lower_bound(n, k));
            auto terms = ordered_json::array();
            for (const auto &sig : signatures(n))
                terms.push_back({{"ell", sig.ell},
                                 {"b", sig.b},
                                 {"s", sig.s},
                                 {"N", big_to_json(N_term(n, k, sig))}});
            j["signatures"] = std::move(terms);
            j["upper_bound_sum"] = big_to_json(upper_bound_sum(n, k));
            j["leading_term"] = big_to_json(upper_bound_leading_term(n, k));
            j["asymptote"] = non_sync_asymptote(n, k);
            if (format == "json") {
                emit(out_path, j.dump(2) + "\n");
            } else {
                std::ostringstream out;
                out << "n = " << n << ", k = " << k << "\n";
                for (const char *key : {"count_G", "count_almost_permutations", "Z", "nonsc_bound",
                                        "lower_bound"})
                    out << key << " = " << j[key] << "\n";
                for (const auto &sig : signatures(n))
                    out << "N(ell=" << sig.ell << ", b=" << sig.b << ", s=" << sig.s
                        << ") = " << N_term(n, k, sig) << "\n";
                for (const char *key : {"upper_bound_sum", "leading_term", "asymptote"})
                    out << key << " = " << j[key] << "\n";
                emit(out_path, out.str());
            }
        } else if (*sample_cmd) {
            if (n < 2 || k < 2)
                throw DomainTooSmall("sampling needs n >= 2 and k >= 2");
            std::ostringstream out;
            for (std::uint64_t i = 0; i < samples; ++i) {
                Rng rng(seed, i);
                const auto drawn = random_sc_almost_group_automaton(rng, n, k, max_rejects);
                auto record = instance_record(drawn.automaton);
                record["rejections"] = drawn.rejections;
                out << record.dump() << "\n";
            }
            emit(out_path, out.str());
        } else if (*fixture_cmd) {
            const auto a = fixture(fixture_name, n);
            emit(out_path, format == "dot" ? automaton_to_dot(a, fixture_name)
                                           : encode_automaton(a) + "\n");
        }
    } catch (const BudgetExceeded &e) {
        std::cerr << "refused: " << e.what() << " (use --force to override)\n";
        return refused;
    } catch (const LimitExceeded &e) {
        std::cerr << "refused: " << e.what() << "\n";
        return refused;
    } catch (const RejectionExhausted &e) {
        std::cerr << "refused: " << e.what() << "\n";
        return refused;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_failure;
    } catch (const OutOfRangeEntry &e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_failure;
    } catch (const ShapeMismatch &e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_failure;
    } catch (const DomainTooSmall &e) {
        std::cerr << "usage: " << e.what() << "\n";
        return usage;
    } catch (const UnknownFixture &e) {
        std::cerr << "usage: " << e.what() << "\n";
        return usage;
    }
    return ok;
}
