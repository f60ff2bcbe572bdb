#pragma once

#include "agsync/automaton.hpp"
#include "agsync/bigcount.hpp"
#include "agsync/counting.hpp"
#include "agsync/enumeration.hpp"
#include "agsync/io.hpp"
#include "agsync/synchronization.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace agsync {

/// How often each structural statement failed. All zero on a correct build.
struct LemmaViolations {
    std::uint64_t lemma1 = 0;        // F-cliques differing in one state give a stable pair
    std::uint64_t lemma2 = 0;        // dangling stable pair merged by a0
    std::uint64_t lemma3 = 0;        // factor is a strongly connected group automaton
    std::uint64_t lemma4 = 0;        // B/S bullets
    std::uint64_t theorem1 = 0;      // more than one class <=> not synchronizing
    std::uint64_t stability = 0;     // stability is transitive and a congruence
    std::uint64_t fclique_image = 0; // letters map F-cliques to F-cliques

    std::uint64_t total() const;
    LemmaViolations &operator+=(const LemmaViolations &other);
};

struct InstanceCheck {
    bool strongly_connected = false;
    bool synchronizing = false;
    /// Set for strongly connected non-synchronizing instances.
    std::optional<SignatureTriple> signature;
    LemmaViolations violations;
    std::uint64_t fclique_pairs_checked = 0;
};

struct CheckOptions {
    bool run_checks = true;
    std::size_t fclique_limit = default_fclique_limit;
};

/// Classifies one almost-group automaton and, when it is strongly
/// connected, runs every structural check on it.
InstanceCheck check_instance(const Automaton &a, const CheckOptions &options = {});

struct CensusOptions {
    unsigned threads = 1;
    std::uint64_t budget = default_enumeration_budget;
    std::uint64_t shard_size = 4096;
    CheckOptions checks;
};

struct CensusReport {
    unsigned n = 0;
    unsigned k = 0;
    BigCount total = 0;
    BigCount sc_count = 0;
    BigCount sc_sync = 0;
    BigCount sc_nonsync = 0;
    BigCount nonsc = 0;
    /// Over strongly connected non-synchronizing instances.
    std::map<SignatureTriple, BigCount> signature_histogram;
    LemmaViolations lemma_violations;
    std::uint64_t fclique_pairs_checked = 0;
    /// Group automata on the same n and k, for the Z over-count.
    BigCount group_total = 0;
    BigCount group_nonsc = 0;
};

/// Exhaustive pass over G(n,k) in contiguous shards of the enumeration
/// order. Results do not depend on the thread count.
CensusReport run_census(unsigned n, unsigned k, const CensusOptions &options = {});

struct GroupCensus {
    BigCount total = 0;
    BigCount nonsc = 0;
};
GroupCensus run_group_census(unsigned n, unsigned k, unsigned threads = 1,
                             std::uint64_t budget = default_enumeration_budget);

ordered_json census_to_json(const CensusReport &report);
/// n,k,total,sc,sc_sync,sc_nonsync,nonsc, then ell,b,s,count,bound per signature.
std::string census_to_csv(const CensusReport &report);

/// One JSONL record: the automaton plus a "checks" object.
ordered_json instance_record(const Automaton &a, const CheckOptions &options = {});

} // namespace agsync
