#include "agsync/census.hpp"

#include "agsync/errors.hpp"
#include "agsync/factorization.hpp"
#include "agsync/parallel.hpp"
#include "agsync/structure.hpp"

#include <sstream>

namespace agsync {

std::uint64_t LemmaViolations::total() const {
    return lemma1 + lemma2 + lemma3 + lemma4 + theorem1 + stability + fclique_image;
}

LemmaViolations &LemmaViolations::operator+=(const LemmaViolations &o) {
    lemma1 += o.lemma1;
    lemma2 += o.lemma2;
    lemma3 += o.lemma3;
    lemma4 += o.lemma4;
    theorem1 += o.theorem1;
    stability += o.stability;
    fclique_image += o.fclique_image;
    return *this;
}

InstanceCheck check_instance(const Automaton &a, const CheckOptions &options) {
    InstanceCheck out;
    out.strongly_connected = is_strongly_connected(a);
    if (!out.strongly_connected)
        return out;
    if (!options.run_checks) {
        out.synchronizing = is_synchronizing(a);
        return out;
    }

    const auto cls = classify(a);
    const auto pairs = pair_analysis(a);
    out.synchronizing = pairs.synchronizing();
    auto &v = out.violations;

    try {
        if (!dangling_stable_pair(a, cls, pairs, true))
            ++v.lemma2;
    } catch (const LemmaViolation &) {
        ++v.lemma2;
    }

    std::optional<StabilityPartition> partition;
    try {
        partition = stability_partition(a, pairs);
    } catch (const NotTransitive &) {
        ++v.stability;
    } catch (const NotCongruence &) {
        ++v.stability;
    }

    if (partition) {
        const auto factor = factor_automaton(a, *partition);
        try {
            check_factor_is_group(factor);
        } catch (const LemmaViolation &) {
            ++v.lemma3;
        }
        try {
            const auto bs = bs_decomposition(a, cls, *partition, factor);
            if (!bs.trivial && !out.synchronizing)
                out.signature = SignatureTriple{bs.ell, bs.b, bs.s};
            if (bs.trivial != out.synchronizing)
                ++v.lemma4;
        } catch (const BulletViolation &) {
            ++v.lemma4;
        }
        if ((partition->size() > 1) == out.synchronizing)
            ++v.theorem1;
    }

    if (a.states() <= options.fclique_limit) {
        const auto cliques = f_cliques(a, pairs, options.fclique_limit);
        const auto report = check_fclique_difference_lemma(pairs, cliques);
        out.fclique_pairs_checked = report.checked;
        if (!report.ok())
            ++v.lemma1;
        if (fclique_image_violations(a, cliques) != 0)
            ++v.fclique_image;
    }
    return out;
}

namespace {

struct Tally {
    std::uint64_t total = 0;
    std::uint64_t sc = 0;
    std::uint64_t sc_sync = 0;
    std::uint64_t sc_nonsync = 0;
    std::uint64_t nonsc = 0;
    std::map<SignatureTriple, std::uint64_t> histogram;
    LemmaViolations violations;
    std::uint64_t fclique_pairs_checked = 0;
};

} // namespace

GroupCensus run_group_census(unsigned n, unsigned k, unsigned threads, std::uint64_t budget) {
    const auto total = size_group_automata(n, k, budget);
    constexpr std::uint64_t shard = 1 << 14;
    const auto shards = (total + shard - 1) / shard;
    const auto parts = run_shards<std::uint64_t>(shards, threads, [&](std::uint64_t s) {
        std::uint64_t nonsc = 0;
        for_each_group_automaton(n, k, s * shard, std::min(total, (s + 1) * shard),
                                 [&](const Automaton &a) { nonsc += !is_strongly_connected(a); });
        return nonsc;
    });
    GroupCensus out;
    out.total = total;
    for (auto p : parts)
        out.nonsc += p;
    return out;
}

CensusReport run_census(unsigned n, unsigned k, const CensusOptions &options) {
    const auto total = size_G(n, k, options.budget);
    const auto shard_size = std::max<std::uint64_t>(1, options.shard_size);
    const auto shards = (total + shard_size - 1) / shard_size;

    const auto parts = run_shards<Tally>(shards, options.threads, [&](std::uint64_t s) {
        Tally t;
        for_each_G(n, k, s * shard_size, std::min(total, (s + 1) * shard_size),
                   [&](const Automaton &a) {
                       ++t.total;
                       const auto check = check_instance(a, options.checks);
                       if (!check.strongly_connected) {
                           ++t.nonsc;
                           return;
                       }
                       ++t.sc;
                       if (check.synchronizing) {
                           ++t.sc_sync;
                       } else {
                           ++t.sc_nonsync;
                           if (check.signature)
                               ++t.histogram[*check.signature];
                       }
                       t.violations += check.violations;
                       t.fclique_pairs_checked += check.fclique_pairs_checked;
                   });
        return t;
    });

    CensusReport out;
    out.n = n;
    out.k = k;
    for (const auto &t : parts) {
        out.total += t.total;
        out.sc_count += t.sc;
        out.sc_sync += t.sc_sync;
        out.sc_nonsync += t.sc_nonsync;
        out.nonsc += t.nonsc;
        for (const auto &[sig, c] : t.histogram)
            out.signature_histogram[sig] += c;
        out.lemma_violations += t.violations;
        out.fclique_pairs_checked += t.fclique_pairs_checked;
    }
    const auto groups = run_group_census(n, k, options.threads, options.budget);
    out.group_total = groups.total;
    out.group_nonsc = groups.nonsc;
    return out;
}

namespace {

std::vector<SignatureTriple> reported_signatures(const CensusReport &r) {
    auto sigs = signatures(r.n);
    for (const auto &[sig, c] : r.signature_histogram)
        if (std::find(sigs.begin(), sigs.end(), sig) == sigs.end())
            sigs.push_back(sig);
    std::sort(sigs.begin(), sigs.end());
    return sigs;
}

BigCount histogram_count(const CensusReport &r, const SignatureTriple &sig) {
    const auto it = r.signature_histogram.find(sig);
    return it == r.signature_histogram.end() ? BigCount(0) : it->second;
}

BigCount signature_bound(const CensusReport &r, const SignatureTriple &sig) {
    if (sig.b * (sig.ell + 1) + sig.s * sig.ell != r.n)
        return 0;
    return N_term(r.n, r.k, sig);
}

} // namespace

ordered_json census_to_json(const CensusReport &r) {
    ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["total"] = big_to_json(r.total);
    j["sc"] = big_to_json(r.sc_count);
    j["sc_sync"] = big_to_json(r.sc_sync);
    j["sc_nonsync"] = big_to_json(r.sc_nonsync);
    j["nonsc"] = big_to_json(r.nonsc);

    bool per_signature_ok = true;
    auto sigs = ordered_json::array();
    for (const auto &sig : reported_signatures(r)) {
        const auto count = histogram_count(r, sig);
        const auto bound = signature_bound(r, sig);
        per_signature_ok = per_signature_ok && count <= bound;
        ordered_json row;
        row["ell"] = sig.ell;
        row["b"] = sig.b;
        row["s"] = sig.s;
        row["count"] = big_to_json(count);
        row["bound"] = big_to_json(bound);
        sigs.push_back(std::move(row));
    }
    j["signatures"] = std::move(sigs);

    const auto &v = r.lemma_violations;
    j["lemma_violations"] = {{"lemma1", v.lemma1},     {"lemma2", v.lemma2},
                             {"lemma3", v.lemma3},     {"lemma4", v.lemma4},
                             {"theorem1", v.theorem1}, {"stability", v.stability},
                             {"fclique_image", v.fclique_image}};
    j["fclique_pairs_checked"] = r.fclique_pairs_checked;

    const auto lower = lower_bound(r.n, r.k);
    const auto upper = upper_bound_sum(r.n, r.k);
    const auto z = Z(r.n, r.k);
    const auto nonsc_bound = nonsc_almost_group_bound(r.n, r.k);
    ordered_json bounds;
    bounds["count_G"] = big_to_json(count_G(r.n, r.k));
    bounds["group_total"] = big_to_json(r.group_total);
    bounds["group_nonsc"] = big_to_json(r.group_nonsc);
    bounds["Z"] = big_to_json(z);
    bounds["nonsc_bound"] = big_to_json(nonsc_bound);
    bounds["lower_bound"] = big_to_json(lower);
    bounds["upper_bound_sum"] = big_to_json(upper);
    bounds["leading_term"] = big_to_json(upper_bound_leading_term(r.n, r.k));
    j["bounds"] = std::move(bounds);

    ordered_json checks;
    checks["count_matches_formula"] = r.total == count_G(r.n, r.k);
    checks["accounting"] = r.total == r.sc_count + r.nonsc &&
                           r.sc_count == r.sc_sync + r.sc_nonsync;
    BigCount hist_sum = 0;
    for (const auto &[sig, c] : r.signature_histogram)
        hist_sum += c;
    checks["histogram_sum"] = hist_sum == r.sc_nonsync;
    checks["group_nonsc_within_Z"] = r.group_nonsc <= z;
    checks["nonsc_within_bound"] = r.nonsc <= nonsc_bound;
    checks["sandwich"] = lower <= r.sc_nonsync && r.sc_nonsync <= upper;
    checks["per_signature"] = per_signature_ok;
    j["checks"] = std::move(checks);
    return j;
}

std::string census_to_csv(const CensusReport &r) {
    std::ostringstream out;
    out << "n,k,total,sc,sc_sync,sc_nonsync,nonsc\n";
    out << r.n << ',' << r.k << ',' << r.total << ',' << r.sc_count << ',' << r.sc_sync << ','
        << r.sc_nonsync << ',' << r.nonsc << '\n';
    out << "ell,b,s,count,bound\n";
    for (const auto &sig : reported_signatures(r))
        out << sig.ell << ',' << sig.b << ',' << sig.s << ',' << histogram_count(r, sig) << ','
            << signature_bound(r, sig) << '\n';
    return out.str();
}

ordered_json instance_record(const Automaton &a, const CheckOptions &options) {
    auto j = automaton_to_json(a);
    const auto cls = classify(a);
    ordered_json checks;
    checks["almost_group"] = cls.verdict == Verdict::AlmostGroupAutomaton;
    if (cls.dangling_state) {
        checks["dangling_letter"] = *cls.dangling_letter;
        checks["dangling_state"] = *cls.dangling_state;
    }
    const bool sc = is_strongly_connected(a);
    checks["strongly_connected"] = sc;
    checks["synchronizing"] = is_synchronizing(a);
    checks["member_F"] = is_member_F(a);
    if (sc && cls.verdict == Verdict::AlmostGroupAutomaton) {
        const auto check = check_instance(a, options);
        if (check.signature)
            checks["signature"] = {{"ell", check.signature->ell},
                                   {"b", check.signature->b},
                                   {"s", check.signature->s}};
        else
            checks["signature"] = nullptr;
        checks["violations"] = check.violations.total();
    }
    j["checks"] = std::move(checks);
    return j;
}

} // namespace agsync
