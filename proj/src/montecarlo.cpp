#include "agsync/montecarlo.hpp"

#include "agsync/counting.hpp"
#include "agsync/errors.hpp"
#include "agsync/parallel.hpp"
#include "agsync/synchronization.hpp"

#include <boost/math/distributions/normal.hpp>

#include <cmath>

namespace agsync {

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials,
                                          double confidence) {
    if (trials == 0)
        throw Error("Wilson interval needs at least one trial");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw Error("confidence must lie in (0, 1)");
    const boost::math::normal_distribution<double> normal;
    const double z = boost::math::quantile(normal, 1.0 - (1.0 - confidence) / 2.0);
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    const double low = std::min(std::max(center - half, 0.0), p);
    const double high = std::max(std::min(center + half, 1.0), p);
    return {low, high};
}

McEstimate run_montecarlo(const McOptions &o) {
    if (o.n < 3 || o.k < 2)
        throw DomainTooSmall("Monte Carlo estimation needs n >= 3 and k >= 2");
    if (o.samples == 0)
        throw DomainTooSmall("need at least one sample");
    const auto block = std::max<std::uint64_t>(1, o.block_size);
    const auto blocks = (o.samples + block - 1) / block;

    struct Partial {
        std::uint64_t hits = 0;
        std::uint64_t rejected = 0;
    };
    const auto parts = run_shards<Partial>(blocks, o.threads, [&](std::uint64_t b) {
        Rng rng(o.seed, b);
        Partial p;
        const auto count = std::min(block, o.samples - b * block);
        for (std::uint64_t i = 0; i < count; ++i) {
            const auto drawn = random_sc_almost_group_automaton(rng, o.n, o.k, o.max_rejects);
            p.rejected += drawn.rejections;
            p.hits += !is_synchronizing(drawn.automaton);
        }
        return p;
    });

    McEstimate e;
    e.n = o.n;
    e.k = o.k;
    e.samples = o.samples;
    e.seed = o.seed;
    e.block_size = block;
    e.confidence = o.confidence;
    for (const auto &p : parts) {
        e.hits += p.hits;
        e.rejected += p.rejected;
    }
    e.p_hat = static_cast<double>(e.hits) / static_cast<double>(e.samples);
    std::tie(e.ci_low, e.ci_high) = wilson_interval(e.hits, e.samples, o.confidence);
    e.asymptote = non_sync_asymptote(o.n, o.k);
    e.ratio = e.p_hat / e.asymptote;
    return e;
}

ordered_json montecarlo_to_json(const McEstimate &e) {
    ordered_json j;
    j["n"] = e.n;
    j["k"] = e.k;
    j["samples"] = e.samples;
    j["hits"] = e.hits;
    j["rejected"] = e.rejected;
    j["p_hat"] = e.p_hat;
    j["confidence"] = e.confidence;
    j["ci_low"] = e.ci_low;
    j["ci_high"] = e.ci_high;
    j["asymptote"] = e.asymptote;
    j["ratio"] = e.ratio;
    j["seed"] = e.seed;
    j["block_size"] = e.block_size;
    return j;
}

} // namespace agsync
