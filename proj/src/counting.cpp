#include "agsync/counting.hpp"

#include "agsync/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace agsync {

namespace {

BigCount two_power_minus_one(unsigned k) {
    return pow(BigCount(2), k - 1) - 1;
}

void require_k(unsigned k) {
    if (k == 0)
        throw DomainTooSmall("alphabet must be nonempty");
}

} // namespace

BigCount count_almost_permutations(unsigned n) {
    if (n == 0)
        return 0;
    return BigCount(n - 1) * factorial(n);
}

BigCount count_G(unsigned n, unsigned k) {
    require_k(k);
    if (n == 0)
        return 0;
    return BigCount(n - 1) * pow(factorial(n), k);
}

BigCount Z(unsigned n, unsigned k) {
    BigCount sum = 0;
    for (unsigned r = 1; r <= n / 2; ++r)
        sum += binomial(n, r) * pow(factorial(r) * factorial(n - r), k);
    return sum;
}

BigCount nonsc_almost_group_bound(unsigned n, unsigned k) {
    if (n < 2)
        return 0;
    BigCount sum = 0;
    for (unsigned r = 1; r + 1 <= n; ++r)
        sum += binomial(n, r) * pow(factorial(r), k) * pow(factorial(n - r), k);
    return BigCount(n - 1) * sum;
}

BigCount sc_group_count(unsigned m, unsigned k) {
    require_k(k);
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, BigCount> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find({m, k}); it != cache.end())
        return it->second;

    // t[0] is unused; a 0-state automaton does not exist.
    std::vector<BigCount> t(m + 1, 0);
    for (unsigned size = 1; size <= m; ++size) {
        BigCount rest = pow(factorial(size), k);
        for (unsigned j = 1; j < size; ++j)
            rest -= binomial(size - 1, j - 1) * t[j] * pow(factorial(size - j), k);
        t[size] = rest;
        cache[{size, k}] = rest;
    }
    return m == 0 ? BigCount(0) : t[m];
}

std::vector<SignatureTriple> signatures(unsigned n) {
    std::vector<SignatureTriple> out;
    for (std::size_t ell = 1; ell <= n / 2; ++ell)
        for (std::size_t b = 1; b * (ell + 1) <= n; ++b) {
            const std::size_t rest = n - b * (ell + 1);
            if (rest % ell != 0)
                continue;
            const std::size_t s = rest / ell;
            if (b + s >= 2)
                out.push_back({ell, b, s});
        }
    return out;
}

BigCount N_term(unsigned n, unsigned k, const SignatureTriple &sig) {
    require_k(k);
    if (sig.b * (sig.ell + 1) + sig.s * sig.ell != n)
        throw Error("signature does not satisfy b(ell+1) + s*ell = n");
    const auto ell = static_cast<unsigned>(sig.ell);
    const auto b = static_cast<unsigned>(sig.b);
    const auto s = static_cast<unsigned>(sig.s);
    if (ell == 1 && b == 1 && s + 2 == n)
        return factorial(n) * pow(factorial(n - 2), k - 1) * (n - 2) * two_power_minus_one(k);
    const BigCount inner =
        factorial(b) * factorial(s) * pow(factorial(ell + 1), b) * pow(factorial(ell), s);
    return factorial(n) * std::max(1u, s) * ell * pow(inner, k - 1);
}

BigCount lower_bound(unsigned n, unsigned k) {
    require_k(k);
    if (n < 3)
        return 0;
    return two_power_minus_one(k) * n * (n - 1) * (n - 2) * sc_group_count(n - 2, k);
}

BigCount upper_bound_sum(unsigned n, unsigned k) {
    BigCount sum = 0;
    for (const auto &sig : signatures(n))
        sum += N_term(n, k, sig);
    return sum;
}

BigCount upper_bound_leading_term(unsigned n, unsigned k) {
    require_k(k);
    if (n < 2)
        return 0;
    return BigCount(n) * two_power_minus_one(k) * factorial(n) * pow(factorial(n - 2), k - 1);
}

double non_sync_asymptote(unsigned n, unsigned k) {
    require_k(k);
    return (std::ldexp(1.0, static_cast<int>(k) - 1) - 1.0) /
           std::pow(static_cast<double>(n), 2.0 * (k - 1));
}

} // namespace agsync
