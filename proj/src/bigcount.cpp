#include "agsync/bigcount.hpp"

namespace agsync {

BigCount factorial(unsigned n) {
    BigCount out = 1;
    for (unsigned i = 2; i <= n; ++i)
        out *= i;
    return out;
}

BigCount binomial(unsigned n, unsigned r) {
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    BigCount out = 1;
    for (unsigned i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

BigCount pow(const BigCount &base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

} // namespace agsync
