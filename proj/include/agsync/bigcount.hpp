#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace agsync {

/// Exact nonnegative integer for every counting formula.
using BigCount = boost::multiprecision::cpp_int;

BigCount factorial(unsigned n);
BigCount binomial(unsigned n, unsigned r);
BigCount pow(const BigCount &base, unsigned exponent);

inline std::string to_decimal(const BigCount &x) { return x.str(); }

inline bool fits_u64(const BigCount &x) {
    return x >= 0 && x <= BigCount(std::numeric_limits<std::uint64_t>::max());
}

} // namespace agsync
