#include "agsync/counting.hpp"
#include "agsync/enumeration.hpp"
#include "agsync/errors.hpp"
#include "agsync/structure.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace agsync;

TEST_CASE("bigcount helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigCount("2432902008176640000"));
    CHECK(factorial(25) == BigCount("15511210043330985984000000"));
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(pow(BigCount(3), 0) == 1);
    CHECK(fits_u64(factorial(20)));
    CHECK_FALSE(fits_u64(factorial(21)));
    CHECK(to_decimal(factorial(21)) == "51090942171709440000");
}

TEST_CASE("almost-permutation and G counts") {
    const unsigned expected[] = {2, 12, 72, 480, 3600, 30240};
    for (unsigned n = 2; n <= 7; ++n)
        CHECK(count_almost_permutations(n) == expected[n - 2]);
    CHECK(count_G(2, 2) == 4);
    CHECK(count_G(3, 2) == 72);
    CHECK(count_G(4, 2) == 1728);
    CHECK(count_G(6, 2) == 2592000);
    CHECK(count_G(3, 1) == 12);
    CHECK_THROWS_AS(count_G(3, 0), DomainTooSmall);
}

TEST_CASE("over-counts of the non-strongly-connected automata") {
    CHECK(Z(4, 2) == 240);
    CHECK(Z(2, 2) == 2);
    CHECK(nonsc_almost_group_bound(3, 2) == 48);
    CHECK(nonsc_almost_group_bound(1, 2) == 0);
}

TEST_CASE("strongly connected group automata") {
    SUBCASE("hand values") {
        CHECK(sc_group_count(1, 2) == 1);
        CHECK(sc_group_count(2, 2) == 3);
        CHECK(sc_group_count(3, 2) == 26);
        CHECK(sc_group_count(4, 2) == 426);
        CHECK(sc_group_count(2, 1) == 1);
        CHECK(sc_group_count(3, 1) == 2);
        CHECK(sc_group_count(0, 2) == 0);
    }
    SUBCASE("recurrence agrees with enumeration") {
        for (unsigned k = 1; k <= 3; ++k)
            for (unsigned m = 1; m <= (k == 3 ? 4u : 5u); ++m) {
                const auto sc = enumerate_sc_group_automata(m, k);
                CHECK(sc_group_count(m, k) == sc.size());
            }
    }
    SUBCASE("a single letter is transitive only as an m-cycle") {
        for (unsigned m = 1; m <= 9; ++m)
            CHECK(sc_group_count(m, 1) == factorial(m - 1));
    }
}

TEST_CASE("signatures") {
    auto has = [](const std::vector<SignatureTriple> &v, SignatureTriple t) {
        return std::find(v.begin(), v.end(), t) != v.end();
    };
    const auto s4 = signatures(4);
    CHECK(s4.size() == 2);
    CHECK(has(s4, {1, 1, 2}));
    CHECK(has(s4, {1, 2, 0}));
    CHECK(has(signatures(5), {1, 1, 3}));
    CHECK(signatures(2).empty());
    for (unsigned n = 3; n <= 20; ++n)
        for (const auto &t : signatures(n)) {
            CHECK(t.b * (t.ell + 1) + t.s * t.ell == n);
            CHECK(t.b >= 1);
            CHECK(t.b + t.s >= 2);
        }
}

TEST_CASE("N terms and bounds") {
    CHECK(N_term(5, 2, {1, 1, 3}) == 2160);
    CHECK(N_term(4, 2, {1, 2, 0}) == 192);
    CHECK(N_term(4, 2, {1, 1, 2}) == 96);
    CHECK_THROWS_AS(N_term(5, 2, {1, 1, 2}), Error);
    CHECK(lower_bound(3, 2) == 6);
    CHECK(lower_bound(4, 2) == 72);
    CHECK(lower_bound(6, 2) == 51120);
    CHECK(lower_bound(4, 3) == 3 * 24 * sc_group_count(2, 3));
    CHECK(upper_bound_sum(4, 2) == 288);
    CHECK(upper_bound_leading_term(5, 2) == 5 * 120 * 6);
    CHECK(non_sync_asymptote(20, 2) == doctest::Approx(0.0025));
    CHECK(non_sync_asymptote(4, 3) == doctest::Approx(3.0 / 256.0));
    // both bounds approach the leading term as n grows
    double previous_gap = 1.0;
    for (unsigned n = 20; n <= 60; n += 20) {
        const auto lead = static_cast<double>(upper_bound_leading_term(n, 2));
        const auto low = static_cast<double>(lower_bound(n, 2)) / lead;
        const auto high = static_cast<double>(upper_bound_sum(n, 2)) / lead;
        CHECK(low <= high);
        const double gap = std::max(std::abs(1 - low), std::abs(1 - high));
        CHECK(gap < previous_gap);
        previous_gap = gap;
    }
    CHECK(previous_gap < 0.06);
}
