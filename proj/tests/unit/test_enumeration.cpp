#include "agsync/counting.hpp"
#include "agsync/enumeration.hpp"
#include "agsync/errors.hpp"
#include "agsync/factorization.hpp"
#include "agsync/fixtures.hpp"
#include "agsync/structure.hpp"
#include "agsync/synchronization.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace agsync;

TEST_CASE("almost-permutation enumeration") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto all = enumerate_almost_permutations(n);
        CHECK(all.size() == count_almost_permutations(static_cast<unsigned>(n)));
        std::set<std::vector<State>> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto &m : all)
            CHECK(oracle::is_almost_permutation(m));
    }
    // the oracle agrees about which maps of 4 points qualify
    std::size_t filtered = 0;
    for (const auto &m : oracle::all_maps(4))
        filtered += oracle::is_almost_permutation(m);
    CHECK(filtered == 72);
    CHECK(enumerate_almost_permutations(2) ==
          std::vector<std::vector<State>>{{1, 1}, {0, 0}});
    CHECK_THROWS_AS(unrank_almost_permutation(1, 0), DomainTooSmall);
}

TEST_CASE("unrank_permutation is lexicographic") {
    std::vector<State> p{0, 1, 2, 3, 4};
    for (std::uint64_t r = 0; r < 120; ++r) {
        CHECK(unrank_permutation(5, r) == p);
        std::next_permutation(p.begin(), p.end());
    }
}

TEST_CASE("G(n,k) enumeration") {
    CHECK(enumerate_G(2, 2).size() == 4);
    CHECK(enumerate_G(3, 2).size() == 72);
    CHECK(enumerate_G(4, 2).size() == 1728);
    CHECK(enumerate_G(3, 3).size() == 432);
    CHECK(enumerate_G(3, 1).size() == 12);
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto all = enumerate_G(n, 2);
        std::set<std::vector<State>> distinct;
        for (const auto &a : all) {
            distinct.insert(a.table());
            const auto c = classify(a);
            CHECK(c.verdict == Verdict::AlmostGroupAutomaton);
            CHECK(*c.dangling_letter == 0);
        }
        CHECK(distinct.size() == all.size());
    }
    CHECK_THROWS_AS(enumerate_G(7, 2, 1000), BudgetExceeded);
    CHECK_THROWS_AS(size_G(9, 2), BudgetExceeded);
    CHECK(enumerate_G(1, 2).empty());
    CHECK_THROWS_AS(AlmostGroupCursor(1, 2, 0), DomainTooSmall);
}

TEST_CASE("G(4,2) equals the set of all almost-group tables with letter 0 dangling") {
    // Independent construction: filter every pair of maps on 4 points.
    std::set<std::vector<State>> filtered;
    const auto maps = oracle::all_maps(4);
    for (const auto &x : maps) {
        if (!oracle::is_almost_permutation(x))
            continue;
        for (const auto &y : maps)
            if (oracle::is_permutation(y))
                filtered.insert(Automaton::from_letter_maps({x, y}).table());
    }
    std::set<std::vector<State>> enumerated;
    for (const auto &a : enumerate_G(4, 2))
        enumerated.insert(a.table());
    CHECK(filtered == enumerated);
}

TEST_CASE("cursor unranking matches sequential order") {
    const auto all = enumerate_G(4, 2);
    for (std::uint64_t i : {0ULL, 1ULL, 23ULL, 24ULL, 575ULL, 576ULL, 1000ULL, 1727ULL}) {
        AlmostGroupCursor c(4, 2, i);
        CHECK(c.automaton() == all[i]);
        CHECK(c.index() == i);
    }
    std::vector<Automaton> shard;
    for_each_G(4, 2, 100, 300, [&](const Automaton &a) { shard.push_back(a); });
    REQUIRE(shard.size() == 200);
    for (std::size_t i = 0; i < 200; ++i)
        CHECK(shard[i] == all[100 + i]);
    const auto g3 = enumerate_G(3, 3);
    AlmostGroupCursor c(3, 3, 217);
    CHECK(c.automaton() == g3[217]);
}

TEST_CASE("group automata enumeration") {
    std::size_t count = 0;
    for_each_group_automaton(3, 2, 0, size_group_automata(3, 2), [&](const Automaton &a) {
        ++count;
        CHECK(classify(a).verdict == Verdict::GroupAutomaton);
    });
    CHECK(count == 36);
    CHECK(enumerate_sc_group_automata(2, 2).size() == 3);
    CHECK(enumerate_sc_group_automata(1, 3).size() == 1);
}

TEST_CASE("F(n,k) generator") {
    CHECK(generate_F(3, 2).size() == 6);
    CHECK(generate_F(4, 2).size() == 72);
    CHECK(generate_F(5, 2).size() == lower_bound(5, 2));
    CHECK(generate_F(4, 3).size() == lower_bound(4, 3));
    CHECK_THROWS_AS(generate_F(2, 2), DomainTooSmall);
    CHECK_THROWS_AS(generate_F(3, 1), DomainTooSmall);
    CHECK_THROWS_AS(generate_F(8, 2, 1000), BudgetExceeded);

    for (std::size_t n = 3; n <= 5; ++n) {
        const auto fam = generate_F(n, 2);
        std::set<std::vector<State>> distinct;
        for (const auto &a : fam) {
            distinct.insert(a.table());
            CHECK(is_member_F(a));
            CHECK(is_strongly_connected(a));
            CHECK_FALSE(is_synchronizing(a));
            // {p0, p} is stable
            const auto c = classify(a);
            const State p0 = *c.dangling_state;
            for (State x = 0; x < n; ++x)
                if (x != p0 && a.next(x, 0) == a.next(p0, 0))
                    CHECK(oracle::stable(a, p0, x));
        }
        CHECK(distinct.size() == fam.size());
    }
}

TEST_CASE("membership predicate and generator define the same subset") {
    for (std::size_t n = 3; n <= 5; ++n) {
        std::set<std::vector<State>> generated, filtered;
        for (const auto &a : generate_F(n, 2))
            generated.insert(a.table());
        for_each_G(n, 2, 0, size_G(n, 2), [&](const Automaton &a) {
            if (is_member_F(a))
                filtered.insert(a.table());
        });
        CHECK(generated == filtered);
    }
    std::set<std::vector<State>> generated, filtered;
    for (const auto &a : generate_F(4, 3))
        generated.insert(a.table());
    for_each_G(4, 3, 0, size_G(4, 3), [&](const Automaton &a) {
        if (is_member_F(a))
            filtered.insert(a.table());
    });
    CHECK(generated == filtered);
}

TEST_CASE("membership predicate rejects non-members") {
    CHECK_FALSE(is_member_F(cerny(4)));
    CHECK_FALSE(is_member_F(Automaton::from_letter_maps({{1, 2, 3, 0}, {1, 0, 2, 3}})));
    CHECK_FALSE(is_member_F(fig1()));
    CHECK_FALSE(is_member_F(Automaton(1, 2, {0, 0})));
}
