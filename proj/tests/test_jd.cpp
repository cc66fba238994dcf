#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "jdlat/coordinates.hpp"
#include "jdlat/jd.hpp"

using namespace jdlat;

TEST_CASE("semimodularity on classic lattices") {
    CHECK(is_semimodular(corpus::boolean(3)));
    CHECK(is_semimodular(corpus::m3()));
    CHECK_FALSE(is_semimodular(corpus::n5()));
}

TEST_CASE("meet-semidistributivity") {
    CHECK_FALSE(is_meet_semidistributive(corpus::m3()));
    CHECK(is_meet_semidistributive(corpus::chain(4)));
    CHECK(is_meet_semidistributive(corpus::boolean(3)));
}

TEST_CASE("diamond detection") {
    CHECK(has_diamond(corpus::m3()));
    CHECK(has_cover_preserving_diamond(corpus::m3()));
    CHECK_FALSE(has_diamond(corpus::boolean(3)));
    CHECK_FALSE(has_cover_preserving_diamond(corpus::boolean(3)));
    CHECK(has_diamond(corpus::m3_extended_top()));
}

TEST_CASE("upstar interval checks") {
    CHECK_FALSE(upstar_interval_is_distributive(corpus::m3()));
    CHECK(upstar_interval_is_distributive(corpus::boolean(3)));
    CHECK(upstar_interval_is_boolean(corpus::boolean(3)));
    CHECK(upstar_interval_is_distributive(corpus::chain(3)));
    CHECK(upstar_interval_is_boolean(corpus::chain(3)));
}

TEST_CASE("chain lengths versus |Mir|") {
    CHECK(maximal_chain_lengths_equal_mir(corpus::boolean(3)));
    CHECK_FALSE(maximal_chain_lengths_equal_mir(corpus::m3()));
    CHECK_FALSE(maximal_chain_lengths_equal_mir(corpus::n5()));
}

TEST_CASE("unique meet decompositions") {
    CHECK(has_unique_meet_decompositions(corpus::boolean(3)));
    CHECK_FALSE(has_unique_meet_decompositions(corpus::m3()));
    CHECK(has_unique_meet_decompositions(corpus::chain(4)));
}

TEST_CASE("is_join_distributive aggregates consistently") {
    auto pos = is_join_distributive(corpus::boolean(3));
    CHECK(pos.join_distributive());
    for (auto [tag, ok] : pos.verdicts) CHECK(ok);
    CHECK_FALSE(pos.witness.has_value());

    auto neg = is_join_distributive(corpus::m3());
    CHECK_FALSE(neg.join_distributive());
    for (auto [tag, ok] : neg.verdicts) CHECK_FALSE(ok);
    CHECK(neg.witness.has_value());
}

TEST_CASE("every coordinatized lattice is join-distributive") {
    for (const auto& v : enumerate_perm_vectors(3, 2)) {
        auto r = is_join_distributive(eta(v).cl.lattice);
        CHECK(r.join_distributive());
        for (auto [tag, ok] : r.verdicts) CHECK(ok);
    }
}

TEST_CASE("|Mir| equals length on join-distributive corpus lattices") {
    std::vector<FiniteLattice> jd = {corpus::chain(4), corpus::boolean(2), corpus::boolean(3)};
    for (const auto& v : enumerate_perm_vectors(3, 2)) jd.push_back(eta(v).cl.lattice);
    for (const auto& L : jd)
        CHECK(static_cast<int>(L.meet_irreducibles().size()) == L.length());
}

TEST_CASE("embedding of a chain is its height vector") {
    auto C = corpus::chain(3);
    auto feet = embed_into_power_chain(C, C.maximal_chains());
    for (int u = 0; u <= 3; ++u) CHECK(feet.at(u) == std::vector<int>{C.height(u)});
}

TEST_CASE("embedding of B_3 via the three unprimed chains") {
    auto B = corpus::boolean(3);
    std::vector<Chain> chains = {corpus::b3_c1(), corpus::b3_c2(), corpus::b3_c3()};
    auto feet = embed_into_power_chain(B, chains);
    std::set<std::vector<int>> image;
    for (const auto& [u, f] : feet) image.insert(f);
    CHECK(image.size() == 8); // injective
    CHECK(validate_power_chain_embedding(B, feet));
    CHECK(feet.at(0) == std::vector<int>{0, 0, 0});
    CHECK(feet.at(7) == std::vector<int>{3, 3, 3});
}

TEST_CASE("embedding image of the 5-element transposition lattice") {
    auto res = eta(corpus::transposition_n3());
    auto feet = embed_into_power_chain(res.cl.lattice, res.cl.chains);
    std::set<std::vector<int>> image;
    for (const auto& [u, f] : feet) image.insert(f);
    std::set<std::vector<int>> expect = {{0, 0}, {0, 1}, {1, 0}, {2, 2}, {3, 3}};
    CHECK(image == expect);
    CHECK(validate_power_chain_embedding(res.cl.lattice, feet));
}

TEST_CASE("embedding refuses non-jd lattices and uncovered Jir") {
    auto M = corpus::m3();
    CHECK_THROWS_AS(embed_into_power_chain(M, M.maximal_chains()), NotJoinDistributive);
    auto B = corpus::boolean(3);
    // Two chains miss the atom c=4 entirely.
    CHECK_THROWS_AS(embed_into_power_chain(B, {corpus::b3_c1(), corpus::b3_c2()}),
                    ChainsDontCoverJir);
}

TEST_CASE("embedding properties hold on all small coordinatized lattices") {
    for (const auto& v : enumerate_perm_vectors(3, 2)) {
        auto res = eta(v);
        auto feet = embed_into_power_chain(res.cl.lattice, res.cl.chains);
        CHECK(validate_power_chain_embedding(res.cl.lattice, feet));
        // Meets are componentwise minima.
        const auto& L = res.cl.lattice;
        for (int a = 0; a < L.size(); ++a)
            for (int b = 0; b < L.size(); ++b) {
                auto lo = feet.at(L.meet(a, b));
                for (size_t i = 0; i < lo.size(); ++i)
                    CHECK(lo[i] == std::min(feet.at(a)[i], feet.at(b)[i]));
            }
    }
}
