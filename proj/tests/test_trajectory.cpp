#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "corpus.hpp"
#include "jdlat/coordinates.hpp"
#include "jdlat/jd.hpp"
#include "jdlat/trajectory.hpp"

using namespace jdlat;

namespace {

// Small join-distributive lattices used for the property checks.
std::vector<FiniteLattice> jd_corpus() {
    std::vector<FiniteLattice> out = {corpus::chain(3), corpus::boolean(2),
                                      corpus::boolean(3)};
    for (const auto& v : enumerate_perm_vectors(3, 2)) out.push_back(eta(v).cl.lattice);
    return out;
}

} // namespace

TEST_CASE("covering square counts") {
    CHECK(covering_squares(corpus::chain(4)).empty());
    CHECK(covering_squares(corpus::boolean(2)).size() == 1);
    CHECK(covering_squares(corpus::boolean(3)).size() == 6);
}

TEST_CASE("trajectory class shapes") {
    auto tc = trajectories(corpus::chain(4));
    CHECK(tc.class_count() == 4);
    for (const auto& cls : tc.classes()) CHECK(cls.size() == 1);

    auto t2 = trajectories(corpus::boolean(2));
    CHECK(t2.class_count() == 2);
    for (const auto& cls : t2.classes()) CHECK(cls.size() == 2);

    auto t3 = trajectories(corpus::boolean(3));
    CHECK(t3.class_count() == 3);
    for (const auto& cls : t3.classes()) CHECK(cls.size() == 4);
}

TEST_CASE("class_of rejects non-intervals") {
    auto t = trajectories(corpus::boolean(2));
    CHECK_THROWS_AS(t.class_of(PrimeInterval{0, 3}), LatticeError);
}

TEST_CASE("jh permutation of a chain with itself is the identity") {
    auto B = corpus::boolean(3);
    for (const auto& C : B.maximal_chains())
        CHECK(jh_permutation(B, C, C).is_identity());
}

TEST_CASE("jh permutations of the unprimed chain system on B_3") {
    auto B = corpus::boolean(3);
    CHECK(jh_permutation(B, corpus::b3_c1(), corpus::b3_c2()).one_line() ==
          std::vector<int>{2, 1, 3});
    CHECK(jh_permutation(B, corpus::b3_c1(), corpus::b3_c3()).one_line() ==
          std::vector<int>{3, 2, 1});
}

TEST_CASE("jh permutations of the primed chain system on B_3") {
    auto B = corpus::boolean(3);
    CHECK(jh_permutation(B, corpus::b3_c1(), corpus::b3_c2p()).one_line() ==
          std::vector<int>{3, 1, 2});
    CHECK(jh_permutation(B, corpus::b3_c1(), corpus::b3_c3p()).one_line() ==
          std::vector<int>{2, 3, 1});
}

TEST_CASE("min-join route agrees on the printed examples") {
    auto B = corpus::boolean(3);
    CHECK(jh_permutation_minjoin(B, corpus::b3_c1(), corpus::b3_c2()).one_line() ==
          std::vector<int>{2, 1, 3});
    CHECK(jh_permutation_minjoin(B, corpus::b3_c2p(), corpus::b3_c3p()).one_line() ==
          std::vector<int>{3, 1, 2});
}

TEST_CASE("permutation algebra") {
    Permutation p({2, 1, 3});
    Permutation q({3, 2, 1});
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(Permutation::identity(3), q) == q);
    CHECK(compose(p, q).one_line() == std::vector<int>{3, 1, 2});
    CHECK_THROWS_AS(Permutation({1, 1, 3}), NotABijection);
    CHECK_THROWS_AS(compose(p, Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("jh permutation refuses M_3") {
    auto M = corpus::m3();
    auto chains = M.maximal_chains();
    CHECK_THROWS_AS(jh_permutation(M, chains[0], chains[1]), NotWellDefined);
}

TEST_CASE("every trajectory meets every maximal chain exactly once") {
    for (const auto& L : jd_corpus()) {
        auto traj = trajectories(L);
        for (const auto& C : L.maximal_chains())
            for (const auto& cls : traj.classes()) {
                int hits = 0;
                for (size_t i = 0; i + 1 < C.elems.size(); ++i)
                    for (const auto& p : cls)
                        if (p.lo == C.elems[i] && p.hi == C.elems[i + 1]) ++hits;
                CHECK(hits == 1);
            }
    }
}

TEST_CASE("trajectory and min-join permutations coincide on all chain pairs") {
    for (const auto& L : jd_corpus()) {
        auto chains = L.maximal_chains();
        auto traj = trajectories(L);
        for (const auto& C : chains)
            for (const auto& D : chains)
                CHECK(jh_permutation(traj, C, D) == jh_permutation_minjoin(L, C, D));
    }
}

TEST_CASE("groupoid laws across all chain triples") {
    for (const auto& L : jd_corpus()) {
        auto chains = L.maximal_chains();
        auto traj = trajectories(L);
        std::map<std::pair<size_t, size_t>, Permutation> pi;
        for (size_t i = 0; i < chains.size(); ++i)
            for (size_t j = 0; j < chains.size(); ++j)
                pi.emplace(std::make_pair(i, j), jh_permutation(traj, chains[i], chains[j]));
        for (size_t i = 0; i < chains.size(); ++i) {
            CHECK(pi.at({i, i}).is_identity());
            for (size_t j = 0; j < chains.size(); ++j) {
                CHECK(pi.at({j, i}) == pi.at({i, j}).inverse());
                for (size_t l = 0; l < chains.size(); ++l)
                    CHECK(compose(pi.at({j, l}), pi.at({i, j})) == pi.at({i, l}));
            }
        }
    }
}

TEST_CASE("jh permutation is the identity exactly for equal chains") {
    for (const auto& L : jd_corpus()) {
        auto chains = L.maximal_chains();
        auto traj = trajectories(L);
        for (const auto& C : chains)
            for (const auto& D : chains)
                CHECK(jh_permutation(traj, C, D).is_identity() == (C == D));
    }
}

TEST_CASE("the map D -> pi_{C,D} is injective") {
    for (const auto& L : jd_corpus()) {
        auto chains = L.maximal_chains();
        auto traj = trajectories(L);
        for (const auto& C : chains) {
            std::set<std::vector<int>> seen;
            for (const auto& D : chains)
                seen.insert(jh_permutation(traj, C, D).one_line());
            CHECK(seen.size() == chains.size());
        }
    }
}

TEST_CASE("min-join threshold characterizes the permutation") {
    // c_{i-1} v d_j = c_i v d_j holds exactly when pi(i) <= j.
    for (const auto& L : jd_corpus()) {
        auto chains = L.maximal_chains();
        for (const auto& C : chains)
            for (const auto& D : chains) {
                auto pi = jh_permutation_minjoin(L, C, D);
                int n = C.length();
                for (int i = 1; i <= n; ++i)
                    for (int j = 0; j <= n; ++j) {
                        bool equal_joins =
                            L.join(C.elems[static_cast<size_t>(i - 1)],
                                   D.elems[static_cast<size_t>(j)]) ==
                            L.join(C.elems[static_cast<size_t>(i)],
                                   D.elems[static_cast<size_t>(j)]);
                        CHECK(equal_joins == (pi(i) <= j));
                    }
            }
    }
}

TEST_CASE("two-chain join-closures restrict trajectories bijectively") {
    for (const auto& L : jd_corpus()) {
        auto chains = L.maximal_chains();
        auto traj = trajectories(L);
        for (const auto& C : chains)
            for (const auto& D : chains) {
                std::vector<int> gen = C.elems;
                gen.insert(gen.end(), D.elems.begin(), D.elems.end());
                auto S = L.join_closure(gen);
                std::map<int, int> to_sub; // lattice id -> dense id in S
                for (size_t i = 0; i < S.size(); ++i) to_sub[S[i]] = static_cast<int>(i);
                // Induced covers: transitive reduction of the induced order.
                std::vector<std::pair<int, int>> covers;
                for (int a : S)
                    for (int b : S) {
                        if (!L.lt(a, b)) continue;
                        bool direct = true;
                        for (int c : S)
                            if (L.lt(a, c) && L.lt(c, b)) direct = false;
                        if (direct) covers.emplace_back(to_sub[a], to_sub[b]);
                    }
                auto sub = FiniteLattice::from_covers(static_cast<int>(S.size()), covers);
                auto sub_traj = trajectories(sub);
                // Each sub-trajectory lands inside exactly one host trajectory…
                std::set<int> hit;
                for (const auto& cls : sub_traj.classes()) {
                    std::set<int> hosts;
                    for (const auto& p : cls)
                        hosts.insert(traj.class_of(
                            PrimeInterval{S[static_cast<size_t>(p.lo)],
                                          S[static_cast<size_t>(p.hi)]}));
                    CHECK(hosts.size() == 1);
                    hit.insert(*hosts.begin());
                }
                // …distinct sub-trajectories hit distinct host trajectories, and
                // every host trajectory is hit (0 and 1 lie in S).
                CHECK(static_cast<int>(hit.size()) == sub_traj.class_count());
                CHECK(sub_traj.class_count() == traj.class_count());
            }
    }
}
