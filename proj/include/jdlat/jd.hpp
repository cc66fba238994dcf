#ifndef JDLAT_JD_HPP
#define JDLAT_JD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jdlat/lattice.hpp"

namespace jdlat {

/// Outcome of running all characterizations of join-distributivity.
/// Tags: a = semimodular and meet-semidistributive, b = unique
/// meet-irreducible decompositions, c/d = [x, x*] distributive/boolean,
/// e = maximal chain lengths equal |Mir|, f = semimodular and diamond-free,
/// g = semimodular without cover-preserving diamond.
struct JdReport {
    std::map<char, bool> verdicts;
    std::optional<std::string> witness;
    // Feet embedding witnessing the power-of-a-chain representation; filled
    // only by the ChainedLattice-aware path.
    std::optional<std::map<int, std::vector<int>>> embedding;

    bool join_distributive() const { return verdicts.at('a'); }
};

bool is_semimodular(const FiniteLattice& L);
bool is_meet_semidistributive(const FiniteLattice& L);
bool has_diamond(const FiniteLattice& L);
bool has_cover_preserving_diamond(const FiniteLattice& L);
bool upstar_interval_is_distributive(const FiniteLattice& L);
bool upstar_interval_is_boolean(const FiniteLattice& L);
bool maximal_chain_lengths_equal_mir(const FiniteLattice& L);
bool has_unique_meet_decompositions(const FiniteLattice& L);

/// Runs all seven checks and asserts they agree; throws EquivalenceViolated
/// on disagreement (an implementation bug, never a property of the input).
JdReport is_join_distributive(const FiniteLattice& L);

/// Feet coordinates of every element with respect to the given maximal
/// chains: element -> vector in {0..n}^k. Requires L join-distributive and
/// Jir(L) covered by the chains. The returned map is injective, an order
/// embedding into the componentwise order, meet-preserving (componentwise
/// min), and join- and cover-preserving within its image.
std::map<int, std::vector<int>> embed_into_power_chain(const FiniteLattice& L,
                                                       const std::vector<Chain>& chains);

/// Re-checks the properties listed above for an embedding; used by tests and
/// the acceptance suite.
bool validate_power_chain_embedding(const FiniteLattice& L,
                                    const std::map<int, std::vector<int>>& feet);

} // namespace jdlat

#endif
