#ifndef JDLAT_COORDINATES_HPP
#define JDLAT_COORDINATES_HPP

#include <cstdint>
#include <vector>

#include "jdlat/jd.hpp"
#include "jdlat/lattice.hpp"
#include "jdlat/permutation.hpp"
#include "jdlat/trajectory.hpp"

namespace jdlat {

using Tuple = std::vector<int>;

/// A (k-1)-tuple of permutations of {1..n}: the entries are the permutations
/// from the first chain to chains 2..k.
struct PermVector {
    int n;
    int k;
    std::vector<Permutation> perms; // size k-1

    PermVector(int n_, int k_, std::vector<Permutation> perms_);
    static PermVector identity(int n, int k);

    bool operator==(const PermVector& o) const {
        return n == o.n && k == o.k && perms == o.perms;
    }
};

/// The full k x k matrix pi_ij derived from a PermVector: pi_1j are the
/// given entries (pi_11 the identity) and pi_ij = pi_1j o pi_1i^-1.
/// Identities pi_ii = id, pi_ji = pi_ij^-1, pi_jl o pi_ij = pi_il hold by
/// construction.
class ExtendedVector {
  public:
    explicit ExtendedVector(const PermVector& v);

    int n() const { return n_; }
    int k() const { return k_; }
    const Permutation& at(int i, int j) const { // 1-based
        return mat_[static_cast<size_t>(i - 1) * k_ + (j - 1)];
    }

  private:
    int n_, k_;
    std::vector<Permutation> mat_;
};

/// A lattice with k distinguished maximal chains.
struct ChainedLattice {
    FiniteLattice lattice;
    std::vector<Chain> chains;

    int k() const { return static_cast<int>(chains.size()); }
    int n() const { return lattice.length(); }
};

/// Validates membership in CDF(n,k): semimodular, no cover-preserving
/// diamond, k >= 2 maximal chains. Throws on violation.
void validate_cdf(const ChainedLattice& cl);

/// Validates membership in Lat(n,k): join-distributive and Jir covered by
/// the chains, on top of the CDF conditions.
void validate_lat(const ChainedLattice& cl);

bool is_eligible(const ExtendedVector& ext, const Tuple& x);
bool is_eligible(const PermVector& v, const Tuple& x);

/// All eligible tuples, lexicographically sorted, by filtering {0..n}^k.
std::vector<Tuple> eligible_tuples(const PermVector& v);

/// Independent generator: every element is a meet of suborbital vectors and
/// the top, so close {top} + B(pi) under componentwise min.
std::vector<Tuple> eligible_tuples_meet_closure(const PermVector& v);

/// Result of eta: the chained lattice together with the tuple carried by
/// each element id (ids follow the lexicographic tuple order).
struct EtaResult {
    ChainedLattice cl;
    std::vector<Tuple> tuples;

    int id_of(const Tuple& t) const;
};

/// Builds L(pi) with its k distinguished chains from a permutation vector.
EtaResult eta(const PermVector& v);

/// B(pi): the n suborbital vectors (orbit vectors shifted down by one).
std::vector<Tuple> suborbital_vectors(const PermVector& v);

/// Componentwise maxima of chain indices below u.
Tuple feet(const ChainedLattice& cl, int u);

/// Decodes a CDF chained lattice into its permutation vector via
/// trajectory-based Jordan-Hoelder permutations from the first chain.
PermVector xi(const ChainedLattice& cl);

/// True when bumping any single coordinate strictly raises the join of the
/// chain elements (vacuous at coordinates already equal to n).
bool is_L_maximal(const ChainedLattice& cl, const Tuple& x);

/// xi(eta(v)) == v, exact componentwise equality.
bool roundtrip_perm(const PermVector& v);

/// u -> feet(u) is an order-isomorphism from cl.lattice onto
/// eta(xi(cl)).lattice mapping chain C_i onto C_i(pi).
bool roundtrip_lattice(const ChainedLattice& cl);

/// All n!^(k-1) permutation vectors in lexicographic order. Throws
/// SizeLimitExceeded when the count exceeds max_cases.
std::vector<PermVector> enumerate_perm_vectors(int n, int k,
                                               std::int64_t max_cases = 1000000);

/// Exact lattice isomorphism (degree/height profile filter, then exhaustive
/// bijection search).
bool lattices_isomorphic(const FiniteLattice& A, const FiniteLattice& B);

/// Groups the vectors of S_n^(k-1) (indices into enumerate_perm_vectors
/// order) whose eta-lattices are isomorphic as bare lattices.
std::vector<std::vector<int>> same_lattice_classes(int n, int k,
                                                   std::int64_t max_cases = 1000000);

/// One valid way to pick chains for a bare join-distributive lattice:
/// greedily cover Jir(L) by maximal chains, most new join-irreducibles
/// first. Pads with repeats of the last chain up to min_k chains.
std::vector<Chain> greedy_jir_chain_cover(const FiniteLattice& L, int min_k = 2);

} // namespace jdlat

#endif
