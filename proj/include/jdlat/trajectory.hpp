#ifndef JDLAT_TRAJECTORY_HPP
#define JDLAT_TRAJECTORY_HPP

#include <map>
#include <vector>

#include "jdlat/lattice.hpp"
#include "jdlat/permutation.hpp"

namespace jdlat {

/// A 2-element interval [lo, hi] with lo covered by hi.
struct PrimeInterval {
    int lo;
    int hi;

    bool operator==(const PrimeInterval& o) const { return lo == o.lo && hi == o.hi; }
    bool operator<(const PrimeInterval& o) const {
        return lo != o.lo ? lo < o.lo : hi < o.hi;
    }
};

struct CoveringSquare {
    int bottom;
    int a; // a < b by id
    int b;
    int top;
};

/// Partition of the prime intervals into trajectories: the finest partition
/// in which opposite sides of every covering square share a class. Class ids
/// are assigned by smallest member interval.
class TrajectoryPartition {
  public:
    explicit TrajectoryPartition(const FiniteLattice& L);

    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<PrimeInterval>>& classes() const { return classes_; }
    int class_of(const PrimeInterval& p) const;

  private:
    std::vector<std::vector<PrimeInterval>> classes_;
    std::map<PrimeInterval, int> index_;
};

std::vector<CoveringSquare> covering_squares(const FiniteLattice& L);

inline TrajectoryPartition trajectories(const FiniteLattice& L) {
    return TrajectoryPartition(L);
}

/// Jordan-Hoelder permutation between two maximal chains, via trajectories:
/// pi(i) = j iff the i-th prime interval of C and the j-th of D share a
/// trajectory. Requires the host lattice to be semimodular without a
/// cover-preserving diamond; throws NotWellDefined when some trajectory fails
/// to meet a chain exactly once.
Permutation jh_permutation(const FiniteLattice& L, const Chain& C, const Chain& D);
Permutation jh_permutation(const TrajectoryPartition& traj, const Chain& C, const Chain& D);

/// Independent route: pi(i) = min{ j : c_{i-1} v d_j = c_i v d_j }.
Permutation jh_permutation_minjoin(const FiniteLattice& L, const Chain& C, const Chain& D);

} // namespace jdlat

#endif
