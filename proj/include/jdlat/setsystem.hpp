#ifndef JDLAT_SETSYSTEM_HPP
#define JDLAT_SETSYSTEM_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jdlat/coordinates.hpp"
#include "jdlat/lattice.hpp"

namespace jdlat {

using PointSet = std::set<std::string>;

/// Finite ground set with a family of subsets; point labels are opaque.
struct SetSystem {
    PointSet ground;
    std::set<PointSet> family;

    SetSystem(PointSet ground_, std::set<PointSet> family_);
};

struct AxiomVerdict {
    bool ok;
    std::string axiom;   // empty when ok
    std::string witness; // empty when ok
};

/// Definition of antimatroids used here: the family is accessible (every
/// nonempty member sheds some point feasibly), union-closed, and has no
/// dummy points (the union of the family is the whole ground set).
AxiomVerdict check_antimatroid(const SetSystem& s);

/// Closed sets of a convex geometry: intersection-closed with E a member,
/// the empty set closed, and the closure operator anti-exchange. Also
/// verifies the derived one-point extension property of closed sets.
AxiomVerdict check_convex_geometry(const SetSystem& s);

struct Antimatroid {
    SetSystem base;
    explicit Antimatroid(SetSystem s); // throws LatticeError when axioms fail
};

struct ConvexGeometry {
    SetSystem base;
    explicit ConvexGeometry(SetSystem s);

    PointSet closure(const PointSet& x) const;
};

ConvexGeometry dualize(const Antimatroid& a);
Antimatroid dualize(const ConvexGeometry& g);

/// Feasible sets ordered by inclusion. Also returns, per lattice element,
/// the feasible set it represents (in canonical set order).
struct SetLattice {
    FiniteLattice lattice;
    std::vector<PointSet> sets; // element id -> member set
};

SetLattice halojd(const Antimatroid& a);
SetLattice halomd(const ConvexGeometry& g);

/// ground = Mir(L), feasible sets = { Mir(L) minus the filter of x }.
/// Points are labeled by element id. Throws NotJoinDistributive.
Antimatroid amat(const FiniteLattice& L);

/// ground = Jir(L), closed sets = { Jir(L) intersected with the ideal of x }.
/// Requires L meet-distributive (dual join-distributive).
ConvexGeometry geom(const FiniteLattice& L);

/// The coordinatized antimatroid A(pi): ground = B(pi) labeled by the vector
/// rendering, family = { U(x) : x eligible } with U(x) the suborbital
/// vectors not above x.
Antimatroid antimatroid_from_perms(const PermVector& v);

std::string tuple_label(const Tuple& t);

/// Width of the join-irreducibles of the feasible-set lattice.
int convex_dimension(const Antimatroid& a);

/// Exact set-system isomorphism: ground bijection search with point-degree
/// pruning.
bool set_systems_isomorphic(const SetSystem& a, const SetSystem& b);

} // namespace jdlat

#endif
