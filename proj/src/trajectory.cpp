#include "jdlat/trajectory.hpp"

#include <algorithm>
#include <numeric>

namespace jdlat {

std::vector<CoveringSquare> covering_squares(const FiniteLattice& L) {
    std::vector<CoveringSquare> out;
    for (int a = 0; a < L.size(); ++a)
        for (int b = a + 1; b < L.size(); ++b) {
            if (!L.incomparable(a, b)) continue;
            int m = L.meet(a, b);
            int t = L.join(a, b);
            if (L.covers(m, a) && L.covers(m, b) && L.covers(a, t) && L.covers(b, t))
                out.push_back(CoveringSquare{m, a, b, t});
        }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

} // namespace

TrajectoryPartition::TrajectoryPartition(const FiniteLattice& L) {
    const auto& covers = L.cover_pairs(); // sorted, so interval indices are canonical
    std::map<PrimeInterval, int> pos;
    for (size_t i = 0; i < covers.size(); ++i)
        pos[PrimeInterval{covers[i].first, covers[i].second}] = static_cast<int>(i);

    UnionFind uf(covers.size());
    for (const auto& sq : covering_squares(L)) {
        uf.unite(pos[{sq.bottom, sq.a}], pos[{sq.b, sq.top}]);
        uf.unite(pos[{sq.bottom, sq.b}], pos[{sq.a, sq.top}]);
    }

    // Deterministic class ids: order of the smallest member interval.
    std::map<int, int> root_to_class;
    for (size_t i = 0; i < covers.size(); ++i) {
        int r = uf.find(static_cast<int>(i));
        auto it = root_to_class.find(r);
        int cls;
        if (it == root_to_class.end()) {
            cls = static_cast<int>(classes_.size());
            root_to_class[r] = cls;
            classes_.emplace_back();
        } else {
            cls = it->second;
        }
        PrimeInterval p{covers[i].first, covers[i].second};
        classes_[static_cast<size_t>(cls)].push_back(p);
        index_[p] = cls;
    }
}

int TrajectoryPartition::class_of(const PrimeInterval& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw LatticeError("not a prime interval of this lattice");
    return it->second;
}

Permutation jh_permutation(const TrajectoryPartition& traj, const Chain& C, const Chain& D) {
    const int n = C.length();
    if (n != D.length()) throw NotWellDefined("chains have different lengths");
    std::vector<int> img;
    img.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int cls = traj.class_of({C.elems[static_cast<size_t>(i) - 1], C.elems[static_cast<size_t>(i)]});
        int hit = -1;
        for (int j = 1; j <= n; ++j) {
            if (traj.class_of({D.elems[static_cast<size_t>(j) - 1], D.elems[static_cast<size_t>(j)]}) == cls) {
                if (hit != -1)
                    throw NotWellDefined("trajectory meets chain D more than once (interval " +
                                         std::to_string(i) + " of C)");
                hit = j;
            }
        }
        if (hit == -1)
            throw NotWellDefined("trajectory of interval " + std::to_string(i) +
                                 " of C misses chain D");
        img.push_back(hit);
    }
    try {
        return Permutation(img);
    } catch (const NotABijection&) {
        throw NotWellDefined("trajectory matching does not define a permutation");
    }
}

Permutation jh_permutation(const FiniteLattice& L, const Chain& C, const Chain& D) {
    if (!L.is_maximal_chain(C.elems) || !L.is_maximal_chain(D.elems))
        throw InvalidChain("jh_permutation requires maximal chains");
    return jh_permutation(TrajectoryPartition(L), C, D);
}

Permutation jh_permutation_minjoin(const FiniteLattice& L, const Chain& C, const Chain& D) {
    if (!L.is_maximal_chain(C.elems) || !L.is_maximal_chain(D.elems))
        throw InvalidChain("jh_permutation_minjoin requires maximal chains");
    const int n = C.length();
    if (n != D.length()) throw NotABijection("chains have different lengths");
    std::vector<int> img;
    img.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int found = -1;
        for (int j = 1; j <= n; ++j) {
            int lo = L.join(C.elems[static_cast<size_t>(i) - 1], D.elems[static_cast<size_t>(j)]);
            int hi = L.join(C.elems[static_cast<size_t>(i)], D.elems[static_cast<size_t>(j)]);
            if (lo == hi) {
                found = j;
                break;
            }
        }
        if (found == -1) throw NotABijection("min-join formula found no index");
        img.push_back(found);
    }
    return Permutation(img); // throws NotABijection on duplicates
}

} // namespace jdlat
