#include "jdlat/setsystem.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace jdlat {

namespace {

std::string render(const PointSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& p : s) {
        if (!first) out += ",";
        out += p;
        first = false;
    }
    return out + "}";
}

PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet r = a;
    r.insert(b.begin(), b.end());
    return r;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
    PointSet r;
    for (const auto& x : a)
        if (b.count(x)) r.insert(x);
    return r;
}

bool subset(const PointSet& a, const PointSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FiniteLattice inclusion_lattice(const std::vector<PointSet>& sets) {
    const int m = static_cast<int>(sets.size());
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b || !subset(sets[static_cast<size_t>(a)], sets[static_cast<size_t>(b)]))
                continue;
            bool direct = true;
            for (int c = 0; c < m && direct; ++c)
                if (c != a && c != b && subset(sets[static_cast<size_t>(a)], sets[static_cast<size_t>(c)]) &&
                    subset(sets[static_cast<size_t>(c)], sets[static_cast<size_t>(b)]))
                    direct = false;
            if (direct) covers.emplace_back(a, b);
        }
    return FiniteLattice::from_covers(m, covers);
}

} // namespace

SetSystem::SetSystem(PointSet ground_, std::set<PointSet> family_)
    : ground(std::move(ground_)), family(std::move(family_)) {
    if (family.empty()) throw LatticeError("set-system family must be nonempty");
    for (const auto& member : family)
        if (!subset(member, ground))
            throw LatticeError("family member " + render(member) +
                               " is not a subset of the ground set");
}

AxiomVerdict check_antimatroid(const SetSystem& s) {
    for (const auto& A : s.family) {
        if (A.empty()) continue;
        bool sheds = false;
        for (const auto& x : A) {
            PointSet B = A;
            B.erase(x);
            if (s.family.count(B)) {
                sheds = true;
                break;
            }
        }
        if (!sheds) return {false, "feasibility", render(A)};
    }
    for (const auto& A : s.family)
        for (const auto& B : s.family)
            if (!s.family.count(set_union(A, B)))
                return {false, "union-closure", render(A) + " u " + render(B)};
    PointSet all;
    for (const auto& A : s.family) all.insert(A.begin(), A.end());
    if (all != s.ground) {
        PointSet dummies;
        for (const auto& p : s.ground)
            if (!all.count(p)) dummies.insert(p);
        return {false, "no-dummy-points", render(dummies)};
    }
    return {true, "", ""};
}

AxiomVerdict check_convex_geometry(const SetSystem& s) {
    if (!s.family.count(s.ground)) return {false, "contains-E", render(s.ground)};
    for (const auto& A : s.family)
        for (const auto& B : s.family)
            if (!s.family.count(set_intersection(A, B)))
                return {false, "intersection-closure", render(A) + " n " + render(B)};
    if (!s.family.count(PointSet{})) return {false, "empty-set-closed", "{}"};

    auto closure = [&](const PointSet& X) {
        PointSet acc = s.ground;
        for (const auto& Y : s.family)
            if (subset(X, Y)) acc = set_intersection(acc, Y);
        return acc;
    };

    for (const auto& A : s.family)
        for (const auto& x : s.ground) {
            if (A.count(x)) continue;
            for (const auto& y : s.ground) {
                if (y == x || A.count(y)) continue;
                PointSet Ay = A;
                Ay.insert(y);
                PointSet Ax = A;
                Ax.insert(x);
                if (closure(Ay).count(x) && closure(Ax).count(y))
                    return {false, "anti-exchange",
                            "A=" + render(A) + ", x=" + x + ", y=" + y};
            }
        }

    // One-point extension of closed sets, a consequence of anti-exchange.
    for (const auto& B : s.family) {
        if (B == s.ground) continue;
        bool extends = false;
        for (const auto& x : s.ground) {
            if (B.count(x)) continue;
            PointSet Bx = B;
            Bx.insert(x);
            if (s.family.count(Bx)) {
                extends = true;
                break;
            }
        }
        if (!extends) return {false, "one-point-extension", render(B)};
    }
    return {true, "", ""};
}

Antimatroid::Antimatroid(SetSystem s) : base(std::move(s)) {
    auto v = check_antimatroid(base);
    if (!v.ok) throw LatticeError("antimatroid axiom " + v.axiom + " fails: " + v.witness);
}

ConvexGeometry::ConvexGeometry(SetSystem s) : base(std::move(s)) {
    auto v = check_convex_geometry(base);
    if (!v.ok) throw LatticeError("convex-geometry axiom " + v.axiom + " fails: " + v.witness);
}

PointSet ConvexGeometry::closure(const PointSet& x) const {
    PointSet acc = base.ground;
    for (const auto& Y : base.family)
        if (subset(x, Y)) acc = set_intersection(acc, Y);
    return acc;
}

ConvexGeometry dualize(const Antimatroid& a) {
    std::set<PointSet> complements;
    for (const auto& X : a.base.family) {
        PointSet c;
        for (const auto& p : a.base.ground)
            if (!X.count(p)) c.insert(p);
        complements.insert(std::move(c));
    }
    return ConvexGeometry(SetSystem(a.base.ground, std::move(complements)));
}

Antimatroid dualize(const ConvexGeometry& g) {
    std::set<PointSet> complements;
    for (const auto& X : g.base.family) {
        PointSet c;
        for (const auto& p : g.base.ground)
            if (!X.count(p)) c.insert(p);
        complements.insert(std::move(c));
    }
    return Antimatroid(SetSystem(g.base.ground, std::move(complements)));
}

SetLattice halojd(const Antimatroid& a) {
    SetLattice out;
    out.sets.assign(a.base.family.begin(), a.base.family.end());
    out.lattice = inclusion_lattice(out.sets);
    return out;
}

SetLattice halomd(const ConvexGeometry& g) {
    SetLattice out;
    out.sets.assign(g.base.family.begin(), g.base.family.end());
    out.lattice = inclusion_lattice(out.sets);
    return out;
}

Antimatroid amat(const FiniteLattice& L) {
    if (!is_join_distributive(L).join_distributive())
        throw NotJoinDistributive("amat requires a join-distributive lattice");
    auto mir = L.meet_irreducibles();
    PointSet ground;
    for (int m : mir) ground.insert(std::to_string(m));
    std::set<PointSet> family;
    for (int x = 0; x < L.size(); ++x) {
        PointSet feasible;
        for (int m : mir)
            if (!L.leq(x, m)) feasible.insert(std::to_string(m));
        family.insert(std::move(feasible));
    }
    return Antimatroid(SetSystem(std::move(ground), std::move(family)));
}

ConvexGeometry geom(const FiniteLattice& L) {
    if (!is_join_distributive(L.dual()).join_distributive())
        throw NotMeetDistributive("geom requires a meet-distributive lattice");
    auto jir = L.join_irreducibles();
    PointSet ground;
    for (int j : jir) ground.insert(std::to_string(j));
    std::set<PointSet> family;
    for (int x = 0; x < L.size(); ++x) {
        PointSet closed;
        for (int j : jir)
            if (L.leq(j, x)) closed.insert(std::to_string(j));
        family.insert(std::move(closed));
    }
    return ConvexGeometry(SetSystem(std::move(ground), std::move(family)));
}

std::string tuple_label(const Tuple& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

Antimatroid antimatroid_from_perms(const PermVector& v) {
    auto B = suborbital_vectors(v);
    PointSet ground;
    for (const auto& b : B) ground.insert(tuple_label(b));
    std::set<PointSet> family;
    for (const auto& x : eligible_tuples(v)) {
        PointSet U;
        for (const auto& y : B) {
            bool leq = true;
            for (size_t i = 0; i < x.size(); ++i)
                if (x[i] > y[i]) leq = false;
            if (!leq) U.insert(tuple_label(y));
        }
        family.insert(std::move(U));
    }
    return Antimatroid(SetSystem(std::move(ground), std::move(family)));
}

int convex_dimension(const Antimatroid& a) {
    auto sl = halojd(a);
    return poset_width(sl.lattice, sl.lattice.join_irreducibles());
}

bool set_systems_isomorphic(const SetSystem& a, const SetSystem& b) {
    if (a.ground.size() != b.ground.size() || a.family.size() != b.family.size()) return false;

    std::vector<std::string> ga(a.ground.begin(), a.ground.end());
    std::vector<std::string> gb(b.ground.begin(), b.ground.end());
    auto degree = [](const SetSystem& s, const std::string& p) {
        int d = 0;
        for (const auto& X : s.family)
            if (X.count(p)) ++d;
        return d;
    };
    std::vector<int> da, db;
    for (const auto& p : ga) da.push_back(degree(a, p));
    for (const auto& p : gb) db.push_back(degree(b, p));
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<size_t> sizes_a, sizes_b;
    for (const auto& X : a.family) sizes_a.push_back(X.size());
    for (const auto& X : b.family) sizes_b.push_back(X.size());
    std::sort(sizes_a.begin(), sizes_a.end());
    std::sort(sizes_b.begin(), sizes_b.end());
    if (sizes_a != sizes_b) return false;

    const int n = static_cast<int>(ga.size());
    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::function<bool(int)> search = [&](int i) -> bool {
        if (i == n) {
            std::map<std::string, std::string> f;
            for (int t = 0; t < n; ++t)
                f[ga[static_cast<size_t>(t)]] = gb[static_cast<size_t>(map[static_cast<size_t>(t)])];
            for (const auto& X : a.family) {
                PointSet Y;
                for (const auto& p : X) Y.insert(f.at(p));
                if (!b.family.count(Y)) return false;
            }
            return true;
        }
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<size_t>(j)] ||
                da[static_cast<size_t>(i)] != db[static_cast<size_t>(j)])
                continue;
            map[static_cast<size_t>(i)] = j;
            used[static_cast<size_t>(j)] = 1;
            if (search(i + 1)) return true;
            used[static_cast<size_t>(j)] = 0;
        }
        return false;
    };
    return n == 0 ? a.family == b.family : search(0);
}

} // namespace jdlat
