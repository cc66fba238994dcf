#include "jdlat/coordinates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace jdlat {

PermVector::PermVector(int n_, int k_, std::vector<Permutation> perms_)
    : n(n_), k(k_), perms(std::move(perms_)) {
    if (n < 1) throw LatticeError("PermVector requires n >= 1");
    if (k < 2) throw LatticeError("PermVector requires k >= 2");
    if (static_cast<int>(perms.size()) != k - 1)
        throw LatticeError("PermVector requires exactly k-1 permutations");
    for (const auto& p : perms)
        if (p.degree() != n) throw DegreeMismatch("PermVector entries must have degree n");
}

PermVector PermVector::identity(int n, int k) {
    std::vector<Permutation> ps(static_cast<size_t>(k - 1), Permutation::identity(n));
    return PermVector(n, k, std::move(ps));
}

ExtendedVector::ExtendedVector(const PermVector& v) : n_(v.n), k_(v.k) {
    std::vector<Permutation> row1;
    row1.push_back(Permutation::identity(n_));
    for (const auto& p : v.perms) row1.push_back(p);
    mat_.reserve(static_cast<size_t>(k_) * k_);
    for (int i = 0; i < k_; ++i) {
        Permutation inv = row1[static_cast<size_t>(i)].inverse();
        for (int j = 0; j < k_; ++j)
            mat_.push_back(compose(row1[static_cast<size_t>(j)], inv));
    }
}

bool is_eligible(const ExtendedVector& ext, const Tuple& x) {
    const int n = ext.n(), k = ext.k();
    for (int i = 1; i <= k; ++i) {
        if (x[static_cast<size_t>(i - 1)] >= n) continue;
        for (int j = 1; j <= k; ++j)
            if (ext.at(i, j)(x[static_cast<size_t>(i - 1)] + 1) < x[static_cast<size_t>(j - 1)] + 1)
                return false;
    }
    return true;
}

bool is_eligible(const PermVector& v, const Tuple& x) {
    return is_eligible(ExtendedVector(v), x);
}

std::vector<Tuple> eligible_tuples(const PermVector& v) {
    ExtendedVector ext(v);
    std::vector<Tuple> out;
    Tuple x(static_cast<size_t>(v.k), 0);
    while (true) {
        if (is_eligible(ext, x)) out.push_back(x);
        int pos = v.k - 1;
        while (pos >= 0 && x[static_cast<size_t>(pos)] == v.n) x[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++x[static_cast<size_t>(pos)];
    }
    return out; // odometer order is lexicographic
}

std::vector<Tuple> eligible_tuples_meet_closure(const PermVector& v) {
    std::set<Tuple> seen;
    std::vector<Tuple> work;
    auto add = [&](const Tuple& t) {
        if (seen.insert(t).second) work.push_back(t);
    };
    add(Tuple(static_cast<size_t>(v.k), v.n));
    for (const auto& b : suborbital_vectors(v)) add(b);
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            Tuple mn(work[i].size());
            for (size_t c = 0; c < mn.size(); ++c) mn[c] = std::min(work[i][c], work[j][c]);
            add(mn);
        }
    return {seen.begin(), seen.end()};
}

std::vector<Tuple> suborbital_vectors(const PermVector& v) {
    ExtendedVector ext(v);
    std::vector<Tuple> out;
    for (int b = 1; b <= v.n; ++b) {
        Tuple t;
        t.reserve(static_cast<size_t>(v.k));
        for (int j = 1; j <= v.k; ++j) t.push_back(ext.at(1, j)(b) - 1);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool tuple_leq(const Tuple& a, const Tuple& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

int EtaResult::id_of(const Tuple& t) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) return -1;
    return static_cast<int>(it - tuples.begin());
}

EtaResult eta(const PermVector& v) {
    EtaResult r;
    r.tuples = eligible_tuples(v);
    const int m = static_cast<int>(r.tuples.size());

    std::vector<char> less(static_cast<size_t>(m) * m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && tuple_leq(r.tuples[static_cast<size_t>(a)], r.tuples[static_cast<size_t>(b)]))
                less[static_cast<size_t>(a) * m + b] = 1;

    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (!less[static_cast<size_t>(a) * m + b]) continue;
            bool direct = true;
            for (int c = 0; c < m && direct; ++c)
                if (less[static_cast<size_t>(a) * m + c] && less[static_cast<size_t>(c) * m + b])
                    direct = false;
            if (direct) covers.emplace_back(a, b);
        }
    r.cl.lattice = FiniteLattice::from_covers(m, covers);

    // C_i(pi): for each value t, the componentwise meet of all eligible
    // tuples whose i-th component is t; these are exactly the tuples initial
    // in their i-th component.
    for (int i = 0; i < v.k; ++i) {
        Chain C;
        for (int t = 0; t <= v.n; ++t) {
            Tuple mn;
            for (const auto& x : r.tuples) {
                if (x[static_cast<size_t>(i)] != t) continue;
                if (mn.empty()) {
                    mn = x;
                } else {
                    for (size_t c = 0; c < mn.size(); ++c) mn[c] = std::min(mn[c], x[c]);
                }
            }
            if (mn.empty())
                throw LatticeError("no eligible tuple with component " + std::to_string(i) +
                                   " equal to " + std::to_string(t));
            int id = r.id_of(mn);
            if (id < 0) throw LatticeError("initial tuple not eligible; this is a bug");
            C.elems.push_back(id);
        }
        r.cl.chains.push_back(std::move(C));
    }
    return r;
}

void validate_cdf(const ChainedLattice& cl) {
    if (cl.k() < 2) throw LatticeError("a chained lattice needs at least 2 chains");
    for (const auto& C : cl.chains)
        if (!cl.lattice.is_maximal_chain(C.elems))
            throw InvalidChain("distinguished chain is not a maximal chain");
    if (!is_semimodular(cl.lattice)) throw LatticeError("lattice is not semimodular");
    if (has_cover_preserving_diamond(cl.lattice))
        throw LatticeError("lattice has a cover-preserving diamond");
}

void validate_lat(const ChainedLattice& cl) {
    validate_cdf(cl);
    if (!is_join_distributive(cl.lattice).join_distributive())
        throw NotJoinDistributive("lattice is not join-distributive");
    std::vector<char> covered(static_cast<size_t>(cl.lattice.size()), 0);
    for (const auto& C : cl.chains)
        for (int x : C.elems) covered[static_cast<size_t>(x)] = 1;
    for (int j : cl.lattice.join_irreducibles())
        if (!covered[static_cast<size_t>(j)])
            throw ChainsDontCoverJir("join-irreducible element " + std::to_string(j) +
                                     " lies on no distinguished chain");
}

Tuple feet(const ChainedLattice& cl, int u) {
    Tuple f;
    f.reserve(cl.chains.size());
    for (const auto& C : cl.chains) {
        int best = 0;
        for (size_t j = 0; j < C.elems.size(); ++j)
            if (cl.lattice.leq(C.elems[j], u)) best = static_cast<int>(j);
        f.push_back(best);
    }
    return f;
}

PermVector xi(const ChainedLattice& cl) {
    validate_cdf(cl);
    TrajectoryPartition traj(cl.lattice);
    std::vector<Permutation> perms;
    for (int i = 1; i < cl.k(); ++i)
        perms.push_back(jh_permutation(traj, cl.chains[0], cl.chains[static_cast<size_t>(i)]));
    return PermVector(cl.n(), cl.k(), std::move(perms));
}

bool is_L_maximal(const ChainedLattice& cl, const Tuple& x) {
    const int k = cl.k(), n = cl.n();
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        parts.push_back(cl.chains[static_cast<size_t>(i)].elems[static_cast<size_t>(x[static_cast<size_t>(i)])]);
    int base = cl.lattice.join_all(parts);
    for (int i = 0; i < k; ++i) {
        if (x[static_cast<size_t>(i)] >= n) continue;
        std::vector<int> bumped = parts;
        bumped[static_cast<size_t>(i)] =
            cl.chains[static_cast<size_t>(i)].elems[static_cast<size_t>(x[static_cast<size_t>(i)] + 1)];
        if (cl.lattice.join_all(bumped) == base) return false;
    }
    return true;
}

bool roundtrip_perm(const PermVector& v) { return xi(eta(v).cl) == v; }

bool roundtrip_lattice(const ChainedLattice& cl) {
    PermVector v = xi(cl);
    EtaResult e = eta(v);
    const FiniteLattice& L = cl.lattice;
    if (L.size() != e.cl.lattice.size()) return false;

    std::vector<int> image(static_cast<size_t>(L.size()));
    std::vector<char> hit(static_cast<size_t>(L.size()), 0);
    for (int u = 0; u < L.size(); ++u) {
        int id = e.id_of(feet(cl, u));
        if (id < 0 || hit[static_cast<size_t>(id)]) return false;
        hit[static_cast<size_t>(id)] = 1;
        image[static_cast<size_t>(u)] = id;
    }
    for (int u = 0; u < L.size(); ++u)
        for (int w = 0; w < L.size(); ++w)
            if (L.leq(u, w) !=
                e.cl.lattice.leq(image[static_cast<size_t>(u)], image[static_cast<size_t>(w)]))
                return false;
    for (int i = 0; i < cl.k(); ++i) {
        std::vector<int> mapped;
        for (int c : cl.chains[static_cast<size_t>(i)].elems)
            mapped.push_back(image[static_cast<size_t>(c)]);
        if (mapped != e.cl.chains[static_cast<size_t>(i)].elems) return false;
    }
    return true;
}

std::vector<PermVector> enumerate_perm_vectors(int n, int k, std::int64_t max_cases) {
    if (n < 1 || k < 2) throw LatticeError("enumerate_perm_vectors requires n >= 1, k >= 2");
    std::vector<Permutation> sn;
    {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
        do {
            sn.push_back(Permutation(img));
        } while (std::next_permutation(img.begin(), img.end()));
    }
    std::int64_t total = 1;
    for (int i = 0; i < k - 1; ++i) {
        total *= static_cast<std::int64_t>(sn.size());
        if (total > max_cases)
            throw SizeLimitExceeded("n!^(k-1) exceeds the configured bound of " +
                                    std::to_string(max_cases));
    }
    std::vector<PermVector> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<size_t> idx(static_cast<size_t>(k - 1), 0);
    while (true) {
        std::vector<Permutation> ps;
        ps.reserve(idx.size());
        for (size_t i : idx) ps.push_back(sn[i]);
        out.emplace_back(n, k, std::move(ps));
        int pos = k - 2;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] + 1 == sn.size())
            idx[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
    }
    return out;
}

namespace {

std::vector<std::tuple<int, int, int>> iso_profile(const FiniteLattice& L) {
    std::vector<std::tuple<int, int, int>> p;
    p.reserve(static_cast<size_t>(L.size()));
    for (int x = 0; x < L.size(); ++x)
        p.emplace_back(L.height(x), static_cast<int>(L.upper_covers(x).size()),
                       static_cast<int>(L.lower_covers(x).size()));
    return p;
}

} // namespace

bool lattices_isomorphic(const FiniteLattice& A, const FiniteLattice& B) {
    if (A.size() != B.size()) return false;
    auto pa = iso_profile(A);
    auto pb = iso_profile(B);
    {
        auto sa = pa;
        auto sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    const int m = A.size();
    std::vector<int> map(static_cast<size_t>(m), -1);
    std::vector<char> used(static_cast<size_t>(m), 0);
    std::function<bool(int)> search = [&](int a) -> bool {
        if (a == m) return true;
        for (int b = 0; b < m; ++b) {
            if (used[static_cast<size_t>(b)] || pa[static_cast<size_t>(a)] != pb[static_cast<size_t>(b)])
                continue;
            bool ok = true;
            for (int a2 = 0; a2 < a && ok; ++a2) {
                int b2 = map[static_cast<size_t>(a2)];
                if (A.covers(a, a2) != B.covers(b, b2) || A.covers(a2, a) != B.covers(b2, b))
                    ok = false;
            }
            if (!ok) continue;
            map[static_cast<size_t>(a)] = b;
            used[static_cast<size_t>(b)] = 1;
            if (search(a + 1)) return true;
            used[static_cast<size_t>(b)] = 0;
            map[static_cast<size_t>(a)] = -1;
        }
        return false;
    };
    return search(0);
}

std::vector<std::vector<int>> same_lattice_classes(int n, int k, std::int64_t max_cases) {
    auto vectors = enumerate_perm_vectors(n, k, max_cases);
    std::vector<FiniteLattice> lattices;
    lattices.reserve(vectors.size());
    for (const auto& v : vectors) lattices.push_back(eta(v).cl.lattice);

    std::vector<std::vector<int>> classes;
    std::vector<int> reps;
    for (int i = 0; i < static_cast<int>(vectors.size()); ++i) {
        bool placed = false;
        for (size_t c = 0; c < reps.size(); ++c)
            if (lattices_isomorphic(lattices[static_cast<size_t>(i)],
                                    lattices[static_cast<size_t>(reps[c])])) {
                classes[c].push_back(i);
                placed = true;
                break;
            }
        if (!placed) {
            reps.push_back(i);
            classes.push_back({i});
        }
    }
    return classes;
}

std::vector<Chain> greedy_jir_chain_cover(const FiniteLattice& L, int min_k) {
    auto all = L.maximal_chains();
    std::set<int> uncovered;
    for (int j : L.join_irreducibles()) uncovered.insert(j);

    std::vector<Chain> picked;
    while (!uncovered.empty()) {
        size_t best = 0;
        int best_gain = -1;
        for (size_t i = 0; i < all.size(); ++i) {
            int gain = 0;
            for (int x : all[i].elems)
                if (uncovered.count(x)) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best_gain <= 0) throw LatticeError("cannot cover Jir by maximal chains; this is a bug");
        for (int x : all[best].elems) uncovered.erase(x);
        picked.push_back(all[best]);
    }
    if (picked.empty()) picked.push_back(all.front());
    while (static_cast<int>(picked.size()) < min_k) picked.push_back(picked.back());
    return picked;
}

} // namespace jdlat
