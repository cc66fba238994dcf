#include "jdlat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace jdlat {

FiniteLattice FiniteLattice::from_covers(int size,
                                         const std::vector<std::pair<int, int>>& covers) {
    if (size < 1) throw LatticeError("lattice must have at least one element");
    for (auto [a, b] : covers) {
        if (a < 0 || b < 0 || a >= size || b >= size)
            throw LatticeError("cover pair references element id out of range");
        if (a == b) throw CycleDetected("cover pair (" + std::to_string(a) + "," +
                                        std::to_string(a) + ") is a self-loop");
    }

    FiniteLattice L;
    L.m_ = size;
    L.covers_ = covers;
    std::sort(L.covers_.begin(), L.covers_.end());
    L.covers_.erase(std::unique(L.covers_.begin(), L.covers_.end()), L.covers_.end());

    const size_t m = static_cast<size_t>(size);
    L.up_.assign(m, {});
    L.down_.assign(m, {});
    L.cover_.assign(m * m, 0);
    for (auto [a, b] : L.covers_) {
        L.up_[a].push_back(b);
        L.down_[b].push_back(a);
        L.cover_[static_cast<size_t>(a) * m + b] = 1;
    }
    for (auto& v : L.up_) std::sort(v.begin(), v.end());
    for (auto& v : L.down_) std::sort(v.begin(), v.end());

    // Topological order; a cycle leaves unvisited elements.
    std::vector<int> indeg(m, 0), topo;
    for (auto [a, b] : L.covers_) ++indeg[b];
    std::queue<int> q;
    for (int x = 0; x < size; ++x)
        if (indeg[x] == 0) q.push(x);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        topo.push_back(x);
        for (int y : L.up_[x])
            if (--indeg[y] == 0) q.push(y);
    }
    if (static_cast<int>(topo.size()) != size)
        throw CycleDetected("covering relation contains a cycle");

    // Reflexive-transitive closure in reverse topological order.
    L.leq_.assign(m * m, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int x = *it;
        L.leq_[static_cast<size_t>(x) * m + x] = 1;
        for (int y : L.up_[x])
            for (size_t z = 0; z < m; ++z)
                if (L.leq_[static_cast<size_t>(y) * m + z])
                    L.leq_[static_cast<size_t>(x) * m + z] = 1;
    }

    // Transitive reduction: no cover (a,b) may have an intermediate element.
    for (auto [a, b] : L.covers_)
        for (int x = 0; x < size; ++x)
            if (x != a && x != b && L.leq(a, x) && L.leq(x, b))
                throw NotTransitivelyReduced("pair (" + std::to_string(a) + "," +
                                             std::to_string(b) +
                                             ") is implied through element " +
                                             std::to_string(x));

    // Unique bottom and top.
    L.bottom_ = -1;
    L.top_ = -1;
    for (int x = 0; x < size; ++x) {
        if (L.down_[x].empty()) {
            if (L.bottom_ != -1) throw MultipleBottoms("elements " + std::to_string(L.bottom_) +
                                                       " and " + std::to_string(x) +
                                                       " are both minimal");
            L.bottom_ = x;
        }
        if (L.up_[x].empty()) {
            if (L.top_ != -1) throw MultipleTops("elements " + std::to_string(L.top_) + " and " +
                                                 std::to_string(x) + " are both maximal");
            L.top_ = x;
        }
    }

    // Heights: longest path from the bottom.
    L.height_.assign(m, 0);
    for (int x : topo)
        for (int y : L.up_[x])
            L.height_[y] = std::max(L.height_[y], L.height_[x] + 1);

    // Every pair must have a least upper and a greatest lower bound.
    const bool tables = size <= kJoinTableLimit;
    if (tables) {
        L.join_tab_.assign(m * m, -1);
        L.meet_tab_.assign(m * m, -1);
    }
    for (int a = 0; a < size; ++a)
        for (int b = a; b < size; ++b) {
            int j = L.bound_scan(a, b, true);
            int w = L.bound_scan(a, b, false);
            if (j < 0) throw NoUniqueBound(a, b, "elements " + std::to_string(a) + " and " +
                                                     std::to_string(b) + " have no join");
            if (w < 0) throw NoUniqueBound(a, b, "elements " + std::to_string(a) + " and " +
                                                     std::to_string(b) + " have no meet");
            if (tables) {
                L.join_tab_[static_cast<size_t>(a) * m + b] = j;
                L.join_tab_[static_cast<size_t>(b) * m + a] = j;
                L.meet_tab_[static_cast<size_t>(a) * m + b] = w;
                L.meet_tab_[static_cast<size_t>(b) * m + a] = w;
            }
        }
    return L;
}

// Unique minimal upper bound (or maximal lower bound); -1 if none exists.
int FiniteLattice::bound_scan(int a, int b, bool upper) const {
    int best = -1;
    for (int x = 0; x < m_; ++x) {
        bool isBound = upper ? (leq(a, x) && leq(b, x)) : (leq(x, a) && leq(x, b));
        if (!isBound) continue;
        if (best == -1 || (upper ? leq(x, best) : leq(best, x))) best = x;
    }
    if (best == -1) return -1;
    // `best` must compare with every bound, otherwise the bound is not unique.
    for (int x = 0; x < m_; ++x) {
        bool isBound = upper ? (leq(a, x) && leq(b, x)) : (leq(x, a) && leq(x, b));
        if (isBound && !(upper ? leq(best, x) : leq(x, best))) return -1;
    }
    return best;
}

int FiniteLattice::join(int a, int b) const {
    if (!join_tab_.empty()) return join_tab_[static_cast<size_t>(a) * m_ + b];
    return bound_scan(a, b, true);
}

int FiniteLattice::meet(int a, int b) const {
    if (!meet_tab_.empty()) return meet_tab_[static_cast<size_t>(a) * m_ + b];
    return bound_scan(a, b, false);
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
    int acc = bottom_;
    for (int x : xs) acc = join(acc, x);
    return acc;
}

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
    int acc = top_;
    for (int x : xs) acc = meet(acc, x);
    return acc;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
    std::vector<int> out;
    for (int x = 0; x < m_; ++x)
        if (x != bottom_ && down_[x].size() == 1) out.push_back(x);
    return out;
}

std::vector<int> FiniteLattice::meet_irreducibles() const {
    std::vector<int> out;
    for (int x = 0; x < m_; ++x)
        if (x != top_ && up_[x].size() == 1) out.push_back(x);
    return out;
}

int FiniteLattice::up_star(int x) const {
    int acc = x;
    for (int y : up_[x]) acc = join(acc, y);
    return acc;
}

std::vector<Chain> FiniteLattice::maximal_chains() const {
    std::vector<Chain> out;
    std::vector<int> cur{bottom_};
    std::function<void(int)> dfs = [&](int x) {
        if (x == top_) {
            out.push_back(Chain{cur});
            return;
        }
        for (int y : up_[x]) { // up_ is sorted, so the order is lexicographic
            cur.push_back(y);
            dfs(y);
            cur.pop_back();
        }
    };
    dfs(bottom_);
    return out;
}

std::vector<int> FiniteLattice::join_closure(const std::vector<int>& subset) const {
    std::vector<char> in(m_, 0);
    std::vector<int> work;
    for (int x : subset)
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            int v = join(work[i], work[j]);
            if (!in[v]) {
                in[v] = 1;
                work.push_back(v);
            }
        }
    std::sort(work.begin(), work.end());
    return work;
}

FiniteLattice FiniteLattice::dual() const {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(covers_.size());
    for (auto [a, b] : covers_) rev.emplace_back(b, a);
    return from_covers(m_, rev);
}

bool FiniteLattice::is_maximal_chain(const std::vector<int>& elems) const {
    if (elems.empty() || elems.front() != bottom_ || elems.back() != top_) return false;
    for (size_t i = 0; i + 1 < elems.size(); ++i)
        if (!covers(elems[i], elems[i + 1])) return false;
    return true;
}

int poset_width(const FiniteLattice& L, const std::vector<int>& subset) {
    const int n = static_cast<int>(subset.size());
    // Min chain cover = n - max matching on the strict comparability DAG;
    // width equals the cover size by Dilworth's theorem.
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && L.lt(subset[i], subset[j])) adj[i].push_back(j);

    std::vector<int> matchL(n, -1), matchR(n, -1);
    std::vector<char> used;
    std::function<bool(int)> tryKuhn = [&](int v) {
        for (int to : adj[v]) {
            if (used[to]) continue;
            used[to] = 1;
            if (matchR[to] == -1 || tryKuhn(matchR[to])) {
                matchL[v] = to;
                matchR[to] = v;
                return true;
            }
        }
        return false;
    };
    int matching = 0;
    for (int v = 0; v < n; ++v) {
        used.assign(n, 0);
        if (tryKuhn(v)) ++matching;
    }
    return n - matching;
}

} // namespace jdlat
