#ifndef JDLAT_LATTICE_HPP
#define JDLAT_LATTICE_HPP

#include <utility>
#include <vector>

#include "jdlat/errors.hpp"

namespace jdlat {

/// A maximal chain: bottom to top, each consecutive pair a covering pair.
struct Chain {
    std::vector<int> elems;

    int length() const { return static_cast<int>(elems.size()) - 1; }
    bool operator==(const Chain& other) const { return elems == other.elems; }
};

/// Finite lattice on dense ids 0..size-1, built from its covering relation.
/// The order relation is materialized as a full boolean table. Construction
/// validates everything eagerly: acyclicity, transitive reduction, existence
/// of all joins and meets, unique bottom and top. All instances are immutable
/// and safe to share across threads.
class FiniteLattice {
  public:
    static FiniteLattice from_covers(int size,
                                     const std::vector<std::pair<int, int>>& covers);

    /// Empty placeholder; only from_covers yields a usable lattice.
    FiniteLattice() = default;

    int size() const { return m_; }
    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * m_ + b] != 0; }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    bool covers(int a, int b) const { return cover_[static_cast<size_t>(a) * m_ + b] != 0; }
    bool incomparable(int a, int b) const { return !leq(a, b) && !leq(b, a); }

    int bottom() const { return bottom_; }
    int top() const { return top_; }

    int join(int a, int b) const;
    int meet(int a, int b) const;
    int join_all(const std::vector<int>& xs) const; // empty join = bottom
    int meet_all(const std::vector<int>& xs) const; // empty meet = top

    /// Longest path from bottom to x.
    int height(int x) const { return height_[x]; }
    int length() const { return height_[top_]; }

    const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
    const std::vector<int>& upper_covers(int x) const { return up_[x]; }
    const std::vector<int>& lower_covers(int x) const { return down_[x]; }

    std::vector<int> join_irreducibles() const;
    std::vector<int> meet_irreducibles() const;

    /// Join of all upper covers of x; x itself when x is the top.
    int up_star(int x) const;

    /// All maximal chains, lexicographic by element ids.
    std::vector<Chain> maximal_chains() const;

    /// Smallest superset of `subset` closed under binary join.
    std::vector<int> join_closure(const std::vector<int>& subset) const;

    /// Order-dual lattice (same ids, reversed covers).
    FiniteLattice dual() const;

    bool is_maximal_chain(const std::vector<int>& elems) const;

  private:
    int m_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<char> leq_;
    std::vector<char> cover_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
    std::vector<int> height_;
    int bottom_ = -1;
    int top_ = -1;
    // Precomputed when m_ <= kJoinTableLimit, empty otherwise.
    std::vector<int> join_tab_;
    std::vector<int> meet_tab_;

    static constexpr int kJoinTableLimit = 512;

    int bound_scan(int a, int b, bool upper) const;
};

/// Exact width (maximum antichain) of `subset` inside L, via minimum chain
/// cover (Dilworth) computed with bipartite matching.
int poset_width(const FiniteLattice& L, const std::vector<int>& subset);

} // namespace jdlat

#endif
