#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trn/error.hpp"
#include "trn/vertex_set.hpp"

namespace trn {

class Tournament;

namespace detail {
// Wraps pre-built dominance rows without re-validating. Callers guarantee the
// rows already describe a tournament; generators and decoders use this after
// constructing rows pairwise.
Tournament make_unchecked(int n, std::vector<std::uint64_t> rows);
}  // namespace detail

/// Complete dominance relation on n vertices: for every pair u != v exactly
/// one of u->v, v->u holds. Immutable once constructed, so instances can be
/// shared freely across threads.
///
/// Rows are bit-packed; for n <= 64 each row is a single 64-bit word.
class Tournament {
 public:
  /// Builds from a full dominance matrix, checking all invariants:
  /// square shape, zero diagonal, exactly one arc per pair.
  static Tournament from_matrix(const std::vector<std::vector<bool>>& dom);

  int size() const { return n_; }

  /// True when u -> v.
  bool dominates(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return row_bit(u, v);
  }

  int out_degree(int v) const;
  int in_degree(int v) const { return n_ - 1 - out_degree(v); }

  /// Minimum outdegree over all vertices; n must be at least 1.
  int min_out_degree() const;
  int max_out_degree() const;

  VertexSet out_neighbors(int v) const;
  VertexSet in_neighbors(int v) const;

  /// True when every vertex of x dominates every vertex of y. The sets must
  /// be disjoint; either may be empty (vacuously true).
  bool dominates_set(const VertexSet& x, const VertexSet& y) const;

  struct Induced;

  /// Subtournament on the members of s, relabelled 0..|s|-1 in ascending
  /// order of original id.
  Induced induced(const VertexSet& s) const;

  std::span<const std::uint64_t> row_words(int v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * wpr_, static_cast<std::size_t>(wpr_)};
  }

  int words_per_row() const { return wpr_; }

  /// Smallest out-neighbor of v with id >= from, or -1.
  int next_out_neighbor(int v, int from) const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend Tournament detail::make_unchecked(int n, std::vector<std::uint64_t> rows);

  Tournament(int n, std::vector<std::uint64_t> rows);

  bool row_bit(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * wpr_ + (static_cast<std::size_t>(v) >> 6)] >>
            (v & 63)) &
           1u;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      raise(Errc::vertex_out_of_range,
            "vertex " + std::to_string(v) + " outside tournament of order " + std::to_string(n_));
    }
  }

  int n_;
  int wpr_;
  std::vector<std::uint64_t> rows_;
};

struct Tournament::Induced {
  Tournament sub;
  std::vector<int> to_sub;     // old id -> new id, -1 outside the set
  std::vector<int> to_parent;  // new id -> old id, ascending
};

}  // namespace trn
