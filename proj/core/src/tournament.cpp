#include "trn/tournament.hpp"

#include <bit>
#include <cassert>
#include <string>

namespace trn {
namespace {

std::size_t words_needed(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

// Shared invariant check for both the validating factory and debug builds of
// the unchecked path.
void check_rows(int n, const std::vector<std::uint64_t>& rows) {
  const std::size_t wpr = words_needed(n);
  if (rows.size() != wpr * static_cast<std::size_t>(n)) {
    raise(Errc::not_antisymmetric_complete, "row storage does not match order " + std::to_string(n));
  }
  auto bit = [&](int u, int v) -> bool {
    return (rows[static_cast<std::size_t>(u) * wpr + (static_cast<std::size_t>(v) >> 6)] >>
            (v & 63)) &
           1u;
  };
  for (int u = 0; u < n; ++u) {
    if (bit(u, u)) raise(Errc::diagonal_set, "vertex " + std::to_string(u) + " dominates itself");
    // No bits beyond column n-1.
    for (std::size_t w = 0; w < wpr; ++w) {
      std::uint64_t word = rows[static_cast<std::size_t>(u) * wpr + w];
      int hi = n - static_cast<int>(w * 64);
      if (hi < 64) {
        std::uint64_t mask = hi <= 0 ? 0 : ((std::uint64_t{1} << hi) - 1);
        if (word & ~mask) {
          raise(Errc::not_antisymmetric_complete,
                "row " + std::to_string(u) + " has bits outside the vertex range");
        }
      }
    }
    for (int v = u + 1; v < n; ++v) {
      if (bit(u, v) == bit(v, u)) {
        raise(Errc::not_antisymmetric_complete,
              "pair (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") must be oriented exactly one way");
      }
    }
  }
}

}  // namespace

namespace detail {

Tournament make_unchecked(int n, std::vector<std::uint64_t> rows) {
  assert((check_rows(n, rows), true));
  return Tournament(n, std::move(rows));
}

}  // namespace detail

Tournament::Tournament(int n, std::vector<std::uint64_t> rows)
    : n_(n), wpr_(static_cast<int>(words_needed(n))), rows_(std::move(rows)) {}

Tournament Tournament::from_matrix(const std::vector<std::vector<bool>>& dom) {
  const int n = static_cast<int>(dom.size());
  const std::size_t wpr = words_needed(n);
  std::vector<std::uint64_t> rows(wpr * static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(dom[u].size()) != n) {
      raise(Errc::not_antisymmetric_complete, "dominance matrix is not square");
    }
    for (int v = 0; v < n; ++v) {
      if (dom[u][v]) {
        rows[static_cast<std::size_t>(u) * wpr + (static_cast<std::size_t>(v) >> 6)] |=
            std::uint64_t{1} << (v & 63);
      }
    }
  }
  check_rows(n, rows);
  return Tournament(n, std::move(rows));
}

int Tournament::out_degree(int v) const {
  check_vertex(v);
  int c = 0;
  for (std::uint64_t w : row_words(v)) c += std::popcount(w);
  return c;
}

int Tournament::min_out_degree() const {
  if (n_ == 0) raise(Errc::empty_tournament, "minimum outdegree of an empty tournament");
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, out_degree(v));
  return best;
}

int Tournament::max_out_degree() const {
  if (n_ == 0) raise(Errc::empty_tournament, "maximum outdegree of an empty tournament");
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, out_degree(v));
  return best;
}

VertexSet Tournament::out_neighbors(int v) const {
  check_vertex(v);
  VertexSet s(n_);
  for (int u = next_out_neighbor(v, 0); u >= 0; u = next_out_neighbor(v, u + 1)) s.insert(u);
  return s;
}

VertexSet Tournament::in_neighbors(int v) const {
  check_vertex(v);
  VertexSet s = VertexSet::full(n_);
  s.erase(v);
  return s - out_neighbors(v);
}

bool Tournament::dominates_set(const VertexSet& x, const VertexSet& y) const {
  if (x.universe() != n_ || y.universe() != n_) {
    raise(Errc::vertex_out_of_range, "set universe does not match tournament order");
  }
  if (x.intersects(y)) raise(Errc::overlapping_sets, "dominates_set requires disjoint sets");
  for (int u = x.first(); u >= 0; u = x.next(u)) {
    auto row = row_words(u);
    const auto& yw = y.words();
    for (std::size_t i = 0; i < yw.size(); ++i) {
      if (yw[i] & ~row[i]) return false;
    }
  }
  return true;
}

Tournament::Induced Tournament::induced(const VertexSet& s) const {
  if (s.universe() != n_) {
    raise(Errc::vertex_out_of_range, "set universe does not match tournament order");
  }
  std::vector<int> to_parent = s.to_vector();
  std::vector<int> to_sub(static_cast<std::size_t>(n_), -1);
  const int m = static_cast<int>(to_parent.size());
  for (int i = 0; i < m; ++i) to_sub[static_cast<std::size_t>(to_parent[i])] = i;

  const std::size_t wpr = words_needed(m);
  std::vector<std::uint64_t> rows(wpr * static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b && row_bit(to_parent[a], to_parent[b])) {
        rows[static_cast<std::size_t>(a) * wpr + (static_cast<std::size_t>(b) >> 6)] |=
            std::uint64_t{1} << (b & 63);
      }
    }
  }
  return Induced{Tournament(m, std::move(rows)), std::move(to_sub), std::move(to_parent)};
}

int Tournament::next_out_neighbor(int v, int from) const {
  check_vertex(v);
  if (from < 0) from = 0;
  if (from >= n_) return -1;
  auto row = row_words(v);
  std::size_t wi = static_cast<std::size_t>(from) >> 6;
  std::uint64_t w = row[wi] >> (from & 63);
  if (w) return from + std::countr_zero(w);
  for (++wi; wi < row.size(); ++wi) {
    if (row[wi]) return static_cast<int>(wi * 64) + std::countr_zero(row[wi]);
  }
  return -1;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::diagonal_set: return "DiagonalSet";
    case Errc::not_antisymmetric_complete: return "NotAntisymmetricComplete";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::empty_tournament: return "EmptyTournament";
    case Errc::overlapping_sets: return "OverlappingSets";
    case Errc::requirement_exceeds_degree: return "RequirementExceedsDegree";
    case Errc::not_strongly_connected: return "NotStronglyConnected";
    case Errc::too_small: return "TooSmall";
    case Errc::too_large: return "TooLarge";
    case Errc::length_out_of_range: return "LengthOutOfRange";
    case Errc::spec_invalid: return "SpecInvalid";
    case Errc::bad_offset_set: return "BadOffsetSet";
    case Errc::infeasible: return "Infeasible";
    case Errc::parse_error: return "ParseError";
    case Errc::not_a_tournament: return "NotATournament";
    case Errc::arg_out_of_range: return "ArgOutOfRange";
    case Errc::unknown_entry: return "UnknownEntry";
    case Errc::source_unavailable: return "SourceUnavailable";
  }
  return "Error";
}

}  // namespace trn
