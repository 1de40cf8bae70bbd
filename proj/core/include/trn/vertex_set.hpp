#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "trn/error.hpp"

namespace trn {

/// Set of vertex ids drawn from a fixed universe [0, universe()).
///
/// Backed by 64-bit words; for universes up to 64 every operation touches a
/// single word. Operations that combine two sets require equal universes.
class VertexSet {
 public:
  VertexSet() : universe_(0) {}

  explicit VertexSet(int universe) : universe_(check_universe(universe)) {
    words_.assign(word_count(universe_), 0);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int v) const {
    check_vertex(v);
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void insert(int v) {
    check_vertex(v);
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(int v) {
    check_vertex(v);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_) {
      if (w) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Smallest member, or -1 when empty.
  int first() const { return scan_from(0); }

  /// Smallest member greater than v, or -1.
  int next(int v) const { return v + 1 >= universe_ ? -1 : scan_from(v + 1); }

  /// Smallest non-member, or -1 when the set is full.
  int first_absent() const {
    for (int v = 0; v < universe_; ++v) {
      if (!contains(v)) return v;
    }
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  static int check_universe(int universe) {
    if (universe < 0) raise(Errc::arg_out_of_range, "set universe must be non-negative");
    return universe;
  }

  static std::size_t word_count(int universe) {
    return (static_cast<std::size_t>(universe) + 63) / 64;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= universe_) {
      raise(Errc::vertex_out_of_range,
            "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    }
  }

  void check_same_universe(const VertexSet& o) const {
    if (universe_ != o.universe_) raise(Errc::arg_out_of_range, "set universes differ");
  }

  int scan_from(int v) const {
    std::size_t wi = static_cast<std::size_t>(v) >> 6;
    if (wi >= words_.size()) return -1;
    std::uint64_t w = words_[wi] >> (v & 63);
    if (w) return v + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi) {
      if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
    }
    return -1;
  }

  int universe_;
  std::vector<std::uint64_t> words_;
};

}  // namespace trn
