#pragma once

#include <optional>
#include <vector>

#include "trn/cycles.hpp"
#include "trn/tournament.hpp"

namespace trn {

/// What to look for: k vertex-disjoint cycles, either with at least
/// min_distinct different lengths among them, or with exactly the listed
/// lengths (as a multiset).
struct PackingSpec {
  enum class Mode { min_distinct, exact_lengths };

  Mode mode = Mode::min_distinct;
  int k = 0;
  int min_distinct = 0;        // used in min_distinct mode, 1 <= min_distinct <= k
  std::vector<int> lengths;    // used in exact_lengths mode, each >= 3, size == k

  static PackingSpec distinct(int k, int min_distinct);
  static PackingSpec exact(std::vector<int> lengths);

  /// Throws SpecInvalid on malformed parameters.
  void validate() const;
};

struct CyclePacking {
  std::vector<Cycle> cycles;

  int distinct_length_count() const;
};

/// Fewest vertices any packing satisfying the spec can occupy. For the
/// distinct mode this is 3(k - l) + sum of 3..l+2; for exact lengths it is
/// the sum of the lengths.
int feasibility_floor(const PackingSpec& spec);

bool packing_satisfies(const Tournament& t, const CyclePacking& p, const PackingSpec& spec);

/// Complete search: returns a packing satisfying the spec if one exists,
/// std::nullopt only when none exists. Instances smaller than the
/// feasibility floor short-circuit to none.
///
/// The search is deterministic: branching follows the smallest vertex not
/// yet placed or excluded, trying shorter cycles first and lexicographically
/// smaller cycles within a length, so equal inputs yield equal packings.
std::optional<CyclePacking> find_packing(const Tournament& t, const PackingSpec& spec);

/// Largest l such that k disjoint cycles with at least l distinct lengths
/// exist, or 0 when there are no k disjoint cycles at all.
int max_packable(const Tournament& t, int k);

}  // namespace trn
