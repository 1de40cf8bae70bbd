#pragma once

#include <functional>
#include <vector>

#include "trn/tournament.hpp"

namespace trn {

/// Directed simple cycle, stored in canonical rotation: the smallest vertex
/// id comes first, arcs run verts[i] -> verts[i+1] and verts.back() -> verts[0].
struct Cycle {
  std::vector<int> verts;

  int length() const { return static_cast<int>(verts.size()); }

  static Cycle canonical(std::vector<int> verts);
};

bool is_valid_cycle(const Tournament& t, const Cycle& c);

/// Some 3-cycle through v in a strongly connected tournament: the smallest
/// out-neighbor u of v that dominates an in-neighbor of v, with the smallest
/// such in-neighbor w, giving v -> u -> w -> v.
Cycle three_cycle_through(const Tournament& t, int v);

/// Cycle of exactly len vertices through v, 3 <= len <= n, in a strongly
/// connected tournament. Grows a 3-cycle one vertex at a time:
///  - if some outside vertex has both an in- and an out-neighbor on the
///    cycle, the smallest such vertex is spliced into the first consecutive
///    pair that accepts it;
///  - otherwise every outside vertex either dominates or is dominated by the
///    whole cycle, and an arc u -> w from the dominated side to the
///    dominating side replaces the cycle vertex after v with the detour
///    through u and w.
Cycle moon_cycle(const Tournament& t, int v, int len);

/// Visits every cycle with length in [min_len, max_len] exactly once, in
/// lexicographic order of the canonical vertex sequence. The visitor receives
/// the cycle as a path buffer that is reused between calls; return false to
/// stop early. Bounds must satisfy 3 <= min_len <= max_len <= n.
void for_each_cycle(const Tournament& t, int min_len, int max_len,
                    const std::function<bool(const std::vector<int>&)>& visit);

std::vector<Cycle> enumerate_cycles(const Tournament& t, int min_len, int max_len);

}  // namespace trn
