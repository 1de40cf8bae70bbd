#pragma once

#include <vector>

#include "trn/tournament.hpp"
#include "trn/vertex_set.hpp"

namespace trn {

bool is_strongly_connected(const Tournament& t);

/// Strongly connected components, each sorted ascending.
std::vector<std::vector<int>> strongly_connected_components(const Tournament& t);

/// Condensation of a tournament: the components admit a unique total order
/// with every earlier block dominating every later one.
struct StrongDecomposition {
  std::vector<VertexSet> components;  // components[i] dominates components[j] for i < j
};

StrongDecomposition condense(const Tournament& t);

/// Hamiltonian path (order[i] -> order[i+1] for all i), built by inserting
/// vertices in increasing id at the first position that fits.
std::vector<int> hamiltonian_path(const Tournament& t);

struct CriticalCore {
  Tournament core;
  std::vector<int> vertices;  // core id -> original id, ascending
  int min_out_degree;
};

/// Largest induced subtournament with minimum outdegree >= r, then greedily
/// shrunk (increasing-id scan, restart after each deletion) until deleting
/// any single vertex would drop the minimum outdegree below r.
///
/// Vertices whose outdegree is below r cannot appear in any qualifying
/// subtournament, so they are peeled first; if that empties the tournament
/// no core exists and RequirementExceedsDegree is raised.
CriticalCore outdegree_critical_reduce(const Tournament& t, int r);

/// Reduces to a critical core with minimum outdegree exactly r (re-reducing
/// with the achieved value if the first pass overshoots) and reports whether
/// that core is strongly connected. r >= 1.
bool critical_core_is_strong(const Tournament& t, int r);

}  // namespace trn
