#include "trn/structure.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace trn {

bool is_strongly_connected(const Tournament& t) {
  const int n = t.size();
  if (n == 0) raise(Errc::empty_tournament, "connectivity of an empty tournament");
  if (n == 1) return true;

  // Forward closure from vertex 0.
  VertexSet reach(n);
  reach.insert(0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int u = t.next_out_neighbor(v, 0); u >= 0; u = t.next_out_neighbor(v, u + 1)) {
        if (!reach.contains(u)) {
          reach.insert(u);
          next.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }
  if (reach.count() != n) return false;

  // Backward closure: grow the set of vertices that reach 0.
  VertexSet back(n);
  back.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < n; ++v) {
      if (back.contains(v)) continue;
      auto row = t.row_words(v);
      const auto& bw = back.words();
      for (std::size_t i = 0; i < bw.size(); ++i) {
        if (row[i] & bw[i]) {
          back.insert(v);
          grew = true;
          break;
        }
      }
    }
  }
  return back.count() == n;
}

std::vector<std::vector<int>> strongly_connected_components(const Tournament& t) {
  const int n = t.size();
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;

  struct Frame {
    int v;
    int next;
  };
  std::vector<Frame> frames;
  int counter = 0;

  for (int s = 0; s < n; ++s) {
    if (idx[static_cast<std::size_t>(s)] != -1) continue;
    idx[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = counter++;
    stack.push_back(s);
    on_stack[static_cast<std::size_t>(s)] = 1;
    frames.push_back({s, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const int v = f.v;
      const int w = t.next_out_neighbor(v, f.next);
      if (w >= 0) {
        f.next = w + 1;
        if (idx[static_cast<std::size_t>(w)] == -1) {
          idx[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], idx[static_cast<std::size_t>(w)]);
        }
      } else {
        frames.pop_back();
        if (!frames.empty()) {
          low[static_cast<std::size_t>(frames.back().v)] =
              std::min(low[static_cast<std::size_t>(frames.back().v)],
                       low[static_cast<std::size_t>(v)]);
        }
        if (low[static_cast<std::size_t>(v)] == idx[static_cast<std::size_t>(v)]) {
          std::vector<int> comp;
          for (;;) {
            const int u = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(u)] = 0;
            comp.push_back(u);
            if (u == v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
      }
    }
  }
  return comps;
}

StrongDecomposition condense(const Tournament& t) {
  std::vector<std::vector<int>> comps = strongly_connected_components(t);
  // Between two strong components of a tournament all arcs point the same
  // way, so one representative pair decides the block order.
  std::sort(comps.begin(), comps.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              return t.dominates(a[0], b[0]);
            });
  StrongDecomposition d;
  d.components.reserve(comps.size());
  for (const auto& comp : comps) {
    VertexSet s(t.size());
    for (int v : comp) s.insert(v);
    d.components.push_back(std::move(s));
  }
  return d;
}

std::vector<int> hamiltonian_path(const Tournament& t) {
  const int n = t.size();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const int m = static_cast<int>(order.size());
    int pos = -1;
    for (int p = 0; p <= m; ++p) {
      const bool left_ok = (p == 0) || t.dominates(order[static_cast<std::size_t>(p - 1)], v);
      const bool right_ok = (p == m) || t.dominates(v, order[static_cast<std::size_t>(p)]);
      if (left_ok && right_ok) {
        pos = p;
        break;
      }
    }
    assert(pos >= 0 && "a tournament always admits an insertion point");
    order.insert(order.begin() + pos, v);
  }
  return order;
}

namespace {

// Shared state for the peel/criticalize passes: vertices alive, outdegrees
// restricted to the alive set.
struct Working {
  const Tournament& t;
  VertexSet alive;
  std::vector<int> out_deg;
  int alive_count;

  explicit Working(const Tournament& t)
      : t(t), alive(VertexSet::full(t.size())), out_deg(static_cast<std::size_t>(t.size()), 0),
        alive_count(t.size()) {
    for (int v = 0; v < t.size(); ++v) out_deg[static_cast<std::size_t>(v)] = t.out_degree(v);
  }

  void remove(int v) {
    alive.erase(v);
    --alive_count;
    // Every alive in-neighbor of v loses one outgoing arc.
    for (int u = alive.first(); u >= 0; u = alive.next(u)) {
      if (t.dominates(u, v)) --out_deg[static_cast<std::size_t>(u)];
    }
  }
};

}  // namespace

CriticalCore outdegree_critical_reduce(const Tournament& t, int r) {
  if (r < 0) raise(Errc::arg_out_of_range, "required outdegree must be non-negative");
  Working w(t);

  // Peel: a vertex whose outdegree is already below r can never reach r in
  // an induced subtournament, so it cannot be part of any core.
  bool peeled = true;
  while (peeled) {
    peeled = false;
    for (int v = w.alive.first(); v >= 0; v = w.alive.next(v)) {
      if (w.out_deg[static_cast<std::size_t>(v)] < r) {
        w.remove(v);
        peeled = true;
        break;
      }
    }
  }
  if (w.alive_count == 0) {
    raise(Errc::requirement_exceeds_degree,
          "no induced subtournament attains minimum outdegree " + std::to_string(r));
  }

  // Criticalize: drop the first vertex (increasing id, rescan after every
  // deletion) whose removal keeps the minimum outdegree at r or above.
  bool removed = true;
  while (removed && w.alive_count > 1) {
    removed = false;
    for (int v = w.alive.first(); v >= 0; v = w.alive.next(v)) {
      bool ok = true;
      for (int u = w.alive.first(); u >= 0; u = w.alive.next(u)) {
        if (u != v && w.t.dominates(u, v) && w.out_deg[static_cast<std::size_t>(u)] < r + 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        w.remove(v);
        removed = true;
        break;
      }
    }
  }

  Tournament::Induced ind = t.induced(w.alive);
  int achieved = ind.sub.min_out_degree();
  return CriticalCore{std::move(ind.sub), std::move(ind.to_parent), achieved};
}

bool critical_core_is_strong(const Tournament& t, int r) {
  if (r < 1) raise(Errc::arg_out_of_range, "requirement must be at least 1");
  CriticalCore core = outdegree_critical_reduce(t, r);
  // If the reduction overshoots, re-reduce at the achieved level so the core
  // actually has the minimum outdegree the claim is about.
  while (core.min_out_degree > r) {
    r = core.min_out_degree;
    core = outdegree_critical_reduce(core.core, r);
  }
  return is_strongly_connected(core.core);
}

}  // namespace trn
