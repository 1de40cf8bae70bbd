#include "trn/cycles.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "trn/structure.hpp"

namespace trn {

Cycle Cycle::canonical(std::vector<int> verts) {
  auto it = std::min_element(verts.begin(), verts.end());
  std::rotate(verts.begin(), it, verts.end());
  return Cycle{std::move(verts)};
}

bool is_valid_cycle(const Tournament& t, const Cycle& c) {
  const int m = c.length();
  if (m < 3) return false;
  VertexSet seen(t.size());
  for (int v : c.verts) {
    if (v < 0 || v >= t.size() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < m; ++i) {
    if (!t.dominates(c.verts[static_cast<std::size_t>(i)],
                     c.verts[static_cast<std::size_t>((i + 1) % m)])) {
      return false;
    }
  }
  return true;
}

namespace {

// Working form of moon_cycle: the cycle through v of each length, kept
// anchored at v while it grows.
std::vector<int> three_cycle_seq(const Tournament& t, int v) {
  for (int u = t.next_out_neighbor(v, 0); u >= 0; u = t.next_out_neighbor(v, u + 1)) {
    // Smallest in-neighbor of v that u dominates.
    for (int w = t.next_out_neighbor(u, 0); w >= 0; w = t.next_out_neighbor(u, w + 1)) {
      if (w != v && t.dominates(w, v)) return {v, u, w};
    }
  }
  // Strong connectivity guarantees an arc from N+(v) into N-(v).
  assert(false && "strongly connected tournament must contain a 3-cycle through v");
  raise(Errc::not_strongly_connected, "no 3-cycle through vertex " + std::to_string(v));
}

}  // namespace

Cycle three_cycle_through(const Tournament& t, int v) {
  if (v < 0 || v >= t.size()) raise(Errc::vertex_out_of_range, "vertex " + std::to_string(v));
  if (t.size() < 3) raise(Errc::too_small, "3-cycles need at least 3 vertices");
  if (!is_strongly_connected(t)) {
    raise(Errc::not_strongly_connected, "3-cycle construction needs a strongly connected tournament");
  }
  return Cycle::canonical(three_cycle_seq(t, v));
}

Cycle moon_cycle(const Tournament& t, int v, int len) {
  const int n = t.size();
  if (v < 0 || v >= n) raise(Errc::vertex_out_of_range, "vertex " + std::to_string(v));
  if (len < 3 || len > n) {
    raise(Errc::length_out_of_range,
          "cycle length " + std::to_string(len) + " outside [3, " + std::to_string(n) + "]");
  }
  if (!is_strongly_connected(t)) {
    raise(Errc::not_strongly_connected, "cycle construction needs a strongly connected tournament");
  }

  std::vector<int> cyc = three_cycle_seq(t, v);
  VertexSet on_cycle(n);
  for (int x : cyc) on_cycle.insert(x);

  while (static_cast<int>(cyc.size()) < len) {
    const int m = static_cast<int>(cyc.size());
    // Splice step: smallest outside vertex with both an in-neighbor and an
    // out-neighbor on the cycle, inserted at the first pair that accepts it.
    int splice = -1;
    for (int x = 0; x < n && splice < 0; ++x) {
      if (on_cycle.contains(x)) continue;
      bool has_out = false, has_in = false;
      for (int i = 0; i < m && !(has_out && has_in); ++i) {
        if (t.dominates(x, cyc[static_cast<std::size_t>(i)])) has_out = true;
        else has_in = true;
      }
      if (has_out && has_in) splice = x;
    }
    if (splice >= 0) {
      int at = -1;
      for (int i = 0; i < m; ++i) {
        if (t.dominates(cyc[static_cast<std::size_t>(i)], splice) &&
            t.dominates(splice, cyc[static_cast<std::size_t>((i + 1) % m)])) {
          at = i;
          break;
        }
      }
      assert(at >= 0 && "a vertex with both neighbor kinds splices somewhere");
      if (at < 0) raise(Errc::not_strongly_connected, "cycle extension failed");
      cyc.insert(cyc.begin() + at + 1, splice);
      on_cycle.insert(splice);
      continue;
    }

    // Detour step: every outside vertex now either dominates the whole cycle
    // or is dominated by it. Strong connectivity forces an arc u -> w from
    // the dominated side into the dominating side; route the cycle through
    // it in place of the vertex after v.
    int du = -1, dw = -1;
    for (int u = 0; u < n && du < 0; ++u) {
      if (on_cycle.contains(u)) continue;
      bool u_dominated = !t.dominates(u, cyc[0]);
      if (!u_dominated) continue;
      for (int w = t.next_out_neighbor(u, 0); w >= 0; w = t.next_out_neighbor(u, w + 1)) {
        if (!on_cycle.contains(w) && t.dominates(w, cyc[0])) {
          du = u;
          dw = w;
          break;
        }
      }
    }
    assert(du >= 0 && "strong connectivity forces an arc between the outside blocks");
    if (du < 0) {
      raise(Errc::not_strongly_connected, "cycle extension failed; tournament not strongly connected");
    }
    cyc[1] = du;
    cyc.insert(cyc.begin() + 2, dw);
    on_cycle = VertexSet(n);
    for (int x : cyc) on_cycle.insert(x);
  }

  Cycle out = Cycle::canonical(std::move(cyc));
  assert(is_valid_cycle(t, out));
  return out;
}

void for_each_cycle(const Tournament& t, int min_len, int max_len,
                    const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = t.size();
  if (min_len < 3 || min_len > max_len || max_len > n) {
    raise(Errc::length_out_of_range, "cycle length bounds must satisfy 3 <= min <= max <= n");
  }

  std::vector<int> path;
  VertexSet on_path(n);
  // frames[i]: next candidate id to try as successor of path[i].
  std::vector<int> next_try;

  for (int root = 0; root + min_len <= n; ++root) {
    path.assign(1, root);
    on_path = VertexSet(n);
    on_path.insert(root);
    next_try.assign(1, root + 1);
    while (!path.empty()) {
      const int last = path.back();
      const int m = static_cast<int>(path.size());
      int w = -1;
      if (m < max_len) {
        w = t.next_out_neighbor(last, next_try.back());
        while (w >= 0 && on_path.contains(w)) w = t.next_out_neighbor(last, w + 1);
      }
      if (w < 0) {
        path.pop_back();
        next_try.pop_back();
        if (!path.empty()) on_path.erase(last);
        continue;
      }
      next_try.back() = w + 1;
      path.push_back(w);
      on_path.insert(w);
      next_try.push_back(root + 1);
      // Close the cycle before extending further: the closed sequence is a
      // prefix of every extension, so emission stays lexicographic.
      if (static_cast<int>(path.size()) >= min_len && t.dominates(w, root)) {
        if (!visit(path)) return;
      }
    }
  }
}

std::vector<Cycle> enumerate_cycles(const Tournament& t, int min_len, int max_len) {
  std::vector<Cycle> out;
  for_each_cycle(t, min_len, max_len, [&](const std::vector<int>& path) {
    out.push_back(Cycle{path});
    return true;
  });
  return out;
}

}  // namespace trn
