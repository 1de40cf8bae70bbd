#include "trn/packing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace trn {

PackingSpec PackingSpec::distinct(int k, int min_distinct) {
  PackingSpec s;
  s.mode = Mode::min_distinct;
  s.k = k;
  s.min_distinct = min_distinct;
  s.validate();
  return s;
}

PackingSpec PackingSpec::exact(std::vector<int> lengths) {
  PackingSpec s;
  s.mode = Mode::exact_lengths;
  s.k = static_cast<int>(lengths.size());
  s.lengths = std::move(lengths);
  s.validate();
  return s;
}

void PackingSpec::validate() const {
  if (k < 1) raise(Errc::spec_invalid, "need at least one cycle");
  if (mode == Mode::min_distinct) {
    if (min_distinct < 1 || min_distinct > k) {
      raise(Errc::spec_invalid, "distinct-length count must lie in [1, k]");
    }
  } else {
    if (static_cast<int>(lengths.size()) != k) {
      raise(Errc::spec_invalid, "length list size must equal k");
    }
    for (int len : lengths) {
      if (len < 3) raise(Errc::spec_invalid, "cycle lengths start at 3");
    }
  }
}

int CyclePacking::distinct_length_count() const {
  std::set<int> lens;
  for (const Cycle& c : cycles) lens.insert(c.length());
  return static_cast<int>(lens.size());
}

namespace {

// The lengths actually searched for. A packing with at least l distinct
// lengths can always be shrunk, cycle by cycle inside its own vertex set
// (strong subtournaments contain cycles of every length down to 3), to the
// cheapest shape: k - l + 1 triangles plus one cycle each of 4 .. l + 2.
// Searching for that exact multiset is therefore equivalent and bounds the
// candidate lengths by l + 2 instead of n.
std::vector<int> target_lengths(const PackingSpec& spec) {
  spec.validate();
  std::vector<int> lens;
  if (spec.mode == PackingSpec::Mode::exact_lengths) {
    lens = spec.lengths;
  } else {
    lens.assign(static_cast<std::size_t>(spec.k - spec.min_distinct + 1), 3);
    for (int len = 4; len <= spec.min_distinct + 2; ++len) lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

struct Candidate {
  std::vector<int> verts;
  std::vector<std::uint64_t> mask;
};

bool disjoint(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return false;
  }
  return true;
}

struct Searcher {
  int n;
  int words;
  // candidates[root][li]: cycles of target length index li whose smallest
  // vertex is root, in lexicographic order.
  std::vector<std::vector<std::vector<Candidate>>> candidates;
  std::vector<int> lens;        // distinct target lengths, ascending
  std::vector<int> remaining;   // multiplicity left per length index
  int cycles_left = 0;
  int vertices_needed = 0;
  std::vector<std::uint64_t> banned;
  int free_count = 0;
  std::vector<const Candidate*> chosen;

  bool dfs() {
    if (cycles_left == 0) return true;
    if (free_count < vertices_needed) return false;
    int v = 0;
    while ((banned[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u) ++v;
    for (std::size_t li = 0; li < lens.size(); ++li) {
      if (remaining[li] == 0) continue;
      for (const Candidate& c : candidates[static_cast<std::size_t>(v)][li]) {
        if (!disjoint(c.mask, banned)) continue;
        apply(c, li);
        if (dfs()) return true;
        undo(c, li);
      }
    }
    // Branch where no chosen cycle contains v.
    banned[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    --free_count;
    const bool found = dfs();
    banned[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    ++free_count;
    return found;
  }

  void apply(const Candidate& c, std::size_t li) {
    for (std::size_t i = 0; i < c.mask.size(); ++i) banned[i] |= c.mask[i];
    free_count -= static_cast<int>(c.verts.size());
    vertices_needed -= lens[li];
    --remaining[li];
    --cycles_left;
    chosen.push_back(&c);
  }

  void undo(const Candidate& c, std::size_t li) {
    chosen.pop_back();
    ++cycles_left;
    ++remaining[li];
    vertices_needed += lens[li];
    free_count += static_cast<int>(c.verts.size());
    for (std::size_t i = 0; i < c.mask.size(); ++i) banned[i] &= ~c.mask[i];
  }
};

}  // namespace

int feasibility_floor(const PackingSpec& spec) {
  std::vector<int> lens = target_lengths(spec);
  return std::accumulate(lens.begin(), lens.end(), 0);
}

bool packing_satisfies(const Tournament& t, const CyclePacking& p, const PackingSpec& spec) {
  spec.validate();
  if (static_cast<int>(p.cycles.size()) != spec.k) return false;
  VertexSet used(t.size());
  for (const Cycle& c : p.cycles) {
    if (!is_valid_cycle(t, c)) return false;
    for (int v : c.verts) {
      if (used.contains(v)) return false;
      used.insert(v);
    }
  }
  if (spec.mode == PackingSpec::Mode::min_distinct) {
    return p.distinct_length_count() >= spec.min_distinct;
  }
  std::vector<int> got;
  got.reserve(p.cycles.size());
  for (const Cycle& c : p.cycles) got.push_back(c.length());
  std::sort(got.begin(), got.end());
  std::vector<int> want = spec.lengths;
  std::sort(want.begin(), want.end());
  return got == want;
}

std::optional<CyclePacking> find_packing(const Tournament& t, const PackingSpec& spec) {
  std::vector<int> lens = target_lengths(spec);
  const int n = t.size();
  const int total = std::accumulate(lens.begin(), lens.end(), 0);
  if (n < total) return std::nullopt;

  Searcher s;
  s.n = n;
  s.words = t.words_per_row();
  for (int len : lens) {
    if (s.lens.empty() || s.lens.back() != len) {
      s.lens.push_back(len);
      s.remaining.push_back(1);
    } else {
      ++s.remaining.back();
    }
  }
  s.cycles_left = static_cast<int>(lens.size());
  s.vertices_needed = total;
  s.banned.assign(static_cast<std::size_t>((n + 63) / 64), 0);
  s.free_count = n;
  s.candidates.assign(static_cast<std::size_t>(n),
                      std::vector<std::vector<Candidate>>(s.lens.size()));

  const int max_len = s.lens.back();
  for_each_cycle(t, 3, max_len, [&](const std::vector<int>& path) {
    const int len = static_cast<int>(path.size());
    const auto it = std::lower_bound(s.lens.begin(), s.lens.end(), len);
    if (it == s.lens.end() || *it != len) return true;
    const std::size_t li = static_cast<std::size_t>(it - s.lens.begin());
    Candidate c;
    c.verts = path;
    c.mask.assign(s.banned.size(), 0);
    for (int v : path) {
      c.mask[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }
    s.candidates[static_cast<std::size_t>(path[0])][li].push_back(std::move(c));
    return true;
  });

  if (!s.dfs()) return std::nullopt;

  CyclePacking packing;
  packing.cycles.reserve(s.chosen.size());
  for (const Candidate* c : s.chosen) packing.cycles.push_back(Cycle{c->verts});
  // Sanity net even in release builds: a returned packing is always checked
  // against the original spec before it leaves the library.
  if (!packing_satisfies(t, packing, spec)) {
    throw std::logic_error("internal error: search produced an invalid packing");
  }
  return packing;
}

int max_packable(const Tournament& t, int k) {
  if (k < 1) raise(Errc::spec_invalid, "need at least one cycle");
  for (int l = k; l >= 1; --l) {
    if (find_packing(t, PackingSpec::distinct(k, l))) return l;
  }
  return 0;
}

}  // namespace trn
