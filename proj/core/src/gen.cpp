#include "trn/gen.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "trn/error.hpp"

namespace trn {

namespace {

int words_for(int n) { return n <= 64 ? 1 : (n + 63) / 64; }

void set_arc(std::vector<std::uint64_t>& rows, int wpr, int u, int v) {
  rows[static_cast<std::size_t>(u) * wpr + (static_cast<std::size_t>(v) >> 6)] |=
      std::uint64_t{1} << (v & 63);
}

void clear_arc(std::vector<std::uint64_t>& rows, int wpr, int u, int v) {
  rows[static_cast<std::size_t>(u) * wpr + (static_cast<std::size_t>(v) >> 6)] &=
      ~(std::uint64_t{1} << (v & 63));
}

bool has_arc(const std::vector<std::uint64_t>& rows, int wpr, int u, int v) {
  return (rows[static_cast<std::size_t>(u) * wpr + (static_cast<std::size_t>(v) >> 6)] >>
          (v & 63)) &
         1u;
}

void fill_random(std::vector<std::uint64_t>& rows, int n, int wpr, std::uint64_t& state) {
  std::fill(rows.begin(), rows.end(), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (splitmix64_next(state) & 1u) {
        set_arc(rows, wpr, i, j);
      } else {
        set_arc(rows, wpr, j, i);
      }
    }
  }
}

}  // namespace

Tournament rotational(const RotationSpec& spec) {
  const int n = spec.n;
  if (n < 1) raise(Errc::arg_out_of_range, "modulus must be positive");
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  for (int o : spec.offsets) {
    if (o < 1 || o >= n) raise(Errc::bad_offset_set, "offset " + std::to_string(o) + " outside 1.." + std::to_string(n - 1));
    if (in_set[static_cast<std::size_t>(o)]) {
      raise(Errc::bad_offset_set, "duplicate offset " + std::to_string(o));
    }
    in_set[static_cast<std::size_t>(o)] = 1;
  }
  for (int d = 1; d < n; ++d) {
    if (in_set[static_cast<std::size_t>(d)] == in_set[static_cast<std::size_t>(n - d)]) {
      raise(Errc::bad_offset_set,
            "offsets must contain exactly one of " + std::to_string(d) + ", " +
                std::to_string(n - d));
    }
  }
  const int wpr = words_for(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * wpr, 0);
  for (int i = 0; i < n; ++i) {
    for (int o : spec.offsets) set_arc(rows, wpr, i, (i + o) % n);
  }
  return detail::make_unchecked(n, std::move(rows));
}

RotationSpec paley_offsets(int p) {
  if (p < 3 || p % 4 != 3) raise(Errc::arg_out_of_range, "need a prime congruent to 3 mod 4");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) raise(Errc::arg_out_of_range, std::to_string(p) + " is not prime");
  }
  std::vector<char> residue(static_cast<std::size_t>(p), 0);
  for (int x = 1; x < p; ++x) {
    residue[static_cast<std::size_t>((1LL * x * x) % p)] = 1;
  }
  RotationSpec spec;
  spec.n = p;
  for (int d = 1; d < p; ++d) {
    if (residue[static_cast<std::size_t>(d)]) spec.offsets.push_back(d);
  }
  return spec;
}

Tournament paley(int p) { return rotational(paley_offsets(p)); }

Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 0) raise(Errc::arg_out_of_range, "order must be nonnegative");
  const int wpr = words_for(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * wpr, 0);
  std::uint64_t state = seed;
  fill_random(rows, n, wpr, state);
  return detail::make_unchecked(n, std::move(rows));
}

Tournament random_min_outdegree(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 0) raise(Errc::arg_out_of_range, "order and degree must be nonnegative");
  if (2 * d > n - 1) {
    raise(Errc::infeasible, "minimum outdegree " + std::to_string(d) +
                                " impossible on " + std::to_string(n) + " vertices");
  }
  const int wpr = words_for(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * wpr, 0);
  std::vector<int> out_deg(static_cast<std::size_t>(n));
  std::uint64_t state = seed;
  const long long flip_cap = 1LL * n * (n - 1) / 2;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    fill_random(rows, n, wpr, state);
    for (int v = 0; v < n; ++v) {
      int deg = 0;
      for (int w = 0; w < wpr; ++w) {
        deg += std::popcount(rows[static_cast<std::size_t>(v) * wpr + w]);
      }
      out_deg[static_cast<std::size_t>(v)] = deg;
    }
    long long flips = 0;
    bool ok = true;
    while (ok) {
      int v = -1;
      for (int i = 0; i < n; ++i) {
        if (out_deg[static_cast<std::size_t>(i)] < d) {
          v = i;
          break;
        }
      }
      if (v < 0) break;
      if (flips >= flip_cap) {
        ok = false;
        break;
      }
      // Steal an arc: the in-neighbor best able to spare one is the one with
      // the largest outdegree.
      int donor = -1;
      for (int u = 0; u < n; ++u) {
        if (u == v || !has_arc(rows, wpr, u, v)) continue;
        if (donor < 0 || out_deg[static_cast<std::size_t>(u)] > out_deg[static_cast<std::size_t>(donor)]) {
          donor = u;
        }
      }
      clear_arc(rows, wpr, donor, v);
      set_arc(rows, wpr, v, donor);
      --out_deg[static_cast<std::size_t>(donor)];
      ++out_deg[static_cast<std::size_t>(v)];
      ++flips;
    }
    if (ok) return detail::make_unchecked(n, std::move(rows));
  }
  raise(Errc::infeasible, "degree repair did not converge");
}

void enumerate_all(int n, const std::function<bool(const Tournament&)>& visit,
                   int shard_index, int shard_count) {
  if (n < 0) raise(Errc::arg_out_of_range, "order must be nonnegative");
  if (n > 7) raise(Errc::too_large, "labeled enumeration stops at order 7");
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count) {
    raise(Errc::arg_out_of_range, "bad shard arguments");
  }
  const int m = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << m;
  const std::uint64_t lo = total / shard_count * shard_index +
                           std::min<std::uint64_t>(shard_index, total % shard_count);
  const std::uint64_t take = total / shard_count + (static_cast<std::uint64_t>(shard_index) < total % shard_count ? 1 : 0);
  const int wpr = words_for(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * wpr);
  for (std::uint64_t c = lo; c < lo + take; ++c) {
    std::fill(rows.begin(), rows.end(), 0);
    int p = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++p) {
        if ((c >> (m - 1 - p)) & 1u) {
          set_arc(rows, wpr, i, j);
        } else {
          set_arc(rows, wpr, j, i);
        }
      }
    }
    if (!visit(detail::make_unchecked(n, rows))) return;
  }
}

namespace {

struct RegularEnum {
  int n;
  int r;
  int wpr;
  int shard_index;
  int shard_count;
  const std::function<bool(const Tournament&)>* visit;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::uint64_t> rows;
  std::vector<int> out_deg;
  std::vector<int> undecided;  // pairs not yet oriented that involve v

  // Returns false when the visitor asked to stop.
  bool go(std::size_t p) {
    if (p == pairs.size()) {
      return (*visit)(detail::make_unchecked(n, rows));
    }
    if (shard_count > 1 && p == static_cast<std::size_t>(n - 1)) {
      // First row complete; its bits index the shard.
      std::uint64_t prefix = 0;
      for (int j = 1; j < n; ++j) {
        prefix = (prefix << 1) | (has_arc(rows, wpr, 0, j) ? 1u : 0u);
      }
      if (prefix % static_cast<std::uint64_t>(shard_count) !=
          static_cast<std::uint64_t>(shard_index)) {
        return true;
      }
    }
    const auto [i, j] = pairs[p];
    --undecided[static_cast<std::size_t>(i)];
    --undecided[static_cast<std::size_t>(j)];
    // Arc j -> i first, then i -> j: ascending upper-triangle order.
    for (int winner : {j, i}) {
      const int loser = winner == i ? j : i;
      if (out_deg[static_cast<std::size_t>(winner)] == r) continue;
      if (out_deg[static_cast<std::size_t>(loser)] + undecided[static_cast<std::size_t>(loser)] < r) continue;
      if (out_deg[static_cast<std::size_t>(winner)] + 1 + undecided[static_cast<std::size_t>(winner)] < r) continue;
      set_arc(rows, wpr, winner, loser);
      ++out_deg[static_cast<std::size_t>(winner)];
      const bool keep_going = go(p + 1);
      --out_deg[static_cast<std::size_t>(winner)];
      clear_arc(rows, wpr, winner, loser);
      if (!keep_going) return false;
    }
    ++undecided[static_cast<std::size_t>(i)];
    ++undecided[static_cast<std::size_t>(j)];
    return true;
  }
};

}  // namespace

void enumerate_regular(int n, const std::function<bool(const Tournament&)>& visit,
                       int shard_index, int shard_count) {
  if (n < 1 || n % 2 == 0) raise(Errc::arg_out_of_range, "regular tournaments need odd order");
  if (n > 9) raise(Errc::too_large, "labeled regular enumeration stops at order 9");
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count) {
    raise(Errc::arg_out_of_range, "bad shard arguments");
  }
  if (n == 1) {
    // No pairs, so the shard filter below never applies; emit once, from the
    // first shard only.
    if (shard_index == 0) visit(detail::make_unchecked(1, std::vector<std::uint64_t>{0}));
    return;
  }
  RegularEnum e;
  e.n = n;
  e.r = (n - 1) / 2;
  e.wpr = words_for(n);
  e.shard_index = shard_index;
  e.shard_count = shard_count;
  e.visit = &visit;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.pairs.emplace_back(i, j);
  }
  e.rows.assign(static_cast<std::size_t>(n) * e.wpr, 0);
  e.out_deg.assign(static_cast<std::size_t>(n), 0);
  e.undecided.assign(static_cast<std::size_t>(n), n - 1);
  e.go(0);
}

}  // namespace trn
