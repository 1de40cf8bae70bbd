// Acceptance gate: ten end-to-end checks, one [PASS]/[FAIL] line each.
// Run with no arguments for the full gate, or with check numbers to run a
// subset (ctest registers one invocation per check).

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "trn/bounds.hpp"
#include "trn/campaign.hpp"
#include "trn/cycles.hpp"
#include "trn/error.hpp"
#include "trn/gen.hpp"
#include "trn/io.hpp"
#include "trn/packing.hpp"
#include "trn/structure.hpp"

namespace {

using trn::PackingSpec;
using trn::Tournament;

std::mutex note_mutex;
std::string first_note;

void note_failure(const std::string& what) {
  std::lock_guard<std::mutex> lock(note_mutex);
  if (first_note.empty()) first_note = what;
}

int shard_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw < 2) return 2;
  if (hw > 8) return 8;
  return static_cast<int>(hw);
}

// f(shard, shards) -> ok; conjunction across a thread per shard.
template <typename F>
bool run_sharded(F&& f) {
  const int shards = shard_count();
  std::atomic<bool> ok{true};
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(shards));
  for (int s = 0; s < shards; ++s) {
    threads.emplace_back([&, s]() {
      try {
        if (!f(s, shards)) ok = false;
      } catch (const std::exception& e) {
        note_failure(e.what());
        ok = false;
      }
    });
  }
  for (std::thread& t : threads) t.join();
  return ok.load();
}

// --- independent reference pieces -----------------------------------------

// Reachability closure over single-word row bitsets (n <= 64).
std::vector<std::uint64_t> closure(const Tournament& t) {
  const int n = t.size();
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && t.dominates(u, v)) reach[u] |= std::uint64_t{1} << v;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int u = 0; u < n; ++u) {
      if ((reach[u] >> k) & 1) reach[u] |= reach[k];
    }
  }
  return reach;
}

bool closure_strong(const Tournament& t) {
  const int n = t.size();
  if (n <= 1) return true;
  const auto reach = closure(t);
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  for (int u = 0; u < n; ++u) {
    if ((reach[u] | (std::uint64_t{1} << u)) != all) return false;
  }
  return true;
}

struct MaskedCycle {
  std::vector<int> verts;
  std::uint64_t mask;
};

// Every simple cycle exactly once: plain path DFS rooted at the cycle's
// smallest vertex, extending only through larger vertices.
std::vector<MaskedCycle> all_cycles_rooted(const Tournament& t) {
  const int n = t.size();
  std::vector<MaskedCycle> out;
  std::vector<int> path;
  std::uint64_t used = 0;
  const auto dfs = [&](auto&& self, int root, int v) -> void {
    path.push_back(v);
    used |= std::uint64_t{1} << v;
    if (path.size() >= 3 && t.dominates(v, root)) {
      out.push_back(MaskedCycle{path, used});
    }
    for (int w = root + 1; w < n; ++w) {
      if (!((used >> w) & 1) && t.dominates(v, w)) self(self, root, w);
    }
    used &= ~(std::uint64_t{1} << v);
    path.pop_back();
  };
  for (int root = 0; root + 2 < n; ++root) dfs(dfs, root, root);
  return out;
}

// Brute-force packing decision for k <= 2 straight from the cycle list,
// against the unnormalized length condition.
bool brute_packable(const std::vector<MaskedCycle>& cycles, const PackingSpec& spec) {
  const bool exact = spec.mode == PackingSpec::Mode::exact_lengths;
  if (spec.k == 1) {
    for (const MaskedCycle& c : cycles) {
      if (exact ? static_cast<int>(c.verts.size()) == spec.lengths[0] : true) return true;
    }
    return false;
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (cycles[i].mask & cycles[j].mask) continue;
      const int a = static_cast<int>(cycles[i].verts.size());
      const int b = static_cast<int>(cycles[j].verts.size());
      if (exact) {
        const int lo = std::min(spec.lengths[0], spec.lengths[1]);
        const int hi = std::max(spec.lengths[0], spec.lengths[1]);
        if (std::min(a, b) == lo && std::max(a, b) == hi) return true;
      } else if (spec.min_distinct <= 1 || a != b) {
        return true;
      }
    }
  }
  return false;
}

// --- the ten checks --------------------------------------------------------

// 1. Every strong tournament on up to 6 vertices has, through every vertex,
//    a cycle of every length from 3 to n, and the constructed cycle checks
//    out arc by arc. Strongness is decided by an independent closure.
bool check_moon_exhaustive() {
  const long expected_strong[] = {0, 0, 0, 2, 24, 544, 22320};
  std::atomic<long> strong_total{0};
  const bool ok = run_sharded([&](int shard, int shards) {
    long strong = 0;
    bool good = true;
    for (int n = 3; n <= 6 && good; ++n) {
      trn::enumerate_all(
          n,
          [&](const Tournament& t) {
            if (!closure_strong(t)) {
              if (trn::is_strongly_connected(t)) {
                note_failure("strong-connectivity disagreement on n=" + std::to_string(n));
                good = false;
              }
              return good;
            }
            if (!trn::is_strongly_connected(t)) {
              note_failure("strong-connectivity disagreement on n=" + std::to_string(n));
              good = false;
              return false;
            }
            ++strong;
            for (int v = 0; v < n && good; ++v) {
              for (int len = 3; len <= n; ++len) {
                const trn::Cycle c = trn::moon_cycle(t, v, len);
                if (c.length() != len || !trn::is_valid_cycle(t, c) ||
                    std::count(c.verts.begin(), c.verts.end(), v) != 1) {
                  note_failure("bad cycle for n=" + std::to_string(n) + " v=" +
                               std::to_string(v) + " len=" + std::to_string(len));
                  good = false;
                  break;
                }
              }
            }
            return good;
          },
          shard, shards);
    }
    strong_total += strong;
    return good;
  });
  long want = 0;
  for (int n = 3; n <= 6; ++n) want += expected_strong[n];
  if (ok && strong_total.load() != want) {
    note_failure("strong tournament census mismatch: " + std::to_string(strong_total.load()));
    return false;
  }
  return ok;
}

// 2. Condensation agrees with an independent reachability closure, both
//    exhaustively on small orders and on random instances up to n = 32.
bool check_condensation() {
  const auto verify = [](const Tournament& t) -> bool {
    const auto reach = closure(t);
    const trn::StrongDecomposition dec = trn::condense(t);
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      const auto verts = dec.components[i].to_vector();
      if (verts.empty()) return false;
      for (int v : verts) {
        if ((seen >> v) & 1) return false;
        seen |= std::uint64_t{1} << v;
      }
      // Mutual reachability inside the block.
      for (int u : verts) {
        for (int v : verts) {
          if (u != v && !((reach[u] >> v) & 1)) return false;
        }
      }
      // Every earlier vertex beats every vertex here, arc by arc.
      for (std::size_t j = i + 1; j < dec.components.size(); ++j) {
        for (int u : verts) {
          for (int v : dec.components[j].to_vector()) {
            if (!t.dominates(u, v)) return false;
            if ((reach[v] >> u) & 1) return false;  // no path back up
          }
        }
      }
    }
    const int n = t.size();
    if (std::popcount(seen) != n) return false;
    if (trn::is_strongly_connected(t) != (dec.components.size() == 1)) return false;
    if (trn::is_strongly_connected(t) != closure_strong(t)) return false;
    return true;
  };

  for (int n = 1; n <= 6; ++n) {
    bool good = true;
    trn::enumerate_all(n, [&](const Tournament& t) {
      if (!verify(t)) {
        note_failure("condensation wrong on an order-" + std::to_string(n) + " instance");
        good = false;
      }
      return good;
    });
    if (!good) return false;
  }
  return run_sharded([&](int shard, int shards) {
    for (long i = shard; i < 10000; i += shards) {
      const int n = 2 + static_cast<int>(trn::derive_seed(1001, static_cast<std::uint64_t>(i)) % 31);
      const Tournament t =
          trn::random_tournament(n, trn::derive_seed(1002, static_cast<std::uint64_t>(i)));
      if (!verify(t)) {
        note_failure("condensation wrong on random instance " + std::to_string(i));
        return false;
      }
    }
    return true;
  });
}

// 3. The outdegree-critical core of a random tournament is strongly
//    connected for every feasible requirement.
bool check_critical_core_strong() {
  return run_sharded([&](int shard, int shards) {
    for (long i = shard; i < 1000; i += shards) {
      const int n = 5 + static_cast<int>(trn::derive_seed(2001, static_cast<std::uint64_t>(i)) % 16);
      const Tournament t =
          trn::random_tournament(n, trn::derive_seed(2002, static_cast<std::uint64_t>(i)));
      for (int r = 1;; ++r) {
        try {
          if (!trn::critical_core_is_strong(t, r)) {
            note_failure("non-strong critical core: instance " + std::to_string(i) + " r=" +
                         std::to_string(r));
            return false;
          }
        } catch (const trn::Error& e) {
          if (e.code() != trn::Errc::requirement_exceeds_degree) {
            note_failure(std::string("unexpected error: ") + e.what());
            return false;
          }
          break;
        }
      }
    }
    return true;
  });
}

// 4. The sharpness certificate is produced by the installed CLI in under a
//    second and survives its own revalidation.
bool check_sharpness_cli() {
  const char* cli = std::getenv("TRN_CLI");
  if (cli == nullptr || *cli == '\0') {
    note_failure("TRN_CLI is not set");
    return false;
  }
  const std::string path = "acceptance_sharpness.jsonl";
  const std::string cmd =
      std::string("\"") + cli + "\" certify-sharpness --out " + path + " 2> /dev/null";
  const auto start = std::chrono::steady_clock::now();
  const int rc = std::system(cmd.c_str());
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  if (rc != 0) {
    note_failure("certify-sharpness exited with status " + std::to_string(rc));
    return false;
  }
  if (elapsed.count() >= 1000) {
    note_failure("certify-sharpness took " + std::to_string(elapsed.count()) + " ms");
    return false;
  }
  const std::string reval = std::string("\"") + cli + "\" revalidate " + path + " > /dev/null";
  if (std::system(reval.c_str()) != 0) {
    note_failure("revalidate rejected the sharpness certificate");
    return false;
  }
  return true;
}

// Shared body for the random minimum-outdegree packing sweeps.
bool packing_sweep(long instances, int n_lo, int n_hi, int d, int k, int l, std::uint64_t salt) {
  const PackingSpec spec = PackingSpec::distinct(k, l);
  return run_sharded([&](int shard, int shards) {
    for (long i = shard; i < instances; i += shards) {
      const int n = n_lo + static_cast<int>(i % (n_hi - n_lo + 1));
      const Tournament t =
          trn::random_min_outdegree(n, d, trn::derive_seed(salt, static_cast<std::uint64_t>(i)));
      const auto got = trn::find_packing(t, spec);
      if (!got.has_value()) {
        note_failure("no packing on instance " + std::to_string(i) + " (n=" + std::to_string(n) +
                     ", d=" + std::to_string(d) + ")");
        return false;
      }
      if (!trn::packing_satisfies(t, *got, spec)) {
        note_failure("invalid witness on instance " + std::to_string(i));
        return false;
      }
    }
    return true;
  });
}

// 5. Minimum outdegree 6 forces three disjoint cycles of three different
//    lengths (sampled).
bool check_pack_outdeg6() { return packing_sweep(1000, 13, 20, 6, 3, 3, 0xA5); }

// 7. Minimum outdegree 5 forces three disjoint cycles with two different
//    lengths (sampled).
bool check_pack_outdeg5() { return packing_sweep(1000, 11, 16, 5, 3, 2, 0xB7); }

// 8. Minimum outdegree 9 forces five disjoint cycles with three different
//    lengths (sampled).
bool check_pack_outdeg9() { return packing_sweep(100, 19, 24, 9, 5, 3, 0xC9); }

// 6. Every 4-regular tournament on 9 vertices has a disjoint pair of cycles
//    of different lengths, while among the 2640 labeled 3-regular
//    tournaments on 7 vertices the quadratic-residue orbit (240 labelings)
//    has none.
bool check_regular_pairs() {
  const PackingSpec pair_spec = PackingSpec::distinct(2, 2);
  std::atomic<long> nine_count{0};
  const bool nine_ok = run_sharded([&](int shard, int shards) {
    long seen = 0;
    bool good = true;
    trn::enumerate_regular(
        9,
        [&](const Tournament& t) {
          ++seen;
          if (!trn::find_packing(t, pair_spec).has_value()) {
            note_failure("4-regular instance without a two-length pair");
            good = false;
          }
          return good;
        },
        shard, shards);
    nine_count += seen;
    return good;
  });
  if (!nine_ok) return false;
  if (nine_count.load() != 3230080) {
    note_failure("4-regular census mismatch: " + std::to_string(nine_count.load()));
    return false;
  }

  std::atomic<long> seven_total{0};
  std::atomic<long> seven_failures{0};
  const bool seven_ok = run_sharded([&](int shard, int shards) {
    long total = 0, failures = 0;
    trn::enumerate_regular(
        7,
        [&](const Tournament& t) {
          ++total;
          if (!trn::find_packing(t, pair_spec).has_value()) ++failures;
          return true;
        },
        shard, shards);
    seven_total += total;
    seven_failures += failures;
    return true;
  });
  if (!seven_ok) return false;
  if (seven_total.load() != 2640) {
    note_failure("3-regular census mismatch: " + std::to_string(seven_total.load()));
    return false;
  }
  // The exception orbit: the quadratic-residue tournament on 7 vertices has
  // automorphism group of order 21, hence 7!/21 labeled copies.
  if (seven_failures.load() != 240) {
    note_failure("expected 240 exceptional labelings, found " +
                 std::to_string(seven_failures.load()));
    return false;
  }
  return true;
}

// 9. The counting lower bound is exactly (packing floor - 1) / 2, and the
//    pinched diagonal value at k = l = 3 is the exact threshold 6.
bool check_bounds_identity() {
  for (int k = 1; k <= 12; ++k) {
    for (int l = 1; l <= k; ++l) {
      const trn::Rational lhs = trn::hstar_lower_bound(k, l);
      const long floor = trn::feasibility_floor(PackingSpec::distinct(k, l));
      if (!(lhs == trn::Rational(floor - 1, 2))) {
        note_failure("floor identity fails at k=" + std::to_string(k) + " l=" +
                     std::to_string(l));
        return false;
      }
    }
  }
  if (trn::hstar_lower_bound_ceil(3, 3) != 6) {
    note_failure("ceil of the (3,3) counting bound is not 6");
    return false;
  }
  const trn::BoundEntry e = trn::known_bounds(trn::BoundFn::h_star, 3, 3);
  if (e.status != trn::BoundEntry::Status::exact || !e.upper || *e.upper != 6) {
    note_failure("(3,3) threshold entry is not exact at 6");
    return false;
  }
  return true;
}

// 10. The packing search agrees with a brute-force decision on every labeled
//     tournament with up to 7 vertices, for every spec with at most two
//     cycles, in both modes.
bool check_pack_vs_brute() {
  std::vector<PackingSpec> specs = {PackingSpec::distinct(1, 1), PackingSpec::distinct(2, 1),
                                    PackingSpec::distinct(2, 2)};
  for (int len = 3; len <= 7; ++len) specs.push_back(PackingSpec::exact({len}));
  specs.push_back(PackingSpec::exact({3, 3}));
  specs.push_back(PackingSpec::exact({3, 4}));

  return run_sharded([&](int shard, int shards) {
    bool good = true;
    for (int n = 3; n <= 7 && good; ++n) {
      trn::enumerate_all(
          n,
          [&](const Tournament& t) {
            const std::vector<MaskedCycle> cycles = all_cycles_rooted(t);
            for (const PackingSpec& spec : specs) {
              const auto got = trn::find_packing(t, spec);
              if (got.has_value() != brute_packable(cycles, spec)) {
                note_failure("search/brute disagreement on n=" + std::to_string(n));
                good = false;
                return false;
              }
              if (got.has_value() && !trn::packing_satisfies(t, *got, spec)) {
                note_failure("witness fails its own spec on n=" + std::to_string(n));
                good = false;
                return false;
              }
            }
            return true;
          },
          shard, shards);
    }
    return good;
  });
}

struct Check {
  int number;
  const char* name;
  bool (*fn)();
};

const Check kChecks[] = {
    {1, "cycle-construction-exhaustive", check_moon_exhaustive},
    {2, "condensation-against-closure", check_condensation},
    {3, "critical-core-strong", check_critical_core_strong},
    {4, "sharpness-certificate-cli", check_sharpness_cli},
    {5, "packing-min-outdegree-6", check_pack_outdeg6},
    {6, "regular-pair-coverage", check_regular_pairs},
    {7, "packing-min-outdegree-5", check_pack_outdeg5},
    {8, "packing-min-outdegree-9", check_pack_outdeg9},
    {9, "bounds-floor-identity", check_bounds_identity},
    {10, "packing-vs-brute-force", check_pack_vs_brute},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const Check& check : kChecks) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), check.number) == wanted.end()) {
      continue;
    }
    {
      std::lock_guard<std::mutex> lock(note_mutex);
      first_note.clear();
    }
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = check.fn();
    } catch (const std::exception& e) {
      note_failure(e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << check.number << " " << check.name << " (" << ms
         << " ms)";
    if (!ok) {
      std::lock_guard<std::mutex> lock(note_mutex);
      if (!first_note.empty()) line << " -- " << first_note;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
  if (failures > 0) {
    std::cout << failures << " acceptance check(s) failed" << std::endl;
    return 1;
  }
  return 0;
}
