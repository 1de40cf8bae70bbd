#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "trn/tournament.hpp"

namespace trn {

// splitmix64: the fixed 64-bit generator behind every randomized
// construction. Pure 64-bit arithmetic, so streams are identical on every
// platform.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Per-index seed for campaign instance i: one splitmix64 step of
/// seed + (i + 1) * 0x9E3779B97F4A7C15.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  return splitmix64_next(s);
}

/// Circulant orientation: i -> j iff (j - i) mod n is in offsets. Offsets
/// must contain exactly one of {d, n - d} for every d in 1..n-1, which
/// forces n odd.
struct RotationSpec {
  int n = 0;
  std::vector<int> offsets;
};

Tournament rotational(const RotationSpec& spec);

/// Quadratic-residue offsets for a prime p congruent to 3 mod 4 (so exactly
/// one of d, p - d is a residue). paley(7) uses {1, 2, 4}; paley(11) uses
/// {1, 3, 4, 5, 9}.
RotationSpec paley_offsets(int p);
Tournament paley(int p);

/// Uniform random orientation: pairs (i, j), i < j, in row-major order each
/// take the low bit of one splitmix64 draw (1 means i -> j).
Tournament random_tournament(int n, std::uint64_t seed);

/// Random tournament with minimum outdegree at least d, for d <= (n-1)/2.
/// Draws a random tournament, then repairs: while some vertex is deficient,
/// the smallest deficient vertex steals an arc from its in-neighbor of
/// maximum outdegree (ties to the smallest id). If a draw is not repaired
/// within n(n-1)/2 flips it is rejected and the next draw is taken.
Tournament random_min_outdegree(int n, int d, std::uint64_t seed);

/// All 2^(n(n-1)/2) labeled tournaments on n <= 7 vertices, lexicographic by
/// upper-triangle bits (pair (0,1) most significant, bit 1 meaning i -> j).
/// Return false from the visitor to stop. The shard arguments split the
/// stream deterministically for parallel sweeps.
void enumerate_all(int n, const std::function<bool(const Tournament&)>& visit,
                   int shard_index = 0, int shard_count = 1);

/// All labeled regular tournaments on odd n (every outdegree (n-1)/2), in
/// the enumerate_all order, found by degree-pruned backtracking rather than
/// filtering the full space. Sharding splits on the first row's orientation.
void enumerate_regular(int n, const std::function<bool(const Tournament&)>& visit,
                       int shard_index = 0, int shard_count = 1);

}  // namespace trn
