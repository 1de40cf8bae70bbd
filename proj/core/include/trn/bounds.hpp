#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "trn/error.hpp"

namespace trn {

/// Exact rational arithmetic for bound values; no floating point anywhere.
struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, gcd(num, den) == 1

  Rational() = default;
  Rational(long long n, long long d);
  Rational(long long n) : num(n), den(1) {}

  long long ceil() const;
  long long floor() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b);

  std::string str() const;
};

/// Minimum-outdegree threshold functions from the disjoint-cycle literature:
///   f(k):  every digraph with min outdegree >= f(k) has k disjoint cycles;
///   g(k):  ... k disjoint cycles of k different lengths;
///   h(k,l): ... k disjoint cycles, at least l of different lengths;
///   h_star(k,l): the same threshold restricted to tournaments.
/// f(k) = h(k,1) and g(k) = h(k,k).
enum class BoundFn { f, g, h, h_star };

const char* bound_fn_name(BoundFn fn);

struct BoundEntry {
  enum class Status { exact, bounded, conjectured };

  BoundFn fn;
  int k = 0;
  int l = 0;
  Rational lower;                    // valid lower bound on the threshold
  std::optional<long long> upper;    // nullopt = no finite upper bound recorded
  Status status;                     // exact iff lower == upper (and finite)
  std::string lower_source;
  std::string upper_source;
};

/// Lower bound on h_star(k, l) from counting vertices of the cheapest
/// qualifying packing in a regular tournament: (3k - 1)/2 + (l^2 - l)/4,
/// returned as an exact rational. Requires 1 <= l <= k.
Rational hstar_lower_bound(int k, int l);

/// Ceiling of hstar_lower_bound, the usable integer bound.
long long hstar_lower_bound_ceil(int k, int l);

/// Tightest entry assembled from the recorded results for the given
/// arguments. l may be omitted for f (implied 1) and g (implied k).
/// Arguments outside the recorded tables still return an entry: the generic
/// counting lower bound with an infinite upper bound.
BoundEntry known_bounds(BoundFn fn, int k, int l = 0);

}  // namespace trn
