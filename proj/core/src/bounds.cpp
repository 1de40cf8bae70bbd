#include "trn/bounds.hpp"

#include <numeric>
#include <string>

namespace trn {

namespace {

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return std::gcd(a, b);
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) raise(Errc::arg_out_of_range, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = gcd_ll(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

long long Rational::ceil() const {
  const long long q = num / den;
  return (num % den != 0 && num > 0) ? q + 1 : q;
}

long long Rational::floor() const {
  const long long q = num / den;
  return (num % den != 0 && num < 0) ? q - 1 : q;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

const char* bound_fn_name(BoundFn fn) {
  switch (fn) {
    case BoundFn::f: return "f";
    case BoundFn::g: return "g";
    case BoundFn::h: return "h";
    case BoundFn::h_star: return "h_star";
  }
  return "?";
}

Rational hstar_lower_bound(int k, int l) {
  if (l < 1 || k < l) raise(Errc::arg_out_of_range, "need 1 <= l <= k");
  // Half of one less than the cheapest vertex count for k cycles with l
  // distinct lengths: a tournament on fewer vertices cannot hold the packing
  // and its minimum out-degree is below half its order.
  return Rational(3LL * k - 1, 2) + Rational(1LL * l * l - l, 4);
}

long long hstar_lower_bound_ceil(int k, int l) { return hstar_lower_bound(k, l).ceil(); }

namespace {

struct Upper {
  long long value;
  std::string source;
};

// Published upper bounds for the tournament threshold, direct hits only.
std::optional<Upper> hstar_upper_direct(int k, int l) {
  if (k == 1 && l == 1) return Upper{1, "classical"};
  if (k == 2 && l == 2) return Upper{4, "Tan 2021"};
  if (k == 3 && l == 3) return Upper{6, "2024 strengthening (sharp)"};
  if (l == 1) return Upper{2LL * k - 1, "Bang-Jensen, Bessy, Thomasse 2014"};
  if (l == 2 && k >= 3) return Upper{2LL * k - 1, "Chen, Chang 2024"};
  if (l == 3 && k >= 5) return Upper{2LL * k - 1, "2024 strengthening"};
  if (l == k) return Upper{(1LL * k * k + 4 * k - 3) / 2, "Bensmail et al. 2017"};
  return std::nullopt;
}

// Tightest upper after monotone closure: demanding more cycles or more
// distinct lengths never lowers the threshold, so any published bound at
// (k2 >= k, l2 >= l) applies to (k, l) as well.
std::optional<Upper> hstar_upper(int k, int l) {
  std::optional<Upper> best = hstar_upper_direct(k, l);
  for (int l2 = l; l2 <= k; ++l2) {
    for (int k2 = k; k2 <= k + 8; ++k2) {
      if (k2 == k && l2 == l) continue;
      if (l2 > k2) continue;
      const std::optional<Upper> u = hstar_upper_direct(k2, l2);
      if (!u) continue;
      if (!best || u->value < best->value) {
        best = Upper{u->value, u->source + " via monotonicity"};
      }
    }
  }
  return best;
}

BoundEntry hstar_entry(int k, int l) {
  BoundEntry e;
  e.fn = BoundFn::h_star;
  e.k = k;
  e.l = l;
  e.lower = hstar_lower_bound(k, l);
  e.lower_source = "short-cycle counting floor";
  const std::optional<Upper> u = hstar_upper(k, l);
  if (!u) {
    e.status = BoundEntry::Status::conjectured;
    return e;
  }
  e.upper = u->value;
  e.upper_source = u->source;
  if (k == 2 && l == 2) {
    // The counting floor gives only 3 here; the matching 7-vertex example is
    // part of the same published result as the upper bound.
    e.lower = Rational(4);
    e.lower_source = "Tan 2021";
    e.status = BoundEntry::Status::exact;
  } else if (e.lower.ceil() == u->value) {
    // An integer-valued threshold pinched between the floor's ceiling and a
    // matching theorem is determined.
    e.lower = Rational(u->value);
    e.status = BoundEntry::Status::exact;
  } else {
    e.status = BoundEntry::Status::bounded;
  }
  return e;
}

BoundEntry f_entry(int k) {
  BoundEntry e;
  e.fn = BoundFn::f;
  e.k = k;
  e.l = 1;
  switch (k) {
    case 1:
      e.lower = Rational(1);
      e.upper = 1;
      e.status = BoundEntry::Status::exact;
      e.lower_source = "classical";
      e.upper_source = "classical";
      return e;
    case 2:
      e.lower = Rational(3);
      e.upper = 3;
      e.status = BoundEntry::Status::exact;
      e.lower_source = "Thomassen 1983";
      e.upper_source = "Thomassen 1983";
      return e;
    case 3:
      e.lower = Rational(5);
      e.upper = 5;
      e.status = BoundEntry::Status::exact;
      e.lower_source = "Lichiardopol, Por, Sereni 2009; Bai, Manoussakis 2019";
      e.upper_source = "Lichiardopol, Por, Sereni 2009; Bai, Manoussakis 2019";
      return e;
    default:
      e.lower = Rational(2LL * k - 1);
      e.lower_source = "complete digraph (conjectured exact, Bermond, Thomassen 1981)";
      e.upper = 18LL * k;
      e.upper_source = "Bucic 2018";
      e.status = BoundEntry::Status::bounded;
      return e;
  }
}

BoundEntry g_entry(int k) {
  BoundEntry e;
  e.fn = BoundFn::g;
  e.k = k;
  e.l = k;
  if (k == 1) {
    e.lower = Rational(1);
    e.upper = 1;
    e.status = BoundEntry::Status::exact;
    e.lower_source = "classical";
    e.upper_source = "classical";
    return e;
  }
  if (k == 2) {
    e.lower = Rational(4);
    e.upper = 4;
    e.status = BoundEntry::Status::exact;
    e.lower_source = "Lichiardopol 2014";
    e.upper_source = "Lichiardopol 2014";
    return e;
  }
  // No finite upper bound is known for three or more cycles in general
  // digraphs; the tournament lower bound applies since tournaments are a
  // subclass.
  e.lower = hstar_lower_bound(k, k);
  e.lower_source = "Bensmail et al. 2017 (tournament subclass)";
  e.status = BoundEntry::Status::conjectured;
  return e;
}

BoundEntry h_entry(int k, int l) {
  if (l == 1) {
    BoundEntry e = f_entry(k);
    e.fn = BoundFn::h;
    return e;
  }
  if (l == k && k <= 2) {
    BoundEntry e = g_entry(k);
    e.fn = BoundFn::h;
    return e;
  }
  BoundEntry e;
  e.fn = BoundFn::h;
  e.k = k;
  e.l = l;
  // General digraphs: finiteness is open for two or more distinct lengths
  // beyond k = 2; the tournament floor still applies to the subclass.
  e.lower = hstar_lower_bound(k, l);
  e.lower_source = "short-cycle counting floor (tournament subclass)";
  e.status = BoundEntry::Status::conjectured;
  return e;
}

}  // namespace

BoundEntry known_bounds(BoundFn fn, int k, int l) {
  if (k < 1) raise(Errc::arg_out_of_range, "k must be positive");
  switch (fn) {
    case BoundFn::f:
      if (l != 0 && l != 1) raise(Errc::arg_out_of_range, "f takes only k");
      return f_entry(k);
    case BoundFn::g:
      if (l != 0 && l != k) raise(Errc::arg_out_of_range, "g takes only k");
      return g_entry(k);
    case BoundFn::h:
      if (l == 0) raise(Errc::arg_out_of_range, "h takes both k and l");
      return h_entry(k, l);
    case BoundFn::h_star:
      if (l == 0) raise(Errc::arg_out_of_range, "h_star takes both k and l");
      return hstar_entry(k, l);
  }
  raise(Errc::arg_out_of_range, "unknown bound function");
}

}  // namespace trn
