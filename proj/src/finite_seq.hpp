#pragma once

#include <vector>

#include "hpreal.hpp"

namespace esum {

// Index with an optional alternating-sign bar: a barred slot j contributes a
// factor (-1)^(k_j) inside nested sums.
struct SignedIndex {
  int s = 1;
  bool barred = false;

  friend bool operator==(const SignedIndex& a, const SignedIndex& b) {
    return a.s == b.s && a.barred == b.barred;
  }
  friend bool operator<(const SignedIndex& a, const SignedIndex& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.barred < b.barred;
  }
};

// Ordered composition for multiple harmonic (star) numbers and multiple zeta
// values. Empty composition denotes the value 1.
struct SignedComposition {
  std::vector<SignedIndex> parts;
  bool star = false;

  int depth() const { return static_cast<int>(parts.size()); }
  int weight() const {
    int w = 0;
    for (const auto& p : parts) w += p.s;
    return w;
  }
  // Admissible when the limit n -> infinity exists: leading exponent > 1 or
  // leading slot barred.
  bool admissible() const {
    if (parts.empty()) return true;
    return parts.front().s > 1 || parts.front().barred;
  }

  friend bool operator==(const SignedComposition& a, const SignedComposition& b) {
    return a.star == b.star && a.parts == b.parts;
  }
  friend bool operator<(const SignedComposition& a, const SignedComposition& b);
};

// H_n^(p) = sum_{j<=n} 1/j^p, H_0 = 0.
Rational harmonic(long n, int p);
// Alternating variant: sum_{j<=n} (-1)^(j-1)/j^p.
Rational harmonic_alt(long n, int p);
// Partial polylogarithm sum: zeta_n(m; a) = sum_{k<=n} a^k/k^m.
Rational zeta_partial(long n, int m, const Rational& a);

// Multiple harmonic (star) number with barred signs, exact. Returns 0 when
// n < depth for the non-star case and 1 for the empty composition.
Rational mhn(long n, const SignedComposition& c);

// Unsigned Stirling numbers of the first kind, s(n,k) = s(n-1,k-1) + (n-1)s(n-1,k).
BigInt stirling1(unsigned n, unsigned k);
// s(n+1,k+1)/n! through the harmonic-number recurrence; equals
// stirling1(n+1,k+1)/n! exactly.
Rational stirling1_harmonic(unsigned n, unsigned k);
// Bell number Y_k(n) built from H_n^(1..k); Y_0 = 1, Y_1 = H_n.
Rational bell_y(unsigned k, long n);
// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(unsigned k);

enum class SymKind { elementary, complete };

// Newton's identities: power sums -> elementary or complete symmetric
// functions, same length as the input.
std::vector<Rational> newton_from_power_sums(const std::vector<Rational>& p, SymKind kind);
// Direct nested-sum evaluation of A_m(n) (complete) or Abar_m(n) (elementary);
// the brute-force oracle for the identities above.
Rational sym_brute(const std::vector<Rational>& xs, unsigned m, SymKind kind);

}  // namespace esum
