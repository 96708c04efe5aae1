#include "finite_seq.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace esum {

bool operator<(const SignedComposition& a, const SignedComposition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  if (a.depth() != b.depth()) return a.depth() < b.depth();
  if (a.parts != b.parts) return a.parts < b.parts;
  return a.star < b.star;
}

Rational harmonic(long n, int p) {
  if (p < 1) throw std::invalid_argument("harmonic: p must be >= 1");
  Rational sum = 0;
  BigInt jp;
  for (long j = 1; j <= n; ++j) {
    mpz_ui_pow_ui(jp.get_mpz_t(), j, p);
    sum += rat(BigInt(1), jp);
  }
  return sum;
}

Rational harmonic_alt(long n, int p) {
  if (p < 1) throw std::invalid_argument("harmonic_alt: p must be >= 1");
  Rational sum = 0;
  BigInt jp;
  for (long j = 1; j <= n; ++j) {
    mpz_ui_pow_ui(jp.get_mpz_t(), j, p);
    Rational t = rat(BigInt(1), jp);
    if (j % 2 == 0) t = -t;
    sum += t;
  }
  return sum;
}

Rational zeta_partial(long n, int m, const Rational& a) {
  if (m < 1) throw std::invalid_argument("zeta_partial: m must be >= 1");
  Rational sum = 0;
  Rational ak = 1;
  BigInt km;
  for (long k = 1; k <= n; ++k) {
    ak *= a;
    mpz_ui_pow_ui(km.get_mpz_t(), k, m);
    sum += ak * rat(BigInt(1), km);
  }
  return sum;
}

Rational mhn(long n, const SignedComposition& c) {
  if (c.parts.empty()) return 1;
  int m = c.depth();
  if (!c.star && n < m) return 0;
  if (n <= 0) return 0;
  // acc[j] tracks zeta_k(s_j,...,s_m) (or the star variant) as k advances.
  // Strict nesting needs the suffix at k-1 (update shallow-to-deep in place),
  // weak nesting needs it at k (update deep-to-shallow).
  std::vector<Rational> acc(m + 1, Rational(0));
  acc[m] = 1;
  BigInt kp;
  auto slot_term = [&](int j, long k) {
    const SignedIndex& idx = c.parts[j];
    mpz_ui_pow_ui(kp.get_mpz_t(), k, idx.s);
    Rational t = rat(BigInt(1), kp);
    if (idx.barred && k % 2 != 0) t = -t;
    return t;
  };
  for (long k = 1; k <= n; ++k) {
    if (c.star) {
      for (int j = m - 1; j >= 0; --j) acc[j] += slot_term(j, k) * acc[j + 1];
    } else {
      for (int j = 0; j < m; ++j) acc[j] += slot_term(j, k) * acc[j + 1];
    }
  }
  return acc[0];
}

namespace {

std::mutex g_stirling_mu;
std::vector<std::vector<BigInt>> g_stirling_rows;  // row n -> s(n,0..n)

std::mutex g_bernoulli_mu;
std::vector<Rational> g_bernoulli;

}  // namespace

BigInt stirling1(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::lock_guard<std::mutex> g(g_stirling_mu);
  if (g_stirling_rows.empty()) g_stirling_rows.push_back({BigInt(1)});  // s(0,0)=1
  while (g_stirling_rows.size() <= n) {
    unsigned m = g_stirling_rows.size();
    const auto& prev = g_stirling_rows.back();
    std::vector<BigInt> row(m + 1);
    row[0] = 0;
    for (unsigned j = 1; j <= m; ++j) {
      BigInt v = (j <= m - 1 ? prev[j] * (m - 1) : BigInt(0));
      if (j - 1 <= m - 1) v += prev[j - 1];
      row[j] = v;
    }
    g_stirling_rows.push_back(std::move(row));
  }
  return g_stirling_rows[n][k];
}

Rational stirling1_harmonic(unsigned n, unsigned k) {
  // T(n,k) = s(n+1,k+1)/n! with T(n,0) = 1, via
  // T(n,k) = (1/k) sum_{j=0}^{k-1} (-1)^(k-j-1) H_n^(k-j) T(n,j).
  std::vector<Rational> T(k + 1);
  T[0] = 1;
  std::vector<Rational> H(k + 1);
  for (unsigned p = 1; p <= k; ++p) H[p] = harmonic(n, static_cast<int>(p));
  for (unsigned kk = 1; kk <= k; ++kk) {
    Rational sum = 0;
    for (unsigned j = 0; j < kk; ++j) {
      Rational term = H[kk - j] * T[j];
      if ((kk - j - 1) % 2 != 0) term = -term;
      sum += term;
    }
    T[kk] = sum / static_cast<long>(kk);
  }
  return T[k];
}

Rational bell_y(unsigned k, long n) {
  if (n < 1) throw std::invalid_argument("bell_y: n must be >= 1");
  // Y_k(n) = sum_{j=0}^{k-1} C(k-1,j) (k-j-1)! H_n^(k-j) Y_j(n), Y_0 = 1.
  std::vector<Rational> Y(k + 1);
  Y[0] = 1;
  std::vector<Rational> H(k + 1);
  for (unsigned p = 1; p <= k; ++p) H[p] = harmonic(n, static_cast<int>(p));
  for (unsigned kk = 1; kk <= k; ++kk) {
    Rational sum = 0;
    BigInt binom = 1;  // C(kk-1, j)
    BigInt fact;
    for (unsigned j = 0; j < kk; ++j) {
      if (j > 0) {
        binom *= (kk - j);
        binom /= j;
      }
      mpz_fac_ui(fact.get_mpz_t(), kk - j - 1);
      sum += rat(binom * fact, BigInt(1)) * H[kk - j] * Y[j];
    }
    Y[kk] = sum;
  }
  return Y[k];
}

Rational bernoulli(unsigned k) {
  std::lock_guard<std::mutex> g(g_bernoulli_mu);
  if (g_bernoulli.empty()) g_bernoulli.push_back(Rational(1));
  while (g_bernoulli.size() <= k) {
    unsigned m = g_bernoulli.size();
    // sum_{j=0}^{m} C(m+1,j) B_j = 0  =>  B_m = -1/(m+1) sum_{j<m} C(m+1,j) B_j
    Rational sum = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      if (j > 0) {
        binom *= (m + 2 - j);
        binom /= j;
      }
      sum += rat(binom, BigInt(1)) * g_bernoulli[j];
    }
    g_bernoulli.push_back(-sum / static_cast<long>(m + 1));
  }
  return g_bernoulli[k];
}

std::vector<Rational> newton_from_power_sums(const std::vector<Rational>& p, SymKind kind) {
  size_t m = p.size();
  std::vector<Rational> out(m);
  std::vector<Rational> f(m + 1);  // f[0] = 1 = e_0 or h_0
  f[0] = 1;
  for (size_t k = 1; k <= m; ++k) {
    Rational sum = 0;
    for (size_t i = 0; i < k; ++i) {
      Rational term = f[i] * p[k - i - 1];  // f_i * p_{k-i}
      if (kind == SymKind::elementary && i % 2 != 0) term = -term;
      sum += term;
    }
    if (kind == SymKind::elementary && k % 2 == 0) sum = -sum;
    f[k] = sum / static_cast<long>(k);
    out[k - 1] = f[k];
  }
  return out;
}

Rational sym_brute(const std::vector<Rational>& xs, unsigned m, SymKind kind) {
  if (m == 0) return 1;
  long n = static_cast<long>(xs.size());
  // acc[j] = A_j over the processed prefix, strict (<) or weak (<=) nesting.
  std::vector<Rational> acc(m + 1);
  acc[0] = 1;
  for (long k = 0; k < n; ++k) {
    if (kind == SymKind::elementary) {
      for (unsigned j = m; j >= 1; --j) acc[j] += xs[k] * acc[j - 1];
    } else {
      for (unsigned j = 1; j <= m; ++j) acc[j] += xs[k] * acc[j - 1];
    }
  }
  return acc[m];
}

}  // namespace esum
