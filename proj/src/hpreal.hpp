#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>

namespace esum {

using BigInt = mpz_class;
using Rational = mpq_class;

// Canonical rational (gcd-reduced, positive denominator).
Rational rat(long num, long den = 1);
Rational rat(const BigInt& num, const BigInt& den);

struct ConstCache;  // shared per-context cache, see cache.hpp

// Decimal precision bookkeeping: target digits requested by the caller plus
// guard digits of working headroom. All values produced under a context carry
// working_digits() significant decimal digits.
class PrecisionContext {
 public:
  explicit PrecisionContext(int target_digits);

  int target_digits() const { return target_; }
  int guard_digits() const { return guard_; }
  int working_digits() const { return target_ + guard_; }
  ConstCache& cache() const { return *cache_; }

 private:
  int target_;
  int guard_;
  std::shared_ptr<ConstCache> cache_;
};

// Floating decimal: value = mantissa * 10^exponent, with |mantissa| held to
// exactly `digits` significant decimal digits (zero is 0 * 10^0). Arithmetic
// rounds to nearest, ties to even, on the decimal digit grid, so identical
// inputs give bit-identical outputs.
class HPReal {
 public:
  HPReal() : m_(0), e_(0), dig_(0) {}

  bool is_zero() const { return sgn(m_) == 0; }
  int sign() const { return sgn(m_); }
  int digits() const { return dig_; }
  // Decimal order of magnitude: value in [10^(order-1), 10^order). 0 for zero.
  long order10() const;

  const BigInt& mantissa() const { return m_; }
  long exponent() const { return e_; }

  HPReal negated() const;

  static HPReal from_int(long v, int digits);
  static HPReal from_bigint(const BigInt& v, int digits);
  static HPReal from_rational(const Rational& q, int digits);
  static HPReal parse(const std::string& text, int digits);

  // Scientific form with all held digits; parse(to_string()) is the identity.
  std::string to_string() const;
  std::string to_string(int sig_digits) const;

  static HPReal make(BigInt m, long e, int digits);  // normalizes

 private:
  BigInt m_;
  long e_;
  int dig_;
};

// Arithmetic. Every operation rounds its result to ctx.working_digits().
HPReal add(const HPReal& a, const HPReal& b, const PrecisionContext& ctx);
HPReal sub(const HPReal& a, const HPReal& b, const PrecisionContext& ctx);
HPReal mul(const HPReal& a, const HPReal& b, const PrecisionContext& ctx);
HPReal div(const HPReal& a, const HPReal& b, const PrecisionContext& ctx);
HPReal pow_int(const HPReal& x, long k, const PrecisionContext& ctx);
HPReal hp_abs(const HPReal& a);
int cmp(const HPReal& a, const HPReal& b);

HPReal from_int(long v, const PrecisionContext& ctx);
HPReal from_rational(const Rational& q, const PrecisionContext& ctx);
HPReal parse_hp(const std::string& text, const PrecisionContext& ctx);
HPReal round_to(const HPReal& x, int digits);

// Natural logarithm (argument reduction by powers of two, atanh series).
HPReal hp_ln(const HPReal& x, const PrecisionContext& ctx);
// ln 2 at the given digit count (atanh(1/3) doubling series), cached.
HPReal ln2_value(int digits);

// Raw-digit variants used internally by the numeric kernels.
HPReal add_d(const HPReal& a, const HPReal& b, int digits);
HPReal sub_d(const HPReal& a, const HPReal& b, int digits);
HPReal mul_d(const HPReal& a, const HPReal& b, int digits);
HPReal div_d(const HPReal& a, const HPReal& b, int digits);
HPReal pow_int_d(const HPReal& x, long k, int digits);
HPReal ln_d(const HPReal& x, int digits);

// 10^k as an exact integer (k >= 0).
const BigInt& pow10z(unsigned long k);

// Convenience: crude double approximation (clamped), for estimates only.
double to_double_approx(const HPReal& x);
// floor(log10|x|) + 1 style magnitude in exact terms; -infinity -> LONG_MIN.
long magnitude_exponent(const HPReal& x);

}  // namespace esum
