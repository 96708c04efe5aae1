#include "hpreal.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <vector>

#include "cache.hpp"

namespace esum {

namespace {

constexpr long kMaxExp = 1000000000L;  // decimal exponent overflow guard

long ndigits(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  size_t est = mpz_sizeinbase(v.get_mpz_t(), 10);  // exact or one too high
  if (est > 1 && mpz_cmpabs(v.get_mpz_t(), pow10z(est - 1).get_mpz_t()) < 0) est -= 1;
  return static_cast<long>(est);
}

// Nearest integer to a/b with b > 0, ties to even.
BigInt div_half_even(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) == 0) return q;
  BigInt r2 = abs(r) * 2;
  int c = cmp(r2, b);
  bool up = c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()));
  if (up) q += (sgn(a) >= 0 ? 1 : -1);
  return q;
}

void check_exp(long e, long len) {
  if (e > kMaxExp || e < -kMaxExp || e + len > kMaxExp || e + len < -kMaxExp)
    throw std::overflow_error("hp: decimal exponent overflow");
}

}  // namespace

const BigInt& pow10z(unsigned long k) {
  static thread_local std::vector<BigInt> table{BigInt(1)};
  while (table.size() <= k) table.push_back(table.back() * 10);
  return table[k];
}

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

PrecisionContext::PrecisionContext(int target_digits)
    : target_(target_digits), cache_(std::make_shared<ConstCache>()) {
  if (target_digits < 10)
    throw std::invalid_argument("PrecisionContext: target_digits must be >= 10");
  guard_ = std::max(10, (target_digits + 3) / 4);
}

HPReal HPReal::make(BigInt m, long e, int digits) {
  if (digits <= 0) throw std::invalid_argument("HPReal: digits must be positive");
  HPReal r;
  r.dig_ = digits;
  if (sgn(m) == 0) return r;
  long len = ndigits(m);
  if (len > digits) {
    long drop = len - digits;
    m = div_half_even(m, pow10z(drop));
    e += drop;
    if (ndigits(m) > digits) {  // 999..9 rounded up to 100..0 * 10
      m = div_half_even(m, pow10z(1));
      e += 1;
    }
  } else if (len < digits) {
    m *= pow10z(digits - len);
    e -= digits - len;
  }
  check_exp(e, digits);
  r.m_ = std::move(m);
  r.e_ = e;
  return r;
}

long HPReal::order10() const {
  if (is_zero()) return 0;
  return e_ + ndigits(m_);
}

HPReal HPReal::negated() const {
  HPReal r = *this;
  r.m_ = -r.m_;
  return r;
}

HPReal HPReal::from_int(long v, int digits) { return make(BigInt(v), 0, digits); }

HPReal HPReal::from_bigint(const BigInt& v, int digits) { return make(v, 0, digits); }

HPReal HPReal::from_rational(const Rational& q, int digits) {
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (sgn(num) == 0) return HPReal::make(BigInt(0), 0, digits);
  long ln = ndigits(num), ld = ndigits(den);
  // Choose scale s so that num*10^s/den has exactly `digits` digits, then
  // round once off the exact remainder (half to even).
  long s = digits - (ln - ld);
  for (int iter = 0; iter < 4; ++iter) {
    BigInt a, b;
    if (s >= 0) {
      a = num * pow10z(s);
      b = den;
    } else {
      a = num;
      b = den * pow10z(-s);
    }
    BigInt qt, rt;
    mpz_tdiv_qr(qt.get_mpz_t(), rt.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    long lq = ndigits(qt);
    if (lq < digits) {
      s += digits - std::max(lq, 1L);
      continue;
    }
    if (lq > digits) {
      s -= lq - digits;
      continue;
    }
    if (sgn(rt) != 0) {
      BigInt r2 = abs(rt) * 2;
      int c = cmp(r2, b);
      if (c > 0 || (c == 0 && mpz_odd_p(qt.get_mpz_t()))) qt += (sgn(num) >= 0 ? 1 : -1);
      if (ndigits(qt) > digits) {  // rounding bumped 999..9 to 1000..0
        qt = div_half_even(qt, pow10z(1));
        s -= 1;
      }
    }
    return HPReal::make(std::move(qt), -s, digits);
  }
  throw std::logic_error("from_rational: scaling failed to converge");
}

HPReal HPReal::parse(const std::string& text, int digits) {
  size_t i = 0;
  bool neg = false;
  auto fail = [&](const char* msg) {
    throw std::invalid_argument(std::string("HPReal::parse: ") + msg + " in '" + text + "'");
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  std::string digs;
  long frac = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digs.push_back(c);
      seen_digit = true;
      if (seen_dot) frac++;
    } else if (c == '.') {
      if (seen_dot) fail("repeated '.'");
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      fail("unexpected character");
    }
  }
  if (!seen_digit) fail("no digits");
  long ex = 0;
  if (i < text.size()) {  // exponent part
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    if (i >= text.size()) fail("empty exponent");
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') fail("bad exponent");
      ex = ex * 10 + (text[i] - '0');
      if (ex > kMaxExp) fail("exponent overflow");
    }
    if (eneg) ex = -ex;
  }
  BigInt m(digs, 10);
  if (neg) m = -m;
  return make(std::move(m), ex - frac, digits);
}

std::string HPReal::to_string() const { return to_string(dig_ > 0 ? dig_ : 1); }

std::string HPReal::to_string(int sig_digits) const {
  if (is_zero()) return "0";
  if (sig_digits < 1) sig_digits = 1;
  BigInt m = m_;
  long e = e_;
  long len = ndigits(m);
  if (len > sig_digits) {
    m = div_half_even(m, pow10z(len - sig_digits));
    e += len - sig_digits;
    if (ndigits(m) > sig_digits) {
      m = div_half_even(m, pow10z(1));
      e += 1;
    }
    len = sig_digits;
  }
  BigInt mabs = abs(m);
  std::string digs = mabs.get_str();
  long sci = e + len - 1;  // exponent of the leading digit
  std::string out;
  if (sgn(m) < 0) out.push_back('-');
  out.push_back(digs[0]);
  if (digs.size() > 1) {
    out.push_back('.');
    out.append(digs.begin() + 1, digs.end());
  }
  out.push_back('e');
  out += std::to_string(sci);
  return out;
}

namespace {

// Magnitude-ordered pair so that |a| >= |b| (by decimal order); used to make
// addition symmetric in its operands before any rounding happens.
void order_by_magnitude(const HPReal*& a, const HPReal*& b) {
  long oa = a->order10(), ob = b->order10();
  if (oa < ob || (oa == ob && cmp(abs(b->mantissa()), abs(a->mantissa())) > 0)) std::swap(a, b);
}

}  // namespace

HPReal add_d(const HPReal& a, const HPReal& b, int digits) {
  if (a.is_zero()) return round_to(b, digits);
  if (b.is_zero()) return round_to(a, digits);
  const HPReal* hi = &a;
  const HPReal* lo = &b;
  order_by_magnitude(hi, lo);
  long shift = hi->exponent() - lo->exponent();
  long oh = hi->order10(), ol = lo->order10();
  if (oh - ol > digits + 3) return round_to(*hi, digits);
  // shift >= ol - oh - digits... bounded because orders are comparable
  BigInt m;
  long e;
  if (shift >= 0) {
    m = hi->mantissa() * pow10z(shift) + lo->mantissa();
    e = lo->exponent();
  } else {
    m = hi->mantissa() + lo->mantissa() * pow10z(-shift);
    e = hi->exponent();
  }
  return HPReal::make(std::move(m), e, digits);
}

HPReal sub_d(const HPReal& a, const HPReal& b, int digits) { return add_d(a, b.negated(), digits); }

HPReal mul_d(const HPReal& a, const HPReal& b, int digits) {
  if (a.is_zero() || b.is_zero()) return HPReal();
  const HPReal* x = &a;
  const HPReal* y = &b;
  order_by_magnitude(x, y);
  return HPReal::make(x->mantissa() * y->mantissa(), x->exponent() + y->exponent(), digits);
}

HPReal div_d(const HPReal& a, const HPReal& b, int digits) {
  if (b.is_zero()) throw std::domain_error("hp: division by zero");
  if (a.is_zero()) return HPReal();
  long la = ndigits(a.mantissa());
  long lb = ndigits(b.mantissa());
  long s = digits + 2 + (lb - la);
  if (s < 0) s = 0;
  BigInt num = a.mantissa() * pow10z(s);
  BigInt q = div_half_even(num, b.mantissa());
  return HPReal::make(std::move(q), a.exponent() - b.exponent() - s, digits);
}

HPReal pow_int_d(const HPReal& x, long k, int digits) {
  if (k == 0) return HPReal::from_int(1, digits);
  if (x.is_zero()) {
    if (k < 0) throw std::domain_error("hp: zero to negative power");
    return HPReal();
  }
  bool invert = k < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-(k + 1)) + 1UL : k;
  // overflow pre-check on the result magnitude
  long double mag = static_cast<long double>(x.order10()) * static_cast<long double>(n);
  if (std::abs(mag) > 9.0e8L) throw std::overflow_error("hp: pow_int exponent overflow");
  HPReal base = round_to(x, digits);
  HPReal acc = HPReal::from_int(1, digits);
  while (n > 0) {
    if (n & 1UL) acc = mul_d(acc, base, digits);
    n >>= 1UL;
    if (n > 0) base = mul_d(base, base, digits);
  }
  if (invert) return div_d(HPReal::from_int(1, digits), acc, digits);
  return acc;
}

HPReal round_to(const HPReal& x, int digits) {
  if (x.digits() == digits) return x;
  return HPReal::make(x.mantissa(), x.exponent(), digits);
}

HPReal hp_abs(const HPReal& a) { return a.sign() < 0 ? a.negated() : a; }

int cmp(const HPReal& a, const HPReal& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  long oa = a.order10(), ob = b.order10();
  if (oa != ob) return ((oa < ob) == (sa > 0)) ? -1 : 1;
  long shift = a.exponent() - b.exponent();
  BigInt ma = a.mantissa(), mb = b.mantissa();
  if (shift >= 0)
    ma *= pow10z(shift);
  else
    mb *= pow10z(-shift);
  return cmp(ma, mb) < 0 ? -1 : (cmp(ma, mb) > 0 ? 1 : 0);
}

HPReal add(const HPReal& a, const HPReal& b, const PrecisionContext& ctx) {
  return add_d(a, b, ctx.working_digits());
}
HPReal sub(const HPReal& a, const HPReal& b, const PrecisionContext& ctx) {
  return sub_d(a, b, ctx.working_digits());
}
HPReal mul(const HPReal& a, const HPReal& b, const PrecisionContext& ctx) {
  return mul_d(a, b, ctx.working_digits());
}
HPReal div(const HPReal& a, const HPReal& b, const PrecisionContext& ctx) {
  return div_d(a, b, ctx.working_digits());
}
HPReal pow_int(const HPReal& x, long k, const PrecisionContext& ctx) {
  return pow_int_d(x, k, ctx.working_digits());
}
HPReal from_int(long v, const PrecisionContext& ctx) {
  return HPReal::from_int(v, ctx.working_digits());
}
HPReal from_rational(const Rational& q, const PrecisionContext& ctx) {
  return HPReal::from_rational(q, ctx.working_digits());
}
HPReal parse_hp(const std::string& text, const PrecisionContext& ctx) {
  return HPReal::parse(text, ctx.working_digits());
}

HPReal ln2_value(int digits) {
  static std::mutex mu;
  static std::map<int, HPReal> cache;
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(digits);
    if (it != cache.end()) return it->second;
  }
  // ln 2 = 2 atanh(1/3) = 2 * sum_{j>=0} (1/3)^(2j+1) / (2j+1)
  int wd = digits + 8;
  HPReal term = HPReal::from_rational(rat(1, 3), wd);
  HPReal ninth = HPReal::from_rational(rat(1, 9), wd);
  HPReal sum;
  long j = 0;
  while (!term.is_zero() && term.order10() > -(wd + 2)) {
    sum = add_d(sum, div_d(term, HPReal::from_int(2 * j + 1, wd), wd), wd);
    term = mul_d(term, ninth, wd);
    ++j;
  }
  HPReal r = round_to(add_d(sum, sum, wd), digits);
  std::lock_guard<std::mutex> g(mu);
  cache.emplace(digits, r);
  return r;
}

HPReal ln_d(const HPReal& x, int digits) {
  if (x.sign() <= 0) throw std::domain_error("hp_ln: argument must be positive");
  int wd = digits + 8;
  // k = round(log2 x); y = x / 2^k lands in [~0.7, ~1.42]
  double md = mpz_get_d(x.mantissa().get_mpz_t());
  double l2 = std::log2(std::fabs(md)) + static_cast<double>(x.exponent()) * std::log2(10.0);
  long k = std::llround(l2);
  HPReal y = div_d(x, pow_int_d(HPReal::from_int(2, wd), k, wd), wd);
  HPReal one = HPReal::from_int(1, wd);
  HPReal t = div_d(sub_d(y, one, wd), add_d(y, one, wd), wd);
  HPReal t2 = mul_d(t, t, wd);
  HPReal term = t, sum;
  long j = 0;
  while (!term.is_zero() && term.order10() > -(wd + 2)) {
    sum = add_d(sum, div_d(term, HPReal::from_int(2 * j + 1, wd), wd), wd);
    term = mul_d(term, t2, wd);
    ++j;
  }
  HPReal r = add_d(sum, sum, wd);  // 2 atanh(t)
  if (k != 0) r = add_d(r, mul_d(HPReal::from_int(k, wd), ln2_value(wd), wd), wd);
  return round_to(r, digits);
}

HPReal hp_ln(const HPReal& x, const PrecisionContext& ctx) {
  return ln_d(x, ctx.working_digits());
}

double to_double_approx(const HPReal& x) {
  if (x.is_zero()) return 0.0;
  double md = mpz_get_d(x.mantissa().get_mpz_t());
  long e = x.exponent();
  if (e > 300) return x.sign() > 0 ? HUGE_VAL : -HUGE_VAL;
  if (e < -400) {
    long o = x.order10();
    if (o < -300) return 0.0;
    return md * std::pow(10.0, static_cast<double>(e));
  }
  return md * std::pow(10.0, static_cast<double>(e));
}

long magnitude_exponent(const HPReal& x) {
  if (x.is_zero()) return LONG_MIN;
  return x.order10();
}

}  // namespace esum
