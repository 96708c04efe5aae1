#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hpreal.hpp"

using namespace esum;

namespace {

// |a - b| < 10^mag
bool close10(const HPReal& a, const HPReal& b, long mag, const PrecisionContext& ctx) {
  HPReal d = hp_abs(sub(a, b, ctx));
  return d.is_zero() || d.order10() <= mag;
}

}  // namespace

TEST_CASE("context construction and guard rule") {
  PrecisionContext c30(30);
  CHECK(c30.working_digits() == 40);
  PrecisionContext c100(100);
  CHECK(c100.working_digits() == 125);
  CHECK_THROWS_AS(PrecisionContext(5), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionContext(9), std::invalid_argument);
  PrecisionContext c10(10);
  CHECK(c10.working_digits() == 20);
}

TEST_CASE("basic arithmetic exactness") {
  PrecisionContext ctx(30);
  HPReal one = from_int(1, ctx), two = from_int(2, ctx), three = from_int(3, ctx);
  CHECK(cmp(add(one, two, ctx), three) == 0);

  HPReal x = from_rational(rat(355, 113), ctx);
  HPReal y = mul(x, one, ctx);
  CHECK(cmp(x, y) == 0);
  CHECK(x.mantissa() == y.mantissa());
  CHECK(x.exponent() == y.exponent());

  HPReal p = pow_int(two, 10, ctx);
  CHECK(cmp(p, from_int(1024, ctx)) == 0);
  CHECK(pow_int(two, 0, ctx).sign() == 1);

  CHECK_THROWS_AS(div(one, HPReal(), ctx), std::domain_error);
}

TEST_CASE("commutativity is bit-identical") {
  PrecisionContext ctx(30);
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 500; ++i) {
    long n1 = static_cast<long>(rng() % 2000000) - 1000000;
    long n2 = static_cast<long>(rng() % 2000000) - 1000000;
    long d1 = 1 + rng() % 99991, d2 = 1 + rng() % 99991;
    HPReal a = from_rational(rat(n1, d1), ctx);
    HPReal b = from_rational(rat(n2, d2), ctx);
    HPReal ab = add(a, b, ctx), ba = add(b, a, ctx);
    CHECK(ab.mantissa() == ba.mantissa());
    CHECK(ab.exponent() == ba.exponent());
    HPReal m1 = mul(a, b, ctx), m2 = mul(b, a, ctx);
    CHECK(m1.mantissa() == m2.mantissa());
    CHECK(m1.exponent() == m2.exponent());
  }
}

TEST_CASE("serialize round-trip is the identity") {
  PrecisionContext ctx(30);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20000; ++i) {
    long n = static_cast<long>(rng() % 4000000000L) - 2000000000L;
    long d = 1 + rng() % 999999937;
    HPReal x = from_rational(rat(n, d), ctx);
    HPReal y = parse_hp(x.to_string(), ctx);
    CHECK(x.mantissa() == y.mantissa());
    CHECK(x.exponent() == y.exponent());
  }
  CHECK(parse_hp("0", ctx).is_zero());
  CHECK(parse_hp("-3.5e-4", ctx).sign() == -1);
  CHECK_THROWS_AS(parse_hp("abc", ctx), std::invalid_argument);
}

TEST_CASE("from_rational examples") {
  PrecisionContext ctx(30);
  HPReal third = from_rational(rat(1, 3), ctx);
  std::string s = third.to_string();
  CHECK(s.substr(0, 5) == "3.333");
  CHECK(from_rational(rat(0, 1), ctx).is_zero());

  // 137/60 = 2.28333... by long division
  HPReal q = from_rational(rat(137, 60), ctx);
  CHECK(q.to_string().substr(0, 6) == "2.2833");

  // correct rounding: 2/3 at working digits ends in ...667
  HPReal t = from_rational(rat(2, 3), ctx);
  std::string ts = t.mantissa().get_str();
  CHECK(ts.back() == '7');
}

TEST_CASE("hp_ln") {
  PrecisionContext ctx(30);
  int wd = ctx.working_digits();
  CHECK(hp_ln(from_int(1, ctx), ctx).is_zero());
  CHECK_THROWS_AS(hp_ln(HPReal(), ctx), std::domain_error);
  CHECK_THROWS_AS(hp_ln(from_int(-2, ctx), ctx), std::domain_error);

  // ln(e) = 1 with e from its factorial series (independent oracle)
  HPReal e = HPReal();
  Rational term(1);
  Rational esum_r(0);
  for (int k = 1; k <= 60; ++k) {
    esum_r += term;
    term /= k;
  }
  e = from_rational(esum_r, ctx);
  CHECK(close10(hp_ln(e, ctx), from_int(1, ctx), -(wd - 2), ctx));

  // ln 4 = 2 ln 2
  HPReal ln4 = hp_ln(from_int(4, ctx), ctx);
  HPReal twoln2 = add(ln2_value(wd), ln2_value(wd), ctx);
  CHECK(close10(ln4, twoln2, -(wd - 2), ctx));

  // reference digits of ln 2
  HPReal l2 = ln2_value(wd);
  CHECK(l2.to_string(31).substr(0, 12) == "6.9314718055");
  CHECK(close10(hp_ln(from_int(2, ctx), ctx), l2, -(wd - 2), ctx));
}

TEST_CASE("monotone refinement of leading digits") {
  // A computation at higher precision never disturbs already-agreed digits.
  PrecisionContext c20(20), c40(40), c80(80);
  for (long den : {3L, 7L, 11L, 13L, 17L, 19L, 23L, 997L}) {
    HPReal a20 = from_rational(rat(1, den), c20);
    HPReal a40 = from_rational(rat(1, den), c40);
    HPReal a80 = from_rational(rat(1, den), c80);
    CHECK(close10(round_to(a40, c20.working_digits()), a20, a20.order10() - 29, c40));
    CHECK(close10(round_to(a80, c40.working_digits()), a40, a40.order10() - 49, c80));
  }
}

TEST_CASE("pow overflow guard") {
  PrecisionContext ctx(30);
  HPReal big = parse_hp("1e500000000", ctx);
  CHECK_THROWS_AS(pow_int(big, 100, ctx), std::overflow_error);
}
