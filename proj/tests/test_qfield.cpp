#include "deltaq/qfield.hpp"

#include <random>

#include "test_support.hpp"

using namespace deltaq;

namespace {

CoefQT Q(const char* s) { return CoefQT::parse(s); }

Integer binomial(int a, int b) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

CoefQT at_q_one(const CoefQT& f) { return subs(f, CoefQT(1), CoefQT::t()); }

}  // namespace

TEST_CASE("polynomial gcd normalization") {
  const CoefQT f = Q("(q^2 - 1)/(q - 1)");
  CHECK(f == Q("q + 1"));
  CHECK(Q("(2*q*t - 2*t)/(4*t^2 - 4*q*t)") == Q("(1 - q)/(2*q - 2*t)"));
  CHECK(Q("(q^3 - t^3)/(q^2 - t^2)") == Q("(q^2 + q*t + t^2)/(q + t)"));
  CHECK(Q("1/(1 - q)") - Q("q/(1 - q)") == CoefQT(1));
  CHECK(Q("(1-q)/(1-t)").denominator().leading().coef > 0);
}

TEST_CASE("field operations on random fractions") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_poly = [&] {
    Poly p;
    for (int i = 0; i < 4; ++i) p += Poly::monomial(coef(rng), coef(rng) + 3, coef(rng) + 3);
    return p;
  };
  for (int iter = 0; iter < 40; ++iter) {
    Poly a = random_poly(), b = random_poly(), c = random_poly();
    if (b.is_zero() || c.is_zero()) continue;
    const CoefQT x = CoefQT::fraction(a, b);
    const CoefQT y = CoefQT::fraction(c, b + Poly(1));
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x * y) / y == x);
    CHECK(x * (y + CoefQT(1)) == x * y + x);
    // Substitution is a ring homomorphism.
    const CoefQT qi = CoefQT::q().pow(2), ti = CoefQT::q() + CoefQT(3);
    try {
      CHECK(subs(x * y, qi, ti) == subs(x, qi, ti) * subs(y, qi, ti));
      CHECK(subs(x + y, qi, ti) == subs(x, qi, ti) + subs(y, qi, ti));
    } catch (const PoleError&) {
    }
  }
}

TEST_CASE("render and parse round trip") {
  for (const char* s : {"(q^3 - q^2 + 1)/(q - 1)", "-q^-2*t + 3/7", "(1 - q)^3*(t + q)/(q*t - 2)"}) {
    const CoefQT f = Q(s);
    CHECK(CoefQT::parse(f.to_string()) == f);
  }
  CHECK(Q("q^-1") == CoefQT::monomial(-1));
  CHECK_THROWS(Q("q +"));
  CHECK_THROWS(Q("1/0"));
}

TEST_CASE("q-Pochhammer") {
  CHECK(qpoch(0).is_one());
  CHECK(qpoch(1) == Q("1 - q"));
  CHECK(qpoch(2) == Q("1 - q - q^2 + q^3"));
  for (int m = 1; m <= 10; ++m) CHECK(qpoch(m) == qpoch(m - 1) * (CoefQT(1) - CoefQT::monomial(m)));
}

TEST_CASE("q-binomials") {
  CHECK(qbinom(2, 1) == Q("1 + q"));
  CHECK(qbinom(5, 0).is_one());
  CHECK(qbinom(1, 2).is_zero());
  CHECK(qbinom(3, -1).is_zero());
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= a; ++b) {
      const CoefQT v = qbinom(a, b);
      CHECK(v.is_polynomial());
      CHECK(v == qbinom(a, a - b));
      CHECK(at_q_one(v) == CoefQT(binomial(a, b)));
      if (1 <= b && b <= a - 1)
        CHECK(v == qbinom(a - 1, b - 1) + CoefQT::monomial(b) * qbinom(a - 1, b));
    }
}

TEST_CASE("hook-content q-binomial") {
  CHECK(qbinom_hook(2, Partition{2, 1}) == Q("1 + q"));
  CHECK(qbinom_hook(7, Partition{}).is_one());
  CHECK(qbinom_hook(2, Partition{1}) == Q("1 + q"));
  for (int n = 0; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) CHECK(qbinom_hook(n, Partition{k}) == qbinom(n, k));
}

TEST_CASE("substitution") {
  CHECK(subs(Q("1 - q"), CoefQT::monomial(-1), CoefQT::t()) == Q("(q - 1)/q"));
  CHECK(subs(Q("t*q"), CoefQT::q(), CoefQT(0)).is_zero());
  CHECK_THROWS_AS(subs(Q("1/(1 - q)"), CoefQT(1), CoefQT::t()), PoleError);
  CHECK(invert_q(Q("(1 + q^2)/(1 - q*t)")) == Q("(q^2 + 1)/(q^2 - q*t)"));
  CHECK(power_substitute(Q("(1 + q)/(1 - t)"), 3) == Q("(1 + q^3)/(1 - t^3)"));
}

TEST_CASE("shifted Pochhammer identity") {
  CHECK(neg_shift_poch_identity_check(0, 0));
  CHECK(neg_shift_poch_identity_check(1, 1));
  CHECK(neg_shift_poch_identity_check(3, 2));
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m) CHECK(neg_shift_poch_identity_check(n, m));
}
