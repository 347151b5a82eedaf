#include "deltaq/hall_littlewood.hpp"

#include "test_support.hpp"

using namespace deltaq;

namespace {

CoefQT Q(const char* s) { return CoefQT::parse(s); }
const CoefQT q = CoefQT::q();
const CoefQT t = CoefQT::t();

CoefQT at_one(const CoefQT& f) { return subs(f, CoefQT(1), t); }

// Swap the two parameters.
CoefQT swap_qt(const CoefQT& f) { return subs(f, t, q); }

}  // namespace

TEST_CASE("charge statistic") {
  CHECK(charge({1, 2}) == 1);
  CHECK(charge({2, 1}) == 0);
  CHECK(charge({3, 1, 2}) == 2);
  CHECK(charge({2, 1, 3}) == 1);
  // Charge of the identity permutation is n choose 2.
  CHECK(charge({1, 2, 3, 4}) == 6);
}

TEST_CASE("Kostka-Foulkes small values") {
  CHECK(kostka_foulkes(Partition{2}, Partition{1, 1}) == q);
  CHECK(kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1}) == Q("q + q^2"));
  CHECK(kostka_foulkes(Partition{3, 1}, Partition{3, 1}).is_one());
  CHECK(kostka_foulkes(Partition{2, 2}, Partition{3, 1}).is_zero());
  CHECK_THROWS(kostka_foulkes(Partition{2}, Partition{1}));
}

TEST_CASE("Kostka-Foulkes structure up to degree 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts)
      for (const auto& mu : parts) {
        const CoefQT k = kostka_foulkes(lambda, mu);
        CHECK(k.is_polynomial());
        for (const auto& term : k.numerator().terms()) CHECK(term.coef > 0);
        if (lambda == mu) CHECK(k.is_one());
        if (!dominates(lambda, mu)) CHECK(k.is_zero());
        CHECK(at_one(k) == CoefQT(static_cast<long>(kostka_number(lambda, mu))));
      }
  }
}

TEST_CASE("Kostka-Foulkes against the fake-degree formula") {
  // K_{lambda,1^n}(q) = q^{n(lambda')} [n]_q! / prod_x [h(x)]_q.
  for (int n = 1; n <= 7; ++n) {
    const Partition ones(std::vector<int>(n, 1));
    for (const auto& lambda : partitions_of(n)) {
      CoefQT expected = CoefQT::monomial(lambda.conjugate().nstat()) * qpoch(n);
      for (const auto& c : lambda.cell_stats()) expected /= qpoch(c.hook) / qpoch(c.hook - 1);
      CHECK(kostka_foulkes(lambda, ones) == expected);
    }
  }
}

TEST_CASE("Hall-Littlewood P and Q") {
  CHECK(hl_P(Partition{1}) == SymFunc::schur(Partition{1}));
  CHECK(hl_P(Partition{1, 1}) == SymFunc::schur(Partition{1, 1}));
  CHECK(hl_P(Partition{2}) == SymFunc::parse("s[2] - s[1,1]*(q)"));
  CHECK(hl_Q(Partition{1}) == SymFunc::schur(Partition{1}, Q("1 - q")));
  CHECK(hl_P(Partition{2}, true) == SymFunc::parse("s[2] - s[1,1]*(q^-1)"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      // q = 0 recovers Schur functions.
      CHECK(hl_P(mu).map_coefficients([](const CoefQT& c) { return subs(c, CoefQT(0), t); }) ==
            SymFunc::schur(mu));
      // Q_mu = sum_lambda s_lambda[X(1-q)] K_{lambda mu}(q).
      SymFunc rhs;
      for (const auto& lambda : partitions_of(n))
        rhs += transform(SymFunc::schur(lambda), AlphabetTransform::scale_by(Q("1 - q"))) * kostka_foulkes(lambda, mu);
      CHECK(hl_Q(mu) == rhs);
      // P_mu(X, 1/q) = (-1)^l q^{sum C(m_i+1,2)} / prod (q;q)_{m_i} * Q_mu(X, 1/q).
      CoefQT factor = mu.length() % 2 == 0 ? CoefQT(1) : CoefQT(-1);
      for (auto [part, mult] : mu.multiplicities()) factor *= CoefQT::monomial(choose2(mult + 1)) / qpoch(mult);
      CHECK(hl_P(mu, true) == hl_Q(mu).map_coefficients(invert_q) * factor);
    }
}

TEST_CASE("Cauchy kernel in the monomial tensor basis") {
  for (int n = 1; n <= 5; ++n) {
    const auto parts = partitions_of(n);
    // Left side: sum_mu [P_mu]_m (x) [Q_mu]_m.
    std::map<std::pair<Partition, Partition>, CoefQT> lhs, rhs;
    for (const auto& mu : parts)
      for (const auto& [a, ca] : basis_convert(hl_P(mu), Basis::m))
        for (const auto& [b, cb] : basis_convert(hl_Q(mu), Basis::m)) lhs[{a, b}] += ca * cb;
    // Right side: h_n[XY(1-q)] = sum_rho prod(1-q^rho_i)/z_rho p_rho[X] p_rho[Y].
    for (const auto& rho : parts) {
      CoefQT weight = CoefQT::rational(1, zee(rho));
      for (int part : rho.parts()) weight *= CoefQT(1) - CoefQT::monomial(part);
      const auto pm = basis_convert(SymFunc::power(rho), Basis::m);
      for (const auto& [a, ca] : pm)
        for (const auto& [b, cb] : pm) rhs[{a, b}] += weight * ca * cb;
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    CHECK(lhs == rhs);
  }
}

TEST_CASE("transformed Hall-Littlewood functions") {
  CHECK(transformed_H(Partition{1}) == SymFunc::schur(Partition{1}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& rho : partitions_of(n)) {
      const SymFunc h = transformed_H(rho);
      CHECK(h.degree() == n);
      for (int j = 1; j <= 7; ++j) {
        const CoefQT value = evaluate(h, AlphabetTransform::evaluate_at(CoefQT(1) - CoefQT::monomial(j - 1)));
        CoefQT expected = CoefQT::monomial(rho.nstat());
        for (int s = 1; s <= rho.length(); ++s) expected *= CoefQT(1) - CoefQT::monomial(j - s);
        CHECK(value == expected);
      }
    }
}

TEST_CASE("modified Macdonald polynomials at t = 0") {
  CHECK(modified_macdonald_t0(Partition{1}) == SymFunc::schur(Partition{1}));
  CHECK(modified_macdonald_t0(Partition{1, 1}) == SymFunc::parse("s[2] + s[1,1]*(q)"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      const SymFunc h = modified_macdonald_t0(mu);
      for (const auto& [lambda, c] : h.terms()) CHECK(at_one(c) == CoefQT(static_cast<long>(kostka_number(lambda, mu))));
    }
}

TEST_CASE("specializations of B, Pi' and w") {
  const auto one = t0_specializations(Partition{1});
  CHECK(one.B.is_one());
  CHECK(one.PiPrime.is_one());
  CHECK(one.w == Q("1 - q"));
  CHECK(t0_specializations(Partition{1, 1}).B == Q("1 + q"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      const auto s = t0_specializations(mu);
      CHECK(s.w == w_t0_cell_product(mu));
      // The two-parameter scalars at (0, q) give the same values.
      const auto full = macdonald_scalars(mu);
      auto at0q = [](const CoefQT& f) { return subs(f, CoefQT(0), CoefQT::q()); };
      CHECK(at0q(full.B) == s.B);
      CHECK(at0q(full.PiPrime) == s.PiPrime);
      CHECK(at0q(full.w) == s.w);
    }
}

TEST_CASE("two-parameter modified Macdonald polynomials") {
  CHECK(modified_macdonald_full(Partition{1}) == SymFunc::schur(Partition{1}));
  CHECK(modified_macdonald_full(Partition{2}) == SymFunc::parse("s[2] + s[1,1]*(q)"));
  CHECK(modified_macdonald_full(Partition{1, 1}) == SymFunc::parse("s[2] + s[1,1]*(t)"));
  CHECK(modified_macdonald_full(Partition{2, 1}) == SymFunc::parse("s[3] + s[2,1]*(q + t) + s[1,1,1]*(q*t)"));
  for (int n = 1; n <= 5; ++n) {
    SymFunc en;
    for (const auto& mu : partitions_of(n)) {
      const SymFunc h = modified_macdonald_full(mu);
      CHECK(h == modified_macdonald_full(mu.conjugate()).map_coefficients(swap_qt));
      CHECK(h.map_coefficients([](const CoefQT& c) { return subs(c, CoefQT(0), CoefQT::q()); }) ==
            modified_macdonald_t0(mu));
      const auto s = macdonald_scalars(mu);
      en += h * ((CoefQT(1) - q) * (CoefQT(1) - t) * s.PiPrime * s.B / s.w);
    }
    CHECK(en == SymFunc::e(n));
  }
  CHECK_THROWS_AS(modified_macdonald_full(Partition{7}), DegreeLimitError);
}
