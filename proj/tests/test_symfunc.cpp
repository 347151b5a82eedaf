#include "deltaq/symfunc.hpp"

#include <functional>

#include "test_support.hpp"

using namespace deltaq;

namespace {

CoefQT Q(const char* s) { return CoefQT::parse(s); }

// s_lambda(1, q, ..., q^{j-1}) by enumerating semistandard fillings.
CoefQT ssyt_principal(const Partition& lambda, int j) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> fill(lambda.length());
  for (int r = 0; r < lambda.length(); ++r) fill[r].assign(lambda[r], 0);
  Poly total;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int weight) {
    if (idx == cells.size()) {
      total += Poly::monomial(1, weight, 0);
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 0;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int v = lo; v < j; ++v) {
      fill[r][c] = v;
      rec(idx + 1, weight + v);
    }
  };
  rec(0, 0);
  return CoefQT(total);
}

}  // namespace

TEST_CASE("characters and Kostka numbers") {
  CHECK(character(Partition{1, 1}, Partition{2}) == -1);
  CHECK(character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(kostka_number(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(kostka_number(Partition{3, 2}, Partition{2, 2, 1}) == 2);
  // Column orthogonality: sum_lambda chi(rho)^2 = z_rho.
  for (int n = 1; n <= 7; ++n)
    for (const auto& rho : partitions_of(n)) {
      std::int64_t s = 0;
      for (const auto& lambda : partitions_of(n)) s += character(lambda, rho) * character(lambda, rho);
      CHECK(s == zee(rho));
    }
}

TEST_CASE("basis conversions") {
  const auto p = basis_convert(SymFunc::schur(Partition{1, 1}), Basis::p);
  REQUIRE(p.size() == 2);
  CHECK(p[0].first == Partition{2});
  CHECK(p[0].second == CoefQT::rational(-1, 2));
  CHECK(p[1].second == CoefQT::rational(1, 2));
  CHECK(SymFunc::h(2) == SymFunc::schur(Partition{2}));
  CHECK(SymFunc::e(2) == SymFunc::schur(Partition{1, 1}));
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      SymFunc f = SymFunc::schur(lambda, Q("1 + q")) + SymFunc::schur(partitions_of(n).back(), Q("t"));
      for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s})
        CHECK(SymFunc::from_basis(b, basis_convert(f, b)) == f);
    }
}

TEST_CASE("products and duality") {
  const SymFunc s1 = SymFunc::schur(Partition{1});
  CHECK(multiply(s1, s1) == SymFunc::schur(Partition{2}) + SymFunc::schur(Partition{1, 1}));
  CHECK(multiply(s1, SymFunc()).is_zero());
  // h_1 h_1 = h_2 + m_11 viewed in the monomial basis: m_2 + 2 m_11.
  CHECK(multiply(SymFunc::h(1), SymFunc::h(1)) == SymFunc::h(2) + SymFunc::monomial(Partition{1, 1}));
  // Pieri: h_2 * s_21 = s_41 + s_32 + s_311 + s_221.
  CHECK(multiply(SymFunc::h(2), SymFunc::schur(Partition{2, 1})) ==
        SymFunc::parse("s[4,1] + s[3,2] + s[3,1,1] + s[2,2,1]"));
  for (int n = 1; n <= 4; ++n) CHECK(omega(SymFunc::h(n)) == SymFunc::e(n));
  CHECK(omega(SymFunc::schur(Partition{2, 1})) == SymFunc::schur(Partition{2, 1}));
  CHECK(hall_inner(SymFunc::schur(Partition{2}), SymFunc::schur(Partition{2})).is_one());
  CHECK(hall_inner(SymFunc::schur(Partition{2}), SymFunc::schur(Partition{1, 1})).is_zero());
  CHECK(hall_inner(SymFunc::power(Partition{2}), SymFunc::power(Partition{2})) == CoefQT(2));
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      SymFunc hl = SymFunc::from_basis(Basis::h, {{lambda, CoefQT(1)}});
      for (const auto& mu : partitions_of(n))
        CHECK(hall_inner(hl, SymFunc::monomial(mu)) == CoefQT(lambda == mu ? 1 : 0));
    }
  CHECK_THROWS_AS(multiply(SymFunc::h(6), SymFunc::h(5)), DegreeLimitError);
}

TEST_CASE("rendering grammar") {
  const SymFunc f = SymFunc::parse("s[3,1]*(q+1) + s[2,2]*(-q^2)");
  CHECK(f.to_string() == "s[3,1]*(q + 1) + s[2,2]*(-q^2)");
  CHECK(SymFunc::parse(f.to_string()) == f);
  CHECK(SymFunc().to_string() == "0");
  CHECK(SymFunc::parse("p[1,1]*(1/2) - p[2]*(1/2)") == SymFunc::e(2));
  CHECK(SymFunc::parse(f.to_string(Basis::m)) == f);
  CHECK(SymFunc::parse(f.to_string(Basis::p)) == f);
  CHECK_THROWS(SymFunc::parse("s[2] + s[1]"));
}

TEST_CASE("alphabet transforms") {
  const CoefQT one_minus_q = Q("1 - q");
  CHECK(transform(SymFunc::h(1), AlphabetTransform::scale_by(one_minus_q)) == SymFunc::schur(Partition{1}, one_minus_q));
  CHECK(evaluate(SymFunc::schur(Partition{2, 1}), AlphabetTransform::evaluate_at(Q("1 + q"))) == Q("q + q^2"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const SymFunc f = SymFunc::schur(lambda, Q("1 + t"));
      CHECK(transform(f, AlphabetTransform::scale_by(CoefQT(1))) == f);
      const SymFunc g = transform(f, AlphabetTransform::scale_by(one_minus_q));
      CHECK(transform(g, AlphabetTransform::scale_by(CoefQT(1) / one_minus_q)) == f);
      for (int j = 1; j <= 4; ++j) {
        CoefQT alphabet;
        for (int i = 0; i < j; ++i) alphabet += CoefQT::monomial(i);
        CHECK(evaluate(SymFunc::schur(lambda), AlphabetTransform::evaluate_at(alphabet)) ==
              ssyt_principal(lambda, j));
      }
    }
  CHECK_THROWS(transform(SymFunc::h(1), AlphabetTransform::evaluate_at(CoefQT(1))));
}

TEST_CASE("hook expansion of h_n[X(1-u)]") {
  CHECK(hn_times_one_minus_u(1, CoefQT::q()) == SymFunc::schur(Partition{1}, Q("1 - q")));
  CHECK(hn_times_one_minus_u(2, CoefQT::q()) ==
        SymFunc::schur(Partition{2}, Q("1 - q")) + SymFunc::schur(Partition{1, 1}, Q("-q*(1 - q)")));
  CHECK(is_hook_only(hn_times_one_minus_u(5, CoefQT::t())));
  CHECK_FALSE(is_hook_only(SymFunc::schur(Partition{2, 2})));
  CHECK(is_hook_only(SymFunc()));
  for (int n = 1; n <= 6; ++n) {
    const CoefQT u = Q("q^2");
    CHECK(transform(SymFunc::h(n), AlphabetTransform::scale_by(CoefQT(1) - u)) == hn_times_one_minus_u(n, u));
  }
}
