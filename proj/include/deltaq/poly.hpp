// Sparse bivariate polynomials over the integers in the indeterminates q and t.
//
// Terms are kept strictly decreasing in graded-lexicographic order with q > t,
// so the first term is the leading term and equality is structural.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace deltaq {

using Integer = mpz_class;

struct Exponent {
  int q = 0;
  int t = 0;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// True when a comes strictly before b in graded-lex order (q > t).
inline bool grlex_greater(Exponent a, Exponent b) {
  const int da = a.q + a.t;
  const int db = b.q + b.t;
  if (da != db) return da > db;
  return a.q > b.q;
}

class Poly {
 public:
  struct Term {
    Exponent exp;
    Integer coef;
  };

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(const Integer& c);

  static Poly monomial(const Integer& c, int qdeg, int tdeg);
  static Poly q() { return monomial(1, 1, 0); }
  static Poly t() { return monomial(1, 0, 1); }
  /// Builds a polynomial from terms in any order; like exponents are merged.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_t_free() const;
  bool is_q_free() const;

  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }

  int degree_q() const;
  int degree_t() const;
  int min_q() const;
  int min_t() const;
  /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
  Integer content() const;
  /// Coefficient of q^qdeg t^tdeg.
  Integer coefficient(int qdeg, int tdeg) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Integer& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  /// Divides every coefficient by c; c must divide each one.
  Poly& divexact(const Integer& c);
  /// Multiplies by q^dq t^dt. Negative shifts must keep exponents nonnegative.
  Poly shifted(int dq, int dt) const;
  /// Replaces q by q^-1 and multiplies by q^degree_q(); same for t when asked.
  Poly reversed(bool in_q, bool in_t) const;

  /// Renders as "3*q^2*t - q + 1".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Quotient a/b when b divides a in Z[q,t]; nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor in Z[q,t]; leading coefficient positive.
/// gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace deltaq
