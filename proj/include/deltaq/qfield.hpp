// Exact coefficients in Q(q,t) and the q-series primitives built on them.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deltaq/partition.hpp"
#include "deltaq/poly.hpp"

namespace deltaq {

/// Raised when a substitution or evaluation makes a denominator vanish.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A rational function N/D in q and t over Q.
///
/// Invariant: N and D are coprime in Z[q,t] (including integer content) and
/// the graded-lex leading coefficient of D is positive, so every value has a
/// unique representation and == is structural.
class CoefQT {
 public:
  CoefQT() : den_(1) {}
  CoefQT(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  CoefQT(int v) : CoefQT(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  CoefQT(const Integer& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit CoefQT(Poly p) : num_(std::move(p)), den_(1) {}

  /// num/den, normalized. Throws std::domain_error when den is zero.
  static CoefQT fraction(Poly num, Poly den);
  static CoefQT rational(const Integer& num, const Integer& den);
  static CoefQT q() { return CoefQT(Poly::q()); }
  static CoefQT t() { return CoefQT(Poly::t()); }
  /// q^qe t^te with possibly negative exponents.
  static CoefQT monomial(int qe, int te = 0);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == den_; }
  bool is_polynomial() const { return den_.is_constant() && den_.leading().coef == 1; }
  /// Polynomial up to a monomial denominator.
  bool is_laurent() const { return den_.is_monomial() && den_.leading().coef == 1; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_t_free() const { return num_.is_t_free() && den_.is_t_free(); }

  CoefQT operator-() const;
  CoefQT& operator+=(const CoefQT& o);
  CoefQT& operator-=(const CoefQT& o);
  CoefQT& operator*=(const CoefQT& o);
  CoefQT& operator/=(const CoefQT& o);
  friend CoefQT operator+(CoefQT a, const CoefQT& b) { return a += b; }
  friend CoefQT operator-(CoefQT a, const CoefQT& b) { return a -= b; }
  friend CoefQT operator*(CoefQT a, const CoefQT& b) { return a *= b; }
  friend CoefQT operator/(CoefQT a, const CoefQT& b) { return a /= b; }
  friend bool operator==(const CoefQT& a, const CoefQT& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  CoefQT& mul_integer(const Integer& c);
  CoefQT& div_integer(const Integer& c);
  CoefQT inverse() const;
  /// Integer powers; negative powers invert.
  CoefQT pow(int e) const;

  /// Value as a rational number; throws unless is_constant().
  mpq_class to_rational() const;

  /// "(q^3 - q^2 + 1)/(q - 1)" or a bare polynomial when D = 1.
  std::string to_string() const;
  /// Accepts integers, q, t, + - * / ^ (integer exponents) and parentheses.
  static CoefQT parse(std::string_view text);

 private:
  CoefQT(Poly num, Poly den, bool normalize);
  void normalize();
  void fix_sign_and_content();

  Poly num_;
  Poly den_;
};

/// Sum of coefficients that defers normalization across terms sharing a
/// denominator.
class CoefSum {
 public:
  void add(const CoefQT& c);
  void add(const CoefQT& c, const Integer& mult);
  CoefQT total() const;

 private:
  std::vector<std::pair<Poly, Poly>> groups_;  // (denominator, numerator)
};

/// f with q and t replaced by the given values. Throws PoleError when the
/// denominator vanishes identically.
CoefQT subs(const CoefQT& f, const CoefQT& q_image, const CoefQT& t_image);
/// f(q^-1, t).
CoefQT invert_q(const CoefQT& f);
/// f(q^k, t^k), the plethystic image of p_k applied to a scalar.
CoefQT power_substitute(const CoefQT& f, int k);

/// (q;q)_m = (1-q)(1-q^2)...(1-q^m).
CoefQT qpoch(int m);
/// q-binomial coefficient; zero unless 0 <= b <= a.
CoefQT qbinom(int a, int b);
/// prod over cells x of lambda of (1 - q^{n - c(x)}) / (1 - q^{h(x)}).
CoefQT qbinom_hook(int n, const Partition& lambda);
/// 1 + q + ... + q^{k-1}.
CoefQT qint(int k);
/// Checks (q^-n; q)_m = q^{m(m-2n-1)/2} (-1)^m (q^{n-m+1}; q)_m by expanding both sides.
bool neg_shift_poch_identity_check(int n, int m);

/// n choose 2.
inline int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace deltaq
