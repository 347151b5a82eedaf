// Homogeneous symmetric functions with CoefQT coefficients.
//
// Values are stored in the Schur basis. Products and plethystic alphabet
// transforms go through the power-sum basis using symmetric-group characters;
// the other classical bases go through Kostka numbers.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "deltaq/partition.hpp"
#include "deltaq/qfield.hpp"

namespace deltaq {

enum class Basis { m, e, h, p, s };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

using Expansion = std::vector<std::pair<Partition, CoefQT>>;

/// Thrown when a computation would exceed the configured working degree.
class DegreeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Working-degree guard for symmetric-function tables (default 10).
int max_degree();
void set_max_degree(int n);

class SymFunc {
 public:
  using Terms = std::map<Partition, CoefQT, PartitionOrder>;

  SymFunc() = default;

  static SymFunc schur(const Partition& lambda, const CoefQT& c = CoefQT(1));
  static SymFunc constant(const CoefQT& c) { return schur(Partition(), c); }
  /// Throws std::invalid_argument if the support is not homogeneous.
  static SymFunc from_schur(Terms terms);
  static SymFunc from_basis(Basis basis, const Expansion& terms);
  static SymFunc h(int n);
  static SymFunc e(int n);
  static SymFunc power(const Partition& rho);
  static SymFunc monomial(const Partition& lambda);

  /// -1 for the zero function.
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  CoefQT coeff(const Partition& lambda) const;

  SymFunc map_coefficients(const std::function<CoefQT(const CoefQT&)>& fn) const;

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const CoefQT& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const CoefQT& c) { return a *= c; }
  friend SymFunc operator*(const CoefQT& c, SymFunc a) { return a *= c; }
  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }

  /// "s[3,1]*(q + 1) + s[2,2]*(-q^2)"; coefficient 1 is omitted, zero is "0".
  std::string to_string(Basis basis = Basis::s) const;
  /// Parses sums of basis[parts]*(coef) terms in any of m, e, h, p, s.
  static SymFunc parse(std::string_view text);

 private:
  Terms terms_;
  int degree_ = -1;
};

/// Renders an expansion in the given basis using the SymFunc grammar.
std::string render_expansion(const Expansion& terms, Basis basis);

/// Exact expansion of f in the target basis, in reverse lexicographic order.
Expansion basis_convert(const SymFunc& f, Basis target);

SymFunc multiply(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);
/// Hall scalar product; zero when degrees differ.
CoefQT hall_inner(const SymFunc& f, const SymFunc& g);

/// A linear plethystic action on power sums.
///
/// scale: p_k -> pk_image(k) * p_k, as in X -> X(1-q).
/// evaluate: p_k -> pk_image(k), as in X -> 1 + q + ... + q^{j-1}.
struct AlphabetTransform {
  enum class Kind { scale, evaluate };
  Kind kind = Kind::scale;
  std::function<CoefQT(int)> pk_image;

  /// X -> X * A where A is a rational "alphabet" in q, t: p_k -> A(q^k, t^k) p_k.
  static AlphabetTransform scale_by(const CoefQT& alphabet);
  /// X -> A: p_k -> A(q^k, t^k).
  static AlphabetTransform evaluate_at(const CoefQT& alphabet);
};

SymFunc transform(const SymFunc& f, const AlphabetTransform& tr);
CoefQT evaluate(const SymFunc& f, const AlphabetTransform& tr);
std::variant<SymFunc, CoefQT> apply_transform(const SymFunc& f, const AlphabetTransform& tr);

bool is_hook_only(const SymFunc& f);
/// (1-u) sum_{s=0}^{n-1} (-u)^s s_{(n-s,1^s)}.
SymFunc hn_times_one_minus_u(int n, const CoefQT& u);

/// Irreducible character chi^lambda evaluated at cycle type rho.
std::int64_t character(const Partition& lambda, const Partition& rho);
/// Number of SSYT of shape lambda and content mu.
std::int64_t kostka_number(const Partition& lambda, const Partition& mu);

}  // namespace deltaq
