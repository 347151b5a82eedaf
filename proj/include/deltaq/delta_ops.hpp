// Delta operators and the symmetric functions built around them: the hook
// left- and right-hand sides, Remmel's coefficients, shifted Cauchy kernels,
// the general-nu expansions and the span experiment for plain Delta.

#pragma once

#include <utility>

#include "deltaq/hall_littlewood.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/qfield.hpp"
#include "deltaq/symfunc.hpp"

namespace deltaq {

/// Indices of a hook nu = (m-k, 1^k) acting on e_n.
struct HookParams {
  int k = 0;
  int m = 1;
  int n = 2;

  /// Throws std::invalid_argument unless 0 <= k <= m-1 and m < n.
  void validate() const;
  Partition nu() const { return Partition::hook(m - k, k); }
};

/// Delta'_F e_n at t = 0 from the expansion over H~_mu(X;0,q).
SymFunc delta_prime_t0(const SymFunc& F, int n);
/// Delta_F e_n (eigenvalue F[B_mu]) or Delta'_F e_n (F[B_mu - 1]) in q and t.
SymFunc delta_full(const SymFunc& F, int n, bool prime);

/// omega(Delta'_{s_nu} e_n |_{t=0}) evaluated at X(1-q).
SymFunc lhs_nu(const Partition& nu, int n);
/// The closed hook form built from P_mu[X;1/q].
SymFunc lhs_hook_closed(const HookParams& p);
/// The conjectured hook form built from P_mu[X;q].
SymFunc rhs_hook(const HookParams& p);

/// Remmel's coefficient c_s^{k,m}(q); zero outside m-k-1 <= s <= m+1.
CoefQT remmel_coeff(int s, const HookParams& p);
/// sum_s c_s^{k,m} h_n[X(1-q^s)] / (1-q^s).
SymFunc remmel_kernel_sum(const HookParams& p);

enum class CauchyVariant { direct, inverse };
/// The two P-expansions of h_n[X(1-q^i)]/(1-q^i).
SymFunc shifted_cauchy(int n, int i, CauchyVariant variant);
/// h_n[X(1-q^i)]/(1-q^i) computed by the alphabet transform.
SymFunc shifted_cauchy_transform(int n, int i);

/// The two sides of the GHRY hook identity at (n, k).
std::pair<SymFunc, SymFunc> ghry_sides(int n, int k);

/// The P[X;1/q]-expansion of lhs_nu.
SymFunc lhs_expansion_thm41(const Partition& nu, int n);

struct PrincipalEvaluation {
  CoefQT direct;       ///< s_nu[(1-q^{j-1})/(1-q)] via power sums
  CoefQT charge_sum;   ///< Kostka-Foulkes weighted double sum
};
PrincipalEvaluation schur_principal_eval(const Partition& nu, int j);

/// The triple-sum right-hand side for general nu.
SymFunc rhs_nu(const Partition& nu, int n);

struct SpanReport {
  int n = 0;
  int count_nu = 0;
  int rank = 0;
  int partition_count = 0;
};
/// Exact rank of {Delta_{s_nu} e_n : 1 <= |nu| <= nu_size_max} in degree n.
SpanReport span_dimension_report(int n, int nu_size_max);

/// Exact rank of a matrix over Q(q,t).
int exact_rank(const std::vector<std::vector<CoefQT>>& rows);

}  // namespace deltaq
