// Kostka-Foulkes polynomials, Hall-Littlewood functions and modified
// Macdonald polynomials.
//
// One-parameter objects carry their parameter in q. The two-parameter
// modified Macdonald polynomials follow the combinatorial (inv, maj) filling
// convention, so H~_mu(X;q,t) = s_n + ... with H~_(2) = s_2 + q s_11 and
// H~_mu(X;0,q) is the cocharge Schur expansion.

#pragma once

#include <stdexcept>

#include "deltaq/partition.hpp"
#include "deltaq/qfield.hpp"
#include "deltaq/symfunc.hpp"

namespace deltaq {

/// Charge of a word whose content is a partition (letters 1..k).
int charge(const std::vector<int>& word);

/// K_{lambda mu}(q) as a sum of q^charge over SSYT of shape lambda, content mu.
CoefQT kostka_foulkes(const Partition& lambda, const Partition& mu);

/// Hall-Littlewood P_mu[X;q]; with inverse_q the coefficients are taken at 1/q.
SymFunc hl_P(const Partition& mu, bool inverse_q = false);
/// b_mu(q) = prod_i (q;q)_{m_i(mu)}.
CoefQT hl_b(const Partition& mu);
/// Q_mu = b_mu(q) P_mu.
SymFunc hl_Q(const Partition& mu);
/// H_rho[X;q] = Q_rho[X/(1-q)].
SymFunc transformed_H(const Partition& rho);

/// H~_mu(X;0,q) = sum_lambda q^{n(mu)} K_{lambda mu}(1/q) s_lambda.
SymFunc modified_macdonald_t0(const Partition& mu);

struct MacdonaldScalars {
  CoefQT B;
  CoefQT PiPrime;
  CoefQT w;
};

/// B_mu(0,q), Pi'_mu(0,q), w_mu(0,q) from their closed forms.
MacdonaldScalars t0_specializations(const Partition& mu);
/// w_mu(0,q) as the product over cells, for cross-checking the closed form.
CoefQT w_t0_cell_product(const Partition& mu);

/// Size limit for the two-parameter filling enumeration (default 6).
int two_parameter_limit();
void set_two_parameter_limit(int n);

/// H~_mu(X;q,t) from the inv/maj filling formula.
SymFunc modified_macdonald_full(const Partition& mu);
/// B_mu(q,t) = sum q^{a'} t^{l'}, Pi'_mu = prod over cells other than the
/// corner of (1 - q^{a'} t^{l'}), w_mu = prod (q^a - t^{l+1})(t^l - q^{a+1}).
MacdonaldScalars macdonald_scalars(const Partition& mu);

}  // namespace deltaq
