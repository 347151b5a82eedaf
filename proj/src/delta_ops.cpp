#include "deltaq/delta_ops.hpp"

#include <random>
#include <stdexcept>

namespace deltaq {

namespace {

const CoefQT kOne(1);

CoefQT qpow(int e) { return CoefQT::monomial(e); }

CoefQT sign(int e) { return e % 2 == 0 ? CoefQT(1) : CoefQT(-1); }

// prod_i (q;q)_{m_i(mu)}.
CoefQT multiplicity_poch(const Partition& mu) { return hl_b(mu); }

// q + q^2 + ... + q^{len-1}: the alphabet B_mu(0,q) - 1.
CoefQT t0_eigen_alphabet(int len) { return qint(len) - kOne; }

void require_positive_degree(const Partition& nu) {
  if (nu.size() < 1) throw std::invalid_argument("nu must be nonempty");
}

}  // namespace

void HookParams::validate() const {
  if (k < 0 || k > m - 1) throw std::invalid_argument("hook parameters need 0 <= k <= m-1");
  if (m >= n) throw std::invalid_argument("hook parameters need m < n");
}

SymFunc delta_prime_t0(const SymFunc& F, int n) {
  if (n < 1) throw std::invalid_argument("delta_prime_t0 needs n >= 1");
  SymFunc total;
  if (F.is_zero()) return total;
  for (const auto& mu : partitions_of(n)) {
    const CoefQT eigen = evaluate(F, AlphabetTransform::evaluate_at(t0_eigen_alphabet(mu.length())));
    if (eigen.is_zero()) continue;
    const auto s = t0_specializations(mu);
    total += modified_macdonald_t0(mu) * ((kOne - CoefQT::q()) * eigen * s.PiPrime * s.B / s.w);
  }
  return total;
}

SymFunc delta_full(const SymFunc& F, int n, bool prime) {
  if (n < 1) throw std::invalid_argument("delta_full needs n >= 1");
  SymFunc total;
  if (F.is_zero()) return total;
  const CoefQT scale = (kOne - CoefQT::q()) * (kOne - CoefQT::t());
  for (const auto& mu : partitions_of(n)) {
    const auto s = macdonald_scalars(mu);
    const CoefQT alphabet = prime ? s.B - kOne : s.B;
    const CoefQT eigen = evaluate(F, AlphabetTransform::evaluate_at(alphabet));
    if (eigen.is_zero()) continue;
    total += modified_macdonald_full(mu) * (scale * eigen * s.PiPrime * s.B / s.w);
  }
  return total;
}

SymFunc lhs_nu(const Partition& nu, int n) {
  require_positive_degree(nu);
  const SymFunc delta = delta_prime_t0(SymFunc::schur(nu), n);
  return transform(omega(delta), AlphabetTransform::scale_by(kOne - CoefQT::q()));
}

SymFunc lhs_hook_closed(const HookParams& p) {
  p.validate();
  const int k = p.k;
  const int m = p.m;
  SymFunc total;
  const CoefQT outer = qpow(m + choose2(k + 1)) * qbinom(m - 1, k);
  for (const auto& mu : partitions_of(p.n)) {
    const int len = mu.length();
    const CoefQT c = qbinom(m + len - (k + 2), m);
    if (c.is_zero()) continue;
    total += hl_P(mu, true) * (outer * qpow(-mu.nstat()) * qpoch(len) * c);
  }
  return total;
}

SymFunc rhs_hook(const HookParams& p) {
  p.validate();
  const int k = p.k;
  const int m = p.m;
  SymFunc total;
  for (int j = k + 2; j <= m + 1; ++j) {
    const CoefQT c = qpow(m + choose2(k + 2) - (k + 2) * j + 1) * qbinom(j - 2, k) * qbinom(m - 1, j - 2) * qpoch(j);
    if (c.is_zero()) continue;
    for (const auto& mu : partitions_of(p.n, j)) total += hl_P(mu) * (c * qpow(mu.nstat()));
  }
  return total;
}

namespace {

// c_s^{k,m} without its trailing factor (1 - q^s).
CoefQT remmel_coeff_reduced(int s, int k, int m) {
  if (s > m + 1 || s < m - k - 1) return CoefQT();
  const int r = m + 1 - s;
  return sign(r) * qpow(choose2(r) - (k + 1) * m + choose2(k + 1)) * qbinom(m - 1, k) * qbinom(k + 2, r);
}

}  // namespace

CoefQT remmel_coeff(int s, const HookParams& p) {
  return remmel_coeff_reduced(s, p.k, p.m) * (kOne - qpow(s));
}

SymFunc remmel_kernel_sum(const HookParams& p) {
  p.validate();
  SymFunc total;
  for (int s = std::max(1, p.m - p.k - 1); s <= p.m + 1; ++s) {
    // c_s / (1 - q^s) * h_n[X(1-q^s)]; the s = 0 term vanishes with h_n[0].
    const CoefQT c = remmel_coeff_reduced(s, p.k, p.m);
    if (c.is_zero()) continue;
    total += transform(SymFunc::h(p.n), AlphabetTransform::scale_by(kOne - qpow(s))) * c;
  }
  return total;
}

SymFunc shifted_cauchy(int n, int i, CauchyVariant variant) {
  if (i < 1) throw std::invalid_argument("shifted_cauchy needs i >= 1");
  SymFunc total;
  for (const auto& mu : partitions_of(n)) {
    CoefQT c(1);
    for (int j = 2; j <= mu.length() && !c.is_zero(); ++j)
      c *= kOne - qpow(variant == CauchyVariant::direct ? i - j + 1 : i + j - 1);
    if (c.is_zero()) continue;
    if (variant == CauchyVariant::direct)
      total += hl_P(mu) * (c * qpow(mu.nstat()));
    else
      total += hl_P(mu, true) * (c * qpow(-mu.nstat()));
  }
  return total;
}

SymFunc shifted_cauchy_transform(int n, int i) {
  if (i < 1) throw std::invalid_argument("shifted_cauchy_transform needs i >= 1");
  const CoefQT factor = kOne - qpow(i);
  return transform(SymFunc::h(n), AlphabetTransform::scale_by(factor)) * (kOne / factor);
}

std::pair<SymFunc, SymFunc> ghry_sides(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("ghry_sides needs 1 <= k <= n");
  SymFunc left;
  for (const auto& mu : partitions_of(n)) {
    const int len = mu.length();
    const CoefQT c = qbinom(len - 1, k - 1);
    if (c.is_zero()) continue;
    left += hl_P(mu, true) * (qpow(-mu.nstat()) * c * qpoch(len));
  }
  SymFunc right;
  for (const auto& mu : partitions_of(n, k)) right += hl_P(mu) * qpow(mu.nstat());
  right *= qpow(-k * (k - 1)) * qpoch(k);
  return {left, right};
}

SymFunc lhs_expansion_thm41(const Partition& nu, int n) {
  require_positive_degree(nu);
  const SymFunc s_nu = SymFunc::schur(nu);
  SymFunc total;
  for (const auto& mu : partitions_of(n)) {
    const int len = mu.length();
    const CoefQT alphabet = (kOne - qpow(len - 1)) / (kOne - CoefQT::q());
    const CoefQT value = evaluate(s_nu, AlphabetTransform::evaluate_at(alphabet));
    if (value.is_zero()) continue;
    total += hl_P(mu, true) * (value * qpow(-mu.nstat()) * qpoch(len));
  }
  return total * qpow(nu.size());
}

namespace {

// sum_{rho |- |nu|, l(rho) = k} K_{nu rho}(q) q^{n(rho)} / prod (q;q)_{m_i(rho)}.
CoefQT charge_weight(const Partition& nu, int k) {
  CoefQT sum;
  for (const auto& rho : partitions_of(nu.size(), k)) {
    const CoefQT kf = kostka_foulkes(nu, rho);
    if (!kf.is_zero()) sum += kf * qpow(rho.nstat()) / multiplicity_poch(rho);
  }
  return sum;
}

}  // namespace

PrincipalEvaluation schur_principal_eval(const Partition& nu, int j) {
  if (j < 1) throw std::invalid_argument("schur_principal_eval needs j >= 1");
  PrincipalEvaluation r;
  const CoefQT alphabet = (kOne - qpow(j - 1)) / (kOne - CoefQT::q());
  r.direct = evaluate(SymFunc::schur(nu), AlphabetTransform::evaluate_at(alphabet));
  for (int k = nu.length(); k <= nu.size(); ++k) {
    // (q;q)_{j-1} / (q;q)_{j-1-k}, which vanishes once k >= j.
    CoefQT ratio(1);
    for (int s = 1; s <= k; ++s) ratio *= kOne - qpow(j - s);
    if (ratio.is_zero()) continue;
    r.charge_sum += charge_weight(nu, k) * ratio;
  }
  return r;
}

SymFunc rhs_nu(const Partition& nu, int n) {
  require_positive_degree(nu);
  if (n < 1) throw std::invalid_argument("rhs_nu needs n >= 1");
  SymFunc total;
  for (int k = nu.length(); k <= nu.size(); ++k) {
    const CoefQT c = qpoch(k) * charge_weight(nu, k) * qpow(-k * (k + 1)) * qpoch(k + 1);
    if (c.is_zero()) continue;
    SymFunc inner;
    for (const auto& mu : partitions_of(n, k + 1)) inner += hl_P(mu) * qpow(mu.nstat());
    total += inner * c;
  }
  return total * qpow(nu.size());
}

namespace {

int rational_rank(std::vector<std::vector<mpq_class>> a) {
  int rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

int symbolic_rank(std::vector<std::vector<CoefQT>> a) {
  int rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      const CoefQT f = a[r][c] / a[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int exact_rank(const std::vector<std::vector<CoefQT>>& rows) {
  if (rows.empty()) return 0;
  const int full = static_cast<int>(std::min(rows.size(), rows[0].size()));
  // Rank at a point is a lower bound for the rank over Q(q,t); when it is
  // already maximal no symbolic elimination is needed.
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> pick(2, 97);
  for (int attempt = 0; attempt < 3; ++attempt) {
    const CoefQT qv = CoefQT::rational(pick(rng), pick(rng));
    const CoefQT tv = CoefQT::rational(pick(rng), pick(rng));
    try {
      std::vector<std::vector<mpq_class>> numeric;
      for (const auto& row : rows) {
        std::vector<mpq_class> r;
        for (const auto& x : row) r.push_back(subs(x, qv, tv).to_rational());
        numeric.push_back(std::move(r));
      }
      if (rational_rank(std::move(numeric)) == full) return full;
    } catch (const PoleError&) {
    }
  }
  return symbolic_rank(rows);
}

SpanReport span_dimension_report(int n, int nu_size_max) {
  if (n < 1) throw std::invalid_argument("span_dimension_report needs n >= 1");
  const auto basis = partitions_of(n);
  std::vector<std::vector<CoefQT>> rows;
  for (int size = 1; size <= nu_size_max; ++size)
    for (const auto& nu : partitions_of(size)) {
      const SymFunc d = delta_full(SymFunc::schur(nu), n, false);
      std::vector<CoefQT> row;
      for (const auto& lambda : basis) row.push_back(d.coeff(lambda));
      rows.push_back(std::move(row));
    }
  SpanReport r;
  r.n = n;
  r.count_nu = static_cast<int>(rows.size());
  r.rank = exact_rank(rows);
  r.partition_count = static_cast<int>(basis.size());
  return r;
}

}  // namespace deltaq
