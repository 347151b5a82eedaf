#include "deltaq/parking.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace deltaq {

DyckPath::DyckPath(std::vector<int> area_seq) : area_(std::move(area_seq)) {
  if (area_.empty()) throw std::invalid_argument("Dyck path must have at least one row");
  if (area_[0] != 0) throw std::invalid_argument("Dyck path area sequence must start at 0");
  for (std::size_t i = 1; i < area_.size(); ++i)
    if (area_[i] < 0 || area_[i] > area_[i - 1] + 1)
      throw std::invalid_argument("Dyck path area sequence must satisfy 0 <= a_{i+1} <= a_i + 1");
}

int DyckPath::area() const { return std::accumulate(area_.begin(), area_.end(), 0); }

std::vector<int> DyckPath::rises() const {
  std::vector<int> out;
  for (int i = 2; i <= size(); ++i)
    if (u(i - 1) == u(i)) out.push_back(i);
  return out;
}

ParkingFunction::ParkingFunction(DyckPath path, std::vector<int> cars)
    : path_(std::move(path)), cars_(std::move(cars)) {
  const int n = path_.size();
  if (static_cast<int>(cars_.size()) != n) throw std::invalid_argument("one car per row is required");
  std::vector<int> sorted = cars_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i + 1) throw std::invalid_argument("cars must be a permutation of 1..n");
  const auto& a = path_.area_seq();
  for (int i = 1; i < n; ++i)
    if (a[i] == a[i - 1] + 1 && cars_[i] < cars_[i - 1])
      throw std::invalid_argument("cars must increase along north segments");
}

std::vector<DyckPath> enumerate_paths(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_paths needs n >= 1");
  std::vector<DyckPath> out;
  std::vector<int> a(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.emplace_back(a);
      return;
    }
    for (int v = 0; v <= a[i - 1] + 1; ++v) {
      a[i] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

std::vector<ParkingFunction> enumerate_pfs(const DyckPath& path) {
  const int n = path.size();
  const auto& a = path.area_seq();
  std::vector<ParkingFunction> out;
  std::vector<int> cars(n);
  std::iota(cars.begin(), cars.end(), 1);
  do {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      if (a[i] == a[i - 1] + 1 && cars[i] < cars[i - 1]) ok = false;
    if (ok) out.emplace_back(path, cars);
  } while (std::next_permutation(cars.begin(), cars.end()));
  return out;
}

std::vector<ParkingFunction> enumerate_pfs(int n) {
  std::vector<ParkingFunction> out;
  for (const auto& path : enumerate_paths(n)) {
    auto pfs = enumerate_pfs(path);
    out.insert(out.end(), std::make_move_iterator(pfs.begin()), std::make_move_iterator(pfs.end()));
  }
  return out;
}

int area(const ParkingFunction& pf) { return pf.path().area(); }

int dinv(const ParkingFunction& pf) {
  const auto& a = pf.path().area_seq();
  const auto& c = pf.cars();
  int d = 0;
  for (int i = 0; i < pf.size(); ++i)
    for (int j = i + 1; j < pf.size(); ++j) {
      if (a[i] == a[j] && c[i] < c[j]) ++d;
      if (a[i] == a[j] + 1 && c[i] > c[j]) ++d;
    }
  return d;
}

std::vector<int> word(const ParkingFunction& pf) {
  const auto& a = pf.path().area_seq();
  std::vector<int> rows(pf.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::sort(rows.begin(), rows.end(), [&](int x, int y) { return a[x] != a[y] ? a[x] > a[y] : x > y; });
  std::vector<int> w;
  for (int r : rows) w.push_back(pf.cars()[r]);
  return w;
}

namespace {

// Bit i-1 is set when i is a descent of the inverse of w, i.e. when i+1
// appears before i in w.
unsigned inverse_descent_mask(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> position(n + 1);
  for (int i = 0; i < n; ++i) position[w[i]] = i;
  unsigned mask = 0;
  for (int i = 1; i < n; ++i)
    if (position[i + 1] < position[i]) mask |= 1u << (i - 1);
  return mask;
}

std::vector<int> mask_to_composition(unsigned mask, int n) {
  std::vector<int> parts;
  int last = 0;
  for (int i = 1; i < n; ++i)
    if (mask & (1u << (i - 1))) {
      parts.push_back(i - last);
      last = i;
    }
  parts.push_back(n - last);
  return parts;
}

unsigned composition_to_mask(const std::vector<int>& parts) {
  unsigned mask = 0;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    sum += parts[i];
    mask |= 1u << (sum - 1);
  }
  return mask;
}

// Turns per-descent-set weights into a symmetric function.
SymFunc aggregate(const std::map<unsigned, Poly>& by_mask, int n, IdesMode mode) {
  if (mode == IdesMode::schur) {
    SymFunc total;
    for (const auto& [mask, weight] : by_mask)
      if (!weight.is_zero()) total += composition_schur(mask_to_composition(mask, n)) * CoefQT(weight);
    return total;
  }
  // F_alpha = sum of M_beta over refinements beta of alpha, so the
  // coefficient of M_beta collects every descent set inside Set(beta).
  const unsigned full = n > 1 ? (1u << (n - 1)) : 1u;
  std::vector<Poly> monomial(full);
  for (unsigned beta = 0; beta < full; ++beta)
    for (const auto& [mask, weight] : by_mask)
      if ((mask & ~beta) == 0) monomial[beta] += weight;
  Expansion terms;
  for (unsigned beta = 0; beta < full; ++beta) {
    std::vector<int> parts = mask_to_composition(beta, n);
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const unsigned canonical = composition_to_mask(sorted);
    if (!(monomial[beta] == monomial[canonical]))
      throw NonSymmetricError("quasisymmetric aggregate is not symmetric at composition " +
                              Partition::from_unsorted(parts).to_string());
    if (beta == canonical && !monomial[beta].is_zero())
      terms.emplace_back(Partition(std::move(sorted)), CoefQT(monomial[beta]));
  }
  return SymFunc::from_basis(Basis::m, terms);
}

}  // namespace

std::vector<int> ides(const ParkingFunction& pf) {
  return mask_to_composition(inverse_descent_mask(word(pf)), pf.size());
}

std::vector<CoefQT> haglund_factor(const DyckPath& path) {
  std::vector<CoefQT> coeffs{CoefQT(1)};
  for (int i : path.rises()) {
    const CoefQT factor = CoefQT::monomial(0, -path.area_seq()[i - 1]);
    coeffs.push_back(CoefQT());
    for (std::size_t s = coeffs.size() - 1; s > 0; --s) coeffs[s] += coeffs[s - 1] * factor;
  }
  return coeffs;
}

SymFunc llt_sum(const DyckPath& path, IdesMode mode) {
  std::map<unsigned, Poly> by_mask;
  for (const auto& pf : enumerate_pfs(path))
    by_mask[inverse_descent_mask(word(pf))] += Poly::monomial(1, dinv(pf), area(pf));
  return aggregate(by_mask, path.size(), mode);
}

SymFunc delta_side_combinatorial(int n, int k, Endpoint endpoint, IdesMode mode) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("delta_side_combinatorial needs 1 <= k <= n");
  const int select = n - k;
  std::map<unsigned, Poly> by_mask;
  for (const auto& path : enumerate_paths(n)) {
    // e_{n-k} of the t^{-a_i} over rises, as (t-exponent -> count).
    const auto rises = path.rises();
    if (static_cast<int>(rises.size()) < select) continue;
    std::vector<std::map<int, long>> elem(select + 1);
    elem[0][0] = 1;
    for (int i : rises) {
      const int a = path.area_seq()[i - 1];
      for (int s = select; s > 0; --s)
        for (const auto& [e, c] : elem[s - 1]) elem[s][e - a] += c;
    }
    const int path_area = path.area();
    Poly factor;
    for (const auto& [e, c] : elem[select]) {
      const int t_exp = path_area + e;
      if (t_exp < 0) throw std::logic_error("negative t-power in the rise-selected weight");
      if (endpoint == Endpoint::t_zero && t_exp != 0) continue;
      factor += Poly::monomial(c, 0, t_exp);
    }
    if (factor.is_zero()) continue;
    for (const auto& pf : enumerate_pfs(path)) {
      const int d = dinv(pf);
      if (endpoint == Endpoint::q_zero && d != 0) continue;
      by_mask[inverse_descent_mask(word(pf))] += factor.shifted(d, 0);
    }
  }
  return aggregate(by_mask, n, mode);
}

SymFunc composition_schur(const std::vector<int>& alpha) {
  const int len = static_cast<int>(alpha.size());
  // s_alpha = det h_{alpha_i - i + j}: sort alpha_i - i decreasingly.
  std::vector<int> shifted(len);
  for (int i = 0; i < len; ++i) shifted[i] = alpha[i] - i;
  int inversions = 0;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      if (shifted[i] == shifted[j]) return SymFunc();
      if (shifted[i] < shifted[j]) ++inversions;
    }
  std::sort(shifted.begin(), shifted.end(), std::greater<>());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = shifted[i] + i;
    if (part < 0) return SymFunc();
    if (part > 0) parts.push_back(part);
  }
  return SymFunc::schur(Partition(std::move(parts)), CoefQT(inversions % 2 == 0 ? 1 : -1));
}

}  // namespace deltaq
