#include "deltaq/hall_littlewood.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace deltaq {

int charge(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<bool> used(n, false);
  int remaining = n;
  int total = 0;
  while (remaining > 0) {
    int top = 0;
    for (int i = 0; i < n; ++i)
      if (!used[i]) top = std::max(top, word[i]);
    // Rightmost unused 1, then each next letter searching leftwards
    // cyclically; every wrap past the left end raises the index.
    int pos = -1;
    for (int i = n - 1; i >= 0; --i)
      if (!used[i] && word[i] == 1) {
        pos = i;
        break;
      }
    if (pos < 0) throw std::invalid_argument("charge needs a word with partition content");
    used[pos] = true;
    --remaining;
    int index = 0;
    for (int letter = 2; letter <= top; ++letter) {
      int found = -1;
      for (int i = pos - 1; i >= 0 && found < 0; --i)
        if (!used[i] && word[i] == letter) found = i;
      if (found < 0) {
        for (int i = n - 1; i > pos && found < 0; --i)
          if (!used[i] && word[i] == letter) found = i;
        if (found < 0) throw std::invalid_argument("charge needs a word with partition content");
        ++index;
      }
      total += index;
      used[found] = true;
      --remaining;
      pos = found;
    }
  }
  return total;
}

namespace {

// Reading words (rows from bottom to top, each left to right) of all SSYT of
// the given shape and content.
std::vector<std::vector<int>> ssyt_reading_words(const Partition& lambda, const Partition& mu) {
  std::vector<std::vector<int>> out;
  const int rows = lambda.length();
  std::vector<std::vector<int>> tableau(rows);
  std::function<void(int)> add_letter = [&](int letter) {
    if (letter > mu.length()) {
      std::vector<int> word;
      for (int r = rows - 1; r >= 0; --r) word.insert(word.end(), tableau[r].begin(), tableau[r].end());
      out.push_back(std::move(word));
      return;
    }
    const std::vector<int> before = [&] {
      std::vector<int> len(rows);
      for (int r = 0; r < rows; ++r) len[r] = static_cast<int>(tableau[r].size());
      return len;
    }();
    // Horizontal strip: row r may grow up to the old length of row r-1.
    std::function<void(int, int)> place = [&](int r, int left) {
      if (r == rows) {
        if (left == 0) add_letter(letter + 1);
        return;
      }
      const int cap = std::min(lambda[r], r == 0 ? lambda[0] : before[r - 1]);
      const int room = cap - before[r];
      for (int take = std::min(room, left); take >= 0; --take) {
        tableau[r].insert(tableau[r].end(), take, letter);
        place(r + 1, left - take);
        tableau[r].resize(before[r]);
      }
    };
    place(0, mu[letter - 1]);
  };
  add_letter(1);
  return out;
}

struct HallLittlewoodTables {
  std::vector<Partition> parts;
  std::map<Partition, int, PartitionOrder> index;
  std::vector<std::vector<CoefQT>> kf;  // kf[lambda][mu]
  std::vector<SymFunc> P;
};

std::shared_ptr<const HallLittlewoodTables> build_hl_tables(int n) {
  auto tab = std::make_shared<HallLittlewoodTables>();
  tab->parts = partitions_of(n);
  const int np = static_cast<int>(tab->parts.size());
  for (int i = 0; i < np; ++i) tab->index[tab->parts[i]] = i;
  tab->kf.assign(np, std::vector<CoefQT>(np));
  for (int l = 0; l < np; ++l)
    for (int m = l; m < np; ++m) {
      if (!dominates(tab->parts[l], tab->parts[m])) continue;
      Poly sum;
      for (const auto& word : ssyt_reading_words(tab->parts[l], tab->parts[m]))
        sum += Poly::monomial(1, charge(word), 0);
      tab->kf[l][m] = CoefQT(sum);
    }
  // s_lambda = sum_mu K_{lambda mu}(q) P_mu with K upper unitriangular in
  // this order, so P is solved from the last partition upward.
  tab->P.assign(np, SymFunc());
  for (int m = np - 1; m >= 0; --m) {
    SymFunc p = SymFunc::schur(tab->parts[m]);
    for (int j = m + 1; j < np; ++j)
      if (!tab->kf[m][j].is_zero()) p -= tab->P[j] * tab->kf[m][j];
    tab->P[m] = std::move(p);
  }
  return tab;
}

const HallLittlewoodTables& hl_tables(int n) {
  if (n > max_degree())
    throw DegreeLimitError("degree " + std::to_string(n) + " exceeds the working limit " +
                           std::to_string(max_degree()));
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const HallLittlewoodTables>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_hl_tables(n);
  return *slot;
}

std::atomic<int> g_two_parameter_limit{6};

}  // namespace

CoefQT kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("kostka_foulkes needs equal sizes");
  const auto& tab = hl_tables(lambda.size());
  return tab.kf[tab.index.at(lambda)][tab.index.at(mu)];
}

SymFunc hl_P(const Partition& mu, bool inverse_q) {
  const auto& tab = hl_tables(mu.size());
  const SymFunc& p = tab.P[tab.index.at(mu)];
  return inverse_q ? p.map_coefficients(invert_q) : p;
}

CoefQT hl_b(const Partition& mu) {
  CoefQT b(1);
  for (auto [part, mult] : mu.multiplicities()) b *= qpoch(mult);
  return b;
}

SymFunc hl_Q(const Partition& mu) { return hl_P(mu) * hl_b(mu); }

SymFunc transformed_H(const Partition& rho) {
  return transform(hl_Q(rho), AlphabetTransform::scale_by(CoefQT(1) / (CoefQT(1) - CoefQT::q())));
}

SymFunc modified_macdonald_t0(const Partition& mu) {
  const auto& tab = hl_tables(mu.size());
  const int m = tab.index.at(mu);
  const CoefQT shift = CoefQT::monomial(mu.nstat());
  SymFunc::Terms terms;
  for (int l = 0; l <= m; ++l)
    if (!tab.kf[l][m].is_zero()) terms.emplace(tab.parts[l], shift * invert_q(tab.kf[l][m]));
  return SymFunc::from_schur(std::move(terms));
}

MacdonaldScalars t0_specializations(const Partition& mu) {
  if (mu.empty()) throw std::invalid_argument("t0_specializations needs a nonempty partition");
  const int n = mu.size();
  const int len = mu.length();
  MacdonaldScalars r;
  r.B = qint(len);
  r.PiPrime = qpoch(len - 1);
  int exponent = 2 * mu.nstat() + n;
  CoefQT w = (n - len) % 2 == 0 ? CoefQT(1) : CoefQT(-1);
  for (auto [part, mult] : mu.multiplicities()) {
    exponent -= choose2(mult + 1);
    w *= qpoch(mult);
  }
  r.w = w * CoefQT::monomial(exponent);
  return r;
}

CoefQT w_t0_cell_product(const Partition& mu) {
  CoefQT w(1);
  for (const auto& c : mu.cell_stats()) {
    w *= CoefQT::monomial(c.leg);
    if (c.arm == 0)
      w *= CoefQT(1) - CoefQT::monomial(c.leg + 1);
    else
      w *= -CoefQT::monomial(c.leg + 1);
  }
  return w;
}

int two_parameter_limit() { return g_two_parameter_limit.load(); }
void set_two_parameter_limit(int n) {
  if (n < 0) throw std::invalid_argument("two-parameter limit must be nonnegative");
  g_two_parameter_limit.store(n);
}

SymFunc modified_macdonald_full(const Partition& mu) {
  const int n = mu.size();
  if (n > two_parameter_limit())
    throw DegreeLimitError("two-parameter Macdonald size " + std::to_string(n) + " exceeds the limit " +
                           std::to_string(two_parameter_limit()));
  if (n == 0) return SymFunc::constant(CoefQT(1));
  // French diagram: row 0 is the bottom (longest) row.
  struct Cell {
    int row, col, arm, leg;
  };
  std::vector<Cell> cells;  // reading order: top row first, left to right
  std::vector<std::vector<int>> id(mu.length());
  const Partition conj = mu.conjugate();
  for (int r = mu.length() - 1; r >= 0; --r)
    for (int c = 0; c < mu[r]; ++c) {
      id[r].push_back(static_cast<int>(cells.size()));
      cells.push_back({r, c, mu[r] - c - 1, conj[c] - r - 1});
    }
  // Attacking pairs (u before v in reading order): two cells of one row, or
  // a cell with any cell strictly to its left in the row below.
  std::vector<std::pair<int, int>> attacks;
  for (int r = 0; r < mu.length(); ++r)
    for (int c1 = 0; c1 < mu[r]; ++c1) {
      for (int c2 = c1 + 1; c2 < mu[r]; ++c2) attacks.emplace_back(id[r][c1], id[r][c2]);
      if (r > 0)
        for (int c2 = 0; c2 < c1; ++c2) attacks.emplace_back(id[r][c1], id[r - 1][c2]);
    }
  std::vector<int> below(cells.size(), -1);
  for (int r = 1; r < mu.length(); ++r)
    for (int c = 0; c < mu[r]; ++c) below[id[r][c]] = id[r - 1][c];

  Expansion monomial_terms;
  for (const auto& lambda : partitions_of(n)) {
    // All fillings with content lambda: distribute the multiset over cells.
    std::vector<int> letters;
    for (int i = 0; i < lambda.length(); ++i) letters.insert(letters.end(), lambda[i], i + 1);
    Poly weight;
    std::sort(letters.begin(), letters.end());
    do {
      int maj = 0;
      int inv = 0;
      for (std::size_t u = 0; u < cells.size(); ++u)
        if (below[u] >= 0 && letters[u] > letters[below[u]]) {
          maj += cells[u].leg + 1;
          inv -= cells[u].arm;
        }
      for (auto [u, v] : attacks)
        if (letters[u] > letters[v]) ++inv;
      weight += Poly::monomial(1, inv, maj);
    } while (std::next_permutation(letters.begin(), letters.end()));
    monomial_terms.emplace_back(lambda, CoefQT(weight));
  }
  return SymFunc::from_basis(Basis::m, monomial_terms);
}

MacdonaldScalars macdonald_scalars(const Partition& mu) {
  MacdonaldScalars r{CoefQT(), CoefQT(1), CoefQT(1)};
  const CoefQT q = CoefQT::q();
  const CoefQT t = CoefQT::t();
  for (const auto& c : mu.cell_stats()) {
    const CoefQT weight = q.pow(c.col) * t.pow(c.row);
    r.B += weight;
    if (c.row != 0 || c.col != 0) r.PiPrime *= CoefQT(1) - weight;
    r.w *= (q.pow(c.arm) - t.pow(c.leg + 1)) * (t.pow(c.leg) - q.pow(c.arm + 1));
  }
  return r;
}

}  // namespace deltaq
