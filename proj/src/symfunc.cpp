#include "deltaq/symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace deltaq {

namespace {

std::atomic<int> g_max_degree{10};

// Beta-number model of a partition: beta_i = lambda_i + (L - 1 - i).
std::int64_t character_rec(const std::vector<int>& lambda, const std::vector<int>& rho,
                           std::size_t k,
                           std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  if (k == rho.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  const std::set<int> betas(beta.begin(), beta.end());
  const int r = rho[k];
  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[i];
    const int nb = b - r;
    if (nb < 0 || betas.count(nb)) continue;
    int between = 0;
    for (int other : beta)
      if (other > nb && other < b) ++between;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
    std::vector<int> next;
    for (int j = 0; j < len; ++j) {
      const int part = nbeta[j] - (len - 1 - j);
      if (part > 0) next.push_back(part);
    }
    const std::int64_t sub = character_rec(next, rho, k + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::int64_t kostka_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t len,
                        std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  int size = 0;
  for (int p : lambda) size += p;
  if (len == 0) return size == 0 ? 1 : 0;
  auto key = std::make_pair(lambda, len);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // Remove a horizontal strip of size mu[len-1] holding the largest letter.
  const int strip = mu[len - 1];
  std::int64_t total = 0;
  std::vector<int> kappa(lambda.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int removed) {
    if (i == lambda.size()) {
      if (removed != strip) return;
      std::vector<int> next;
      for (int p : kappa)
        if (p > 0) next.push_back(p);
      total += kostka_rec(next, mu, len - 1, memo);
      return;
    }
    const int lower = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int v = lambda[i]; v >= lower; --v) {
      const int take = lambda[i] - v;
      if (removed + take > strip) break;
      kappa[i] = v;
      rec(i + 1, removed + take);
    }
  };
  rec(0, 0);
  memo.emplace(std::move(key), total);
  return total;
}

struct DegreeTables {
  int n = 0;
  std::vector<Partition> parts;
  std::map<Partition, int, PartitionOrder> index;
  std::vector<std::vector<std::int64_t>> chi;     // chi[lambda][rho]
  std::vector<std::int64_t> z;
  std::vector<std::vector<std::int64_t>> kostka;  // kostka[lambda][mu]
  std::vector<int> conj;
};

std::shared_ptr<const DegreeTables> build_tables(int n) {
  auto tab = std::make_shared<DegreeTables>();
  tab->n = n;
  tab->parts = partitions_of(n);
  const int np = static_cast<int>(tab->parts.size());
  for (int i = 0; i < np; ++i) tab->index[tab->parts[i]] = i;
  tab->chi.assign(np, std::vector<std::int64_t>(np));
  tab->kostka.assign(np, std::vector<std::int64_t>(np));
  for (int r = 0; r < np; ++r) {
    std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
    for (int l = 0; l < np; ++l)
      tab->chi[l][r] = character_rec(tab->parts[l].parts(), tab->parts[r].parts(), 0, memo);
    tab->z.push_back(zee(tab->parts[r]));
  }
  for (int m = 0; m < np; ++m) {
    // The memo is keyed on the remaining prefix of mu, so it is per content.
    std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
    const auto& mu = tab->parts[m].parts();
    for (int l = 0; l < np; ++l) tab->kostka[l][m] = kostka_rec(tab->parts[l].parts(), mu, mu.size(), memo);
  }
  for (int l = 0; l < np; ++l) tab->conj.push_back(tab->index.at(tab->parts[l].conjugate()));
  return tab;
}

const DegreeTables& tables(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > max_degree())
    throw DegreeLimitError("degree " + std::to_string(n) + " exceeds the working limit " +
                           std::to_string(max_degree()));
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const DegreeTables>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_tables(n);
  return *slot;
}

using Vec = std::vector<CoefQT>;

Vec schur_vector(const SymFunc& f, const DegreeTables& tab) {
  Vec v(tab.parts.size());
  for (const auto& [lambda, c] : f.terms()) v[tab.index.at(lambda)] = c;
  return v;
}

SymFunc from_schur_vector(const Vec& v, const DegreeTables& tab) {
  SymFunc::Terms terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) terms.emplace(tab.parts[i], v[i]);
  return SymFunc::from_schur(std::move(terms));
}

Vec schur_to_power(const Vec& a, const DegreeTables& tab) {
  const std::size_t np = a.size();
  Vec b(np);
  for (std::size_t r = 0; r < np; ++r) {
    CoefSum sum;
    for (std::size_t l = 0; l < np; ++l)
      if (!a[l].is_zero() && tab.chi[l][r] != 0) sum.add(a[l], Integer(static_cast<long>(tab.chi[l][r])));
    b[r] = sum.total().div_integer(Integer(static_cast<long>(tab.z[r])));
  }
  return b;
}

Vec power_to_schur(const Vec& b, const DegreeTables& tab) {
  const std::size_t np = b.size();
  Vec a(np);
  for (std::size_t l = 0; l < np; ++l) {
    CoefSum sum;
    for (std::size_t r = 0; r < np; ++r)
      if (!b[r].is_zero() && tab.chi[l][r] != 0) sum.add(b[r], Integer(static_cast<long>(tab.chi[l][r])));
    a[l] = sum.total();
  }
  return a;
}

// m-coefficients c_mu = sum_lambda a_lambda K_{lambda mu}.
Vec schur_to_monomial(const Vec& a, const DegreeTables& tab) {
  const std::size_t np = a.size();
  Vec c(np);
  for (std::size_t m = 0; m < np; ++m) {
    CoefSum sum;
    for (std::size_t l = 0; l < np; ++l)
      if (!a[l].is_zero() && tab.kostka[l][m] != 0) sum.add(a[l], Integer(static_cast<long>(tab.kostka[l][m])));
    c[m] = sum.total();
  }
  return c;
}

// Inverse of schur_to_monomial; K is unitriangular and dominance-increasing
// partitions come first in reverse lexicographic order.
Vec monomial_to_schur(const Vec& c, const DegreeTables& tab) {
  const std::size_t np = c.size();
  Vec a(np);
  for (std::size_t m = 0; m < np; ++m) {
    CoefSum sum;
    sum.add(c[m]);
    for (std::size_t l = 0; l < m; ++l)
      if (!a[l].is_zero() && tab.kostka[l][m] != 0) sum.add(a[l], Integer(static_cast<long>(-tab.kostka[l][m])));
    a[m] = sum.total();
  }
  return a;
}

// h-coefficients d solve a_lambda = sum_mu K_{lambda mu} d_mu.
Vec schur_to_complete(const Vec& a, const DegreeTables& tab) {
  const std::size_t np = a.size();
  Vec d(np);
  for (std::size_t l = np; l-- > 0;) {
    CoefSum sum;
    sum.add(a[l]);
    for (std::size_t m = l + 1; m < np; ++m)
      if (!d[m].is_zero() && tab.kostka[l][m] != 0) sum.add(d[m], Integer(static_cast<long>(-tab.kostka[l][m])));
    d[l] = sum.total();
  }
  return d;
}

Vec complete_to_schur(const Vec& d, const DegreeTables& tab) {
  const std::size_t np = d.size();
  Vec a(np);
  for (std::size_t l = 0; l < np; ++l) {
    CoefSum sum;
    for (std::size_t m = 0; m < np; ++m)
      if (!d[m].is_zero() && tab.kostka[l][m] != 0) sum.add(d[m], Integer(static_cast<long>(tab.kostka[l][m])));
    a[l] = sum.total();
  }
  return a;
}

Vec conjugate_vector(const Vec& a, const DegreeTables& tab) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[tab.conj[i]] = a[i];
  return out;
}

Vec to_schur(Basis basis, const Vec& v, const DegreeTables& tab) {
  switch (basis) {
    case Basis::s:
      return v;
    case Basis::p:
      return power_to_schur(v, tab);
    case Basis::m:
      return monomial_to_schur(v, tab);
    case Basis::h:
      return complete_to_schur(v, tab);
    case Basis::e:
      return conjugate_vector(complete_to_schur(v, tab), tab);
  }
  throw std::logic_error("unknown basis");
}

Vec from_schur(Basis basis, const Vec& a, const DegreeTables& tab) {
  switch (basis) {
    case Basis::s:
      return a;
    case Basis::p:
      return schur_to_power(a, tab);
    case Basis::m:
      return schur_to_monomial(a, tab);
    case Basis::h:
      return schur_to_complete(a, tab);
    case Basis::e:
      return schur_to_complete(conjugate_vector(a, tab), tab);
  }
  throw std::logic_error("unknown basis");
}

}  // namespace

char basis_letter(Basis b) {
  switch (b) {
    case Basis::m:
      return 'm';
    case Basis::e:
      return 'e';
    case Basis::h:
      return 'h';
    case Basis::p:
      return 'p';
    case Basis::s:
      return 's';
  }
  return '?';
}

Basis basis_from_letter(char c) {
  switch (c) {
    case 'm':
      return Basis::m;
    case 'e':
      return Basis::e;
    case 'h':
      return Basis::h;
    case 'p':
      return Basis::p;
    case 's':
      return Basis::s;
    default:
      throw std::invalid_argument(std::string("unknown basis letter '") + c + "'");
  }
}

int max_degree() { return g_max_degree.load(); }
void set_max_degree(int n) {
  if (n < 0) throw std::invalid_argument("max degree must be nonnegative");
  g_max_degree.store(n);
}

std::int64_t character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw std::invalid_argument("character needs equal sizes");
  const auto& tab = tables(lambda.size());
  return tab.chi[tab.index.at(lambda)][tab.index.at(rho)];
}

std::int64_t kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("kostka_number needs equal sizes");
  const auto& tab = tables(lambda.size());
  return tab.kostka[tab.index.at(lambda)][tab.index.at(mu)];
}

SymFunc SymFunc::schur(const Partition& lambda, const CoefQT& c) {
  SymFunc f;
  if (c.is_zero()) return f;
  f.terms_.emplace(lambda, c);
  f.degree_ = lambda.size();
  return f;
}

SymFunc SymFunc::from_schur(Terms terms) {
  SymFunc f;
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero()) {
      it = terms.erase(it);
      continue;
    }
    if (f.degree_ < 0) f.degree_ = it->first.size();
    if (it->first.size() != f.degree_)
      throw std::invalid_argument("symmetric function terms must share one degree");
    ++it;
  }
  f.terms_ = std::move(terms);
  return f;
}

SymFunc SymFunc::from_basis(Basis basis, const Expansion& terms) {
  std::map<int, Vec> by_degree;
  for (const auto& [lambda, c] : terms) {
    if (c.is_zero()) continue;
    const auto& tab = tables(lambda.size());
    auto& v = by_degree[lambda.size()];
    if (v.empty()) v.resize(tab.parts.size());
    v[tab.index.at(lambda)] += c;
  }
  if (by_degree.size() > 1) throw std::invalid_argument("symmetric function terms must share one degree");
  if (by_degree.empty()) return SymFunc();
  const auto& tab = tables(by_degree.begin()->first);
  return from_schur_vector(to_schur(basis, by_degree.begin()->second, tab), tab);
}

SymFunc SymFunc::h(int n) { return schur(Partition(n > 0 ? std::vector<int>{n} : std::vector<int>{})); }

SymFunc SymFunc::e(int n) { return schur(Partition(std::vector<int>(n, 1))); }

SymFunc SymFunc::power(const Partition& rho) { return from_basis(Basis::p, {{rho, CoefQT(1)}}); }

SymFunc SymFunc::monomial(const Partition& lambda) { return from_basis(Basis::m, {{lambda, CoefQT(1)}}); }

CoefQT SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? CoefQT() : it->second;
}

SymFunc SymFunc::map_coefficients(const std::function<CoefQT(const CoefQT&)>& fn) const {
  Terms out;
  for (const auto& [lambda, c] : terms_) out.emplace(lambda, fn(c));
  return from_schur(std::move(out));
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [lambda, c] : r.terms_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (degree_ != o.degree_) throw std::invalid_argument("adding symmetric functions of different degrees");
  for (const auto& [lambda, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  if (terms_.empty()) degree_ = -1;
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::operator*=(const CoefQT& c) {
  if (c.is_zero()) return *this = SymFunc();
  for (auto& [lambda, v] : terms_) v *= c;
  return *this;
}

std::string render_expansion(const Expansion& terms, Basis basis) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : terms) {
    if (!first) out << " + ";
    first = false;
    out << basis_letter(basis) << lambda.to_string();
    if (!c.is_one()) out << "*(" << c.to_string() << ")";
  }
  return out.str();
}

std::string SymFunc::to_string(Basis basis) const {
  if (basis == Basis::s) {
    Expansion e(terms_.begin(), terms_.end());
    return render_expansion(e, basis);
  }
  return render_expansion(basis_convert(*this, basis), basis);
}

namespace {

class SymParser {
 public:
  explicit SymParser(std::string_view s) : s_(s) {}

  SymFunc parse_all() {
    skip();
    if (s_.substr(pos_) == "0") return SymFunc();
    SymFunc total;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    while (true) {
      SymFunc term = parse_term();
      total += negate ? -term : term;
      skip();
      if (pos_ == s_.size()) break;
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        fail("expected '+' or '-'");
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("symmetric function parse error: ") + what +
                                " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_basis() {
    skip();
    if (pos_ + 1 >= s_.size()) return false;
    const char c = s_[pos_];
    std::size_t j = pos_ + 1;
    while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    return (c == 'm' || c == 'e' || c == 'h' || c == 'p' || c == 's') && j < s_.size() && s_[j] == '[';
  }
  // One coefficient factor: a parenthesized expression or a bare atom with
  // an optional exponent.
  CoefQT parse_coef_factor() {
    skip();
    std::size_t start = pos_;
    if (accept('(')) {
      int depth = 1;
      while (pos_ < s_.size() && depth > 0) {
        if (s_[pos_] == '(') ++depth;
        if (s_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth != 0) fail("unbalanced parentheses");
    } else {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
      if (start == pos_) fail("expected coefficient");
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '(')) {
        if (s_[pos_] == '(') {
          while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
          ++pos_;
        } else {
          ++pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
      } else {
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    return CoefQT::parse(s_.substr(start, pos_ - start));
  }
  SymFunc parse_term() {
    CoefQT coef(1);
    std::optional<std::pair<Basis, Partition>> element;
    while (true) {
      if (at_basis()) {
        if (element) fail("two basis elements in one term");
        const Basis b = basis_from_letter(s_[pos_]);
        ++pos_;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
        if (pos_ == s_.size()) fail("unterminated partition");
        ++pos_;
        element.emplace(b, Partition::parse(s_.substr(start, pos_ - start)));
      } else {
        coef *= parse_coef_factor();
      }
      if (!accept('*')) break;
    }
    if (!element) fail("term without a basis element");
    return SymFunc::from_basis(element->first, {{element->second, coef}});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SymFunc SymFunc::parse(std::string_view text) { return SymParser(text).parse_all(); }

Expansion basis_convert(const SymFunc& f, Basis target) {
  Expansion out;
  if (f.is_zero()) return out;
  const auto& tab = tables(f.degree());
  const Vec v = from_schur(target, schur_vector(f, tab), tab);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(tab.parts[i], v[i]);
  return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  if (f.is_zero() || g.is_zero()) return SymFunc();
  const int n = f.degree() + g.degree();
  if (n > max_degree())
    throw DegreeLimitError("product degree " + std::to_string(n) + " exceeds the working limit");
  const auto& tf = tables(f.degree());
  const auto& tg = tables(g.degree());
  const auto& tab = tables(n);
  const Vec a = schur_to_power(schur_vector(f, tf), tf);
  const Vec b = schur_to_power(schur_vector(g, tg), tg);
  Vec prod(tab.parts.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      std::vector<int> merged = tf.parts[i].parts();
      merged.insert(merged.end(), tg.parts[j].parts().begin(), tg.parts[j].parts().end());
      prod[tab.index.at(Partition::from_unsorted(merged))] += a[i] * b[j];
    }
  }
  return from_schur_vector(power_to_schur(prod, tab), tab);
}

SymFunc omega(const SymFunc& f) {
  SymFunc::Terms out;
  for (const auto& [lambda, c] : f.terms()) out.emplace(lambda.conjugate(), c);
  return SymFunc::from_schur(std::move(out));
}

CoefQT hall_inner(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree()) return CoefQT();
  CoefQT sum;
  for (const auto& [lambda, c] : f.terms()) {
    auto it = g.terms().find(lambda);
    if (it != g.terms().end()) sum += c * it->second;
  }
  return sum;
}

AlphabetTransform AlphabetTransform::scale_by(const CoefQT& alphabet) {
  return {Kind::scale, [alphabet](int k) { return power_substitute(alphabet, k); }};
}

AlphabetTransform AlphabetTransform::evaluate_at(const CoefQT& alphabet) {
  return {Kind::evaluate, [alphabet](int k) { return power_substitute(alphabet, k); }};
}

namespace {

// prod_i pk_image(rho_i), with the images computed once per k.
CoefQT image_product(const Partition& rho, std::map<int, CoefQT>& cache, const AlphabetTransform& tr) {
  CoefQT r(1);
  for (int part : rho.parts()) {
    auto it = cache.find(part);
    if (it == cache.end()) it = cache.emplace(part, tr.pk_image(part)).first;
    r *= it->second;
    if (r.is_zero()) break;
  }
  return r;
}

}  // namespace

SymFunc transform(const SymFunc& f, const AlphabetTransform& tr) {
  if (tr.kind != AlphabetTransform::Kind::scale) throw std::invalid_argument("transform needs a scale-kind alphabet");
  if (f.is_zero()) return f;
  const auto& tab = tables(f.degree());
  Vec b = schur_to_power(schur_vector(f, tab), tab);
  std::map<int, CoefQT> cache;
  for (std::size_t r = 0; r < b.size(); ++r)
    if (!b[r].is_zero()) b[r] *= image_product(tab.parts[r], cache, tr);
  return from_schur_vector(power_to_schur(b, tab), tab);
}

CoefQT evaluate(const SymFunc& f, const AlphabetTransform& tr) {
  if (tr.kind != AlphabetTransform::Kind::evaluate)
    throw std::invalid_argument("evaluate needs an evaluate-kind alphabet");
  if (f.is_zero()) return CoefQT();
  const auto& tab = tables(f.degree());
  const Vec b = schur_to_power(schur_vector(f, tab), tab);
  std::map<int, CoefQT> cache;
  CoefSum sum;
  for (std::size_t r = 0; r < b.size(); ++r)
    if (!b[r].is_zero()) sum.add(b[r] * image_product(tab.parts[r], cache, tr));
  return sum.total();
}

std::variant<SymFunc, CoefQT> apply_transform(const SymFunc& f, const AlphabetTransform& tr) {
  if (tr.kind == AlphabetTransform::Kind::scale) return transform(f, tr);
  return evaluate(f, tr);
}

bool is_hook_only(const SymFunc& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& kv) { return kv.first.is_hook(); });
}

SymFunc hn_times_one_minus_u(int n, const CoefQT& u) {
  if (n < 1) throw std::invalid_argument("hn_times_one_minus_u needs n >= 1");
  SymFunc::Terms terms;
  const CoefQT lead = CoefQT(1) - u;
  CoefQT power(1);
  for (int s = 0; s < n; ++s) {
    terms.emplace(Partition::hook(n - s, s), lead * power);
    power *= -u;
  }
  return SymFunc::from_schur(std::move(terms));
}

}  // namespace deltaq
