#include "deltaq/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace deltaq {

namespace {

bool is_zero(const Integer& a) { return sgn(a) == 0; }
int sign_of(const Integer& a) { return sgn(a); }
Integer ring_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
Integer ring_divexact(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
bool ring_divides(const Integer& b, const Integer& a) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

// Dense univariate polynomials over a gcd domain R; c[i] is the coefficient
// of x^i and the last entry is nonzero.
template <class R>
struct UniPoly {
  std::vector<R> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  const R& lc() const { return c.back(); }
  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
};

template <class R>
struct RingOne {
  static R value() { return R(1); }
};
template <class R>
struct RingOne<UniPoly<R>> {
  static UniPoly<R> value() { return UniPoly<R>{{RingOne<R>::value()}}; }
};

template <class R>
bool is_zero(const UniPoly<R>& a) {
  return a.zero();
}
template <class R>
int sign_of(const UniPoly<R>& a) {
  return a.zero() ? 0 : sign_of(a.lc());
}
template <class R>
bool operator==(const UniPoly<R>& a, const UniPoly<R>& b) {
  return a.c == b.c;
}

template <class R>
UniPoly<R> operator-(const UniPoly<R>& a) {
  UniPoly<R> r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

template <class R>
UniPoly<R> operator-(const UniPoly<R>& a, const UniPoly<R>& b) {
  UniPoly<R> r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
  r.trim();
  return r;
}

template <class R>
UniPoly<R> operator*(const UniPoly<R>& a, const UniPoly<R>& b) {
  UniPoly<R> r;
  if (a.zero() || b.zero()) return r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (is_zero(b.c[j])) continue;
      r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

template <class R>
UniPoly<R> scale(const UniPoly<R>& a, const R& s) {
  UniPoly<R> r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(x * s);
  r.trim();
  return r;
}

template <class R>
UniPoly<R> divexact_scalar(const UniPoly<R>& a, const R& s) {
  UniPoly<R> r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(ring_divexact(x, s));
  return r;
}

template <class R>
bool ring_divides(const UniPoly<R>& b, const UniPoly<R>& a);

// Exact quotient a / b; the caller guarantees divisibility unless `ok` is
// given, in which case failure is reported through it.
template <class R>
UniPoly<R> divide_dense(const UniPoly<R>& a, const UniPoly<R>& b,
                        bool* ok = nullptr) {
  UniPoly<R> rem = a;
  UniPoly<R> quo;
  if (ok) *ok = true;
  if (a.zero()) return quo;
  if (rem.deg() < b.deg()) {
    if (ok) *ok = false;
    return quo;
  }
  quo.c.resize(rem.deg() - b.deg() + 1);
  while (!rem.zero() && rem.deg() >= b.deg()) {
    if (ok && !ring_divides(b.lc(), rem.lc())) {
      *ok = false;
      return quo;
    }
    const int shift = rem.deg() - b.deg();
    R f = ring_divexact(rem.lc(), b.lc());
    for (std::size_t j = 0; j < b.c.size(); ++j)
      rem.c[j + shift] = rem.c[j + shift] - f * b.c[j];
    quo.c[shift] = std::move(f);
    rem.trim();
  }
  if (!rem.zero() && ok) *ok = false;
  quo.trim();
  return quo;
}

template <class R>
UniPoly<R> ring_divexact(const UniPoly<R>& a, const UniPoly<R>& b) {
  return divide_dense(a, b);
}

template <class R>
bool ring_divides(const UniPoly<R>& b, const UniPoly<R>& a) {
  bool ok = true;
  divide_dense(a, b, &ok);
  return ok;
}

template <class R>
R content(const UniPoly<R>& a) {
  R g{};
  for (const auto& x : a.c) {
    g = ring_gcd(g, x);
    if constexpr (std::is_same_v<R, Integer>) {
      if (g == 1) break;
    }
  }
  return g;
}

// Pseudo-remainder with the leftover lc(b) power dropped; only its primitive
// part is ever used.
template <class R>
UniPoly<R> sparse_prem(UniPoly<R> a, const UniPoly<R>& b) {
  const R& lb = b.lc();
  while (!a.zero() && a.deg() >= b.deg()) {
    const int shift = a.deg() - b.deg();
    R la = a.lc();
    for (auto& x : a.c) x = x * lb;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      a.c[j + shift] = a.c[j + shift] - la * b.c[j];
    a.trim();
  }
  return a;
}

template <class R>
UniPoly<R> primitive_part(const UniPoly<R>& a) {
  if (a.zero()) return a;
  R g = content(a);
  if (sign_of(a.lc()) < 0) g = -g;
  return divexact_scalar(a, g);
}

template <class R>
UniPoly<R> ring_gcd(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (a.zero()) return sign_of(b) < 0 ? -b : b;
  if (b.zero()) return sign_of(a) < 0 ? -a : a;
  R ca = content(a);
  R cb = content(b);
  R cg = ring_gcd(ca, cb);
  UniPoly<R> x = divexact_scalar(a, ca);
  UniPoly<R> y = divexact_scalar(b, cb);
  if (x.deg() < y.deg()) std::swap(x, y);
  while (!y.zero()) {
    if (y.deg() == 0) {
      x = UniPoly<R>{{RingOne<R>::value()}};
      break;
    }
    UniPoly<R> r = sparse_prem(std::move(x), y);
    x = std::move(y);
    y = primitive_part(r);
  }
  x = primitive_part(x);
  return scale(x, cg);
}

using ZPoly = UniPoly<Integer>;
using ZZPoly = UniPoly<ZPoly>;

// Packs coefficients along q into a dense polynomial over Z (t-free input).
ZPoly dense_in_q(const Poly& p) {
  ZPoly r;
  if (p.is_zero()) return r;
  r.c.resize(p.degree_q() + 1);
  for (const auto& term : p.terms()) r.c[term.exp.q] = term.coef;
  return r;
}

ZPoly dense_in_t(const Poly& p) {
  ZPoly r;
  if (p.is_zero()) return r;
  r.c.resize(p.degree_t() + 1);
  for (const auto& term : p.terms()) r.c[term.exp.t] = term.coef;
  return r;
}

// Main variable q, coefficients in Z[t].
ZZPoly dense_recursive(const Poly& p) {
  ZZPoly r;
  if (p.is_zero()) return r;
  r.c.resize(p.degree_q() + 1);
  for (const auto& term : p.terms()) {
    auto& cq = r.c[term.exp.q];
    if (static_cast<int>(cq.c.size()) <= term.exp.t) cq.c.resize(term.exp.t + 1);
    cq.c[term.exp.t] = term.coef;
  }
  return r;
}

Poly from_dense_q(const ZPoly& d) {
  std::vector<Poly::Term> terms;
  for (int i = 0; i <= d.deg(); ++i)
    if (!is_zero(d.c[i])) terms.push_back({{i, 0}, d.c[i]});
  return Poly::from_terms(std::move(terms));
}

Poly from_dense_t(const ZPoly& d) {
  std::vector<Poly::Term> terms;
  for (int i = 0; i <= d.deg(); ++i)
    if (!is_zero(d.c[i])) terms.push_back({{0, i}, d.c[i]});
  return Poly::from_terms(std::move(terms));
}

Poly from_dense_recursive(const ZZPoly& d) {
  std::vector<Poly::Term> terms;
  for (int i = 0; i <= d.deg(); ++i)
    for (int j = 0; j <= d.c[i].deg(); ++j)
      if (!is_zero(d.c[i].c[j])) terms.push_back({{i, j}, d.c[i].c[j]});
  return Poly::from_terms(std::move(terms));
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({{0, 0}, Integer(c)});
}

Poly::Poly(const Integer& c) {
  if (sgn(c) != 0) terms_.push_back({{0, 0}, c});
}

Poly Poly::monomial(const Integer& c, int qdeg, int tdeg) {
  if (qdeg < 0 || tdeg < 0) throw std::invalid_argument("negative exponent in Poly");
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back({{qdeg, tdeg}, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grlex_greater(a.exp, b.exp);
  });
  Poly p;
  for (auto& term : terms) {
    if (term.exp.q < 0 || term.exp.t < 0)
      throw std::invalid_argument("negative exponent in Poly");
    if (!p.terms_.empty() && p.terms_.back().exp == term.exp) {
      p.terms_.back().coef += term.coef;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
}

bool Poly::is_t_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& x) { return x.exp.t == 0; });
}

bool Poly::is_q_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& x) { return x.exp.q == 0; });
}

int Poly::degree_q() const {
  int d = 0;
  for (const auto& x : terms_) d = std::max(d, x.exp.q);
  return d;
}

int Poly::degree_t() const {
  int d = 0;
  for (const auto& x : terms_) d = std::max(d, x.exp.t);
  return d;
}

int Poly::min_q() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].exp.q;
  for (const auto& x : terms_) d = std::min(d, x.exp.q);
  return d;
}

int Poly::min_t() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].exp.t;
  for (const auto& x : terms_) d = std::min(d, x.exp.t);
  return d;
}

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& x : terms_) {
    g = ring_gcd(g, x.coef);
    if (g == 1) break;
  }
  return g;
}

Integer Poly::coefficient(int qdeg, int tdeg) const {
  for (const auto& x : terms_)
    if (x.exp == Exponent{qdeg, tdeg}) return x.coef;
  return 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.terms_) x.coef = -x.coef;
  return r;
}

namespace {

template <class Combine>
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b,
                                    Combine combine) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exp, a[i].exp)) {
      out.push_back({b[j].exp, combine(Integer(0), b[j].coef)});
      ++j;
    } else {
      Integer c = combine(a[i].coef, b[j].coef);
      if (sgn(c) != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_,
                       [](const Integer& x, const Integer& y) -> Integer { return x + y; });
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_,
                       [](const Integer& x, const Integer& y) -> Integer { return x - y; });
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_monomial() || b.is_monomial()) {
    const Poly& m = a.is_monomial() ? a : b;
    const Poly& o = a.is_monomial() ? b : a;
    const auto& mt = m.leading();
    r.terms_.reserve(o.terms_.size());
    // Multiplying by a monomial preserves graded-lex order.
    for (const auto& x : o.terms_)
      r.terms_.push_back({{x.exp.q + mt.exp.q, x.exp.t + mt.exp.t}, x.coef * mt.coef});
    return r;
  }
  const int q0 = a.min_q() + b.min_q();
  const int t0 = a.min_t() + b.min_t();
  const int qn = a.degree_q() + b.degree_q() - q0 + 1;
  const int tn = a.degree_t() + b.degree_t() - t0 + 1;
  const double box = static_cast<double>(qn) * tn;
  const double products = static_cast<double>(a.size()) * b.size();
  if (box <= 4 * products + 64) {
    std::vector<Integer> dense(static_cast<std::size_t>(qn) * tn);
    std::vector<char> used(dense.size(), 0);
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        const std::size_t idx =
            static_cast<std::size_t>(x.exp.q + y.exp.q - q0) * tn + (x.exp.t + y.exp.t - t0);
        mpz_addmul(dense[idx].get_mpz_t(), x.coef.get_mpz_t(), y.coef.get_mpz_t());
        used[idx] = 1;
      }
    std::vector<Poly::Term> terms;
    for (int i = 0; i < qn; ++i)
      for (int j = 0; j < tn; ++j) {
        const std::size_t idx = static_cast<std::size_t>(i) * tn + j;
        if (used[idx] && sgn(dense[idx]) != 0)
          terms.push_back({{i + q0, j + t0}, std::move(dense[idx])});
      }
    return Poly::from_terms(std::move(terms));
  }
  std::vector<Poly::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      terms.push_back({{x.exp.q + y.exp.q, x.exp.t + y.exp.t}, x.coef * y.coef});
  return Poly::from_terms(std::move(terms));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& x : terms_) x.coef *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].exp == b.terms_[i].exp) || a.terms_[i].coef != b.terms_[i].coef)
      return false;
  return true;
}

Poly& Poly::divexact(const Integer& c) {
  if (c == 1) return *this;
  for (auto& x : terms_) x.coef = ring_divexact(x.coef, c);
  return *this;
}

Poly Poly::shifted(int dq, int dt) const {
  Poly r = *this;
  for (auto& x : r.terms_) {
    x.exp.q += dq;
    x.exp.t += dt;
    if (x.exp.q < 0 || x.exp.t < 0) throw std::invalid_argument("shift makes exponent negative");
  }
  return r;
}

Poly Poly::reversed(bool in_q, bool in_t) const {
  const int dq = degree_q();
  const int dt = degree_t();
  std::vector<Term> terms = terms_;
  for (auto& x : terms) {
    if (in_q) x.exp.q = dq - x.exp.q;
    if (in_t) x.exp.t = dt - x.exp.t;
  }
  return from_terms(std::move(terms));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& x : terms_) {
    Integer c = x.coef;
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool constant = x.exp.q == 0 && x.exp.t == 0;
    bool need_star = false;
    if (constant || c != 1) {
      out << c.get_str();
      need_star = true;
    }
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (need_star) out << "*";
      out << name;
      if (e != 1) out << "^" << e;
      need_star = true;
    };
    var("q", x.exp.q);
    var("t", x.exp.t);
    first = false;
  }
  return out.str();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Poly();
  if (b.degree_q() > a.degree_q() || b.degree_t() > a.degree_t()) return std::nullopt;
  if (b.is_constant()) {
    const Integer& c = b.leading().coef;
    for (const auto& x : a.terms())
      if (!ring_divides(c, x.coef)) return std::nullopt;
    Poly r = a;
    return r.divexact(c);
  }
  if (a.is_t_free() && b.is_t_free()) {
    bool ok = true;
    ZPoly quo = divide_dense(dense_in_q(a), dense_in_q(b), &ok);
    if (!ok) return std::nullopt;
    return from_dense_q(quo);
  }
  if (a.is_q_free() && b.is_q_free()) {
    bool ok = true;
    ZPoly quo = divide_dense(dense_in_t(a), dense_in_t(b), &ok);
    if (!ok) return std::nullopt;
    return from_dense_t(quo);
  }
  // Graded-lex division: if b | a the leading term of every remainder is
  // divisible by the leading term of b.
  Poly rem = a;
  std::vector<Poly::Term> quo;
  const auto& lb = b.leading();
  while (!rem.is_zero()) {
    const auto& lr = rem.leading();
    const int dq = lr.exp.q - lb.exp.q;
    const int dt = lr.exp.t - lb.exp.t;
    if (dq < 0 || dt < 0 || !ring_divides(lb.coef, lr.coef)) return std::nullopt;
    Integer f = ring_divexact(lr.coef, lb.coef);
    rem -= b.shifted(dq, dt) * f;
    quo.push_back({{dq, dt}, std::move(f)});
  }
  return Poly::from_terms(std::move(quo));
}

Poly gcd(const Poly& a, const Poly& b) {
  auto positive = [](Poly p) {
    if (!p.is_zero() && sgn(p.leading().coef) < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  const int mq = std::min(a.min_q(), b.min_q());
  const int mt = std::min(a.min_t(), b.min_t());
  Poly x = a.shifted(-a.min_q(), -a.min_t());
  Poly y = b.shifted(-b.min_q(), -b.min_t());
  const Integer cx = x.content();
  const Integer cy = y.content();
  const Integer cg = ring_gcd(cx, cy);
  x.divexact(cx);
  y.divexact(cy);
  Poly g;
  if (x.is_constant() || y.is_constant()) {
    g = Poly(1);
  } else if (x == y || x == -y) {
    g = x;
  } else if (x.is_t_free() && y.is_t_free()) {
    g = from_dense_q(ring_gcd(dense_in_q(x), dense_in_q(y)));
  } else if (x.is_q_free() && y.is_q_free()) {
    g = from_dense_t(ring_gcd(dense_in_t(x), dense_in_t(y)));
  } else if (auto quo = divide_exact(x, y)) {
    g = y;
  } else if (auto quo2 = divide_exact(y, x)) {
    g = x;
  } else {
    g = from_dense_recursive(ring_gcd(dense_recursive(x), dense_recursive(y)));
  }
  g = positive(std::move(g));
  g *= cg;
  return g.shifted(mq, mt);
}

}  // namespace deltaq
