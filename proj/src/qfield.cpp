#include "deltaq/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace deltaq {

namespace {

Integer integer_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

CoefQT::CoefQT(Poly num, Poly den, bool normalize_now)
    : num_(std::move(num)), den_(std::move(den)) {
  if (normalize_now) normalize();
}

CoefQT CoefQT::fraction(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  return CoefQT(std::move(num), std::move(den), true);
}

CoefQT CoefQT::rational(const Integer& num, const Integer& den) {
  return fraction(Poly(num), Poly(den));
}

CoefQT CoefQT::monomial(int qe, int te) {
  Poly num = Poly::monomial(1, std::max(qe, 0), std::max(te, 0));
  Poly den = Poly::monomial(1, std::max(-qe, 0), std::max(-te, 0));
  return CoefQT(std::move(num), std::move(den), false);
}

void CoefQT::normalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const int mq = std::min(num_.min_q(), den_.min_q());
  const int mt = std::min(num_.min_t(), den_.min_t());
  if (mq > 0 || mt > 0) {
    num_ = num_.shifted(-mq, -mt);
    den_ = den_.shifted(-mq, -mt);
  }
  Integer cn = num_.content();
  Integer cd = den_.content();
  if (sgn(den_.leading().coef) < 0) cd = -cd;
  num_.divexact(cn);
  den_.divexact(cd);
  if (!den_.is_constant() && !den_.is_monomial()) {
    if (auto quo = divide_exact(num_, den_)) {
      num_ = std::move(*quo);
      den_ = Poly(1);
    } else {
      Poly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
      }
    }
  }
  const Integer g = integer_gcd(cn, cd);
  cn /= g;
  cd /= g;
  if (sgn(cd) < 0) {
    cn = -cn;
    cd = -cd;
  }
  num_ *= cn;
  den_ *= cd;
}

void CoefQT::fix_sign_and_content() {
  // Remaining common factors can only be monomials and integers.
  const int mq = std::min(num_.min_q(), den_.min_q());
  const int mt = std::min(num_.min_t(), den_.min_t());
  if (mq > 0 || mt > 0) {
    num_ = num_.shifted(-mq, -mt);
    den_ = den_.shifted(-mq, -mt);
  }
  Integer g = integer_gcd(num_.content(), den_.content());
  if (sgn(den_.leading().coef) < 0) g = -g;
  if (g != 1) {
    num_.divexact(g);
    den_.divexact(g);
  }
}

CoefQT CoefQT::operator-() const {
  CoefQT r = *this;
  r.num_ = -r.num_;
  return r;
}

CoefQT& CoefQT::operator+=(const CoefQT& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_constant() && den_.leading().coef == 1) {
      return *this;
    }
    normalize();
    return *this;
  }
  // Both operands are reduced, so only the shared part g of the
  // denominators can cancel against the new numerator.
  if (den_.is_constant() || o.den_.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  const Poly g = gcd(den_, o.den_);
  if (g.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  const Poly b = *divide_exact(den_, g);
  const Poly d = *divide_exact(o.den_, g);
  num_ = num_ * d + o.num_ * b;
  den_ = b * o.den_;
  if (num_.is_zero()) {
    den_ = Poly(1);
    return *this;
  }
  const Poly h = gcd(num_, g);
  if (!h.is_constant()) {
    num_ = *divide_exact(num_, h);
    den_ = *divide_exact(den_, h);
  }
  fix_sign_and_content();
  return *this;
}

CoefQT& CoefQT::operator-=(const CoefQT& o) { return *this += -o; }

CoefQT& CoefQT::operator*=(const CoefQT& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = CoefQT();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel the reduced operands: gcd(a, d) and gcd(c, b) for a/b * c/d.
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  auto cancel = [](Poly& x, Poly& y) {
    if (x.is_constant() || y.is_constant()) return;
    const Poly g = gcd(x, y);
    if (g.is_constant()) return;
    x = *divide_exact(x, g);
    y = *divide_exact(y, g);
  };
  cancel(a, d);
  cancel(c, b);
  num_ = a * c;
  den_ = b * d;
  fix_sign_and_content();
  return *this;
}

CoefQT CoefQT::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero coefficient");
  CoefQT r(den_, num_, false);
  if (sgn(r.den_.leading().coef) < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

CoefQT& CoefQT::operator/=(const CoefQT& o) { return *this *= o.inverse(); }

CoefQT& CoefQT::mul_integer(const Integer& c) {
  if (sgn(c) == 0) return *this = CoefQT();
  if (den_.is_constant()) {
    const Integer& d = den_.leading().coef;
    const Integer g = integer_gcd(c, d);
    num_ *= Integer(c / g);
    den_ = Poly(Integer(d / g));
    return *this;
  }
  const Integer g = integer_gcd(c, den_.content());
  num_ *= Integer(c / g);
  den_.divexact(g);
  return *this;
}

CoefQT& CoefQT::div_integer(const Integer& c) {
  if (sgn(c) == 0) throw std::domain_error("division by zero");
  const Integer g = integer_gcd(c, num_.content());
  Integer rest = c / g;
  num_.divexact(g);
  if (sgn(rest) < 0) {
    rest = -rest;
    num_ = -num_;
  }
  den_ *= rest;
  return *this;
}

CoefQT CoefQT::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  CoefQT result(1);
  CoefQT base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

mpq_class CoefQT::to_rational() const {
  if (!is_constant()) throw std::domain_error("coefficient is not a constant");
  mpq_class r(num_.is_zero() ? Integer(0) : num_.leading().coef, den_.leading().coef);
  r.canonicalize();
  return r;
}

std::string CoefQT::to_string() const {
  if (den_.is_constant() && den_.leading().coef == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

class CoefParser {
 public:
  explicit CoefParser(std::string_view s) : s_(s) {}

  CoefQT parse_all() {
    CoefQT v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("coefficient parse error: ") + what + " at offset " +
                                std::to_string(pos_) + " in '" + std::string(s_) + "'");
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
  CoefQT expr() {
    CoefQT v = term();
    while (true) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }
  CoefQT term() {
    CoefQT v = unary();
    while (true) {
      if (accept('*'))
        v *= unary();
      else if (accept('/'))
        v /= unary();
      else
        return v;
    }
  }
  CoefQT unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  int exponent() {
    bool paren = accept('(');
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -e : e;
  }
  CoefQT power() {
    CoefQT base = atom();
    if (accept('^')) return base.pow(exponent());
    return base;
  }
  CoefQT atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      CoefQT v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return CoefQT::q();
    }
    if (c == 't') {
      ++pos_;
      return CoefQT::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return CoefQT(Integer(std::string(s_.substr(start, pos_ - start))));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

struct MonomialImage {
  bool zero = false;
  Integer coef;
  int qe = 0;
  int te = 0;
};

std::optional<MonomialImage> as_monomial(const CoefQT& f) {
  MonomialImage m;
  if (f.is_zero()) {
    m.zero = true;
    return m;
  }
  const Poly& n = f.numerator();
  const Poly& d = f.denominator();
  if (!n.is_monomial() || !d.is_monomial() || d.leading().coef != 1) return std::nullopt;
  m.coef = n.leading().coef;
  m.qe = n.leading().exp.q - d.leading().exp.q;
  m.te = n.leading().exp.t - d.leading().exp.t;
  return m;
}

CoefQT eval_monomial(const Poly& p, const MonomialImage& qi, const MonomialImage& ti) {
  std::vector<Poly::Term> terms;
  terms.reserve(p.size());
  int minq = 0;
  int mint = 0;
  for (const auto& x : p.terms()) {
    if ((qi.zero && x.exp.q > 0) || (ti.zero && x.exp.t > 0)) continue;
    Integer c = x.coef;
    int eq = 0;
    int et = 0;
    if (!qi.zero) {
      Integer f;
      mpz_pow_ui(f.get_mpz_t(), qi.coef.get_mpz_t(), x.exp.q);
      c *= f;
      eq += qi.qe * x.exp.q;
      et += qi.te * x.exp.q;
    }
    if (!ti.zero) {
      Integer f;
      mpz_pow_ui(f.get_mpz_t(), ti.coef.get_mpz_t(), x.exp.t);
      c *= f;
      eq += ti.qe * x.exp.t;
      et += ti.te * x.exp.t;
    }
    minq = std::min(minq, eq);
    mint = std::min(mint, et);
    terms.push_back({{eq, et}, std::move(c)});
  }
  for (auto& x : terms) {
    x.exp.q -= minq;
    x.exp.t -= mint;
  }
  return CoefQT::fraction(Poly::from_terms(std::move(terms)), Poly::monomial(1, -minq, -mint));
}

CoefQT eval_general(const Poly& p, const CoefQT& qi, const CoefQT& ti) {
  std::vector<CoefQT> qpow{CoefQT(1)};
  std::vector<CoefQT> tpow{CoefQT(1)};
  for (int i = 1; i <= p.degree_q(); ++i) qpow.push_back(qpow.back() * qi);
  for (int i = 1; i <= p.degree_t(); ++i) tpow.push_back(tpow.back() * ti);
  CoefQT sum;
  for (const auto& x : p.terms()) {
    CoefQT term = qpow[x.exp.q] * tpow[x.exp.t];
    term.mul_integer(x.coef);
    sum += term;
  }
  return sum;
}

}  // namespace

void CoefSum::add(const CoefQT& c) { add(c, Integer(1)); }

void CoefSum::add(const CoefQT& c, const Integer& mult) {
  if (c.is_zero() || sgn(mult) == 0) return;
  for (auto& [den, num] : groups_) {
    if (den == c.denominator()) {
      num += c.numerator() * mult;
      return;
    }
  }
  groups_.emplace_back(c.denominator(), c.numerator() * mult);
}

CoefQT CoefSum::total() const {
  CoefQT sum;
  for (const auto& [den, num] : groups_) sum += CoefQT::fraction(num, den);
  return sum;
}

CoefQT CoefQT::parse(std::string_view text) { return CoefParser(text).parse_all(); }

CoefQT subs(const CoefQT& f, const CoefQT& q_image, const CoefQT& t_image) {
  auto qm = as_monomial(q_image);
  auto tm = as_monomial(t_image);
  CoefQT num;
  CoefQT den;
  if (qm && tm) {
    num = eval_monomial(f.numerator(), *qm, *tm);
    den = eval_monomial(f.denominator(), *qm, *tm);
  } else {
    num = eval_general(f.numerator(), q_image, t_image);
    den = eval_general(f.denominator(), q_image, t_image);
  }
  if (den.is_zero()) throw PoleError("substitution makes the denominator vanish: " + f.to_string());
  return num / den;
}

CoefQT invert_q(const CoefQT& f) {
  if (f.is_zero()) return f;
  const Poly& n = f.numerator();
  const Poly& d = f.denominator();
  const int shift = n.degree_q() - d.degree_q();
  Poly num = n.reversed(true, false);
  Poly den = d.reversed(true, false);
  if (shift > 0)
    den = den.shifted(shift, 0);
  else if (shift < 0)
    num = num.shifted(-shift, 0);
  return CoefQT::fraction(std::move(num), std::move(den));
}

CoefQT power_substitute(const CoefQT& f, int k) {
  if (k == 1 || f.is_constant()) return f;
  auto scale = [k](const Poly& p) {
    std::vector<Poly::Term> terms = p.terms();
    for (auto& x : terms) {
      x.exp.q *= k;
      x.exp.t *= k;
    }
    return Poly::from_terms(std::move(terms));
  };
  return CoefQT::fraction(scale(f.numerator()), scale(f.denominator()));
}

CoefQT qpoch(int m) {
  if (m < 0) throw std::invalid_argument("qpoch needs m >= 0");
  Poly p(1);
  for (int i = 1; i <= m; ++i) p *= Poly(1) - Poly::monomial(1, i, 0);
  return CoefQT(std::move(p));
}

CoefQT qbinom(int a, int b) {
  if (b < 0 || b > a) return CoefQT();
  b = std::min(b, a - b);
  Poly num(1);
  Poly den(1);
  for (int i = 1; i <= b; ++i) {
    num *= Poly(1) - Poly::monomial(1, a - b + i, 0);
    den *= Poly(1) - Poly::monomial(1, i, 0);
  }
  return CoefQT(*divide_exact(num, den));
}

CoefQT qint(int k) {
  if (k < 0) throw std::invalid_argument("qint needs k >= 0");
  std::vector<Poly::Term> terms;
  for (int i = 0; i < k; ++i) terms.push_back({{i, 0}, Integer(1)});
  return CoefQT(Poly::from_terms(std::move(terms)));
}

namespace {

// 1 - q^e as a coefficient, for any integer e.
CoefQT one_minus_qpow(int e) { return CoefQT(1) - CoefQT::monomial(e); }

}  // namespace

CoefQT qbinom_hook(int n, const Partition& lambda) {
  if (n < 0) throw std::invalid_argument("qbinom_hook needs n >= 0");
  CoefQT num(1);
  CoefQT den(1);
  for (const auto& cell : lambda.cell_stats()) {
    num *= one_minus_qpow(n - cell.content);
    den *= one_minus_qpow(cell.hook);
  }
  if (den.is_zero()) throw std::domain_error("zero hook factor in qbinom_hook");
  return num / den;
}

bool neg_shift_poch_identity_check(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("neg_shift_poch_identity_check needs n, m >= 0");
  CoefQT lhs(1);
  for (int j = 0; j < m; ++j) lhs *= one_minus_qpow(j - n);
  CoefQT rhs = CoefQT::monomial(m * (m - 2 * n - 1) / 2);
  if (m % 2 == 1) rhs = -rhs;
  for (int j = 0; j < m; ++j) rhs *= one_minus_qpow(n - m + 1 + j);
  return lhs == rhs;
}

}  // namespace deltaq
