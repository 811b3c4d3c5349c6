#include "symfun/ratfun.hpp"

#include <cctype>
#include <ostream>
#include <vector>

#include "symfun/errors.hpp"

namespace symfun {

RatFun::RatFun(const mpq_class& c) {
  *this = make(IntPoly2(c.get_num()), IntPoly2(c.get_den()));
}

RatFun RatFun::make(IntPoly2 num, IntPoly2 den) {
  if (den.is_zero()) throw DivisionByZero();
  RatFun r;
  if (num.is_zero()) return r;
  if (!den.is_one()) {
    IntPoly2 g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalize_sign();
  return r;
}

RatFun RatFun::qt(int a, int b) {
  RatFun r;
  r.num_ = IntPoly2::monomial(1, std::max(a, 0), std::max(b, 0));
  r.den_ = IntPoly2::monomial(1, std::max(-a, 0), std::max(-b, 0));
  return r;
}

void RatFun::normalize_sign() {
  if (sgn(den_.trailing().c) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    return *this = make(num_ + o.num_, den_);
  }
  IntPoly2 g = gcd(den_, o.den_);
  if (g.is_one()) {
    IntPoly2 n = num_ * o.den_ + o.num_ * den_;
    if (n.is_zero()) return *this = RatFun();
    num_ = std::move(n);
    den_ = den_ * o.den_;
    normalize_sign();
    return *this;
  }
  IntPoly2 b1 = exact_div(den_, g);
  IntPoly2 d1 = exact_div(o.den_, g);
  IntPoly2 n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = RatFun();
  IntPoly2 g2 = gcd(n, g);
  if (!g2.is_one()) {
    n = exact_div(n, g2);
    num_ = std::move(n);
    den_ = b1 * exact_div(o.den_, g2);
  } else {
    num_ = std::move(n);
    den_ = b1 * o.den_;
  }
  normalize_sign();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFun();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  IntPoly2 g1 = gcd(num_, o.den_);
  IntPoly2 g2 = gcd(o.num_, den_);
  IntPoly2 a = g1.is_one() ? num_ : exact_div(num_, g1);
  IntPoly2 d = g1.is_one() ? o.den_ : exact_div(o.den_, g1);
  IntPoly2 c = g2.is_one() ? o.num_ : exact_div(o.num_, g2);
  IntPoly2 b = g2.is_one() ? den_ : exact_div(den_, g2);
  num_ = a * c;
  den_ = b * d;
  normalize_sign();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RatFun r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize_sign();
  return r;
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.normalize_sign();
  return r;
}

namespace {

// Value of p with q and t replaced by the given field elements.
RatFun substitute(const IntPoly2& p, const RatFun& qv, const RatFun& tv) {
  std::vector<RatFun> qpow{RatFun(1L)};
  std::vector<RatFun> tpow{RatFun(1L)};
  for (int i = 0; i < p.degree_q(); ++i) qpow.push_back(qpow.back() * qv);
  for (int i = 0; i < p.degree_t(); ++i) tpow.push_back(tpow.back() * tv);
  RatFun acc;
  for (const auto& term : p.terms()) {
    acc += RatFun(term.c) * qpow[term.dq] * tpow[term.dt];
  }
  return acc;
}

}  // namespace

RatFun RatFun::specialize(const std::optional<RatFun>& q, const std::optional<RatFun>& t) const {
  const RatFun qv = q ? *q : RatFun::q();
  const RatFun tv = t ? *t : RatFun::t();
  RatFun d = substitute(den_, qv, tv);
  if (d.is_zero()) throw PoleAtSpecialization();
  return substitute(num_, qv, tv) / d;
}

mpq_class evaluate(const IntPoly2& p, const mpq_class& q0, const mpq_class& t0) {
  std::vector<mpq_class> qpow{mpq_class(1)};
  std::vector<mpq_class> tpow{mpq_class(1)};
  for (int i = 0; i < p.degree_q(); ++i) qpow.push_back(qpow.back() * q0);
  for (int i = 0; i < p.degree_t(); ++i) tpow.push_back(tpow.back() * t0);
  mpq_class acc = 0;
  for (const auto& term : p.terms()) acc += mpq_class(term.c) * qpow[term.dq] * tpow[term.dt];
  return acc;
}

mpq_class RatFun::evaluate(const mpq_class& q0, const mpq_class& t0) const {
  mpq_class d = symfun::evaluate(den_, q0, t0);
  if (sgn(d) == 0) throw PoleAtSpecialization();
  return symfun::evaluate(num_, q0, t0) / d;
}

std::string RatFun::to_string() const {
  if (is_zero()) return "0";
  std::string out = "(" + num_.to_string() + ")";
  if (den_.is_one()) return out;
  // a bare denominator must not absorb a following factor: "/2" and "/q^2"
  // are safe, "/2*q" is not
  const bool bare = den_.is_monomial() && (den_.leading().c == 1 || den_.is_constant());
  out += '/';
  if (bare) {
    out += den_.to_string();
  } else {
    out += "(" + den_.to_string() + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.to_string(); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFun run() {
    RatFun r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFun term() {
    RatFun acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        RatFun d = unary();
        if (d.is_zero()) throw DivisionByZero();
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFun unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFun power() {
    RatFun base = primary();
    if (accept('^')) {
      const bool neg = accept('-');
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 6) fail("exponent too large");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (neg) {
        if (base.is_zero()) throw DivisionByZero();
        e = -e;
      }
      return base.pow(e);
    }
    return base;
  }

  RatFun primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
      return RatFun(Int(std::string(s_.substr(start, pos_ - start))));
    }
    if (c == 'q') {
      ++pos_;
      return RatFun::q();
    }
    if (c == 't') {
      ++pos_;
      return RatFun::t();
    }
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun RatFun::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace symfun
