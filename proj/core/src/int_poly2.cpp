#include "symfun/int_poly2.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "symfun/errors.hpp"

namespace symfun {

namespace {

inline bool term_less(int aq, int at, int bq, int bt) {
  const int sa = aq + at;
  const int sb = bq + bt;
  return sa != sb ? sa < sb : aq > bq;
}

// Dense univariate polynomials over Z, index = degree, no trailing zeros.
using ZPoly = std::vector<Int>;
// Dense polynomials in a main variable with ZPoly coefficients.
using RPoly = std::vector<ZPoly>;

void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void trim(RPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

Int content(const ZPoly& p) {
  Int g = 0;
  for (const Int& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

void div_scalar_inplace(ZPoly& p, const Int& c) {
  for (Int& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

bool divexact(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  quot.clear();
  if (a.empty()) return true;
  if (b.empty() || a.size() < b.size()) return false;
  ZPoly r = a;
  quot.assign(a.size() - b.size() + 1, Int(0));
  const Int& lb = b.back();
  Int c;
  while (!r.empty()) {
    if (r.size() < b.size()) return false;
    if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
    const std::size_t s = r.size() - b.size();
    quot[s] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(r[s + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
  }
  trim(quot);
  return true;
}

ZPoly prem(ZPoly r, const ZPoly& b) {
  const Int lb = b.back();
  Int lr;
  while (!r.empty() && r.size() >= b.size()) {
    lr = r.back();
    const std::size_t s = r.size() - b.size();
    for (Int& x : r) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(r[s + j].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
  }
  return r;
}

ZPoly primitive(ZPoly p) {
  if (p.empty()) return p;
  Int c = content(p);
  if (sgn(p.back()) < 0) c = -c;
  if (c != 1) div_scalar_inplace(p, c);
  return p;
}

Int max_norm(const ZPoly& p) {
  Int m = 0;
  for (const Int& c : p) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

Int eval(const ZPoly& p, const Int& x) {
  Int acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    acc *= x;
    acc += p[k];
  }
  return acc;
}

// Digits of v in base xi, each in (-xi/2, xi/2].
ZPoly balanced_digits(Int v, const Int& xi) {
  ZPoly out;
  const Int half = xi / 2;
  Int r;
  while (sgn(v) != 0) {
    mpz_fdiv_qr(v.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    if (r > half) {
      r -= xi;
      ++v;
    }
    out.push_back(r);
  }
  return out;
}

Int next_point(const Int& xi) {
  Int root;
  mpz_sqrt(root.get_mpz_t(), xi.get_mpz_t());
  mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
  return xi * 73794 * root / 27011;
}

// Heuristic gcd of primitive x and y in Z[q] by evaluation at an integer.
bool heuristic_gcd(const ZPoly& x, const ZPoly& y, ZPoly& g) {
  Int xi = 2 * std::min(max_norm(x), max_norm(y)) + 29;
  ZPoly cof;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Int gv;
    const Int vx = eval(x, xi);
    const Int vy = eval(y, xi);
    mpz_gcd(gv.get_mpz_t(), vx.get_mpz_t(), vy.get_mpz_t());
    ZPoly h = primitive(balanced_digits(gv, xi));
    if (!h.empty() && divexact(x, h, cof) && divexact(y, h, cof)) {
      g = std::move(h);
      return true;
    }
    xi = next_point(xi);
  }
  return false;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  Int g;
  Int ca = content(a);
  Int cb = content(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZPoly x = primitive(a);
  ZPoly y = primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  ZPoly res;
  if (y.size() == 1) {
    res = ZPoly{Int(1)};
  } else if (!heuristic_gcd(x, y, res)) {
    for (;;) {
      ZPoly r = prem(x, y);
      if (r.empty()) {
        res = primitive(std::move(y));
        break;
      }
      if (r.size() == 1) {
        res = ZPoly{Int(1)};
        break;
      }
      x = std::move(y);
      y = primitive(std::move(r));
    }
  }
  for (Int& c : res) c *= g;
  return res;
}

ZPoly content(const RPoly& p) {
  ZPoly g;
  for (const ZPoly& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? primitive(c) : gcd(g, c);
    if (g.size() == 1) {
      // a unit in Z[x] up to integer content; the integer content of the
      // whole polynomial was already removed by the caller
      break;
    }
  }
  return g;
}

RPoly primitive(RPoly p) {
  ZPoly c = content(p);
  if (c.size() == 1 && c[0] == 1) return p;
  ZPoly qt;
  for (ZPoly& x : p) {
    if (x.empty()) continue;
    divexact(x, c, qt);
    x = std::move(qt);
  }
  return p;
}

RPoly prem(RPoly r, const RPoly& b) {
  const ZPoly lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const ZPoly lr = r.back();
    const std::size_t s = r.size() - b.size();
    for (ZPoly& x : r) x = mul(x, lb);
    for (std::size_t j = 0; j < b.size(); ++j) {
      ZPoly prod = mul(lr, b[j]);
      ZPoly& tgt = r[s + j];
      if (tgt.size() < prod.size()) tgt.resize(prod.size());
      for (std::size_t k = 0; k < prod.size(); ++k) tgt[k] -= prod[k];
      trim(tgt);
    }
    trim(r);
  }
  return r;
}

bool divexact(const RPoly& a, const RPoly& b, RPoly& quot) {
  quot.clear();
  if (a.empty()) return true;
  if (b.empty() || a.size() < b.size()) return false;
  RPoly r = a;
  quot.assign(a.size() - b.size() + 1, ZPoly{});
  ZPoly c;
  while (!r.empty()) {
    if (r.size() < b.size()) return false;
    if (!divexact(r.back(), b.back(), c)) return false;
    const std::size_t s = r.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      ZPoly prod = mul(c, b[j]);
      ZPoly& tgt = r[s + j];
      if (tgt.size() < prod.size()) tgt.resize(prod.size());
      for (std::size_t k = 0; k < prod.size(); ++k) tgt[k] -= prod[k];
      trim(tgt);
    }
    quot[s] = std::move(c);
    trim(r);
  }
  trim(quot);
  return true;
}

// Main variable q, coefficients in Z[t].
RPoly to_rpoly(const IntPoly2& p) {
  RPoly r(p.is_zero() ? 0 : p.degree_q() + 1);
  for (const auto& term : p.terms()) {
    ZPoly& c = r[term.dq];
    if (static_cast<int>(c.size()) <= term.dt) c.resize(term.dt + 1);
    c[term.dt] = term.c;
  }
  return r;
}

// Polynomial in q obtained by setting t = xi.
ZPoly at_t(const IntPoly2& p, const Int& xi) {
  ZPoly out;
  for (const ZPoly& c : to_rpoly(p)) out.push_back(eval(c, xi));
  trim(out);
  return out;
}

IntPoly2 from_rpoly(const RPoly& r) {
  std::vector<IntPoly2::Term> terms;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r[i].size(); ++j) {
      if (sgn(r[i][j]) != 0) terms.push_back({static_cast<int>(i), static_cast<int>(j), r[i][j]});
    }
  }
  return IntPoly2::from_terms(std::move(terms));
}

IntPoly2 positive_leading(IntPoly2 p) {
  if (!p.is_zero() && sgn(p.leading().c) < 0) return -p;
  return p;
}

Int max_norm(const IntPoly2& p) {
  Int m = 0;
  for (const auto& tm : p.terms()) {
    if (mpz_cmpabs(tm.c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(tm.c);
  }
  return m;
}

// Heuristic gcd of two primitive polynomials in Z[q,t]: set t = xi, take
// the gcd in Z[q] and read each coefficient back from its balanced xi-adic
// digits. A candidate dividing both inputs is the gcd.
bool heuristic_gcd(const IntPoly2& x, const IntPoly2& y, IntPoly2& g) {
  Int xi = 2 * std::min(max_norm(x), max_norm(y)) + 29;
  IntPoly2 cof;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const ZPoly hq = gcd(at_t(x, xi), at_t(y, xi));
    std::vector<IntPoly2::Term> terms;
    for (std::size_t i = 0; i < hq.size(); ++i) {
      const ZPoly ct = balanced_digits(hq[i], xi);
      for (std::size_t j = 0; j < ct.size(); ++j) {
        if (sgn(ct[j]) != 0) terms.push_back({static_cast<int>(i), static_cast<int>(j), ct[j]});
      }
    }
    IntPoly2 h = IntPoly2::from_terms(std::move(terms));
    if (!h.is_zero()) {
      const Int c = h.content();
      if (c != 1) h = h.div_scalar_exact(c);
      if (try_exact_div(x, h, cof) && try_exact_div(y, h, cof)) {
        g = std::move(h);
        return true;
      }
    }
    xi = next_point(xi);
  }
  return false;
}

}  // namespace

IntPoly2::IntPoly2(long c) {
  if (c != 0) terms_.push_back({0, 0, Int(c)});
}

IntPoly2::IntPoly2(const Int& c) {
  if (sgn(c) != 0) terms_.push_back({0, 0, c});
}

IntPoly2 IntPoly2::monomial(const Int& c, int dq, int dt) {
  IntPoly2 p;
  if (sgn(c) != 0) p.terms_.push_back({dq, dt, c});
  return p;
}

IntPoly2 IntPoly2::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return term_less(a.dq, a.dt, b.dq, b.dt);
  });
  IntPoly2 p;
  for (Term& tm : terms) {
    if (!p.terms_.empty() && p.terms_.back().dq == tm.dq && p.terms_.back().dt == tm.dt) {
      p.terms_.back().c += tm.c;
      if (sgn(p.terms_.back().c) == 0) p.terms_.pop_back();
    } else if (sgn(tm.c) != 0) {
      p.terms_.push_back(std::move(tm));
    }
  }
  return p;
}

bool IntPoly2::is_one() const {
  return terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0 && terms_[0].c == 1;
}

bool IntPoly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0);
}

int IntPoly2::degree_q() const {
  int d = 0;
  for (const Term& tm : terms_) d = std::max(d, tm.dq);
  return d;
}

int IntPoly2::degree_t() const {
  int d = 0;
  for (const Term& tm : terms_) d = std::max(d, tm.dt);
  return d;
}

int IntPoly2::min_degree_q() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].dq;
  for (const Term& tm : terms_) d = std::min(d, tm.dq);
  return d;
}

int IntPoly2::min_degree_t() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].dt;
  for (const Term& tm : terms_) d = std::min(d, tm.dt);
  return d;
}

Int IntPoly2::coeff(int dq, int dt) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(dq, dt),
                             [](const Term& a, const std::pair<int, int>& k) {
                               return term_less(a.dq, a.dt, k.first, k.second);
                             });
  if (it != terms_.end() && it->dq == dq && it->dt == dt) return it->c;
  return 0;
}

Int IntPoly2::content() const {
  Int g = 0;
  for (const Term& tm : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly2 IntPoly2::operator-() const {
  IntPoly2 r = *this;
  for (Term& tm : r.terms_) tm.c = -tm.c;
  return r;
}

namespace {

template <class Op>
std::vector<IntPoly2::Term> merge_terms(const std::vector<IntPoly2::Term>& a,
                                        const std::vector<IntPoly2::Term>& b, Op op) {
  std::vector<IntPoly2::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_less(a[i].dq, a[i].dt, b[j].dq, b[j].dt))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_less(b[j].dq, b[j].dt, a[i].dq, a[i].dt)) {
      out.push_back({b[j].dq, b[j].dt, op(Int(0), b[j].c)});
      ++j;
    } else {
      Int c = op(a[i].c, b[j].c);
      if (sgn(c) != 0) out.push_back({a[i].dq, a[i].dt, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

IntPoly2& IntPoly2::operator+=(const IntPoly2& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, [](const Int& x, const Int& y) { return Int(x + y); });
  return *this;
}

IntPoly2& IntPoly2::operator-=(const IntPoly2& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const Int& x, const Int& y) { return Int(x - y); });
  return *this;
}

IntPoly2& IntPoly2::operator*=(const IntPoly2& o) { return *this = *this * o; }

IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) {
    const auto& m = a.terms_[0];
    IntPoly2 r = b.shifted(m.dq, m.dt);
    if (m.c != 1) r = r.scaled(m.c);
    return r;
  }
  if (b.size() == 1) return b * a;
  const int aq0 = a.min_degree_q();
  const int at0 = a.min_degree_t();
  const int bq0 = b.min_degree_q();
  const int bt0 = b.min_degree_t();
  const int dq = a.degree_q() - aq0 + b.degree_q() - bq0 + 1;
  const int dt = a.degree_t() - at0 + b.degree_t() - bt0 + 1;
  if (static_cast<long>(dq) * dt <= (1L << 16)) {
    std::vector<Int> acc(static_cast<std::size_t>(dq) * dt);
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        const int i = x.dq - aq0 + y.dq - bq0;
        const int j = x.dt - at0 + y.dt - bt0;
        mpz_addmul(acc[static_cast<std::size_t>(i) * dt + j].get_mpz_t(), x.c.get_mpz_t(),
                   y.c.get_mpz_t());
      }
    }
    IntPoly2 r;
    for (int s = 0; s <= dq + dt - 2; ++s) {
      for (int i = std::min(s, dq - 1); i >= std::max(0, s - (dt - 1)); --i) {
        Int& c = acc[static_cast<std::size_t>(i) * dt + (s - i)];
        if (sgn(c) != 0) r.terms_.push_back({i + aq0 + bq0, s - i + at0 + bt0, std::move(c)});
      }
    }
    return r;
  }
  std::map<std::pair<int, int>, Int> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Int& c = acc[{x.dq + y.dq, x.dt + y.dt}];
      mpz_addmul(c.get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
    }
  }
  std::vector<IntPoly2::Term> terms;
  terms.reserve(acc.size());
  for (auto& [k, c] : acc) terms.push_back({k.first, k.second, std::move(c)});
  return IntPoly2::from_terms(std::move(terms));
}

bool operator==(const IntPoly2& a, const IntPoly2& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.dq != y.dq || x.dt != y.dt || x.c != y.c) return false;
  }
  return true;
}

IntPoly2 IntPoly2::scaled(const Int& c) const {
  if (sgn(c) == 0) return {};
  IntPoly2 r = *this;
  for (Term& tm : r.terms_) tm.c *= c;
  return r;
}

IntPoly2 IntPoly2::div_scalar_exact(const Int& c) const {
  if (sgn(c) == 0) throw DivisionByZero();
  IntPoly2 r = *this;
  for (Term& tm : r.terms_) {
    if (!mpz_divisible_p(tm.c.get_mpz_t(), c.get_mpz_t())) throw NotDivisible();
    mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

IntPoly2 IntPoly2::shifted(int dq, int dt) const {
  IntPoly2 r = *this;
  for (Term& tm : r.terms_) {
    tm.dq += dq;
    tm.dt += dt;
    if (tm.dq < 0 || tm.dt < 0) throw NotDivisible();
  }
  // a common shift preserves the graded order only up to ties in the
  // total degree, which are broken by dq and therefore also preserved
  return r;
}

IntPoly2 IntPoly2::pow(unsigned e) const {
  IntPoly2 result(1L);
  IntPoly2 base = *this;
  while (e != 0) {
    if ((e & 1U) != 0) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

IntPoly2 IntPoly2::swapped() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& tm : terms_) terms.push_back({tm.dt, tm.dq, tm.c});
  return from_terms(std::move(terms));
}

std::string IntPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& tm : terms_) {
    const bool neg = sgn(tm.c) < 0;
    const Int mag = abs(tm.c);
    if (neg) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    std::string mono;
    auto var = [&mono](char v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += v;
      if (e > 1) mono += '^' + std::to_string(e);
    };
    var('q', tm.dq);
    var('t', tm.dt);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

std::size_t IntPoly2::hash() const {
  std::size_t h = terms_.size();
  for (const Term& tm : terms_) {
    h = h * 1000003U ^ static_cast<std::size_t>(tm.dq * 131 + tm.dt);
    h = h * 1000003U ^ static_cast<std::size_t>(mpz_get_si(tm.c.get_mpz_t()));
  }
  return h;
}

bool try_exact_div(const IntPoly2& a, const IntPoly2& b, IntPoly2& quotient) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) {
    quotient = IntPoly2();
    return true;
  }
  if (b.is_monomial()) {
    const auto& m = b.terms()[0];
    if (a.min_degree_q() < m.dq || a.min_degree_t() < m.dt) return false;
    for (const auto& tm : a.terms()) {
      if (!mpz_divisible_p(tm.c.get_mpz_t(), m.c.get_mpz_t())) return false;
    }
    quotient = a.div_scalar_exact(m.c).shifted(-m.dq, -m.dt);
    return true;
  }
  if (a.degree_q() < b.degree_q() || a.degree_t() < b.degree_t()) return false;
  RPoly quot;
  if (!divexact(to_rpoly(a), to_rpoly(b), quot)) return false;
  quotient = from_rpoly(quot);
  return true;
}

IntPoly2 exact_div(const IntPoly2& a, const IntPoly2& b) {
  IntPoly2 q;
  if (!try_exact_div(a, b, q)) throw NotDivisible();
  return q;
}

IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b) {
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);
  const int mq = std::min(a.min_degree_q(), b.min_degree_q());
  const int mt = std::min(a.min_degree_t(), b.min_degree_t());
  const Int ca = a.content();
  const Int cb = b.content();
  Int gi;
  mpz_gcd(gi.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

  IntPoly2 x = a.shifted(-a.min_degree_q(), -a.min_degree_t()).div_scalar_exact(ca);
  IntPoly2 y = b.shifted(-b.min_degree_q(), -b.min_degree_t()).div_scalar_exact(cb);
  if (x.is_constant() || y.is_constant()) return IntPoly2::monomial(gi, mq, mt);
  if (x == y || x == -y) return positive_leading(x.scaled(gi).shifted(mq, mt));

  IntPoly2 h;
  if (heuristic_gcd(x, y, h)) return positive_leading(h.scaled(gi).shifted(mq, mt));

  // the main variable is the one of smaller degree; it bounds the length
  // of the remainder sequence
  const bool swap = std::max(x.degree_t(), y.degree_t()) < std::max(x.degree_q(), y.degree_q());
  if (swap) {
    x = x.swapped();
    y = y.swapped();
  }
  RPoly ra = to_rpoly(x);
  RPoly rb = to_rpoly(y);
  const ZPoly ga = content(ra);
  const ZPoly gb = content(rb);
  const ZPoly gc = gcd(ga, gb);
  ra = primitive(std::move(ra));
  rb = primitive(std::move(rb));
  if (ra.size() < rb.size()) std::swap(ra, rb);
  RPoly g;
  if (rb.size() == 1) {
    g = RPoly{ZPoly{Int(1)}};
  } else {
    for (;;) {
      RPoly r = prem(ra, rb);
      if (r.empty()) {
        g = primitive(std::move(rb));
        break;
      }
      if (r.size() == 1) {
        g = RPoly{ZPoly{Int(1)}};
        break;
      }
      ra = std::move(rb);
      rb = primitive(std::move(r));
    }
  }
  for (ZPoly& c : g) c = mul(c, gc);
  IntPoly2 res = from_rpoly(g);
  if (swap) res = res.swapped();
  // the remainder sequence works over Z[t][q] and may leave an integer
  // content on the result; the true gcd carries exactly gi
  const Int rc = res.content();
  if (rc != 1) res = res.div_scalar_exact(rc);
  return positive_leading(res.scaled(gi).shifted(mq, mt));
}

}  // namespace symfun
