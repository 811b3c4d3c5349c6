#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "symfun/errors.hpp"
#include "symfun/families.hpp"

using namespace symfun;
using testing_helpers::F;
using testing_helpers::P;
using testing_helpers::R;

namespace {

const Context<RatFun>& ctx = symbolic();

NSymPoly<RatFun> nsym(int n, std::initializer_list<std::pair<const char*, const char*>> terms) {
  NSymPoly<RatFun> f;
  f.n = n;
  for (const auto& [la, c] : terms) f.add_term(P(la), R(c));
  return f;
}

// P_la(x_1..x_N) by brute-force symmetrization: alternate x^la prod_{i<j}(x_i - t x_j),
// divide by the Vandermonde and by v_la(t).
NSymPoly<RatFun> hl_by_symmetrization(const Partition& la, int n) {
  Exponent e(n, 0);
  for (int i = 0; i < n; ++i) e[i] = la.part(static_cast<std::size_t>(i) + 1);
  XPoly<RatFun> f = XPoly<RatFun>::monomial(n, e);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Exponent ei(n, 0);
      ei[i] = 1;
      Exponent ej(n, 0);
      ej[j] = 1;
      XPoly<RatFun> g = XPoly<RatFun>::monomial(n, ei);
      g.add_term(ej, -RatFun::t());
      f = f * g;
    }
  }
  NSymPoly<RatFun> out = divide_by_vandermonde(alternate(f));
  return out * RatFun(v_poly(la, n)).inverse();
}

// Murnaghan-Nakayama on beta-sets: chi^la evaluated on the class rho.
Int mn_character(const Partition& la, std::vector<int> rho) {
  if (rho.empty()) return la.empty() ? 1 : 0;
  const int k = rho.back();
  rho.pop_back();
  const std::size_t len = la.length();
  std::set<int> beta;
  for (std::size_t i = 1; i <= len; ++i) beta.insert(la.part(i) + static_cast<int>(len - i));
  Int total = 0;
  for (int b : beta) {
    const int nb = b - k;
    if (nb < 0 || beta.count(nb) != 0) continue;
    int between = 0;
    for (int c : beta) between += (c > nb && c < b) ? 1 : 0;
    std::set<int> moved = beta;
    moved.erase(b);
    moved.insert(nb);
    std::vector<int> parts;
    int i = 0;
    for (auto it = moved.rbegin(); it != moved.rend(); ++it, ++i) {
      const int p = *it - static_cast<int>(len) + 1 + i;
      if (p > 0) parts.push_back(p);
    }
    const Int sub = mn_character(Partition(parts), rho);
    total += between % 2 == 0 ? sub : Int(-sub);
  }
  return total;
}

RatFun hl_p_coeff(const SymFun<RatFun>& f, const Partition& la) {
  return convert(ctx, f, Basis::HL_P).coeff(la);
}

}  // namespace

TEST_CASE("Hall-Littlewood alternant in few variables") {
  CHECK(hl_alternant(P("2"), 2) == nsym(2, {{"2", "1"}, {"1,1", "1-t"}}));
  CHECK(hl_alternant(P("1,1"), 2) == nsym(2, {{"1,1", "1"}}));
  CHECK(hl_alternant(P("1"), 3) == nsym(3, {{"1", "1"}}));
  CHECK_THROWS_AS(hl_alternant(P("1,1,1"), 2), LengthExceedsN);
}

TEST_CASE("Hall-Littlewood alternant matches brute-force symmetrization") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& la : partitions_up_to(5, {.max_length = n})) {
      const auto a = hl_alternant(la, n);
      CHECK_MESSAGE(a == hl_by_symmetrization(la, n), la.to_string() << " N=" << n);
      for (const auto& [mu, c] : a.coeffs) {
        CHECK(c.is_polynomial());
        CHECK(c.num().degree_q() <= 0);
      }
    }
  }
}

TEST_CASE("Hall-Littlewood stability under x_N = 0") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& la : partitions_up_to(5, {.max_length = n})) {
      const auto dropped = drop_last_variable(hl_alternant(la, n));
      if (static_cast<int>(la.length()) < n) {
        CHECK_MESSAGE(dropped == hl_alternant(la, n - 1), la.to_string() << " N=" << n);
      } else {
        CHECK_MESSAGE(dropped.is_zero(), la.to_string() << " N=" << n);
      }
    }
  }
}

TEST_CASE("stable Hall-Littlewood functions") {
  CHECK(convert(ctx, hall_littlewood(ctx, P("1"), HLKind::Q, 1), Basis::p) == F("(1-t)*p[1]"));
  const auto p2 = hall_littlewood(ctx, P("2"), HLKind::P, 2);
  CHECK(specialize(p2, std::nullopt, R("0")) == F("m[2] + m[1,1]"));
  CHECK(specialize(hall_littlewood(ctx, P("2,1"), HLKind::P, 3), std::nullopt, R("1")) == F("m[2,1]"));
  for (const auto& la : partitions_up_to(5)) {
    const auto q = hall_littlewood(ctx, la, HLKind::Q, la.weight());
    const auto p = hall_littlewood(ctx, la, HLKind::P, la.weight());
    CHECK(q == p * RatFun(b_poly(la)));
    CHECK(p.coeff(la).is_one());
  }
}

TEST_CASE("Schur functions against Kostka numbers") {
  CHECK(schur(ctx, P("1,1")) == F("m[1,1]"));
  CHECK(schur(ctx, P("2")) == F("m[2] + m[1,1]"));
  CHECK(schur(ctx, P("2,1")) == F("m[2,1] + 2*m[1,1,1]"));
  for (int d = 1; d <= 6; ++d) {
    for (const auto& la : partitions_of(d)) {
      const auto s = schur(ctx, la);
      for (const auto& mu : partitions_of(d)) {
        CHECK(s.coeff(mu) == RatFun(kostka(la, mu)));
      }
    }
  }
}

TEST_CASE("generating series of the one-row functions") {
  const auto qs = q_row_series(ctx, 6);
  REQUIRE(qs.size() == 7);
  CHECK(qs[0] == F("p[]"));
  CHECK(qs[1] == F("(1-t)*p[1]"));
  CHECK(qs[2] == F("(1-t^2)/2*p[2] + (1-t)^2/2*p[1,1]"));
  for (int n = 1; n <= 6; ++n) {
    CHECK(convert(ctx, qs[n], Basis::m) == hall_littlewood(ctx, Partition({n}), HLKind::Q, n));
    CHECK(specialize(qs[n], std::nullopt, R("1")).is_zero());
  }
}

TEST_CASE("one-row functions restricted to N variables") {
  // prod_i (1 - t x_i u)/(1 - x_i u) = sum_n Q_n u^n in N variables
  const auto qs = q_row_series(ctx, 4);
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 4; ++d) {
      // coefficient of u^d: sum over compositions of d of prod_i c(a_i),
      // c(0) = 1 and c(a) = (1-t) for a >= 1
      NSymPoly<RatFun> expect;
      expect.n = n;
      for (const auto& la : partitions_of(d)) {
        if (static_cast<int>(la.length()) > n) continue;
        expect.add_term(la, RatFun(IntPoly2(1L) - IntPoly2::t()).pow(static_cast<int>(la.length())));
      }
      CHECK(restrict_to(ctx, qs[d], n) == expect);
    }
  }
}

TEST_CASE("Macdonald functions by Gram-Schmidt") {
  CHECK(macdonald_M(ctx, P("1,1")) == F("m[1,1]"));
  CHECK(macdonald_M(ctx, P("2")) == F("m[2] + (1+q)*(1-t)/(1-q*t)*m[1,1]"));
  CHECK(specialize(macdonald_M(ctx, P("2")), R("0"), std::nullopt) == F("m[2] + (1-t)*m[1,1]"));
  for (int d = 1; d <= 6; ++d) {
    const auto& ms = macdonald_degree(ctx, d);
    const auto& ps = partitions_of(d);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CHECK(ms[i].coeff(ps[i]).is_one());
      for (const auto& [mu, c] : ms[i].coeffs()) CHECK(dominated_by(mu, ps[i]));
      if (d <= 5) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK(inner_product(ctx, ms[i], ms[j]).is_zero());
      }
    }
  }
}

TEST_CASE("specialization chain M -> P -> s, m") {
  for (const auto& la : partitions_up_to(5)) {
    const auto p = hall_littlewood(ctx, la, HLKind::P, la.weight());
    CHECK(specialize(macdonald_M(ctx, la), R("0"), std::nullopt) == p);
    CHECK(specialize(p, std::nullopt, R("0")) == schur(ctx, la));
    CHECK(specialize(p, std::nullopt, R("1")) == SymFun<RatFun>::element(Basis::m, la));
  }
}

TEST_CASE("Macdonald functions in a numeric field") {
  const Context<Rat> num(mpq_class(3, 7), mpq_class(-5, 2));
  for (int d = 1; d <= 5; ++d) {
    const auto& a = macdonald_degree(num, d);
    const auto& b = macdonald_degree(ctx, d);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == lift(num, b[i]));
  }
}

TEST_CASE("Green polynomials of degree 2") {
  const GreenTable g = green_table(2);
  // index: (2), (1,1)
  CHECK(g.entries(0, 0) == R("1"));
  CHECK(g.entries(0, 1) == R("t-1"));
  CHECK(g.entries(1, 0) == R("1"));
  CHECK(g.entries(1, 1) == R("1+t"));
}

TEST_CASE("Green polynomials: integrality, monic degree, characters, orthogonality") {
  for (int d = 1; d <= 6; ++d) {
    const GreenTable g = green_table(d);
    const std::size_t n = g.index.size();
    for (std::size_t j = 0; j < n; ++j) {
      const Partition& mu = g.index[j];
      int top = -1;
      Int lead = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const RatFun& x = g.entries(i, j);
        REQUIRE(x.is_polynomial());
        CHECK(x.num().degree_q() <= 0);
        if (x.num().degree_t() > top) {
          top = x.num().degree_t();
          lead = x.num().coeff(0, top);
        }
        CHECK(x.specialize(std::nullopt, R("0")) == RatFun(mn_character(mu, g.index[i].parts())));
      }
      CHECK(top == stats(mu).n_stat);
      CHECK(lead == 1);
      for (std::size_t k = 0; k < n; ++k) {
        RatFun s;
        for (std::size_t i = 0; i < n; ++i) {
          s += g.entries(i, j) * g.entries(i, k) / t_factors(g.index[i]).z_t;
        }
        CHECK(s == (j == k ? RatFun(b_poly(mu)) : RatFun()));
      }
    }
  }
}

TEST_CASE("Murnaghan-Nakayama oracle sanity") {
  CHECK(mn_character(P("1,1"), {2}) == -1);
  CHECK(mn_character(P("2,1"), {1, 1, 1}) == 2);
  CHECK(mn_character(P("2,1"), {3}) == -1);
  CHECK(mn_character(P("3,1"), {2, 2}) == -1);
}

TEST_CASE("Morris coefficients") {
  CHECK(morris_phi(P("2"), P("1")) == R("1-t").num());
  CHECK(morris_phi(P("1,1"), P("1")) == R("1-t^2").num());
  CHECK(morris_phi(P("2,2"), P("1")).is_zero());
  CHECK(morris_phi(P("1"), P("")) == R("1-t").num());
  CHECK(morris_phi(P("3,1"), P("3,1")) == IntPoly2(1L));
}

TEST_CASE("Morris coefficients against Q_n P_mu") {
  const auto qs = q_row_series(ctx, 5);
  for (const auto& mu : partitions_up_to(4)) {
    for (int n = 1; mu.weight() + n <= 5; ++n) {
      const int d = mu.weight() + n;
      const auto prod = multiply(ctx, qs[n], hall_littlewood(ctx, mu, HLKind::P, mu.weight()), d);
      const auto in_p = convert(ctx, prod, Basis::HL_P);
      for (const auto& la : partitions_of(d)) {
        CHECK_MESSAGE(in_p.coeff(la) == RatFun(morris_phi(la, mu)), la.to_string() << " / " << mu.to_string());
      }
    }
  }
}

TEST_CASE("psi coefficients") {
  CHECK(psi_coeff(P("2,1"), P("2")) == IntPoly2(1L));
  CHECK(psi_coeff(P("2"), P("1")) == R("1-t").num());
  CHECK(psi_coeff(P("2,2"), P("2,1")) == R("1-t").num());
  CHECK(psi_coeff(P("2,2"), P("1,1")).is_zero());
  for (const auto& la : partitions_up_to(5)) {
    if (la.empty()) continue;
    const auto d = dp1(ctx, convert(ctx, hall_littlewood(ctx, la, HLKind::P, la.weight()), Basis::p));
    for (const auto& mu : partitions_of(la.weight() - 1)) {
      CHECK_MESSAGE(hl_p_coeff(d, mu) == RatFun(psi_coeff(la, mu)), la.to_string() << " -> " << mu.to_string());
    }
  }
}

TEST_CASE("(1-t) p_1 Q_mu expands with psi coefficients") {
  for (const auto& mu : partitions_up_to(4)) {
    const auto qmu = hall_littlewood(ctx, mu, HLKind::Q, mu.weight());
    const auto lhs = multiply(ctx, F("(1-t)*p[1]"), qmu, mu.weight() + 1);
    SymFun<RatFun> rhs(Basis::p, mu.weight() + 1);
    for (const auto& la : partitions_of(mu.weight() + 1)) {
      const IntPoly2 psi = psi_coeff(la, mu);
      if (psi.is_zero()) continue;
      rhs += convert(ctx, hall_littlewood(ctx, la, HLKind::Q, la.weight()), Basis::p) * RatFun(psi);
    }
    CHECK(lhs == rhs);
  }
}
