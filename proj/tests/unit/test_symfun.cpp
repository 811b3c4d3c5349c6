#include <random>

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

SymFun<RatFun> random_p(std::mt19937& rng, int max_degree) {
  SymFun<RatFun> f(Basis::p, max_degree);
  const char* coeffs[] = {"1", "-2", "q", "1-t", "(1+q)/(1-t)", "t^2", "3/2"};
  for (const auto& la : partitions_up_to(max_degree)) {
    if (rng() % 3 == 0) f.add_term(la, R(coeffs[rng() % 7]));
  }
  f.set_degree_bound(max_degree);
  return f;
}

}  // namespace

TEST_CASE("p multiplication") {
  CHECK(p_multiply(F("p[2]"), F("p[1]"), 3) == F("p[2,1]"));
  CHECK(p_multiply(F("p[1]"), F("p[1]"), 2) == F("p[1,1]"));
  CHECK(p_multiply(F("p[1] + p[2]"), F("p[1]"), 2) == F("p[1,1]"));
  CHECK_THROWS_AS(p_multiply(F("m[1]"), F("p[1]"), 2), BasisMismatch);
  CHECK_THROWS_AS(F("m[1]") + F("p[1]") - F("m[1]") + SymFun<RatFun>::element(Basis::s, P("1")), BasisMismatch);
}

TEST_CASE("transition matrices in degree 2") {
  const auto& pm = transition_matrix(ctx, Basis::p, Basis::m, 2);
  // rows and columns: (2), (1,1)
  CHECK(pm(0, 0) == R("1"));
  CHECK(pm(1, 0).is_zero());
  CHECK(pm(0, 1) == R("1"));
  CHECK(pm(1, 1) == R("2"));
  CHECK(convert(ctx, F("m[1,1]"), Basis::p) == F("1/2*p[1,1] - 1/2*p[2]"));
}

TEST_CASE("transition matrices are triangular and mutually inverse") {
  for (int d = 1; d <= 6; ++d) {
    const auto& ps = partitions_of(d);
    const auto& pm = transition_matrix(ctx, Basis::p, Basis::m, d);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CHECK_FALSE(pm(i, i).is_zero());
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (!pm(i, j).is_zero()) CHECK(natural_compare(ps[i], ps[j]) != Dominance::Less);
      }
    }
    const Basis all[] = {Basis::m, Basis::p, Basis::s, Basis::HL_P, Basis::HL_Q, Basis::Mac_M};
    for (Basis a : all) {
      for (Basis b : all) {
        const auto prod = transition_matrix(ctx, a, b, d) * transition_matrix(ctx, b, a, d);
        CHECK_MESSAGE(prod.is_identity(), basis_name(a) << " <-> " << basis_name(b) << " degree " << d);
      }
    }
  }
}

TEST_CASE("power sums against a direct expansion") {
  // p_la in d variables, expanded monomial by monomial
  for (int d = 1; d <= 5; ++d) {
    for (const auto& la : partitions_of(d)) {
      XPoly<RatFun> prod = XPoly<RatFun>::monomial(d, Exponent(d, 0));
      for (int part : la.parts()) {
        XPoly<RatFun> pk;
        pk.n = d;
        for (int i = 0; i < d; ++i) {
          Exponent e(d, 0);
          e[i] = part;
          pk.add_term(e, RatFun(1L));
        }
        prod = prod * pk;
      }
      const NSymPoly<RatFun> direct = collect_symmetric(prod);
      const NSymPoly<RatFun> via = restrict_to(ctx, SymFun<RatFun>::element(Basis::p, la), d);
      CHECK(direct == via);
    }
  }
}

TEST_CASE("convert round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_p(rng, 5);
    CHECK(convert(ctx, convert(ctx, f, Basis::m), Basis::p) == f);
    CHECK(convert(ctx, convert(ctx, f, Basis::s), Basis::p) == f);
  }
  CHECK(convert(ctx, SymFun<RatFun>::element(Basis::HL_P, P("2")), Basis::m) == F("m[2] + (1-t)*m[1,1]"));
}

TEST_CASE("inner product") {
  CHECK(inner_product(ctx, F("p[2]"), F("p[2]")) == R("2*(1-q^2)/(1-t^2)"));
  CHECK(inner_product(ctx, F("p[1]"), F("p[2]")).is_zero());
  CHECK(inner_product(ctx, F("p[1,1]"), F("p[1,1]")) == R("2*(1-q)^2/(1-t)^2"));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const auto f = random_p(rng, 4);
    const auto g = convert(ctx, random_p(rng, 4), Basis::m);
    CHECK(inner_product(ctx, f, g) == inner_product(ctx, g, f));
  }
}

TEST_CASE("adjoints") {
  CHECK(adjoint_apply(ctx, F("p[1]"), F("p[1,1]")) == F("2*(1-q)/(1-t)*p[1]"));
  CHECK(adjoint_apply(ctx, F("p[2]"), F("p[1,1]")).is_zero());
  CHECK(dp1(ctx, F("p[1,1]")) == F("2*p[1]"));
  CHECK(dp1(ctx, F("p[2]")).is_zero());
  std::mt19937 rng(9);
  for (int trial = 0; trial < 6; ++trial) {
    const auto f = random_p(rng, 2);
    const auto h = random_p(rng, 2);
    const auto g = random_p(rng, 4);
    CHECK(inner_product(ctx, p_multiply(f, h, 4), g) == inner_product(ctx, h, adjoint_apply(ctx, f, g)));
    CHECK(dp1(ctx, g) == adjoint_apply(ctx, F("p[1]"), g) * R("(1-t)/(1-q)"));
  }
  // adjoint of p_n commutes with multiplication by p_m for n != m
  const auto g = random_p(rng, 4);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      if (n == m) continue;
      const auto pn = SymFun<RatFun>::element(Basis::p, Partition({n}));
      const auto pm = SymFun<RatFun>::element(Basis::p, Partition({m}));
      CHECK(adjoint_apply(ctx, pn, p_multiply(pm, g, 8)) == p_multiply(pm, adjoint_apply(ctx, pn, g), 8));
    }
  }
}

TEST_CASE("gradedness of products") {
  const auto f = F("p[2] + 3*p[1,1]");
  const auto g = F("q*p[3] + p[2,1]");
  const auto fg = p_multiply(f, g, 10);
  for (const auto& [la, c] : fg.coeffs()) CHECK(la.weight() == 5);
}

TEST_CASE("finite alphabets") {
  const NSymPoly<RatFun> r = restrict_to(ctx, F("m[1,1,1]"), 2);
  CHECK(r.is_zero());
  const NSymPoly<RatFun> p2 = restrict_to(ctx, F("p[2]"), 1);
  CHECK(p2.coeffs.size() == 1);
  CHECK(p2.coeff(P("2")) == R("1"));
  const auto f = F("p[2,1] + q*p[1,1,1] + m[3,1]*(1-t) - m[2,2]");
  for (int n = 2; n <= 4; ++n) CHECK(drop_last_variable(restrict_to(ctx, f, n)) == restrict_to(ctx, f, n - 1));
}

TEST_CASE("expand and collect") {
  NSymPoly<RatFun> f;
  f.n = 2;
  f.add_term(P("2,1"), RatFun(1L));
  const XPoly<RatFun> x = expand_x(f);
  CHECK(x.terms.size() == 2);
  CHECK(x.terms.count(Exponent{2, 1}) == 1);
  CHECK(x.terms.count(Exponent{1, 2}) == 1);
  NSymPoly<RatFun> g;
  g.n = 3;
  g.add_term(P("1,1"), RatFun(1L));
  CHECK(expand_x(g).terms.size() == 3);
  CHECK(collect_symmetric(x) == f);
  XPoly<RatFun> bad;
  bad.n = 2;
  bad.add_term({1, 0}, RatFun(1L));
  bad.add_term({0, 1}, RatFun(-1L));
  CHECK_THROWS_AS(collect_symmetric(bad), NotSymmetric);
  const auto five = collect_symmetric(XPoly<RatFun>::monomial(3, {0, 0, 0}, RatFun(5L)));
  CHECK(five.coeff(Partition()) == R("5"));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& la : partitions_up_to(6)) {
      if (static_cast<int>(la.length()) > n) continue;
      NSymPoly<RatFun> h;
      h.n = n;
      h.add_term(la, R("1-q*t"));
      CHECK(collect_symmetric(expand_x(h)) == h);
    }
  }
}

TEST_CASE("division by the Vandermonde determinant") {
  CHECK(divide_by_vandermonde(vandermonde<RatFun>(3)).coeff(Partition()) == R("1"));
  XPoly<RatFun> a;
  a.n = 2;
  a.add_term({2, 0}, RatFun(1L));
  a.add_term({0, 2}, RatFun(-1L));
  const auto q1 = divide_by_vandermonde(a);
  CHECK(q1.coeffs.size() == 1);
  CHECK(q1.coeff(P("1")) == R("1"));
  const auto alt = alternate(XPoly<RatFun>::monomial(2, {3, 1}));
  const auto q2 = divide_by_vandermonde(alt);
  CHECK(q2.coeffs.size() == 1);
  CHECK(q2.coeff(P("2,1")) == R("1"));
  CHECK_THROWS_AS(divide_by_vandermonde(XPoly<RatFun>::monomial(2, {1, 0})), NotAlternating);
  // oracle: multiplying the quotient back by the Vandermonde restores the input
  for (int n = 2; n <= 4; ++n) {
    const auto seed = XPoly<RatFun>::monomial(n, [n] {
      Exponent e(n);
      for (int i = 0; i < n; ++i) e[i] = (i * 2 + 1) % (n + 2);
      return e;
    }(), R("1+q"));
    const auto xp = alternate(seed);
    if (xp.is_zero()) continue;
    CHECK(expand_x(divide_by_vandermonde(xp)) * vandermonde<RatFun>(n) == xp);
  }
}

TEST_CASE("operand expressions and rendering") {
  CHECK(render_plain(F("m[2] + (1-t)*m[1,1]")) == "m[2] + (1-t)*m[1,1]");
  CHECK(render_plain(F("-q^2*m[2]")) == "-(q^2)*m[2]");
  CHECK(render_plain(F("(1-q)/q*p[1]")) == "((1-q)/q)*p[1]");
  CHECK(render_plain(F("1-q")) == "(1-q)");
  CHECK(render_plain(F("0*m[1]")) == "0");
  CHECK(render_plain(F("m[1] - m[2]")) == "m[1] - m[2]");
  CHECK(render_latex(F("(1-t)/(1-q*t)*m[2,1]")) == "\\frac{1 - t}{1 - qt} m_{(2,1)}");
  const auto f = F("(1+q)/(1-t)*m[2,1] - 3*m[1]");
  CHECK(symfun_from_json(symfun_to_json(f)) == f);
  CHECK(symfun_to_json(F("m[2]")) ==
        R"js({"basis":"m","degree_bound":2,"terms":[{"partition":[2],"coeff":"(1)"}]})js");
  CHECK_THROWS_AS(F("m[1"), ParseError);
  CHECK_THROWS_AS(F("x[1]"), ParseError);
  CHECK_THROWS_AS(F("m[1,2]"), ParseError);
  CHECK(F("p[1]*p[1]") == F("p[1,1]"));
  CHECK(F("m[1] + p[1]") == F("2*p[1]"));
}

TEST_CASE("numeric context agrees with the symbolic one") {
  const Context<Rat> num(mpq_class(2, 7), mpq_class(-3, 5));
  for (int d = 1; d <= 4; ++d) {
    const auto& sym = transition_matrix(ctx, Basis::HL_Q, Basis::p, d);
    const auto& val = transition_matrix(num, Basis::HL_Q, Basis::p, d);
    for (std::size_t i = 0; i < sym.rows(); ++i) {
      for (std::size_t j = 0; j < sym.cols(); ++j) CHECK(num.lift(sym(i, j)) == val(i, j));
    }
  }
}
