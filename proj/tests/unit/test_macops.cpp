#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "symfun/errors.hpp"
#include "symfun/macops.hpp"

using namespace symfun;
using testing_helpers::F;
using testing_helpers::P;
using testing_helpers::R;

namespace {

const Context<RatFun>& ctx = symbolic();

SymFun<RatFun> in_p(const SymFun<RatFun>& f) { return convert(ctx, f, Basis::p); }

SymFun<RatFun> M(const Partition& la) { return macdonald_M(ctx, la); }

NSymPoly<RatFun> nsym(int n, std::initializer_list<std::pair<const char*, const char*>> terms) {
  NSymPoly<RatFun> f;
  f.n = n;
  for (const auto& [la, c] : terms) f.add_term(P(la), R(c));
  return f;
}

// D_k as a linear map on N-variable symmetric polynomials.
NSymPoly<RatFun> d_coeff(const NSymPoly<RatFun>& f, int k) { return apply_DN(ctx, f, f.n).coeffs[k]; }

SymFun<RatFun> random_homogeneous(std::mt19937& rng, int d) {
  SymFun<RatFun> f(Basis::p, d);
  const char* coeffs[] = {"1", "-2", "q", "1-t", "(1+q)/(1-t)", "t^2"};
  for (const auto& la : partitions_of(d)) f.add_term(la, R(coeffs[rng() % 6]));
  return f;
}

}  // namespace

TEST_CASE("D_N in one and two variables") {
  for (int n = 0; n <= 3; ++n) {
    const auto part = n == 0 ? std::string() : std::to_string(n);
    const auto f = nsym(1, {{part.c_str(), "1"}});
    const auto d = apply_DN(ctx, f, 1);
    REQUIRE(d.coeffs.size() == 2);
    CHECK(d.coeffs[0] == f);
    CHECK(d.coeffs[1] == f * (-RatFun::qt(n, 0)));
  }
  const auto m1 = nsym(2, {{"1", "1"}});
  const auto d1 = apply_DN(ctx, m1, 2);
  CHECK(d1.coeffs[0] == m1);
  CHECK(d1.coeffs[1] == m1 * R("-(q+1/t)"));
  CHECK(d1.coeffs[2] == m1 * R("q/t"));
  const auto one = nsym(2, {{"", "1"}});
  const auto d0 = apply_DN(ctx, one, 2);
  CHECK(d0.coeffs[0] == one);
  CHECK(d0.coeffs[1] == one * R("-(1+1/t)"));
  CHECK(d0.coeffs[2] == one * R("1/t"));
}

TEST_CASE("D_N eigenvalues on Macdonald polynomials") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& la : partitions_up_to(4)) {
      if (static_cast<int>(la.length()) > n) continue;
      const auto f = restrict_to(ctx, M(la), n);
      UPoly<RatFun> ev{{RatFun(1L)}};
      for (int i = 1; i <= n; ++i) ev = ev * UPoly<RatFun>{{RatFun(1L), -RatFun::qt(la.part(i), 1 - i)}};
      const auto d = apply_DN(ctx, f, n);
      for (int k = 0; k <= n; ++k) CHECK_MESSAGE(d.coeffs[k] == f * ev.c[k], la.to_string() << " N=" << n);
    }
  }
}

TEST_CASE("D_N coefficients commute") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& mu : partitions_up_to(3)) {
      if (static_cast<int>(mu.length()) > n) continue;
      NSymPoly<RatFun> f;
      f.n = n;
      f.add_term(mu, RatFun(1L));
      for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          CHECK(d_coeff(d_coeff(f, k), j) == d_coeff(d_coeff(f, j), k));
        }
      }
    }
  }
}

TEST_CASE("D_N rejects non-symmetric input through the alternant") {
  NSymPoly<RatFun> f;
  f.n = 2;
  f.add_term(P("1"), R("1"));
  CHECK_THROWS_AS(apply_DN(ctx, f, 3), Error);
}

TEST_CASE("renormalised A_N") {
  const auto a = apply_AN(ctx, nsym(1, {{"1", "1"}}), 1);
  REQUIRE(a.entries.size() == 2);
  CHECK(a.entries[0] == nsym(1, {{"1", "1"}}));
  CHECK(a.entries[1] == nsym(1, {{"1", "1/q-1"}}));
  for (int n = 1; n <= 3; ++n) {
    const auto one = apply_AN(ctx, nsym(n, {{"", "1"}}), n);
    CHECK(one.entries[0] == nsym(n, {{"", "1"}}));
    for (int k = 1; k <= n; ++k) CHECK(one.entries[k].is_zero());
  }
  // evaluating the family reproduces the eigenvalue
  const auto f = restrict_to(ctx, M(P("2,1")), 3);
  const auto fam = apply_AN(ctx, f, 3);
  for (long u : {2L, 5L}) {
    CHECK(evaluate_family(ctx, fam, RatFun(u)) == f * A_eigen(ctx, P("2,1")).at(RatFun(u)));
  }
}

TEST_CASE("A_N is stable under x_N = 0") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& mu : partitions_up_to(3)) {
      if (static_cast<int>(mu.length()) > n) continue;
      NSymPoly<RatFun> f;
      f.n = n;
      f.add_term(mu, R("1+q"));
      const auto big = apply_AN(ctx, f, n);
      const auto small = apply_AN(ctx, drop_last_variable(f), n - 1);
      for (int k = 0; k <= n; ++k) {
        const auto lhs = drop_last_variable(big.entries[k]);
        if (k < n) {
          CHECK(lhs == small.entries[k]);
        } else {
          CHECK(lhs.is_zero());
        }
      }
    }
  }
}

TEST_CASE("eigenvalues of A(u)") {
  CHECK(A_eigen(ctx, P("")).at(R("7")) == R("1"));
  const auto a1 = A_eigen(ctx, P("1"));
  CHECK(a1.at(R("3")) == R("(1/q-3)/(1-3)"));
  const auto a11 = A_eigen(ctx, P("1,1"));
  CHECK(a11.at(R("2")) == R("(1/q-2)*(1/q-2/t)/((1-2)*(1-2/t))"));
  CHECK_THROWS_AS(a1.at(R("1")), PoleAtSample);

  CHECK(A_k_eigen(ctx, P("")).entries == std::vector<RatFun>{R("1")});
  CHECK(A_k_eigen(ctx, P("1")).entries == std::vector<RatFun>{R("1"), R("1/q-1")});
  CHECK(A_k_eigen(ctx, P("2,1")).entries[1] == R("(1/q^2-1) + (1/q-1)*t"));
  for (const auto& la : partitions_up_to(6)) {
    const auto e = A_k_eigen(ctx, la);
    REQUIRE(e.entries.size() == la.length() + 1);
    CHECK(e.entries[0].is_one());
    RatFun e1;
    for (std::size_t i = 1; i <= la.length(); ++i) {
      e1 += (RatFun::qt(-la.part(i), 0) - RatFun(1L)) * RatFun::qt(0, static_cast<int>(i) - 1);
    }
    if (!la.empty()) CHECK(e.entries[1] == e1);
    for (long u : {9L, 11L}) CHECK(evaluate_family(ctx, e, RatFun(u)) == A_eigen(ctx, la).at(RatFun(u)));
  }
}

TEST_CASE("operators at infinity") {
  CHECK(A_k_apply(ctx, 1, F("p[1]"), 1) == F("(1/q-1)*p[1]"));
  CHECK(A_k_apply(ctx, 2, M(P("1")), 1).is_zero());
  CHECK(A_k_apply(ctx, 1, F("p[]"), 0).is_zero());
  for (const auto& la : partitions_up_to(4)) {
    const auto e = A_k_eigen(ctx, la);
    for (int k = 1; k <= 3; ++k) {
      const auto lhs = A_k_apply(ctx, k, M(la), la.weight());
      if (static_cast<int>(la.length()) < k) {
        CHECK(lhs.is_zero());
      } else {
        CHECK_MESSAGE(lhs == in_p(M(la)) * e.entries[k], la.to_string() << " k=" << k);
      }
    }
  }
}

TEST_CASE("operators at infinity are self-adjoint, commute and keep degree") {
  std::mt19937 rng(7);
  for (int d = 1; d <= 3; ++d) {
    const auto f = random_homogeneous(rng, d);
    const auto g = random_homogeneous(rng, d);
    for (int k = 1; k <= 3; ++k) {
      const auto af = A_k_apply(ctx, k, f, d);
      CHECK(af.max_weight() <= d);
      CHECK(inner_product(ctx, af, g) == inner_product(ctx, f, A_k_apply(ctx, k, g, d)));
      for (int j = 1; j < k; ++j) {
        CHECK(A_k_apply(ctx, j, af, d) == A_k_apply(ctx, k, A_k_apply(ctx, j, f, d), d));
      }
    }
  }
}

TEST_CASE("Pieri coefficients") {
  CHECK(pieri_up_coeff(P("1"), P("")) == R("1"));
  CHECK(pieri_up_coeff(P("1,1"), P("1")) == R("(1-q)*(1+t)/(1-q*t)"));
  CHECK(pieri_up_coeff(P("2"), P("1")) == R("1"));
  CHECK_THROWS_AS(pieri_up_coeff(P("2,1"), P("1")), NotOneBox);
  CHECK(pieri_down_coeff(P(""), P("1")) == R("1"));
  CHECK(pieri_down_coeff(P("1"), P("2")) == R("(1+q)*(1-t)/(1-q*t)"));
  CHECK(pieri_down_coeff(P("2"), P("2,1")) == R("1"));
  CHECK_THROWS_AS(pieri_down_coeff(P("1"), P("3")), NotOneBox);
}

TEST_CASE("Pieri coefficients against products and derivatives") {
  for (const auto& mu : partitions_up_to(4)) {
    SymFun<RatFun> rhs(Basis::p, mu.weight() + 1);
    for (const auto& la : add_box(mu)) rhs += in_p(M(la)) * pieri_up_coeff(la, mu);
    CHECK_MESSAGE(multiply(ctx, F("p[1]"), M(mu), mu.weight() + 1) == rhs, mu.to_string());
  }
  for (const auto& la : partitions_up_to(5)) {
    if (la.empty()) continue;
    SymFun<RatFun> rhs(Basis::p, la.weight() - 1);
    for (const auto& mu : remove_box(la)) rhs += in_p(M(mu)) * pieri_down_coeff(mu, la);
    CHECK_MESSAGE(dp1(ctx, M(la)) == rhs, la.to_string());
  }
}

TEST_CASE("step series") {
  const auto f = F("p[2] + q*p[1]");
  CHECK(step_series_apply(ctx, StepKind::B, 0, f, 2) == multiply(ctx, F("(1-t)*p[1]"), f, 3));
  CHECK(step_series_apply(ctx, StepKind::C, 0, F("p[1]"), 1) == F("(1-q)*p[]"));
  CHECK(step_series_apply(ctx, StepKind::C, 1, M(P("1")), 1).is_zero());
  std::mt19937 rng(11);
  for (int d = 1; d <= 3; ++d) {
    const auto g = random_homogeneous(rng, d);
    for (int k = 0; k <= 2; ++k) {
      const auto b = step_series_apply(ctx, StepKind::B, k, g, d);
      const auto c = step_series_apply(ctx, StepKind::C, k, g, d);
      if (!b.is_zero()) CHECK(b.max_weight() == d + 1);
      if (!c.is_zero()) CHECK(c.max_weight() == d - 1);
      const auto h = random_homogeneous(rng, d + 1);
      CHECK(inner_product(ctx, b, h) == inner_product(ctx, g, step_series_apply(ctx, StepKind::C, k, h, d + 1)));
    }
  }
}

TEST_CASE("matrix coefficients of B(u) and C(u)") {
  CHECK(bc_matrix_coeff(ctx, StepKind::B, P("1"), P("")).at(R("3")) == R("(1-t)/(1-3)"));
  CHECK(bc_matrix_coeff(ctx, StepKind::C, P("1"), P("")).at(R("3")) == R("(1-q)/(1-3)"));
  CHECK(bc_matrix_coeff(ctx, StepKind::B, P("1,1"), P("1")).at(R("2")) ==
        R("(1-q)*(1+t)/(1-q*t) * (1/t)/(1-2/t) * (1/q-2)/(1-2) * (1-t)"));
  for (const auto& mu : partitions_up_to(3)) {
    const auto fam = step_apply(ctx, StepKind::B, M(mu));
    for (long u : {2L, 3L}) {
      SymFun<RatFun> rhs(Basis::p, mu.weight() + 1);
      for (const auto& la : add_box(mu)) rhs += in_p(M(la)) * bc_matrix_coeff(ctx, StepKind::B, la, mu).at(RatFun(u));
      CHECK_MESSAGE(evaluate_family(ctx, fam, RatFun(u)) == rhs, mu.to_string());
    }
  }
  for (const auto& la : partitions_up_to(4)) {
    if (la.empty()) continue;
    const auto fam = step_apply(ctx, StepKind::C, M(la));
    for (long u : {2L, 5L}) {
      SymFun<RatFun> rhs(Basis::p, la.weight() - 1);
      for (const auto& mu : remove_box(la)) rhs += in_p(M(mu)) * bc_matrix_coeff(ctx, StepKind::C, la, mu).at(RatFun(u));
      CHECK_MESSAGE(evaluate_family(ctx, fam, RatFun(u)) == rhs, la.to_string());
    }
  }
}

TEST_CASE("one-box evaluations") {
  const auto b1 = step_evaluate(StepKind::B, P("1"), 1);
  CHECK(b1.q_exp == -1);
  CHECK(b1.t_exp == 0);
  CHECK(b1.partner == P(""));
  CHECK(b1.coeff == R("(1-t)*q/(q-1)"));
  CHECK(b1.closed_coeff == R("(1-t)/(q-1)"));
  CHECK(b1.ratio == R("q"));
  const auto c1 = step_evaluate(StepKind::C, P("1"), 1);
  CHECK(c1.coeff == R("-q"));
  const auto b2 = step_evaluate(StepKind::B, P("2"), 1);
  CHECK(b2.partner == P("1"));
  CHECK(b2.coeff == R("(1-t)*q^2/(q^2-1)"));
  CHECK_THROWS_AS(step_evaluate(StepKind::B, P("2,2"), 1), InvalidStep);
  CHECK_THROWS_AS(step_evaluate(StepKind::C, P("2"), 2), InvalidStep);
  for (const auto& la : partitions_up_to(4)) {
    for (std::size_t i = 1; i <= la.length(); ++i) {
      if (i < la.length() && la.part(i) == la.part(i + 1)) continue;
      CHECK(step_evaluate(StepKind::C, la, i).ratio == RatFun::qt(la.part(i), 0));
    }
  }
}

TEST_CASE("C(u) isolates one Macdonald function at the one-box points") {
  for (const auto& la : partitions_up_to(4)) {
    if (la.empty()) continue;
    const auto fam = step_apply(ctx, StepKind::C, M(la));
    for (std::size_t i = 1; i <= la.length(); ++i) {
      if (i < la.length() && la.part(i) == la.part(i + 1)) continue;
      const auto v = step_evaluate(StepKind::C, la, i);
      const auto value = evaluate_family(ctx, fam, RatFun::qt(v.q_exp, v.t_exp));
      CHECK_MESSAGE(value == in_p(M(v.partner)) * v.coeff, la.to_string() << " i=" << i);
    }
  }
}

TEST_CASE("numeric field agrees with the symbolic one") {
  const Context<Rat> num(mpq_class(2, 3), mpq_class(5, 7));
  const auto la = P("2,1");
  for (int k = 1; k <= 2; ++k) {
    const auto a = A_k_apply(num, k, macdonald_M(num, la), 3);
    CHECK(a == lift(num, A_k_apply(ctx, k, M(la), 3)));
  }
  const auto e = A_k_eigen(num, la);
  CHECK(e.entries[1] == num.lift(A_k_eigen(ctx, la).entries[1]));
}
