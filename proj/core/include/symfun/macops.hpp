#pragma once

#include <vector>

#include "symfun/families.hpp"

namespace symfun {

/// Polynomial in u; c[k] multiplies u^k.
template <class K>
struct UPoly {
  std::vector<K> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  K at(const K& u) const;
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    UPoly r;
    r.c.resize(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
};

/// Rational function num(u) / den(u).
template <class K>
struct URatio {
  UPoly<K> num;
  UPoly<K> den;

  /// Throws PoleAtSample when den(u) = 0.
  K at(const K& u) const;
};

/// sum_k entries[k] / (u; t^-1)_k. V is a scalar, SymFun or NSymPoly.
template <class V>
struct UFamily {
  std::vector<V> entries;
};

/// (u; t^-1)_k = (1-u)(1-u/t)...(1-u t^{1-k}).
template <class K>
K pochhammer_tinv(const Context<K>& ctx, const K& u, int k);

/// Value of a family at a point u; throws PoleAtSample.
template <class K, class V>
V evaluate_family(const Context<K>& ctx, const UFamily<V>& fam, const K& u);

/// D_N(u) f as a polynomial in u: coeffs[k] is the u^k coefficient.
template <class K>
struct UPolyOp {
  int n = 1;
  std::vector<NSymPoly<K>> coeffs;
};

/// The determinantal operator D_N(u) on a symmetric polynomial in N
/// variables. Throws NotSymmetric / NotAlternating on malformed input.
template <class K>
UPolyOp<K> apply_DN(const Context<K>& ctx, const NSymPoly<K>& f, int n);

/// A_N(u) f = (T_1..T_N)^{-1} D_N(u) f / (u; t^-1)_N in the basis
/// 1/(u; t^-1)_k, k = 0..N.
template <class K>
UFamily<NSymPoly<K>> apply_AN(const Context<K>& ctx, const NSymPoly<K>& f, int n);

/// Eigenvalue of A(u) on M_la: prod_i (q^{-la_i} - u t^{1-i}) / (1 - u t^{1-i}).
template <class K>
URatio<K> A_eigen(const Context<K>& ctx, const Partition& la);

/// Coefficients e_0..e_l(la) of A_eigen(la) in the basis 1/(u; t^-1)_k,
/// found by sampling u at integers >= 2 and solving exactly.
/// Throws SingularSampleSystem when no usable samples are found.
template <class K>
UFamily<K> A_k_eigen(const Context<K>& ctx, const Partition& la);

/// A^(k) f = sum_{l(la)=k} q^{-|la|} Q_la P_la^* f, in the p basis.
template <class K>
SymFun<K> A_k_apply(const Context<K>& ctx, int k, const SymFun<K>& f, int degree_bound);

/// A(u) f = f + sum_k A^(k) f / (u; t^-1)_k.
template <class K>
UFamily<SymFun<K>> A_apply(const Context<K>& ctx, const SymFun<K>& f);

/// Coefficient of M_la in p_1 M_mu; throws NotOneBox unless la is mu plus
/// one box.
RatFun pieri_up_coeff(const Partition& la, const Partition& mu);

/// Coefficient of M_mu in dM_la/dp_1; throws NotOneBox unless mu is la
/// minus one box.
RatFun pieri_down_coeff(const Partition& mu, const Partition& la);

enum class StepKind { B, C };

/// The factor t^{1-i}/(1-u t^{1-i}) prod_{j != i} (q^{-la_j} - u t^{1-j})/(1 - u t^{1-j}).
template <class K>
URatio<K> iskip(const Context<K>& ctx, const Partition& la, std::size_t i);

/// B_{la,mu}(u) (kind B) or C_{mu,la}(u) (kind C); la is always the larger
/// partition. Throws NotOneBox.
template <class K>
URatio<K> bc_matrix_coeff(const Context<K>& ctx, StepKind kind, const Partition& la, const Partition& mu);

/// B^(k+1) f or C^(k+1) f from the closed sums over partitions of length k.
/// The result is in the p basis.
template <class K>
SymFun<K> step_series_apply(const Context<K>& ctx, StepKind kind, int k, const SymFun<K>& f, int degree_bound);

/// B(u) f or C(u) f; entries[0] is zero.
template <class K>
UFamily<SymFun<K>> step_apply(const Context<K>& ctx, StepKind kind, const SymFun<K>& f);

struct StepValue {
  /// u = q^{q_exp} t^{t_exp}
  int q_exp = 0;
  int t_exp = 0;
  /// mu for kind B (B(u) M_mu = coeff M_la), mu for kind C (C(u) M_la = coeff M_mu)
  Partition partner;
  RatFun coeff;
  /// The same coefficient from the closed product at the point.
  RatFun closed_coeff;
  /// coeff / closed_coeff
  RatFun ratio;
};

/// One-box evaluation at u = q^{-la_i} t^{i-1}. Throws InvalidStep when
/// lowering la_i does not give a partition.
StepValue step_evaluate(StepKind kind, const Partition& la, std::size_t i);

}  // namespace symfun
