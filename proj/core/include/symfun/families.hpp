#pragma once

#include <vector>

#include "symfun/symfun.hpp"

namespace symfun {

enum class HLKind { P, Q };

/// P_la(x_1..x_N) in the monomial basis; coefficients lie in Z[t].
/// Throws LengthExceedsN.
NSymPoly<RatFun> hl_alternant(const Partition& la, int n);

/// Stable Hall-Littlewood function in the m basis.
template <class K>
SymFun<K> hall_littlewood(const Context<K>& ctx, const Partition& la, HLKind kind, int degree_bound);

/// s_la in the m basis, obtained as P_la at t = 0.
template <class K>
SymFun<K> schur(const Context<K>& ctx, const Partition& la);

/// Q_0 = 1, Q_1, ..., Q_d in the p basis: coefficients of u^n in
/// exp(sum_n (1-t^n)/n p_n u^n).
template <class K>
std::vector<SymFun<K>> q_row_series(const Context<K>& ctx, int degree_bound);

/// Macdonald function M_la in the m basis.
template <class K>
SymFun<K> macdonald_M(const Context<K>& ctx, const Partition& la);

/// All M_la with |la| = d, in the order of partitions_of(d).
template <class K>
const std::vector<SymFun<K>>& macdonald_degree(const Context<K>& ctx, int d);

/// X_{la,mu}(t) with p_la = sum_mu X_{la,mu} P_mu.
struct GreenTable {
  int degree = 0;
  std::vector<Partition> index;
  /// entries(row la, column mu)
  Matrix<RatFun> entries;
};
GreenTable green_table(int degree);

/// Coefficient of P_la in Q_n P_mu, n = |la| - |mu|.
IntPoly2 morris_phi(const Partition& la, const Partition& mu);

/// Coefficient of P_mu in dP_la/dp_1 (zero unless mu is la minus a box).
IntPoly2 psi_coeff(const Partition& la, const Partition& mu);

}  // namespace symfun
