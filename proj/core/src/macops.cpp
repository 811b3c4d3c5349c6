#include "symfun/macops.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "symfun/errors.hpp"

namespace symfun {

template <class K>
K UPoly<K>::at(const K& u) const {
  K acc;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * u + c[k];
  return acc;
}

template <class K>
K URatio<K>::at(const K& u) const {
  const K d = den.at(u);
  if (d.is_zero()) throw PoleAtSample("denominator vanishes at u = " + u.to_string());
  return num.at(u) / d;
}

template <class K>
K pochhammer_tinv(const Context<K>& ctx, const K& u, int k) {
  K r(1L);
  for (int j = 0; j < k; ++j) r *= K(1L) - u * ctx.qt(0, -j);
  return r;
}

template <class K, class V>
V evaluate_family(const Context<K>& ctx, const UFamily<V>& fam, const K& u) {
  if (fam.entries.empty()) throw Error("empty family");
  V out = fam.entries[0];
  for (std::size_t k = 1; k < fam.entries.size(); ++k) {
    const K p = pochhammer_tinv(ctx, u, static_cast<int>(k));
    if (p.is_zero()) throw PoleAtSample("(u; 1/t)_" + std::to_string(k) + " vanishes at u = " + u.to_string());
    out += fam.entries[k] * p.inverse();
  }
  return out;
}

namespace {

struct SignedPerm {
  std::vector<int> sigma;  // 1-based images
  bool odd = false;
};

std::vector<SignedPerm> permutations(int n) {
  std::vector<SignedPerm> out;
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 1);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inv += s[i] > s[j] ? 1 : 0;
    }
    out.push_back({s, inv % 2 == 1});
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

// (1 - u t^{-j}) for j = lo..hi-1, multiplied out.
template <class K>
UPoly<K> tinv_product(const Context<K>& ctx, int lo, int hi) {
  UPoly<K> r{{K(1L)}};
  for (int j = lo; j < hi; ++j) r = r * UPoly<K>{{K(1L), -ctx.qt(0, -j)}};
  return r;
}

// Rewrites sum_d u^d poly[d] (degree <= n) divided by (u; 1/t)_n in the
// basis 1/(u; 1/t)_k, k = 0..n.
template <class K, class V>
UFamily<V> to_family(const Context<K>& ctx, std::vector<V> poly, int n) {
  UFamily<V> fam;
  fam.entries.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    const UPoly<K> b = tinv_product(ctx, k, n);
    const int d = n - k;
    const V e = poly[d] * b.c[d].inverse();
    for (int j = 0; j <= d; ++j) poly[j] -= e * b.c[j];
    fam.entries[k] = e;
  }
  return fam;
}

template <class K>
const SymFun<K>& hl_in_p(const Context<K>& ctx, const Partition& la, HLKind kind) {
  const std::string key = std::string(kind == HLKind::P ? "pP:" : "pQ:") + la.to_string();
  return ctx.memo().template get<SymFun<K>>(key, [&] {
    return convert(ctx, hall_littlewood(ctx, la, kind, la.weight()), Basis::p);
  });
}

PartitionConstraints of_length(int k) {
  PartitionConstraints c;
  c.exact_length = k;
  return c;
}

RatFun one_minus(int a, int b) { return RatFun(1L) - RatFun::qt(a, b); }

std::size_t one_box_index(const Partition& la, const Partition& mu) {
  const auto i = added_box_index(la, mu);
  if (!i) throw NotOneBox(la.to_string() + " is not " + mu.to_string() + " plus one box");
  return *i;
}

}  // namespace

template <class K>
UPolyOp<K> apply_DN(const Context<K>& ctx, const NSymPoly<K>& f, int n) {
  if (f.n != n) throw Error("operand lives in " + std::to_string(f.n) + " variables, not " + std::to_string(n));
  const XPoly<K> x = expand_x(f);
  const auto perms = permutations(n);
  std::vector<XPoly<K>> acc(n + 1);
  for (auto& a : acc) a.n = n;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    // T_S multiplies x^e by q^{sum_{i in S} e_i}
    XPoly<K> g;
    g.n = n;
    for (const auto& [e, c] : x.terms) {
      int s = 0;
      for (int i = 0; i < n; ++i) s += ((mask >> i) & 1U) != 0 ? e[i] : 0;
      g.add_term(e, c * ctx.qt(s, 0));
    }
    const int k = std::popcount(mask);
    for (const auto& p : perms) {
      int tp = 0;
      Exponent shift(n);
      for (int i = 0; i < n; ++i) {
        if (((mask >> i) & 1U) != 0) tp += 1 - p.sigma[i];
        shift[i] = n - p.sigma[i];
      }
      K factor = ctx.qt(0, tp);
      if (p.odd != (k % 2 == 1)) factor = -factor;
      for (const auto& [e, c] : g.terms) {
        Exponent moved = e;
        for (int i = 0; i < n; ++i) moved[i] += shift[i];
        acc[k].add_term(moved, c * factor);
      }
    }
  }
  UPolyOp<K> out;
  out.n = n;
  for (const auto& a : acc) out.coeffs.push_back(divide_by_vandermonde(a));
  return out;
}

template <class K>
UFamily<NSymPoly<K>> apply_AN(const Context<K>& ctx, const NSymPoly<K>& f, int n) {
  UPolyOp<K> d = apply_DN(ctx, f, n);
  for (auto& c : d.coeffs) {
    for (auto& [mu, v] : c.coeffs) v *= ctx.qt(-mu.weight(), 0);
  }
  return to_family(ctx, std::move(d.coeffs), n);
}

template <class K>
URatio<K> A_eigen(const Context<K>& ctx, const Partition& la) {
  URatio<K> r{{{K(1L)}}, {{K(1L)}}};
  for (std::size_t i = 1; i <= la.length(); ++i) {
    const K ti = ctx.qt(0, 1 - static_cast<int>(i));
    r.num = r.num * UPoly<K>{{ctx.qt(-la.part(i), 0), -ti}};
    r.den = r.den * UPoly<K>{{K(1L), -ti}};
  }
  return r;
}

template <class K>
UFamily<K> A_k_eigen(const Context<K>& ctx, const Partition& la) {
  const URatio<K> a = A_eigen(ctx, la);
  const std::size_t m = la.length() + 1;
  for (long start = 2; start < 64; ++start) {
    std::vector<K> us;
    std::vector<K> rhs;
    for (long u = start; us.size() < m && u < start + 256; ++u) {
      const K uk(u);
      if (a.den.at(uk).is_zero() || pochhammer_tinv(ctx, uk, static_cast<int>(m) - 1).is_zero()) continue;
      us.push_back(uk);
      rhs.push_back(a.at(uk));
    }
    if (us.size() < m) break;
    Matrix<K> sys(m, m);
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t k = 0; k < m; ++k) sys(s, k) = pochhammer_tinv(ctx, us[s], static_cast<int>(k)).inverse();
    }
    try {
      return UFamily<K>{sys.solve(rhs)};
    } catch (const SingularTransition&) {
      continue;
    }
  }
  throw SingularSampleSystem();
}

template <class K>
SymFun<K> A_k_apply(const Context<K>& ctx, int k, const SymFun<K>& f, int degree_bound) {
  const int d = f.max_weight();
  const int bound = std::max(degree_bound, std::max(d, 0));
  SymFun<K> out(Basis::p, bound);
  if (k < 1 || d < k) return out;
  for (const auto& la : partitions_up_to(d, of_length(k))) {
    const SymFun<K> g = adjoint_apply(ctx, hl_in_p(ctx, la, HLKind::P), f);
    if (g.is_zero()) continue;
    out += p_multiply(hl_in_p(ctx, la, HLKind::Q), g, bound) * ctx.qt(-la.weight(), 0);
  }
  out.set_degree_bound(bound);
  return out;
}

template <class K>
UFamily<SymFun<K>> A_apply(const Context<K>& ctx, const SymFun<K>& f) {
  UFamily<SymFun<K>> fam;
  fam.entries.push_back(convert(ctx, f, Basis::p));
  const int d = std::max(f.max_weight(), 0);
  for (int k = 1; k <= d; ++k) fam.entries.push_back(A_k_apply(ctx, k, f, f.degree_bound()));
  return fam;
}

RatFun pieri_up_coeff(const Partition& la, const Partition& mu) {
  const auto i = static_cast<int>(one_box_index(la, mu));
  RatFun r(1L);
  const int li = la.part(i);
  for (int j = 1; j < i; ++j) {
    const int a = la.part(j) - li;
    r *= one_minus(a, i - j + 1) / one_minus(a + 1, i - j);
    r *= one_minus(a + 1, i - j - 1) / one_minus(a, i - j);
  }
  return r;
}

RatFun pieri_down_coeff(const Partition& mu, const Partition& la) {
  const auto i = static_cast<int>(one_box_index(la, mu));
  const Partition lc = conjugate(la);
  RatFun r(1L);
  const int li = la.part(i);
  for (int j = 1; j < li; ++j) {
    const int b = lc.part(j) - i;
    r *= one_minus(li - j - 1, b + 1) / one_minus(li - j, b);
    r *= one_minus(li - j + 1, b) / one_minus(li - j, b + 1);
  }
  return r;
}

template <class K>
URatio<K> iskip(const Context<K>& ctx, const Partition& la, std::size_t i) {
  if (i < 1 || i > la.length()) throw InvalidStep("index " + std::to_string(i) + " outside " + la.to_string());
  const K ti = ctx.qt(0, 1 - static_cast<int>(i));
  URatio<K> r{{{ti}}, {{K(1L), -ti}}};
  for (std::size_t j = 1; j <= la.length(); ++j) {
    if (j == i) continue;
    const K tj = ctx.qt(0, 1 - static_cast<int>(j));
    r.num = r.num * UPoly<K>{{ctx.qt(-la.part(j), 0), -tj}};
    r.den = r.den * UPoly<K>{{K(1L), -tj}};
  }
  return r;
}

template <class K>
URatio<K> bc_matrix_coeff(const Context<K>& ctx, StepKind kind, const Partition& la, const Partition& mu) {
  const std::size_t i = one_box_index(la, mu);
  const RatFun base = kind == StepKind::B ? pieri_up_coeff(la, mu) * one_minus(0, 1)
                                          : pieri_down_coeff(mu, la) * one_minus(1, 0);
  URatio<K> r = iskip(ctx, la, i);
  const K c = ctx.lift(base);
  for (K& x : r.num.c) x *= c;
  return r;
}

template <class K>
SymFun<K> step_series_apply(const Context<K>& ctx, StepKind kind, int k, const SymFun<K>& f, int degree_bound) {
  const int d = f.max_weight();
  const int bound = std::max(degree_bound, kind == StepKind::B ? d + 1 : d - 1);
  SymFun<K> out(Basis::p, std::max(bound, 0));
  if (k < 0 || d < 0) return out;
  const int top = kind == StepKind::B ? d : d - 1;
  if (top < k) return out;
  const K tk = ctx.qt(0, -k);
  for (const auto& mu : partitions_up_to(top, of_length(k))) {
    const Partition mu1 = append_one(mu);
    const K scale = tk * ctx.qt(-mu.weight(), 0);
    if (kind == StepKind::B) {
      const SymFun<K> g = adjoint_apply(ctx, hl_in_p(ctx, mu, HLKind::P), f);
      if (g.is_zero()) continue;
      out += p_multiply(hl_in_p(ctx, mu1, HLKind::Q), g, bound) * scale;
    } else {
      const SymFun<K> g = adjoint_apply(ctx, hl_in_p(ctx, mu1, HLKind::Q), f);
      if (g.is_zero()) continue;
      out += p_multiply(hl_in_p(ctx, mu, HLKind::P), g, bound) * scale;
    }
  }
  out.set_degree_bound(std::max(bound, 0));
  return out;
}

template <class K>
UFamily<SymFun<K>> step_apply(const Context<K>& ctx, StepKind kind, const SymFun<K>& f) {
  UFamily<SymFun<K>> fam;
  const int d = f.max_weight();
  const int bound = std::max(f.degree_bound() + (kind == StepKind::B ? 1 : 0), 0);
  fam.entries.emplace_back(Basis::p, bound);
  for (int k = 0; k <= std::max(d, 0); ++k) fam.entries.push_back(step_series_apply(ctx, kind, k, f, bound));
  return fam;
}

StepValue step_evaluate(StepKind kind, const Partition& la, std::size_t i) {
  if (i < 1 || i > la.length()) throw InvalidStep("index " + std::to_string(i) + " outside " + la.to_string());
  std::vector<int> parts = la.parts();
  --parts[i - 1];
  if (i < la.length() && parts[i - 1] < parts[i]) {
    throw InvalidStep("lowering part " + std::to_string(i) + " of " + la.to_string() + " breaks the order");
  }
  StepValue v;
  v.partner = Partition(std::move(parts));
  const int li = la.part(i);
  const int ii = static_cast<int>(i);
  v.q_exp = -li;
  v.t_exp = ii - 1;
  const Context<RatFun>& ctx = symbolic();
  v.coeff = bc_matrix_coeff(ctx, kind, la, v.partner).at(RatFun::qt(v.q_exp, v.t_exp));

  RatFun closed = RatFun::qt(0, 1 - ii);
  for (std::size_t j = 1; j <= la.length(); ++j) {
    const int jj = static_cast<int>(j);
    closed /= RatFun::qt(li, 0) - RatFun::qt(0, ii - jj);
    if (j != i) closed *= RatFun::qt(li - la.part(j), 0) - RatFun::qt(0, ii - jj);
  }
  const RatFun base = kind == StepKind::B ? pieri_up_coeff(la, v.partner) * one_minus(0, 1)
                                          : pieri_down_coeff(v.partner, la) * one_minus(1, 0);
  v.closed_coeff = base * closed;
  v.ratio = v.coeff / v.closed_coeff;
  return v;
}

#define MACOPS_INSTANTIATE(K)                                                                          \
  template struct UPoly<K>;                                                                            \
  template struct URatio<K>;                                                                           \
  template K pochhammer_tinv(const Context<K>&, const K&, int);                                        \
  template K evaluate_family(const Context<K>&, const UFamily<K>&, const K&);                          \
  template SymFun<K> evaluate_family(const Context<K>&, const UFamily<SymFun<K>>&, const K&);          \
  template NSymPoly<K> evaluate_family(const Context<K>&, const UFamily<NSymPoly<K>>&, const K&);      \
  template UPolyOp<K> apply_DN(const Context<K>&, const NSymPoly<K>&, int);                            \
  template UFamily<NSymPoly<K>> apply_AN(const Context<K>&, const NSymPoly<K>&, int);                  \
  template URatio<K> A_eigen(const Context<K>&, const Partition&);                                     \
  template UFamily<K> A_k_eigen(const Context<K>&, const Partition&);                                  \
  template SymFun<K> A_k_apply(const Context<K>&, int, const SymFun<K>&, int);                         \
  template UFamily<SymFun<K>> A_apply(const Context<K>&, const SymFun<K>&);                            \
  template URatio<K> iskip(const Context<K>&, const Partition&, std::size_t);                          \
  template URatio<K> bc_matrix_coeff(const Context<K>&, StepKind, const Partition&, const Partition&); \
  template SymFun<K> step_series_apply(const Context<K>&, StepKind, int, const SymFun<K>&, int);       \
  template UFamily<SymFun<K>> step_apply(const Context<K>&, StepKind, const SymFun<K>&);

MACOPS_INSTANTIATE(RatFun)
MACOPS_INSTANTIATE(Rat)

}  // namespace symfun
