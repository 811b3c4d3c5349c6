#include "symfun/families.hpp"

#include <algorithm>

#include "symfun/errors.hpp"

namespace symfun {

namespace {

IntPoly2 one_minus_t_pow(int k) { return IntPoly2(1L) - IntPoly2::monomial(1, 0, k); }

// prod_{i<j<=n} (x_i - t x_j)
const XPoly<RatFun>& hl_kernel_product(int n) {
  return symbolic_memo().get<XPoly<RatFun>>("hlprod:" + std::to_string(n), [n] {
    XPoly<RatFun> r = XPoly<RatFun>::monomial(n, Exponent(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Exponent ei(n, 0);
        Exponent ej(n, 0);
        ei[i] = 1;
        ej[j] = 1;
        XPoly<RatFun> f = XPoly<RatFun>::monomial(n, ei);
        f.add_term(ej, -RatFun::t());
        r = r * f;
      }
    }
    return r;
  });
}

}  // namespace

NSymPoly<RatFun> hl_alternant(const Partition& la, int n) {
  if (static_cast<int>(la.length()) > n) throw LengthExceedsN(la.length(), n);
  const XPoly<RatFun>& prod = hl_kernel_product(n);
  std::map<Partition, RatFun> schur_coeffs;
  Exponent e(n);
  for (const auto& [ex, c] : prod.terms) {
    for (int i = 0; i < n; ++i) e[i] = ex[i] + la.part(static_cast<std::size_t>(i) + 1);
    // alternating x^e gives sign * a_{sorted e}, zero when e has repeats
    bool repeated = false;
    int inversions = 0;
    for (int i = 0; i < n && !repeated; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (e[i] == e[j]) {
          repeated = true;
          break;
        }
        if (e[i] < e[j]) ++inversions;
      }
    }
    if (repeated) continue;
    Exponent sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (int i = 0; i < n; ++i) sorted[i] -= n - 1 - i;
    Partition nu(std::move(sorted));
    RatFun& slot = schur_coeffs[nu];
    slot += inversions % 2 == 0 ? c : -c;
  }
  std::erase_if(schur_coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  NSymPoly<RatFun> m = schur_to_monomial(schur_coeffs, n);
  const IntPoly2 v = v_poly(la, n);
  NSymPoly<RatFun> out;
  out.n = n;
  for (const auto& [mu, c] : m.coeffs) {
    if (!c.is_polynomial()) throw NotDivisible();
    out.coeffs.emplace(mu, RatFun(exact_div(c.num(), v)));
  }
  return out;
}

namespace {

const SymFun<RatFun>& hl_p_symbolic(const Partition& la) {
  return symbolic_memo().get<SymFun<RatFun>>("hlP:" + la.to_string(), [&la] {
    SymFun<RatFun> f = lift_symmetric(hl_alternant(la, std::max(la.weight(), 1)));
    f.set_degree_bound(la.weight());
    return f;
  });
}

}  // namespace

template <class K>
SymFun<K> hall_littlewood(const Context<K>& ctx, const Partition& la, HLKind kind, int degree_bound) {
  SymFun<K> f = lift(ctx, hl_p_symbolic(la));
  if (kind == HLKind::Q) f *= ctx.lift(RatFun(b_poly(la)));
  f.set_degree_bound(std::max(degree_bound, la.weight()));
  return f;
}

template <class K>
SymFun<K> schur(const Context<K>& ctx, const Partition& la) {
  const SymFun<RatFun>& s = symbolic_memo().get<SymFun<RatFun>>("schur:" + la.to_string(), [&la] {
    return specialize(hl_p_symbolic(la), std::nullopt, RatFun(0L));
  });
  return lift(ctx, s);
}

template <class K>
std::vector<SymFun<K>> q_row_series(const Context<K>& ctx, int degree_bound) {
  std::vector<SymFun<K>> out;
  out.push_back(SymFun<K>::constant(Basis::p, K(1L)));
  for (int n = 1; n <= degree_bound; ++n) {
    SymFun<K> qn(Basis::p, n);
    for (int k = 1; k <= n; ++k) {
      const K a = ctx.lift(RatFun(one_minus_t_pow(k)));
      for (const auto& [mu, c] : out[n - k].coeffs()) {
        std::vector<int> parts = mu.parts();
        parts.push_back(k);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        qn.add_term(Partition(std::move(parts)), a * c);
      }
    }
    qn *= K(1L) / K(static_cast<long>(n));
    qn.set_degree_bound(n);
    out.push_back(std::move(qn));
  }
  return out;
}

template <class K>
const std::vector<SymFun<K>>& macdonald_degree(const Context<K>& ctx, int d) {
  return ctx.memo().template get<std::vector<SymFun<K>>>("mac:" + std::to_string(d), [&ctx, d] {
    const auto& ps = partitions_of(d);
    const std::size_t n = ps.size();
    const Matrix<K>& a = transition_matrix(ctx, Basis::m, Basis::p, d);
    // Gram matrix of the monomial basis
    Matrix<K> g(n, n);
    std::vector<K> norms_p(n);
    for (std::size_t k = 0; k < n; ++k) norms_p[k] = p_norm(ctx, ps[k]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        K s;
        for (std::size_t k = 0; k < n; ++k) {
          if (!a(k, i).is_zero() && !a(k, j).is_zero()) s += a(k, i) * a(k, j) * norms_p[k];
        }
        g(i, j) = s;
        g(j, i) = s;
      }
    }
    std::vector<std::vector<K>> c(n, std::vector<K>(n));
    std::vector<std::vector<K>> gc(n, std::vector<K>(n));
    std::vector<K> norms(n);
    for (std::size_t idx = n; idx-- > 0;) {
      c[idx][idx] = K(1L);
      for (std::size_t j = idx + 1; j < n; ++j) {
        const K& ip = gc[j][idx];
        if (ip.is_zero()) continue;
        const K f = ip / norms[j];
        for (std::size_t l = 0; l < n; ++l) {
          if (!c[j][l].is_zero()) c[idx][l] -= f * c[j][l];
        }
      }
      for (std::size_t l = 0; l < n; ++l) {
        if (c[idx][l].is_zero()) continue;
        if (!dominated_by(ps[l], ps[idx])) {
          throw Error("Gram-Schmidt produced m_" + ps[l].to_string() + " in M_" + ps[idx].to_string() +
                      " outside the dominance order");
        }
      }
      for (std::size_t r = 0; r < n; ++r) {
        K s;
        for (std::size_t l = 0; l < n; ++l) {
          if (!c[idx][l].is_zero() && !g(r, l).is_zero()) s += c[idx][l] * g(r, l);
        }
        gc[idx][r] = s;
      }
      K nn;
      for (std::size_t l = 0; l < n; ++l) {
        if (!c[idx][l].is_zero()) nn += c[idx][l] * gc[idx][l];
      }
      if (nn.is_zero()) throw SingularTransition("vanishing norm in Gram-Schmidt");
      norms[idx] = nn;
    }
    std::vector<SymFun<K>> out;
    for (std::size_t i = 0; i < n; ++i) {
      SymFun<K> f(Basis::m, d);
      for (std::size_t l = 0; l < n; ++l) f.add_term(ps[l], c[i][l]);
      f.set_degree_bound(d);
      out.push_back(std::move(f));
    }
    return out;
  });
}

template <class K>
SymFun<K> macdonald_M(const Context<K>& ctx, const Partition& la) {
  return macdonald_degree(ctx, la.weight())[partition_index(la)];
}

GreenTable green_table(int degree) {
  GreenTable g;
  g.degree = degree;
  g.index = partitions_of(degree);
  const Matrix<RatFun>& t = transition_matrix(symbolic(), Basis::p, Basis::HL_P, degree);
  const std::size_t n = g.index.size();
  g.entries = Matrix<RatFun>(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.entries(i, j) = t(j, i);
  }
  return g;
}

IntPoly2 morris_phi(const Partition& la, const Partition& mu) {
  if (la.weight() < mu.weight() || !is_horizontal_strip(la, mu)) return {};
  const Partition lc = conjugate(la);
  const Partition mc = conjugate(mu);
  IntPoly2 r(1L);
  const std::size_t cols = lc.length();
  for (std::size_t i = 1; i <= cols; ++i) {
    const int th = lc.part(i) - mc.part(i);
    const int th_next = lc.part(i + 1) - mc.part(i + 1);
    if (th > th_next) r *= one_minus_t_pow(la.multiplicity(static_cast<int>(i)));
  }
  return r;
}

IntPoly2 psi_coeff(const Partition& la, const Partition& mu) {
  const auto i = added_box_index(la, mu);
  if (!i) return {};
  if (la.part(*i) == 1) return IntPoly2(1L);
  return one_minus_t_pow(mu.multiplicity(mu.part(*i)));
}

#define FAMILIES_INSTANTIATE(K)                                                                 \
  template SymFun<K> hall_littlewood(const Context<K>&, const Partition&, HLKind, int);         \
  template SymFun<K> schur(const Context<K>&, const Partition&);                                \
  template std::vector<SymFun<K>> q_row_series(const Context<K>&, int);                         \
  template const std::vector<SymFun<K>>& macdonald_degree(const Context<K>&, int);              \
  template SymFun<K> macdonald_M(const Context<K>&, const Partition&);

FAMILIES_INSTANTIATE(RatFun)
FAMILIES_INSTANTIATE(Rat)

}  // namespace symfun
