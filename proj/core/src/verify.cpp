#include "symfun/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "json.hpp"
#include "symfun/errors.hpp"
#include "symfun/families.hpp"

namespace symfun {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(Clock::now()) { r_.name = std::move(name); }

  Recorder& param(std::string key, std::string value) {
    r_.parameters.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Recorder& param(std::string key, int value) { return param(std::move(key), std::to_string(value)); }

  /// Keeps the first witness only.
  void fail(std::string witness) {
    if (r_.status == Status::Fail) return;
    r_.status = Status::Fail;
    r_.witness = std::move(witness);
  }
  void fail_if(const std::optional<std::string>& witness) {
    if (witness) fail(*witness);
  }
  bool failed() const { return r_.status == Status::Fail; }

  CheckReport done() {
    r_.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_);
    return r_;
  }

 private:
  CheckReport r_;
  Clock::time_point start_;
};

std::string key_text(const Partition& la) { return "[" + la.to_string() + "]"; }

std::string key_text(const Exponent& e) {
  std::string s = "x^(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::string key_text(const std::pair<Partition, Partition>& k) { return key_text(k.first) + "(x)" + key_text(k.second); }

std::string samples_text(const std::vector<long>& us) {
  std::string s;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(us[i]);
  }
  return s;
}

/// First key where the two maps differ, as "key: lhs != rhs".
template <class Key, class K>
std::optional<std::string> first_difference(const std::map<Key, K>& a, const std::map<Key, K>& b,
                                            const std::string& prefix = "") {
  std::set<Key> keys;
  for (const auto& kv : a) keys.insert(kv.first);
  for (const auto& kv : b) keys.insert(kv.first);
  for (const auto& k : keys) {
    auto ia = a.find(k);
    auto ib = b.find(k);
    const K va = ia == a.end() ? K() : ia->second;
    const K vb = ib == b.end() ? K() : ib->second;
    if (!(va == vb)) return prefix + key_text(k) + ": " + va.to_string() + " != " + vb.to_string();
  }
  return std::nullopt;
}

template <class K>
std::optional<std::string> sym_difference(const Context<K>& ctx, const SymFun<K>& a, const SymFun<K>& b,
                                          const std::string& prefix = "") {
  const SymFun<K> pa = a.basis() == Basis::p ? a : convert(ctx, a, Basis::p);
  const SymFun<K> pb = b.basis() == Basis::p ? b : convert(ctx, b, Basis::p);
  return first_difference(pa.coeffs(), pb.coeffs(), prefix + "p");
}

template <class K>
std::optional<std::string> nsym_difference(const NSymPoly<K>& a, const NSymPoly<K>& b, const std::string& prefix = "") {
  return first_difference(a.coeffs, b.coeffs, prefix + "m");
}

template <class K>
std::optional<std::string> first_nonzero(const XPoly<K>& xp, const std::string& prefix = "") {
  if (xp.terms.empty()) return std::nullopt;
  const auto& [e, c] = *xp.terms.begin();
  return prefix + key_text(e) + ": " + c.to_string() + " != 0";
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

PartitionConstraints of_length(int k) {
  PartitionConstraints c;
  c.exact_length = k;
  return c;
}

PartitionConstraints at_most(int k) {
  PartitionConstraints c;
  c.max_length = k;
  return c;
}

template <class K>
NSymPoly<K> lift_nsym(const Context<K>& ctx, const NSymPoly<RatFun>& f) {
  NSymPoly<K> r;
  r.n = f.n;
  for (const auto& [la, c] : f.coeffs) r.add_term(la, ctx.lift(c));
  return r;
}

/// Q_la(x_1..x_n) in the monomial basis, coefficients in Z[t].
NSymPoly<RatFun> hl_q_poly(const Partition& la, int n) {
  NSymPoly<RatFun> r;
  r.n = n;
  if (n == 0) {
    if (la.empty()) r.add_term(la, RatFun(1L));
    return r;
  }
  return hl_alternant(la, n) * RatFun(b_poly(la));
}

/// Inserts a new variable with exponent e at position i (1-based).
XPoly<RatFun> embed(const XPoly<RatFun>& xp, std::size_t i, int e) {
  XPoly<RatFun> r;
  r.n = xp.n + 1;
  for (const auto& [ex, c] : xp.terms) {
    Exponent f = ex;
    f.insert(f.begin() + static_cast<std::ptrdiff_t>(i - 1), e);
    r.add_term(f, c);
  }
  return r;
}

/// sum_i (-1)^{i+1} x_i^{N-1+n} Delta^(i) Q_mu^(i).
XPoly<RatFun> isum(const Partition& mu, int n, int N) {
  const XPoly<RatFun> vm = vandermonde<RatFun>(N - 1);
  const XPoly<RatFun> qm = expand_x(hl_q_poly(mu, N - 1));
  const XPoly<RatFun> base = vm * qm;
  XPoly<RatFun> out;
  out.n = N;
  for (int i = 1; i <= N; ++i) {
    XPoly<RatFun> term = embed(base, static_cast<std::size_t>(i), N - 1 + n);
    if (i % 2 == 0) term *= RatFun(-1L);
    out += term;
  }
  return out;
}

/// mu with l(mu) = l(la), mu != la and phi_{la,mu} != 0, paired with phi.
std::vector<std::pair<Partition, RatFun>> strip_partners(const Partition& la) {
  std::vector<std::pair<Partition, RatFun>> out;
  const int l = static_cast<int>(la.length());
  for (const auto& mu : partitions_up_to(la.weight() - 1, of_length(l))) {
    const IntPoly2 phi = morris_phi(la, mu);
    if (!phi.is_zero()) out.emplace_back(mu, RatFun(phi));
  }
  return out;
}

template <class K>
K sample_pochhammer(const Context<K>& ctx, const K& u, int k) {
  const K v = pochhammer_tinv(ctx, u, k);
  if (v.is_zero()) throw PoleAtSample("(u;1/t)_" + std::to_string(k) + " vanishes at u = " + u.to_string());
  return v;
}

/// exp(sum_n c[n] p_n (x) p_n) up to bidegree d; c[0] is unused.
template <class K>
BiSymFun<K> bisym_exp(const std::vector<K>& c, int d) {
  std::vector<std::map<std::pair<Partition, Partition>, K>> f(static_cast<std::size_t>(d) + 1);
  f[0][{Partition(), Partition()}] = K(1L);
  for (int m = 1; m <= d; ++m) {
    auto& fm = f[static_cast<std::size_t>(m)];
    for (int k = 1; k <= m; ++k) {
      const Partition pk({k});
      const K scale = c[static_cast<std::size_t>(k)] * K(static_cast<long>(k)) / K(static_cast<long>(m));
      for (const auto& [key, v] : f[static_cast<std::size_t>(m - k)]) {
        auto& slot = fm[{merge(key.first, pk), merge(key.second, pk)}];
        slot += v * scale;
      }
    }
  }
  BiSymFun<K> out;
  out.degree_bound = d;
  for (const auto& fm : f) {
    for (const auto& [key, v] : fm) out.add_term(key.first, key.second, v);
  }
  return out;
}

int x_weight(const std::pair<Partition, Partition>& key) { return key.first.weight(); }

template <class K>
SymFun<K> random_homogeneous(const Context<K>& ctx, std::mt19937& rng, int d) {
  static const char* const pool[] = {"1", "-2", "q", "1-t", "(1+q)/(1-t)", "t^2/q", "3", "-q*t"};
  SymFun<K> f(Basis::p, d);
  for (const auto& la : partitions_of(d)) {
    const auto pick = rng() % 9;
    if (pick == 8) continue;
    f.add_term(la, ctx.lift(RatFun::parse(pool[pick])));
  }
  return f;
}

}  // namespace

std::string report_json(const CheckReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["status"] = r.passed() ? "Pass" : "Fail";
  j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
  if (with_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j.dump();
}

std::string summary_json(const std::vector<CheckReport>& reports, bool with_timing) {
  std::size_t passed = 0;
  std::chrono::nanoseconds total{0};
  for (const auto& r : reports) {
    if (r.passed()) ++passed;
    total += r.elapsed;
  }
  nlohmann::ordered_json s;
  s["total"] = reports.size();
  s["passed"] = passed;
  s["failed"] = reports.size() - passed;
  if (with_timing) s["elapsed_ms"] = std::chrono::duration<double, std::milli>(total).count();
  nlohmann::ordered_json j;
  j["summary"] = s;
  return j.dump();
}

template <class K>
BiSymFun<K> bisym_multiply(const BiSymFun<K>& a, const BiSymFun<K>& b, int degree_bound) {
  BiSymFun<K> out;
  out.degree_bound = std::max(degree_bound, a.degree_bound + b.degree_bound);
  for (const auto& [ka, va] : a.coeffs) {
    for (const auto& [kb, vb] : b.coeffs) {
      if (x_weight(ka) + x_weight(kb) > degree_bound) continue;
      out.add_term(merge(ka.first, kb.first), merge(ka.second, kb.second), va * vb);
    }
  }
  return out;
}

template <class K>
BiSymFun<K> kernel_pi(const Context<K>& ctx, int degree_bound) {
  std::vector<K> c(static_cast<std::size_t>(std::max(degree_bound, 0)) + 1);
  for (int n = 1; n <= degree_bound; ++n) {
    c[static_cast<std::size_t>(n)] =
        (K(1L) - ctx.qt(0, n)) / ((K(1L) - ctx.qt(n, 0)) * K(static_cast<long>(n)));
  }
  return bisym_exp(c, degree_bound);
}

template <class K>
BiSymFun<K> hl_kernel(const Context<K>& ctx, int degree_bound) {
  std::vector<K> c(static_cast<std::size_t>(std::max(degree_bound, 0)) + 1);
  for (int n = 1; n <= degree_bound; ++n) {
    c[static_cast<std::size_t>(n)] = (K(1L) - ctx.qt(0, n)) / K(static_cast<long>(n));
  }
  return bisym_exp(c, degree_bound);
}

template <class K>
CheckReport check_kernel_lemma(const Context<K>& ctx, const SymFun<K>& f, int degree_bound,
                               const std::string& label) {
  Recorder rec("kernel-lemma");
  rec.param("f", label).param("degree_bound", degree_bound).param("mode", ctx.describe());
  const SymFun<K> fp = f.basis() == Basis::p ? f : convert(ctx, f, Basis::p);
  const int e = std::max(fp.max_weight(), 0);
  const int d = degree_bound;
  const BiSymFun<K> pi = kernel_pi(ctx, d + e);

  // f^* on the x slot
  BiSymFun<K> fpi;
  fpi.degree_bound = d + e;
  for (const auto& [key, c] : pi.coeffs) {
    const SymFun<K> g = adjoint_apply(ctx, fp, SymFun<K>::element(Basis::p, key.first));
    for (const auto& [ga, gc] : g.coeffs()) {
      if (ga.weight() <= d) fpi.add_term(ga, key.second, c * gc);
    }
  }

  // series inverse of Pi, degree by degree in x
  std::vector<BiSymFun<K>> comp(static_cast<std::size_t>(d) + 1);
  for (auto& c : comp) c.degree_bound = d;
  for (const auto& [key, c] : pi.coeffs) {
    if (x_weight(key) <= d) comp[static_cast<std::size_t>(x_weight(key))].add_term(key.first, key.second, c);
  }
  std::vector<BiSymFun<K>> inv(static_cast<std::size_t>(d) + 1);
  for (auto& c : inv) c.degree_bound = d;
  inv[0].add_term(Partition(), Partition(), K(1L));
  for (int m = 1; m <= d; ++m) {
    BiSymFun<K> acc;
    acc.degree_bound = d;
    for (int k = 1; k <= m; ++k) {
      acc += bisym_multiply(comp[static_cast<std::size_t>(k)], inv[static_cast<std::size_t>(m - k)], d);
    }
    for (auto& [key, c] : acc.coeffs) c = -c;
    inv[static_cast<std::size_t>(m)] = acc;
  }
  BiSymFun<K> pi_inv;
  for (const auto& part : inv) pi_inv += part;

  const BiSymFun<K> lhs = bisym_multiply(fpi, pi_inv, d);
  BiSymFun<K> rhs;
  rhs.degree_bound = e;
  for (const auto& [la, c] : fp.coeffs()) rhs.add_term(Partition(), la, c);
  rec.fail_if(first_difference(lhs.coeffs, rhs.coeffs));
  return rec.done();
}

template <class K>
CheckReport check_hl_cauchy(const Context<K>& ctx, int degree) {
  Recorder rec("hl-cauchy");
  rec.param("degree", degree).param("mode", ctx.describe());
  const BiSymFun<K> kern = hl_kernel(ctx, degree);
  BiSymFun<K> lhs;
  lhs.degree_bound = degree;
  for (const auto& [key, c] : kern.coeffs) {
    if (x_weight(key) == degree) lhs.add_term(key.first, key.second, c);
  }
  BiSymFun<K> rhs;
  rhs.degree_bound = degree;
  for (const auto& la : partitions_of(degree)) {
    const SymFun<K> qx = convert(ctx, hall_littlewood(ctx, la, HLKind::Q, degree), Basis::p);
    const SymFun<K> py = convert(ctx, hall_littlewood(ctx, la, HLKind::P, degree), Basis::p);
    for (const auto& [a, ca] : qx.coeffs()) {
      for (const auto& [b, cb] : py.coeffs()) rhs.add_term(a, b, ca * cb);
    }
  }
  rec.fail_if(first_difference(lhs.coeffs, rhs.coeffs));
  return rec.done();
}

CheckReport check_green(int degree) {
  Recorder rec("green");
  rec.param("degree", degree);
  const Context<RatFun>& ctx = symbolic();
  const GreenTable g = green_table(degree);
  const std::size_t n = g.index.size();
  const auto& chars = transition_matrix(ctx, Basis::p, Basis::s, degree);
  for (std::size_t j = 0; j < n && !rec.failed(); ++j) {
    const Partition& mu = g.index[j];
    int top = -1;
    Int lead = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const RatFun& x = g.entries(i, j);
      const std::string at = "X[" + g.index[i].to_string() + "][" + mu.to_string() + "]";
      if (!x.is_polynomial() || x.num().degree_q() > 0) {
        rec.fail(at + ": " + x.to_string() + " is not in Z[t]");
        break;
      }
      if (x.num().degree_t() > top) {
        top = x.num().degree_t();
        lead = x.num().coeff(0, top);
      }
      const RatFun at0 = x.specialize(std::nullopt, RatFun(0L));
      const RatFun chi = chars(partition_index(mu), partition_index(g.index[i]));
      if (!(at0 == chi)) rec.fail(at + " at t=0: " + at0.to_string() + " != character " + chi.to_string());
    }
    if (top != stats(mu).n_stat || lead != 1) {
      rec.fail("column " + key_text(mu) + ": top degree " + std::to_string(top) + " coefficient " + lead.get_str() +
               ", expected monic of degree " + std::to_string(stats(mu).n_stat));
    }
    for (std::size_t k = 0; k < n; ++k) {
      RatFun s;
      for (std::size_t i = 0; i < n; ++i) s += g.entries(i, j) * g.entries(i, k) / t_factors(g.index[i]).z_t;
      const RatFun expect = j == k ? RatFun(b_poly(mu)) : RatFun();
      if (!(s == expect)) {
        rec.fail("orthogonality " + key_text(mu) + "," + key_text(g.index[k]) + ": " + s.to_string() +
                 " != " + expect.to_string());
      }
    }
    SymFun<RatFun> qmu(Basis::p, degree);
    for (std::size_t i = 0; i < n; ++i) qmu.add_term(g.index[i], g.entries(i, j) / t_factors(g.index[i]).z_t);
    rec.fail_if(sym_difference(ctx, qmu, hall_littlewood(ctx, mu, HLKind::Q, degree), "Q" + key_text(mu) + " "));
  }
  return rec.done();
}

template <class K>
CheckReport check_macdonald_basis(const Context<K>& ctx, int degree) {
  Recorder rec("macdonald-basis");
  rec.param("degree", degree).param("mode", ctx.describe());
  const auto& parts = partitions_of(degree);
  const auto& ms = macdonald_degree(ctx, degree);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const Partition& la = parts[a];
    const SymFun<K> m = ms[a].basis() == Basis::m ? ms[a] : convert(ctx, ms[a], Basis::m);
    if (!m.coeff(la).is_one()) rec.fail("M" + key_text(la) + " m" + key_text(la) + ": " + m.coeff(la).to_string());
    for (const auto& [mu, c] : m.coeffs()) {
      if (!dominated_by(mu, la)) rec.fail("M" + key_text(la) + " has m" + key_text(mu) + ": " + c.to_string());
    }
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      const K ip = inner_product(ctx, ms[a], ms[b]);
      if (!ip.is_zero()) rec.fail("<M" + key_text(la) + ", M" + key_text(parts[b]) + ">: " + ip.to_string());
    }
  }
  return rec.done();
}

template <class K>
CheckReport check_deigen(const Context<K>& ctx, int n, const Partition& la) {
  Recorder rec("deigen");
  rec.param("N", n).param("partition", la.to_string()).param("mode", ctx.describe());
  if (static_cast<int>(la.length()) > n) throw LengthExceedsN(la.length(), n);
  const NSymPoly<K> f = restrict_to(ctx, macdonald_M(ctx, la), n);
  UPoly<K> ev{{K(1L)}};
  for (int i = 1; i <= n; ++i) ev = ev * UPoly<K>{{K(1L), -ctx.qt(la.part(static_cast<std::size_t>(i)), 1 - i)}};
  const UPolyOp<K> d = apply_DN(ctx, f, n);
  for (int k = 0; k <= n; ++k) {
    const NSymPoly<K> expect = f * ev.c[static_cast<std::size_t>(k)];
    const NSymPoly<K> got = static_cast<std::size_t>(k) < d.coeffs.size() ? d.coeffs[static_cast<std::size_t>(k)] : NSymPoly<K>{n, {}};
    rec.fail_if(nsym_difference(got, expect, "u^" + std::to_string(k) + " "));
  }
  return rec.done();
}

template <class K>
CheckReport check_theorem_basic(const Context<K>& ctx, int k, const Partition& la) {
  Recorder rec("theorem");
  rec.param("k", k).param("partition", la.to_string()).param("mode", ctx.describe());
  const SymFun<K> m = macdonald_M(ctx, la);
  const SymFun<K> lhs = A_k_apply(ctx, k, m, la.weight());
  SymFun<K> rhs(Basis::p, la.weight());
  if (static_cast<int>(la.length()) >= k) {
    const UFamily<K> e = A_k_eigen(ctx, la);
    rhs = convert(ctx, m, Basis::p) * e.entries[static_cast<std::size_t>(k)];
  }
  rec.fail_if(sym_difference(ctx, lhs, rhs));
  return rec.done();
}

CheckReport check_first_eigenvalue(const Partition& la) {
  Recorder rec("first-eigenvalue");
  rec.param("partition", la.to_string());
  const Context<RatFun>& ctx = symbolic();
  const UFamily<RatFun> e = A_k_eigen(ctx, la);
  RatFun expect;
  for (std::size_t i = 1; i <= la.length(); ++i) {
    expect += (RatFun::qt(-la.part(i), 0) - RatFun(1L)) * RatFun::qt(0, static_cast<int>(i) - 1);
  }
  const RatFun got = e.entries.size() > 1 ? e.entries[1] : RatFun();
  rec.param("e1", got.to_string());
  if (!(got == expect)) rec.fail("e1: " + got.to_string() + " != " + expect.to_string());
  return rec.done();
}

template <class K>
CheckReport check_corollary(const Context<K>& ctx, StepKind kind, int k, const Partition& la,
                            const std::vector<long>& u_samples) {
  const bool is_b = kind == StepKind::B;
  Recorder rec(is_b ? "corollary-B" : "corollary-C");
  rec.param("k", k).param("partition", la.to_string()).param("u_samples", samples_text(u_samples));
  rec.param("mode", ctx.describe());
  const SymFun<K> m = macdonald_M(ctx, la);
  const int w = la.weight();
  const int bound = is_b ? w + 1 : std::max(w - 1, 0);
  std::vector<SymFun<K>> series;
  for (int j = 0; j <= k; ++j) series.push_back(step_series_apply(ctx, kind, j, m, bound));
  const std::vector<Partition> partners = is_b ? add_box(la) : remove_box(la);
  const URatio<K> a_la = A_eigen(ctx, la);
  for (long us : u_samples) {
    const K u(us);
    const std::string at = "u=" + std::to_string(us) + " ";
    const K a_here = a_la.at(u);
    SymFun<K> lhs(Basis::p, bound);
    for (const auto& nu : partners) {
      const RatFun c = is_b ? pieri_up_coeff(nu, la) : pieri_down_coeff(nu, la);
      const K a_nu = A_eigen(ctx, nu).at(u);
      const K coeff = is_b ? ctx.lift(c) * (a_here - ctx.q() * a_nu) : ctx.lift(c) * (a_nu - ctx.q() * a_here);
      lhs += convert(ctx, macdonald_M(ctx, nu), Basis::p) * coeff;
    }
    SymFun<K> sum(Basis::p, bound);
    for (int j = 0; j <= k; ++j) sum += series[static_cast<std::size_t>(j)] * (K(1L) / sample_pochhammer(ctx, u, j + 1));
    const K scale = is_b ? -u * (K(1L) - ctx.q()) / (K(1L) - ctx.t()) : -u;
    rec.fail_if(sym_difference(ctx, lhs, sum * scale, at));
  }
  return rec.done();
}

template <class K>
CheckReport check_step_adjoint(const Context<K>& ctx, int k, int degree, unsigned seed) {
  Recorder rec("step-adjoint");
  rec.param("k", k).param("degree", degree).param("seed", std::to_string(seed)).param("mode", ctx.describe());
  std::mt19937 rng(seed);
  const SymFun<K> f = random_homogeneous(ctx, rng, degree);
  const SymFun<K> g = random_homogeneous(ctx, rng, degree + 1);
  const K lhs = inner_product(ctx, step_series_apply(ctx, StepKind::B, k, f, degree + 1), g);
  const K rhs = inner_product(ctx, f, step_series_apply(ctx, StepKind::C, k, g, degree));
  if (!(lhs == rhs)) rec.fail("<B f, g> = " + lhs.to_string() + " != <f, C g> = " + rhs.to_string());
  return rec.done();
}

CheckReport check_step_evaluation(StepKind kind, const Partition& la, std::size_t i) {
  const bool is_b = kind == StepKind::B;
  Recorder rec(is_b ? "step-B" : "step-C");
  rec.param("partition", la.to_string()).param("i", static_cast<int>(i));
  const Context<RatFun>& ctx = symbolic();
  const StepValue v = step_evaluate(kind, la, i);
  const RatFun u = RatFun::qt(v.q_exp, v.t_exp);
  rec.param("u", u.to_string()).param("coeff", v.coeff.to_string()).param("ratio", v.ratio.to_string());
  const Partition& source = is_b ? v.partner : la;
  const Partition& target = is_b ? la : v.partner;
  const UFamily<SymFun<RatFun>> fam = step_apply(ctx, kind, macdonald_M(ctx, source));
  const SymFun<RatFun> value = convert(ctx, evaluate_family(ctx, fam, u), Basis::Mac_M);
  std::map<Partition, RatFun> expect;
  if (!v.coeff.is_zero()) expect[target] = v.coeff;
  rec.fail_if(first_difference(value.coeffs(), expect, "M"));
  return rec.done();
}

XPoly<RatFun> alternant_F(const Partition& mu, int n, int N) {
  if (static_cast<int>(mu.length()) >= N) throw LengthExceedsN(mu.length(), N - 1);
  Exponent e(static_cast<std::size_t>(N), 0);
  for (int i = 0; i < N - 1; ++i) e[static_cast<std::size_t>(i)] = mu.part(static_cast<std::size_t>(i) + 1);
  e[static_cast<std::size_t>(N - 1)] = N - 1 + n;
  XPoly<RatFun> seed = XPoly<RatFun>::monomial(N, e);
  for (int i = 0; i < N - 1; ++i) {
    for (int j = i + 1; j < N - 1; ++j) {
      Exponent ei(static_cast<std::size_t>(N), 0);
      Exponent ej(static_cast<std::size_t>(N), 0);
      ei[static_cast<std::size_t>(i)] = 1;
      ej[static_cast<std::size_t>(j)] = 1;
      XPoly<RatFun> f = XPoly<RatFun>::monomial(N, ei);
      f.add_term(ej, -RatFun::t());
      seed = seed * f;
    }
  }
  return alternate(seed);
}

CheckReport check_alternant_sum(const Partition& mu, int n, int N) {
  Recorder rec("alternant-sum");
  rec.param("partition", mu.to_string()).param("n", n).param("N", N);
  RatFun factor = RatFun(b_poly(mu)) / RatFun(v_poly(mu, N - 1));
  if (N % 2 == 0) factor = -factor;
  XPoly<RatFun> diff = alternant_F(mu, n, N);
  diff *= factor;
  diff -= isum(mu, n, N);
  rec.fail_if(first_nonzero(diff));
  return rec.done();
}

CheckReport check_proposition(int N, const Partition& la) {
  Recorder rec("proposition");
  rec.param("N", N).param("partition", la.to_string());
  const int l = static_cast<int>(la.length());
  if (l == 0 || l >= N) throw Error("the identity needs 0 < l(la) < N, got " + la.to_string() + " with N = " + std::to_string(N));
  const RatFun head = RatFun(1L) - RatFun::qt(0, l);
  XPoly<RatFun> by_rows = isum(la, 0, N);
  by_rows *= head;
  XPoly<RatFun> by_alternants = alternant_F(la, 0, N);
  by_alternants *= head;
  const auto partners = strip_partners(la);
  for (const auto& [mu, phi] : partners) {
    const int n = la.weight() - mu.weight();
    XPoly<RatFun> a = isum(mu, n, N);
    a *= phi;
    by_rows += a;
    XPoly<RatFun> b = alternant_F(mu, n, N);
    b *= phi;
    by_alternants += b;
  }
  rec.param("terms", static_cast<int>(partners.size()) + 1);
  rec.fail_if(first_nonzero(by_rows, "sum over i "));
  rec.fail_if(first_nonzero(by_alternants, "alternant form "));
  return rec.done();
}

CheckReport check_schur_support(int N, const Partition& la) {
  Recorder rec("schur-support");
  rec.param("N", N).param("partition", la.to_string());
  std::vector<Partition> mus{la};
  for (const auto& [mu, phi] : strip_partners(la)) mus.push_back(mu);
  for (const auto& mu : mus) {
    const auto s = alternant_to_schur(alternant_F(mu, la.weight() - mu.weight(), N));
    for (const auto& [nu, c] : s) {
      if (natural_compare(nu, la) != Dominance::Less) {
        rec.fail("F" + key_text(mu) + " has s" + key_text(nu) + ": " + c.to_string());
      }
    }
  }
  return rec.done();
}

template <class K>
CheckReport check_finite_symbol(const Context<K>& ctx, int N, int degree_bound, const std::vector<long>& u_samples) {
  Recorder rec("finite-symbol");
  rec.param("N", N).param("degree_bound", degree_bound).param("u_samples", samples_text(u_samples));
  rec.param("mode", ctx.describe());
  const int d = degree_bound;
  using Bi = std::map<Partition, XPoly<K>>;
  const auto qs = q_row_series(ctx, d);
  auto bi_multiply = [&](const Bi& a, const Bi& b) {
    Bi out;
    for (const auto& [ga, xa] : a) {
      for (const auto& [gb, xb] : b) {
        if (ga.weight() + gb.weight() > d) continue;
        auto [it, fresh] = out.try_emplace(merge(ga, gb), XPoly<K>{N, {}});
        it->second += xa * xb;
      }
    }
    return out;
  };

  // Q_la(x) P_la(y) summed over la, grouped by y
  std::vector<std::pair<int, std::map<Partition, NSymPoly<K>>>> lhs_parts;
  for (const auto& la : partitions_up_to(d, at_most(N))) {
    const NSymPoly<K> qx = lift_nsym(ctx, hl_q_poly(la, N));
    const SymFun<K> py = convert(ctx, hall_littlewood(ctx, la, HLKind::P, la.weight()), Basis::p);
    std::map<Partition, NSymPoly<K>> part;
    for (const auto& [g, c] : py.coeffs()) part.emplace(g, qx * c);
    lhs_parts.emplace_back(static_cast<int>(la.length()), std::move(part));
  }

  for (long us : u_samples) {
    const K u(us);
    const std::string at = "u=" + std::to_string(us) + " ";
    std::map<Partition, NSymPoly<K>> lhs;
    for (const auto& [len, part] : lhs_parts) {
      const K inv = K(1L) / sample_pochhammer(ctx, u, len);
      for (const auto& [g, f] : part) {
        auto [it, fresh] = lhs.try_emplace(g, NSymPoly<K>{N, {}});
        it->second += f * inv;
      }
    }

    // prod_j x_j^{N-j} (G(x_j) - u t^{1-j}), G(x) = sum_n Q_n(y) x^n
    Bi prod;
    prod.emplace(Partition(), XPoly<K>::monomial(N, Exponent(static_cast<std::size_t>(N), 0)));
    for (int j = 1; j <= N; ++j) {
      Bi factor;
      for (int n = 0; n <= d; ++n) {
        Exponent e(static_cast<std::size_t>(N), 0);
        e[static_cast<std::size_t>(j - 1)] = N - j + n;
        for (const auto& [g, c] : qs[static_cast<std::size_t>(n)].coeffs()) {
          auto [it, fresh] = factor.try_emplace(g, XPoly<K>{N, {}});
          it->second.add_term(e, c);
        }
      }
      Exponent e(static_cast<std::size_t>(N), 0);
      e[static_cast<std::size_t>(j - 1)] = N - j;
      auto [it, fresh] = factor.try_emplace(Partition(), XPoly<K>{N, {}});
      it->second.add_term(e, -u * ctx.qt(0, 1 - j));
      prod = bi_multiply(prod, factor);
    }
    const K inv_n = K(1L) / sample_pochhammer(ctx, u, N);
    std::map<Partition, NSymPoly<K>> rhs;
    for (const auto& [g, xp] : prod) {
      NSymPoly<K> s = divide_by_vandermonde(alternate(xp)) * inv_n;
      if (!s.is_zero()) rhs.emplace(g, std::move(s));
    }

    std::set<Partition> keys;
    for (const auto& kv : lhs) keys.insert(kv.first);
    for (const auto& kv : rhs) keys.insert(kv.first);
    for (const auto& g : keys) {
      const NSymPoly<K> zero{N, {}};
      const auto il = lhs.find(g);
      const auto ir = rhs.find(g);
      rec.fail_if(nsym_difference(il == lhs.end() ? zero : il->second, ir == rhs.end() ? zero : ir->second,
                                  at + "p" + key_text(g) + "(y) "));
    }
  }
  return rec.done();
}

CheckReport check_decomposition(const Partition& la, int N, std::size_t i) {
  Recorder rec("decomposition");
  rec.param("partition", la.to_string()).param("N", N).param("i", static_cast<int>(i));
  if (static_cast<int>(la.length()) > N) throw LengthExceedsN(la.length(), N);
  if (i < 1 || static_cast<int>(i) > N) throw Error("index " + std::to_string(i) + " outside 1.." + std::to_string(N));
  const XPoly<RatFun> lhs = expand_x(hl_q_poly(la, N));
  XPoly<RatFun> rhs;
  rhs.n = N;
  for (const auto& mu : partitions_up_to(la.weight(), at_most(N - 1))) {
    const IntPoly2 phi = morris_phi(la, mu);
    if (phi.is_zero()) continue;
    XPoly<RatFun> term = embed(expand_x(hl_q_poly(mu, N - 1)), i, la.weight() - mu.weight());
    term *= RatFun(phi);
    rhs += term;
  }
  rec.fail_if(first_difference(lhs.terms, rhs.terms));
  return rec.done();
}

CheckReport check_specialization(const Partition& la) {
  Recorder rec("specialization");
  rec.param("partition", la.to_string());
  const Context<RatFun>& ctx = symbolic();
  const SymFun<RatFun> p = hall_littlewood(ctx, la, HLKind::P, la.weight());
  const SymFun<RatFun> m_at_q0 = specialize(convert(ctx, macdonald_M(ctx, la), Basis::m), RatFun(0L), std::nullopt);
  rec.fail_if(first_difference(m_at_q0.coeffs(), p.coeffs(), "M at q=0, m"));
  rec.fail_if(first_difference(specialize(p, std::nullopt, RatFun(0L)).coeffs(), schur(ctx, la).coeffs(), "P at t=0, m"));
  rec.fail_if(first_difference(specialize(p, std::nullopt, RatFun(1L)).coeffs(),
                               SymFun<RatFun>::element(Basis::m, la).coeffs(), "P at t=1, m"));
  return rec.done();
}

CheckReport check_morris(const Partition& la) {
  Recorder rec("morris");
  rec.param("partition", la.to_string());
  const Context<RatFun>& ctx = symbolic();
  const int d = la.weight();
  const auto qs = q_row_series(ctx, d);
  for (const auto& mu : partitions_up_to(d - 1)) {
    const SymFun<RatFun> prod =
        multiply(ctx, qs[static_cast<std::size_t>(d - mu.weight())], hall_littlewood(ctx, mu, HLKind::P, mu.weight()), d);
    const RatFun got = convert(ctx, prod, Basis::HL_P).coeff(la);
    const RatFun expect(morris_phi(la, mu));
    if (!(got == expect)) {
      rec.fail("phi" + key_text(la) + key_text(mu) + ": expansion " + got.to_string() + " != closed " + expect.to_string());
    }
  }
  return rec.done();
}

CheckReport check_psi(const Partition& la) {
  Recorder rec("psi");
  rec.param("partition", la.to_string());
  const Context<RatFun>& ctx = symbolic();
  if (la.empty()) return rec.done();
  const SymFun<RatFun> d = dp1(ctx, convert(ctx, hall_littlewood(ctx, la, HLKind::P, la.weight()), Basis::p));
  const SymFun<RatFun> in_p = d.is_zero() ? SymFun<RatFun>(Basis::HL_P) : convert(ctx, d, Basis::HL_P);
  for (const auto& mu : partitions_of(la.weight() - 1)) {
    const RatFun got = in_p.coeff(mu);
    const RatFun expect(psi_coeff(la, mu));
    if (!(got == expect)) {
      rec.fail("psi" + key_text(la) + key_text(mu) + ": derivative " + got.to_string() + " != closed " + expect.to_string());
    }
  }
  return rec.done();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kernel",  "hl-cauchy",     "green",         "deigen",
                                              "theorem", "corollary",     "step",          "proposition",
                                              "finite-symbol", "decomposition", "macdonald", "specialization",
                                              "cross-oracle", "all"};
  return names;
}

namespace {

std::vector<Partition> sweep(const SuiteConfig& cfg, int max_weight, bool include_empty = true) {
  if (cfg.partition) return {*cfg.partition};
  std::vector<Partition> out;
  for (const auto& la : partitions_up_to(max_weight)) {
    if (include_empty || !la.empty()) out.push_back(la);
  }
  return out;
}

/// Runs one check; library errors become a Fail with the message as witness.
void guarded(const std::function<void(const CheckReport&)>& sink, const std::string& name,
             std::vector<std::pair<std::string, std::string>> params, const std::function<CheckReport()>& body) {
  try {
    sink(body());
  } catch (const Error& e) {
    CheckReport r;
    r.name = name;
    r.parameters = std::move(params);
    r.status = Status::Fail;
    r.witness = std::string("error: ") + e.what();
    sink(r);
  }
}

}  // namespace

template <class K>
void run_suite(const Context<K>& ctx, const SuiteConfig& cfg, const std::function<void(const CheckReport&)>& sink) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) throw Error("unknown suite '" + cfg.suite + "'");
  const bool all = cfg.suite == "all";
  auto want = [&](const char* s) { return all || cfg.suite == s; };

  if (want("kernel")) {
    const std::vector<std::pair<std::string, SymFun<RatFun>>> fs{
        {"p[1]", SymFun<RatFun>::element(Basis::p, Partition({1}))},
        {"p[2]", SymFun<RatFun>::element(Basis::p, Partition({2}))},
        {"p[3]", SymFun<RatFun>::element(Basis::p, Partition({3}))},
        {"M[2,1]", SymFun<RatFun>::element(Basis::Mac_M, Partition({2, 1}))}};
    for (const auto& [label, f] : fs) {
      guarded(sink, "kernel-lemma", {{"f", label}, {"degree_bound", std::to_string(cfg.degree_bound)}}, [&] { return check_kernel_lemma(ctx, lift(ctx, f), cfg.degree_bound, label); });
    }
  }
  if (want("hl-cauchy")) {
    for (int d = 1; d <= cfg.max_degree; ++d) guarded(sink, "hl-cauchy", {{"degree", std::to_string(d)}}, [&] { return check_hl_cauchy(ctx, d); });
  }
  if (want("green")) {
    for (int d = 1; d <= cfg.degree; ++d) guarded(sink, "green", {{"degree", std::to_string(d)}}, [&] { return check_green(d); });
  }
  if (want("macdonald")) {
    for (int d = 0; d <= cfg.max_degree; ++d) {
      guarded(sink, "macdonald-basis", {{"degree", std::to_string(d)}}, [&] { return check_macdonald_basis(ctx, d); });
    }
  }
  if (want("deigen")) {
    const int top = cfg.n.value_or(3);
    for (int n = 1; n <= top; ++n) {
      for (const auto& la : sweep(cfg, cfg.max_weight)) {
        if (static_cast<int>(la.length()) > n) continue;
        guarded(sink, "deigen", {{"N", std::to_string(n)}, {"partition", la.to_string()}}, [&] { return check_deigen(ctx, n, la); });
      }
    }
  }
  if (want("theorem")) {
    for (const auto& la : sweep(cfg, cfg.max_degree)) {
      for (int k = 1; k <= cfg.max_k; ++k) guarded(sink, "theorem", {{"k", std::to_string(k)}, {"partition", la.to_string()}}, [&] { return check_theorem_basic(ctx, k, la); });
      if (!la.empty()) guarded(sink, "first-eigenvalue", {{"partition", la.to_string()}}, [&] { return check_first_eigenvalue(la); });
    }
  }
  if (want("corollary")) {
    for (const auto& la : sweep(cfg, cfg.max_weight)) {
      const int k = static_cast<int>(la.length()) + 1;
      guarded(sink, "corollary-B", {{"k", std::to_string(k)}, {"partition", la.to_string()}}, [&] { return check_corollary(ctx, StepKind::B, k, la, cfg.u_samples); });
      if (!la.empty()) {
        guarded(sink, "corollary-C", {{"k", std::to_string(k)}, {"partition", la.to_string()}}, [&] { return check_corollary(ctx, StepKind::C, k, la, cfg.u_samples); });
      }
    }
    for (int k = 0; k < cfg.max_k; ++k) {
      for (int d = 0; d < cfg.max_weight; ++d) {
        guarded(sink, "step-adjoint", {{"k", std::to_string(k)}, {"degree", std::to_string(d)}}, [&] { return check_step_adjoint(ctx, k, d, cfg.seed + 97U * k + d); });
      }
    }
  }
  if (want("step")) {
    for (const auto& la : sweep(cfg, cfg.max_weight, false)) {
      for (std::size_t i = 1; i <= la.length(); ++i) {
        if (i < la.length() && la.part(i) == la.part(i + 1)) continue;
        for (StepKind kind : {StepKind::B, StepKind::C}) {
          guarded(sink, kind == StepKind::B ? "step-B" : "step-C", {{"partition", la.to_string()}, {"i", std::to_string(i)}}, [&] { return check_step_evaluation(kind, la, i); });
        }
      }
    }
  }
  if (want("proposition")) {
    const int top = cfg.n.value_or(4);
    for (int n = 2; n <= top; ++n) {
      for (const auto& la : sweep(cfg, cfg.max_weight, false)) {
        if (static_cast<int>(la.length()) >= n) continue;
        guarded(sink, "proposition", {{"N", std::to_string(n)}, {"partition", la.to_string()}}, [&] { return check_proposition(n, la); });
        guarded(sink, "schur-support", {{"N", std::to_string(n)}, {"partition", la.to_string()}}, [&] { return check_schur_support(n, la); });
      }
      for (const auto& mu : sweep(cfg, std::min(cfg.max_weight, 3))) {
        if (static_cast<int>(mu.length()) >= n) continue;
        for (int m = 0; m <= 2; ++m) guarded(sink, "alternant-sum", {{"partition", mu.to_string()}, {"n", std::to_string(m)}, {"N", std::to_string(n)}}, [&] { return check_alternant_sum(mu, m, n); });
      }
    }
  }
  if (want("finite-symbol")) {
    const int top = cfg.n.value_or(3);
    for (int n = 1; n <= top; ++n) {
      guarded(sink, "finite-symbol", {{"N", std::to_string(n)}, {"degree_bound", std::to_string(cfg.degree_bound)}}, [&] { return check_finite_symbol(ctx, n, cfg.degree_bound, cfg.u_samples); });
    }
  }
  if (want("decomposition")) {
    const int top = cfg.n.value_or(3);
    for (int n = 1; n <= top; ++n) {
      for (const auto& la : sweep(cfg, cfg.max_weight)) {
        if (static_cast<int>(la.length()) > n) continue;
        for (int i = 1; i <= n; ++i) {
          guarded(sink, "decomposition", {{"partition", la.to_string()}, {"N", std::to_string(n)}, {"i", std::to_string(i)}}, [&] { return check_decomposition(la, n, static_cast<std::size_t>(i)); });
        }
      }
    }
  }
  if (want("specialization")) {
    for (const auto& la : sweep(cfg, cfg.max_weight)) {
      guarded(sink, "specialization", {{"partition", la.to_string()}}, [&] { return check_specialization(la); });
    }
  }
  if (want("cross-oracle")) {
    for (const auto& la : sweep(cfg, cfg.max_weight, false)) {
      guarded(sink, "morris", {{"partition", la.to_string()}}, [&] { return check_morris(la); });
      guarded(sink, "psi", {{"partition", la.to_string()}}, [&] { return check_psi(la); });
    }
  }
}

#define VERIFY_INSTANTIATE(K)                                                                                \
  template BiSymFun<K> kernel_pi(const Context<K>&, int);                                                    \
  template BiSymFun<K> hl_kernel(const Context<K>&, int);                                                    \
  template BiSymFun<K> bisym_multiply(const BiSymFun<K>&, const BiSymFun<K>&, int);                          \
  template CheckReport check_kernel_lemma(const Context<K>&, const SymFun<K>&, int, const std::string&);     \
  template CheckReport check_hl_cauchy(const Context<K>&, int);                                              \
  template CheckReport check_macdonald_basis(const Context<K>&, int);                                        \
  template CheckReport check_deigen(const Context<K>&, int, const Partition&);                               \
  template CheckReport check_theorem_basic(const Context<K>&, int, const Partition&);                        \
  template CheckReport check_corollary(const Context<K>&, StepKind, int, const Partition&,                   \
                                       const std::vector<long>&);                                            \
  template CheckReport check_step_adjoint(const Context<K>&, int, int, unsigned);                            \
  template CheckReport check_finite_symbol(const Context<K>&, int, int, const std::vector<long>&);           \
  template void run_suite(const Context<K>&, const SuiteConfig&, const std::function<void(const CheckReport&)>&);

VERIFY_INSTANTIATE(RatFun)
VERIFY_INSTANTIATE(Rat)

}  // namespace symfun
