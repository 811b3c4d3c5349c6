#include "symfun/symfun.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <unordered_map>

#include "symfun/errors.hpp"
#include "symfun/families.hpp"
#include "symfun/io.hpp"

namespace symfun {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m:
      return "m";
    case Basis::p:
      return "p";
    case Basis::s:
      return "s";
    case Basis::HL_P:
      return "HL_P";
    case Basis::HL_Q:
      return "HL_Q";
    case Basis::Mac_M:
      return "Mac_M";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::m, Basis::p, Basis::s, Basis::HL_P, Basis::HL_Q, Basis::Mac_M}) {
    if (basis_name(b) == name) return b;
  }
  if (name == "P") return Basis::HL_P;
  if (name == "Q") return Basis::HL_Q;
  if (name == "M") return Basis::Mac_M;
  throw Error("unknown basis '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- SymFun

template <class K>
int SymFun<K>::max_weight() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first.weight();
}

template <class K>
K SymFun<K>::coeff(const Partition& la) const {
  auto it = coeffs_.find(la);
  return it == coeffs_.end() ? K() : it->second;
}

template <class K>
void SymFun<K>::add_term(const Partition& la, const K& c) {
  if (c.is_zero()) return;
  degree_bound_ = std::max(degree_bound_, la.weight());
  auto [it, inserted] = coeffs_.emplace(la, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

template <class K>
SymFun<K> SymFun<K>::component(int d) const {
  SymFun r(basis_, degree_bound_);
  for (const auto& [la, c] : coeffs_) {
    if (la.weight() == d) r.coeffs_.emplace(la, c);
  }
  return r;
}

template <class K>
SymFun<K> SymFun<K>::truncated(int d) const {
  SymFun r(basis_, d);
  for (const auto& [la, c] : coeffs_) {
    if (la.weight() <= d) r.coeffs_.emplace(la, c);
  }
  return r;
}

template <class K>
SymFun<K> SymFun<K>::operator-() const {
  SymFun r = *this;
  for (auto& [la, c] : r.coeffs_) c = -c;
  return r;
}

template <class K>
void SymFun<K>::check_basis(const SymFun& o) const {
  if (basis_ != o.basis_) {
    throw BasisMismatch("cannot combine " + basis_name(basis_) + " and " + basis_name(o.basis_) +
                        " expansions");
  }
}

template <class K>
SymFun<K>& SymFun<K>::operator+=(const SymFun& o) {
  check_basis(o);
  for (const auto& [la, c] : o.coeffs_) add_term(la, c);
  degree_bound_ = std::max(degree_bound_, o.degree_bound_);
  return *this;
}

template <class K>
SymFun<K>& SymFun<K>::operator-=(const SymFun& o) {
  check_basis(o);
  for (const auto& [la, c] : o.coeffs_) add_term(la, -c);
  degree_bound_ = std::max(degree_bound_, o.degree_bound_);
  return *this;
}

template <class K>
SymFun<K>& SymFun<K>::operator*=(const K& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [la, v] : coeffs_) v *= c;
  return *this;
}

// ---------------------------------------------------------- NSymPoly etc.

template <class K>
void NSymPoly<K>::add_term(const Partition& la, const K& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(la.length()) > n) throw LengthExceedsN(la.length(), n);
  auto [it, inserted] = coeffs.emplace(la, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

template <class K>
K NSymPoly<K>::coeff(const Partition& la) const {
  auto it = coeffs.find(la);
  return it == coeffs.end() ? K() : it->second;
}

template <class K>
NSymPoly<K>& NSymPoly<K>::operator+=(const NSymPoly& o) {
  for (const auto& [la, c] : o.coeffs) add_term(la, c);
  return *this;
}

template <class K>
NSymPoly<K>& NSymPoly<K>::operator-=(const NSymPoly& o) {
  for (const auto& [la, c] : o.coeffs) add_term(la, -c);
  return *this;
}

template <class K>
NSymPoly<K>& NSymPoly<K>::operator*=(const K& c) {
  if (c.is_zero()) coeffs.clear();
  for (auto& [la, v] : coeffs) v *= c;
  return *this;
}

template <class K>
void XPoly<K>::add_term(const Exponent& e, const K& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

template <class K>
XPoly<K>& XPoly<K>::operator+=(const XPoly& o) {
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

template <class K>
XPoly<K>& XPoly<K>::operator-=(const XPoly& o) {
  for (const auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

template <class K>
XPoly<K>& XPoly<K>::operator*=(const K& c) {
  if (c.is_zero()) terms.clear();
  for (auto& [e, v] : terms) v *= c;
  return *this;
}

template <class K>
XPoly<K> XPoly<K>::multiply(const XPoly& a, const XPoly& b) {
  XPoly r;
  r.n = a.n;
  Exponent e(a.n);
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      for (int i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

template <class K>
XPoly<K> XPoly<K>::monomial(int n, Exponent e, K c) {
  XPoly r;
  r.n = n;
  e.resize(n);
  r.add_term(e, c);
  return r;
}

template <class K>
void BiSymFun<K>::add_term(const Partition& x, const Partition& y, const K& c) {
  if (c.is_zero()) return;
  if (x.weight() > degree_bound || y.weight() > degree_bound) {
    throw Error("bisymmetric term exceeds the degree bound");
  }
  auto [it, inserted] = coeffs.emplace(Key{x, y}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

template <class K>
BiSymFun<K>& BiSymFun<K>::operator+=(const BiSymFun& o) {
  degree_bound = std::max(degree_bound, o.degree_bound);
  for (const auto& [k, c] : o.coeffs) add_term(k.first, k.second, c);
  return *this;
}

template <class K>
BiSymFun<K>& BiSymFun<K>::operator-=(const BiSymFun& o) {
  degree_bound = std::max(degree_bound, o.degree_bound);
  for (const auto& [k, c] : o.coeffs) add_term(k.first, k.second, -c);
  return *this;
}

// ------------------------------------------------------- combinatorics

const std::vector<Partition>& partitions_of(int d) {
  return symbolic_memo().get<std::vector<Partition>>("parts:" + std::to_string(d),
                                                     [d] { return enumerate_partitions(d); });
}

std::size_t partition_index(const Partition& la) {
  const int d = la.weight();
  const auto& idx = symbolic_memo().get<std::unordered_map<Partition, std::size_t>>(
      "pidx:" + std::to_string(d), [d] {
        std::unordered_map<Partition, std::size_t> m;
        const auto& ps = partitions_of(d);
        for (std::size_t i = 0; i < ps.size(); ++i) m.emplace(ps[i], i);
        return m;
      });
  return idx.at(la);
}

namespace {

// Ways to distribute the parts la[i..] into variables with the given
// remaining capacities (kept sorted, since the count is symmetric in them).
Int count_fillings(const std::vector<int>& la, std::size_t i, std::vector<int> rem,
                   std::map<std::pair<std::size_t, std::vector<int>>, Int>& memo) {
  if (i == la.size()) {
    for (int r : rem) {
      if (r != 0) return 0;
    }
    return 1;
  }
  std::sort(rem.begin(), rem.end(), std::greater<>());
  auto key = std::make_pair(i, rem);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int total = 0;
  std::size_t j = 0;
  while (j < rem.size()) {
    std::size_t k = j;
    while (k < rem.size() && rem[k] == rem[j]) ++k;
    if (rem[j] >= la[i]) {
      std::vector<int> next = rem;
      next[j] -= la[i];
      total += Int(static_cast<long>(k - j)) * count_fillings(la, i + 1, std::move(next), memo);
    }
    j = k;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Int power_sum_monomial_coeff(const Partition& la, const Partition& mu) {
  if (la.weight() != mu.weight()) return 0;
  std::map<std::pair<std::size_t, std::vector<int>>, Int> memo;
  return count_fillings(la.parts(), 0, mu.parts(), memo);
}

namespace {

Int kostka_rec(const Partition& la, const std::vector<int>& mu, std::size_t len,
               std::map<std::pair<Partition, std::size_t>, Int>& memo) {
  if (len == 0) return la.empty() ? 1 : 0;
  auto key = std::make_pair(la, len);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int strip = mu[len - 1];
  Int total = 0;
  // nu with la/nu a horizontal strip of size `strip`: la_{i+1} <= nu_i <= la_i
  const std::size_t n = la.length();
  std::vector<int> nu(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      if (left == 0) total += kostka_rec(Partition(nu), mu, len - 1, memo);
      return;
    }
    const int hi = la.part(i + 1);
    const int lo = la.part(i + 2);
    for (int v = hi; v >= lo; --v) {
      if (hi - v > left) break;
      nu[i] = v;
      rec(i + 1, left - (hi - v));
    }
  };
  rec(0, strip);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Int kostka(const Partition& la, const Partition& mu) {
  if (la.weight() != mu.weight()) return 0;
  if (!dominated_by(mu, la)) return 0;
  std::map<std::pair<Partition, std::size_t>, Int> memo;
  return kostka_rec(la, mu.parts(), mu.length(), memo);
}

// ------------------------------------------------------------ products

template <class K>
SymFun<K> p_multiply(const SymFun<K>& f, const SymFun<K>& g, int degree_bound) {
  if (f.basis() != Basis::p || g.basis() != Basis::p) {
    throw BasisMismatch("p_multiply expects p-basis inputs");
  }
  SymFun<K> r(Basis::p, degree_bound);
  for (const auto& [la, a] : f.coeffs()) {
    for (const auto& [mu, b] : g.coeffs()) {
      if (la.weight() + mu.weight() > degree_bound) continue;
      std::vector<int> parts = la.parts();
      parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
      std::sort(parts.begin(), parts.end(), std::greater<>());
      r.add_term(Partition(std::move(parts)), a * b);
    }
  }
  r.set_degree_bound(degree_bound);
  return r;
}

template <class K>
SymFun<K> multiply(const Context<K>& ctx, const SymFun<K>& f, const SymFun<K>& g, int degree_bound) {
  return p_multiply(convert(ctx, f, Basis::p), convert(ctx, g, Basis::p), degree_bound);
}

// --------------------------------------------------------- transitions

namespace {

template <class K>
Matrix<K> to_m_matrix(const Context<K>& ctx, Basis from, int d) {
  const auto& ps = partitions_of(d);
  const std::size_t n = ps.size();
  Matrix<K> t(n, n);
  switch (from) {
    case Basis::m:
      return Matrix<K>::identity(n);
    case Basis::p:
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
          // p_la involves m_mu only for mu >= la, which come no later
          const Int c = power_sum_monomial_coeff(ps[j], ps[i]);
          if (sgn(c) != 0) t(i, j) = K(mpq_class(c));
        }
      }
      return t;
    case Basis::s:
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j; i < n; ++i) {
          const Int c = kostka(ps[j], ps[i]);
          if (sgn(c) != 0) t(i, j) = K(mpq_class(c));
        }
      }
      return t;
    case Basis::HL_P:
    case Basis::HL_Q:
      for (std::size_t j = 0; j < n; ++j) {
        const SymFun<K> f = hall_littlewood(ctx, ps[j], from == Basis::HL_P ? HLKind::P : HLKind::Q, d);
        for (const auto& [mu, c] : f.coeffs()) t(partition_index(mu), j) = c;
      }
      return t;
    case Basis::Mac_M: {
      const auto& ms = macdonald_degree(ctx, d);
      for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [mu, c] : ms[j].coeffs()) t(partition_index(mu), j) = c;
      }
      return t;
    }
  }
  return t;
}

std::string matrix_key(Basis from, Basis to, int d) {
  return "T:" + basis_name(from) + ":" + basis_name(to) + ":" + std::to_string(d);
}

// Columns as SymFun expansions, for the on-disk cache.
std::vector<SymFun<RatFun>> matrix_columns(const Matrix<RatFun>& t, Basis to, int d) {
  const auto& ps = partitions_of(d);
  std::vector<SymFun<RatFun>> cols;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    SymFun<RatFun> f(to, d);
    for (std::size_t i = 0; i < ps.size(); ++i) f.add_term(ps[i], t(i, j));
    f.set_degree_bound(d);
    cols.push_back(std::move(f));
  }
  return cols;
}

template <class K>
Matrix<K> compute_transition(const Context<K>& ctx, Basis from, Basis to, int d) {
  const std::size_t n = partitions_of(d).size();
  if (from == to) return Matrix<K>::identity(n);
  if (to == Basis::m) return to_m_matrix(ctx, from, d);
  if (from == Basis::m) return transition_matrix(ctx, to, Basis::m, d).inverse();
  return transition_matrix(ctx, Basis::m, to, d) * transition_matrix(ctx, from, Basis::m, d);
}

}  // namespace

template <class K>
const Matrix<K>& transition_matrix(const Context<K>& ctx, Basis from, Basis to, int d) {
  return ctx.memo().template get<Matrix<K>>(matrix_key(from, to, d), [&]() -> Matrix<K> {
    if constexpr (std::is_same_v<K, RatFun>) {
      const char* dir = std::getenv("SYMFUN_CACHE_DIR");
      if (dir != nullptr && *dir != '\0' && from != to) {
        const std::filesystem::path file = std::filesystem::path(dir) /
            (basis_name(from) + "_" + basis_name(to) + "_" + std::to_string(d) + ".json");
        const auto& ps = partitions_of(d);
        if (std::filesystem::exists(file)) {
          try {
            std::ifstream in(file);
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            const auto cols = symfun_list_from_json(text);
            if (cols.size() == ps.size()) {
              Matrix<RatFun> t(ps.size(), ps.size());
              for (std::size_t j = 0; j < cols.size(); ++j) {
                for (const auto& [mu, c] : cols[j].coeffs()) t(partition_index(mu), j) = c;
              }
              return t;
            }
          } catch (const std::exception&) {
            // unreadable cache entries are recomputed and overwritten
          }
        }
        Matrix<RatFun> t = compute_transition(ctx, from, to, d);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        const std::filesystem::path tmp = file.string() + ".tmp";
        {
          std::ofstream out(tmp);
          out << symfun_list_to_json(matrix_columns(t, to, d)) << '\n';
        }
        std::filesystem::rename(tmp, file, ec);
        return t;
      }
    }
    return compute_transition(ctx, from, to, d);
  });
}

template <class K>
SymFun<K> convert(const Context<K>& ctx, const SymFun<K>& f, Basis to) {
  if (f.basis() == to) return f;
  SymFun<K> r(to, f.degree_bound());
  const int top = f.max_weight();
  for (int d = 0; d <= top; ++d) {
    const auto& ps = partitions_of(d);
    const Matrix<K>* t = nullptr;
    for (const auto& [la, c] : f.coeffs()) {
      if (la.weight() != d) continue;
      if (t == nullptr) t = &transition_matrix(ctx, f.basis(), to, d);
      const std::size_t j = partition_index(la);
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const K& v = (*t)(i, j);
        if (!v.is_zero()) r.add_term(ps[i], v * c);
      }
    }
  }
  r.set_degree_bound(f.degree_bound());
  return r;
}

// ------------------------------------------------- scalar product, adjoints

template <class K>
K p_norm(const Context<K>& ctx, const Partition& la) {
  const RatFun& v = symbolic_memo().get<RatFun>("pnorm:" + la.to_string(), [&] {
    RatFun r(stats(la).z);
    for (int n : la.parts()) {
      r *= RatFun::make(IntPoly2(1L) - IntPoly2::monomial(1, n, 0), IntPoly2(1L) - IntPoly2::monomial(1, 0, n));
    }
    return r;
  });
  return ctx.lift(v);
}

template <class K>
K inner_product(const Context<K>& ctx, const SymFun<K>& f, const SymFun<K>& g) {
  const SymFun<K> fp = convert(ctx, f, Basis::p);
  const SymFun<K> gp = convert(ctx, g, Basis::p);
  K acc;
  for (const auto& [la, a] : fp.coeffs()) {
    auto it = gp.coeffs().find(la);
    if (it != gp.coeffs().end()) acc += a * it->second * p_norm(ctx, la);
  }
  return acc;
}

namespace {

// n (1-q^n)/(1-t^n)
template <class K>
K pstar_factor(const Context<K>& ctx, int n) {
  const RatFun& v = symbolic_memo().get<RatFun>("pstar:" + std::to_string(n), [n] {
    return RatFun::make(IntPoly2(static_cast<long>(n)) - IntPoly2::monomial(n, n, 0),
                        IntPoly2(1L) - IntPoly2::monomial(1, 0, n));
  });
  return ctx.lift(v);
}

// multiplicities as (part, count) pairs, largest part first
std::vector<std::pair<int, int>> multiplicities(const Partition& la) {
  std::vector<std::pair<int, int>> out;
  for (int p : la.parts()) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

}  // namespace

template <class K>
SymFun<K> adjoint_apply(const Context<K>& ctx, const SymFun<K>& f, const SymFun<K>& g) {
  const SymFun<K> fp = convert(ctx, f, Basis::p);
  const SymFun<K> gp = convert(ctx, g, Basis::p);
  SymFun<K> r(Basis::p, std::max(0, g.degree_bound()));
  for (const auto& [la, a] : fp.coeffs()) {
    const auto lam = multiplicities(la);
    K scale = a;
    for (int n : la.parts()) scale *= pstar_factor(ctx, n);
    for (const auto& [mu, b] : gp.coeffs()) {
      // d^k/dp_n^k p_n^a = a!/(a-k)! p_n^{a-k}
      Int falling = 1;
      std::vector<int> rest = mu.parts();
      bool ok = true;
      for (const auto& [n, k] : lam) {
        const int a_n = mu.multiplicity(n);
        if (a_n < k) {
          ok = false;
          break;
        }
        for (int j = 0; j < k; ++j) falling *= a_n - j;
        for (int j = 0; j < k; ++j) rest.erase(std::find(rest.begin(), rest.end(), n));
      }
      if (!ok) continue;
      r.add_term(Partition(std::move(rest)), scale * b * K(mpq_class(falling)));
    }
  }
  return r;
}

template <class K>
SymFun<K> dp1(const Context<K>& ctx, const SymFun<K>& g) {
  const SymFun<K> gp = convert(ctx, g, Basis::p);
  SymFun<K> r(Basis::p, std::max(0, g.degree_bound()));
  for (const auto& [mu, b] : gp.coeffs()) {
    const int a = mu.multiplicity(1);
    if (a == 0) continue;
    std::vector<int> rest = mu.parts();
    rest.pop_back();
    r.add_term(Partition(std::move(rest)), b * K(static_cast<long>(a)));
  }
  return r;
}

// ---------------------------------------------------- finite alphabets

template <class K>
NSymPoly<K> restrict_to(const Context<K>& ctx, const SymFun<K>& f, int n) {
  const SymFun<K> fm = convert(ctx, f, Basis::m);
  NSymPoly<K> r;
  r.n = n;
  for (const auto& [la, c] : fm.coeffs()) {
    if (static_cast<int>(la.length()) <= n) r.coeffs.emplace(la, c);
  }
  return r;
}

template <class K>
SymFun<K> lift_symmetric(const NSymPoly<K>& f) {
  SymFun<K> r(Basis::m, 0);
  for (const auto& [la, c] : f.coeffs) r.add_term(la, c);
  return r;
}

template <class K>
NSymPoly<K> drop_last_variable(const NSymPoly<K>& f) {
  NSymPoly<K> r;
  r.n = f.n - 1;
  for (const auto& [la, c] : f.coeffs) {
    if (static_cast<int>(la.length()) <= r.n) r.coeffs.emplace(la, c);
  }
  return r;
}

template <class K>
XPoly<K> expand_x(const NSymPoly<K>& f) {
  XPoly<K> r;
  r.n = f.n;
  for (const auto& [la, c] : f.coeffs) {
    Exponent e = la.parts();
    e.resize(f.n, 0);
    std::sort(e.begin(), e.end());
    do {
      r.add_term(e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return r;
}

namespace {

std::string exponent_string(const Exponent& e) {
  std::string s = "x^(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(e[i]);
  }
  return s + ")";
}

// Number of distinct rearrangements of e.
std::size_t orbit_size(Exponent e) {
  std::sort(e.begin(), e.end());
  std::size_t count = 0;
  do {
    ++count;
  } while (std::next_permutation(e.begin(), e.end()));
  return count;
}

std::size_t factorial(int n) {
  std::size_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::size_t>(i);
  return r;
}

}  // namespace

template <class K>
NSymPoly<K> collect_symmetric(const XPoly<K>& xp) {
  struct Group {
    const Exponent* first = nullptr;
    const K* value = nullptr;
    std::size_t count = 0;
  };
  std::map<Exponent, Group> groups;
  for (const auto& [e, c] : xp.terms) {
    Exponent key = e;
    std::sort(key.begin(), key.end(), std::greater<>());
    Group& g = groups[key];
    if (g.first == nullptr) {
      g.first = &e;
      g.value = &c;
    } else if (!(*g.value == c)) {
      throw NotSymmetric("coefficients of " + exponent_string(*g.first) + " and " + exponent_string(e) +
                         " differ: " + g.value->to_string() + " vs " + c.to_string());
    }
    ++g.count;
  }
  NSymPoly<K> r;
  r.n = xp.n;
  for (const auto& [key, g] : groups) {
    if (g.count != orbit_size(key)) {
      Exponent e = key;
      std::sort(e.begin(), e.end());
      do {
        if (xp.terms.find(e) == xp.terms.end()) break;
      } while (std::next_permutation(e.begin(), e.end()));
      throw NotSymmetric("coefficient of " + exponent_string(*g.first) + " is " + g.value->to_string() +
                         " but " + exponent_string(e) + " is absent");
    }
    r.coeffs.emplace(Partition(key), *g.value);
  }
  return r;
}

template <class K>
std::map<Partition, K> alternant_to_schur(const XPoly<K>& xp) {
  const int n = xp.n;
  struct Group {
    const Exponent* first = nullptr;
    K value;
    std::size_t count = 0;
  };
  std::map<Exponent, Group> groups;
  for (const auto& [e, c] : xp.terms) {
    Exponent key = e;
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (e[i] < e[j]) ++inversions;
        if (e[i] == e[j]) {
          throw NotAlternating("nonzero coefficient at " + exponent_string(e) + " with a repeated exponent");
        }
      }
    }
    std::sort(key.begin(), key.end(), std::greater<>());
    const K v = (inversions % 2 == 0) ? c : -c;
    Group& g = groups[key];
    if (g.first == nullptr) {
      g.first = &e;
      g.value = v;
    } else if (!(g.value == v)) {
      throw NotAlternating("coefficients of " + exponent_string(*g.first) + " and " + exponent_string(e) +
                           " are not related by the sign of the permutation");
    }
    ++g.count;
  }
  const std::size_t full = factorial(n);
  std::map<Partition, K> out;
  for (const auto& [key, g] : groups) {
    if (g.count != full) {
      throw NotAlternating("orbit of " + exponent_string(*g.first) + " is incomplete");
    }
    std::vector<int> nu(n);
    for (int i = 0; i < n; ++i) nu[i] = key[i] - (n - 1 - i);
    out.emplace(Partition(std::move(nu)), g.value);
  }
  return out;
}

template <class K>
NSymPoly<K> schur_to_monomial(const std::map<Partition, K>& s, int n) {
  NSymPoly<K> r;
  r.n = n;
  for (const auto& [nu, c] : s) {
    for (const Partition& mu : partitions_of(nu.weight())) {
      if (static_cast<int>(mu.length()) > n) continue;
      const Int k = kostka(nu, mu);
      if (sgn(k) != 0) r.add_term(mu, c * K(mpq_class(k)));
    }
  }
  return r;
}

template <class K>
NSymPoly<K> divide_by_vandermonde(const XPoly<K>& xp) {
  return schur_to_monomial(alternant_to_schur(xp), xp.n);
}

template <class K>
XPoly<K> vandermonde(int n) {
  XPoly<K> r = XPoly<K>::monomial(n, Exponent(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Exponent ei(n, 0);
      Exponent ej(n, 0);
      ei[i] = 1;
      ej[j] = 1;
      XPoly<K> f = XPoly<K>::monomial(n, ei);
      f.add_term(ej, K(-1L));
      r = r * f;
    }
  }
  return r;
}

template <class K>
XPoly<K> alternate(const XPoly<K>& xp) {
  const int n = xp.n;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  XPoly<K> r;
  r.n = n;
  Exponent e(n);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (w[i] > w[j]) ++inversions;
      }
    }
    for (const auto& [ex, c] : xp.terms) {
      for (int i = 0; i < n; ++i) e[w[i]] = ex[i];
      r.add_term(e, inversions % 2 == 0 ? c : -c);
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return r;
}

SymFun<RatFun> specialize(const SymFun<RatFun>& f, const std::optional<RatFun>& q,
                          const std::optional<RatFun>& t) {
  SymFun<RatFun> r(f.basis(), f.degree_bound());
  for (const auto& [la, c] : f.coeffs()) r.add_term(la, c.specialize(q, t));
  r.set_degree_bound(f.degree_bound());
  return r;
}

template <class K>
SymFun<K> lift(const Context<K>& ctx, const SymFun<RatFun>& f) {
  SymFun<K> r(f.basis(), f.degree_bound());
  for (const auto& [la, c] : f.coeffs()) r.add_term(la, ctx.lift(c));
  r.set_degree_bound(f.degree_bound());
  return r;
}

#define SYMFUN_INSTANTIATE(K)                                                                     \
  template class SymFun<K>;                                                                       \
  template struct NSymPoly<K>;                                                                    \
  template struct XPoly<K>;                                                                       \
  template struct BiSymFun<K>;                                                                    \
  template SymFun<K> p_multiply(const SymFun<K>&, const SymFun<K>&, int);                         \
  template SymFun<K> multiply(const Context<K>&, const SymFun<K>&, const SymFun<K>&, int);        \
  template const Matrix<K>& transition_matrix(const Context<K>&, Basis, Basis, int);              \
  template SymFun<K> convert(const Context<K>&, const SymFun<K>&, Basis);                         \
  template K p_norm(const Context<K>&, const Partition&);                                         \
  template K inner_product(const Context<K>&, const SymFun<K>&, const SymFun<K>&);                \
  template SymFun<K> adjoint_apply(const Context<K>&, const SymFun<K>&, const SymFun<K>&);        \
  template SymFun<K> dp1(const Context<K>&, const SymFun<K>&);                                    \
  template NSymPoly<K> restrict_to(const Context<K>&, const SymFun<K>&, int);                     \
  template SymFun<K> lift_symmetric(const NSymPoly<K>&);                                          \
  template NSymPoly<K> drop_last_variable(const NSymPoly<K>&);                                    \
  template XPoly<K> expand_x(const NSymPoly<K>&);                                                 \
  template NSymPoly<K> collect_symmetric(const XPoly<K>&);                                        \
  template std::map<Partition, K> alternant_to_schur(const XPoly<K>&);                            \
  template NSymPoly<K> schur_to_monomial(const std::map<Partition, K>&, int);                     \
  template NSymPoly<K> divide_by_vandermonde(const XPoly<K>&);                                    \
  template XPoly<K> vandermonde(int);                                                             \
  template XPoly<K> alternate(const XPoly<K>&);                                                   \
  template SymFun<K> lift(const Context<K>&, const SymFun<RatFun>&);

SYMFUN_INSTANTIATE(RatFun)
SYMFUN_INSTANTIATE(Rat)

}  // namespace symfun
