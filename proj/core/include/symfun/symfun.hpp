#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symfun/context.hpp"
#include "symfun/matrix.hpp"
#include "symfun/partition.hpp"

namespace symfun {

enum class Basis { m, p, s, HL_P, HL_Q, Mac_M };

/// "m", "p", "s", "HL_P", "HL_Q", "Mac_M".
std::string basis_name(Basis b);
/// Accepts the names above; throws Error otherwise.
Basis parse_basis(std::string_view name);

/// Finite element of the ring of symmetric functions, expanded in one basis.
template <class K>
class SymFun {
 public:
  using Map = std::map<Partition, K>;

  explicit SymFun(Basis basis = Basis::m, int degree_bound = 0)
      : basis_(basis), degree_bound_(degree_bound) {}

  static SymFun element(Basis basis, const Partition& la, K c = K(1L)) {
    SymFun f(basis, la.weight());
    f.add_term(la, c);
    return f;
  }
  static SymFun constant(Basis basis, K c) { return element(basis, Partition(), std::move(c)); }

  Basis basis() const { return basis_; }
  int degree_bound() const { return degree_bound_; }
  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Largest weight present, -1 for zero.
  int max_weight() const;
  K coeff(const Partition& la) const;

  /// Adds c to the coefficient of la, erasing it when the sum vanishes.
  /// Raises the degree bound when needed.
  void add_term(const Partition& la, const K& c);
  void set_degree_bound(int d) { degree_bound_ = d; }

  /// Terms of weight exactly d.
  SymFun component(int d) const;
  /// Terms of weight at most d; the degree bound becomes d.
  SymFun truncated(int d) const;

  SymFun operator-() const;
  SymFun& operator+=(const SymFun& o);
  SymFun& operator-=(const SymFun& o);
  SymFun& operator*=(const K& c);
  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  friend SymFun operator*(SymFun a, const K& c) { return a *= c; }
  friend SymFun operator*(const K& c, SymFun a) { return a *= c; }
  /// Equal as expansions in the same basis; degree bounds are ignored.
  friend bool operator==(const SymFun& a, const SymFun& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_basis(const SymFun& o) const;

  Basis basis_;
  int degree_bound_;
  Map coeffs_;
};

/// Symmetric polynomial in x_1..x_N in the monomial basis.
template <class K>
struct NSymPoly {
  int n = 1;
  std::map<Partition, K> coeffs;

  void add_term(const Partition& la, const K& c);
  bool is_zero() const { return coeffs.empty(); }
  K coeff(const Partition& la) const;
  NSymPoly& operator+=(const NSymPoly& o);
  NSymPoly& operator-=(const NSymPoly& o);
  NSymPoly& operator*=(const K& c);
  friend NSymPoly operator+(NSymPoly a, const NSymPoly& b) { return a += b; }
  friend NSymPoly operator-(NSymPoly a, const NSymPoly& b) { return a -= b; }
  friend NSymPoly operator*(NSymPoly a, const K& c) { return a *= c; }
  friend bool operator==(const NSymPoly& a, const NSymPoly& b) {
    return a.n == b.n && a.coeffs == b.coeffs;
  }
};

using Exponent = std::vector<int>;

/// Polynomial in x_1..x_N with coefficients in K.
template <class K>
struct XPoly {
  int n = 1;
  std::map<Exponent, K> terms;

  void add_term(const Exponent& e, const K& c);
  bool is_zero() const { return terms.empty(); }
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const K& c);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b) { return multiply(a, b); }
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.n == b.n && a.terms == b.terms; }

  static XPoly multiply(const XPoly& a, const XPoly& b);
  static XPoly monomial(int n, Exponent e, K c = K(1L));
};

/// Element of Lambda(x) (x) Lambda(y) in the p (x) p basis.
template <class K>
struct BiSymFun {
  using Key = std::pair<Partition, Partition>;
  int degree_bound = 0;
  std::map<Key, K> coeffs;

  void add_term(const Partition& x, const Partition& y, const K& c);
  bool is_zero() const { return coeffs.empty(); }
  BiSymFun& operator+=(const BiSymFun& o);
  BiSymFun& operator-=(const BiSymFun& o);
  friend BiSymFun operator-(BiSymFun a, const BiSymFun& b) { return a -= b; }
  friend bool operator==(const BiSymFun& a, const BiSymFun& b) { return a.coeffs == b.coeffs; }
};

/// Partitions of d in canonical order and the inverse index.
const std::vector<Partition>& partitions_of(int d);
std::size_t partition_index(const Partition& la);

/// Coefficient of m_mu in p_la (an integer), for |la| = |mu|.
Int power_sum_monomial_coeff(const Partition& la, const Partition& mu);
/// Kostka number K_{la,mu}: coefficient of m_mu in s_la.
Int kostka(const Partition& la, const Partition& mu);

/// Product in the p basis truncated to total degree <= degree_bound.
/// Throws BasisMismatch unless both inputs are p-tagged.
template <class K>
SymFun<K> p_multiply(const SymFun<K>& f, const SymFun<K>& g, int degree_bound);

/// Product of arbitrary expansions; the result is in the p basis.
template <class K>
SymFun<K> multiply(const Context<K>& ctx, const SymFun<K>& f, const SymFun<K>& g, int degree_bound);

/// Column la holds the expansion of from_la in the `to` basis; rows and
/// columns follow partitions_of(degree).
template <class K>
const Matrix<K>& transition_matrix(const Context<K>& ctx, Basis from, Basis to, int degree);

template <class K>
SymFun<K> convert(const Context<K>& ctx, const SymFun<K>& f, Basis to);

/// <p_la, p_mu> = delta z_la prod (1-q^{la_i})/(1-t^{la_i}).
template <class K>
K p_norm(const Context<K>& ctx, const Partition& la);

template <class K>
K inner_product(const Context<K>& ctx, const SymFun<K>& f, const SymFun<K>& g);

/// f^* g, where p_n^* = n (1-q^n)/(1-t^n) d/dp_n. Result in the p basis.
template <class K>
SymFun<K> adjoint_apply(const Context<K>& ctx, const SymFun<K>& f, const SymFun<K>& g);

/// d/dp_1 in the p basis.
template <class K>
SymFun<K> dp1(const Context<K>& ctx, const SymFun<K>& g);

/// Image in N variables: m-expansion with terms of length > N dropped.
template <class K>
NSymPoly<K> restrict_to(const Context<K>& ctx, const SymFun<K>& f, int n);

/// Lifts an NSymPoly back to the m basis.
template <class K>
SymFun<K> lift_symmetric(const NSymPoly<K>& f);

/// Sets x_N = 0, giving a polynomial in N-1 variables.
template <class K>
NSymPoly<K> drop_last_variable(const NSymPoly<K>& f);

template <class K>
XPoly<K> expand_x(const NSymPoly<K>& f);

/// Throws NotSymmetric with a witness when orbit coefficients disagree.
template <class K>
NSymPoly<K> collect_symmetric(const XPoly<K>& xp);

/// Alternating polynomial to Schur expansion: sum c_e x^e with strictly
/// decreasing e goes to sum c_e s_{e - delta}. Throws NotAlternating.
template <class K>
std::map<Partition, K> alternant_to_schur(const XPoly<K>& xp);

/// Schur polynomials in N variables to the monomial basis.
template <class K>
NSymPoly<K> schur_to_monomial(const std::map<Partition, K>& s, int n);

/// Exact quotient by the Vandermonde determinant of x_1..x_N.
template <class K>
NSymPoly<K> divide_by_vandermonde(const XPoly<K>& xp);

/// The Vandermonde determinant prod_{i<j} (x_i - x_j).
template <class K>
XPoly<K> vandermonde(int n);

/// Alternated sum over S_N of sign(w) w(xp).
template <class K>
XPoly<K> alternate(const XPoly<K>& xp);

/// Substitutes q and t in every coefficient.
SymFun<RatFun> specialize(const SymFun<RatFun>& f, const std::optional<RatFun>& q,
                          const std::optional<RatFun>& t);

/// Coefficient-wise lift of a symbolic expansion into K.
template <class K>
SymFun<K> lift(const Context<K>& ctx, const SymFun<RatFun>& f);

}  // namespace symfun
