#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "symfun/int_poly2.hpp"

namespace symfun {

/// Element of Q(q,t) stored as a reduced fraction num/den of IntPoly2.
/// The first printed term of the denominator is positive and the integer
/// content of the pair is 1, so equal values have equal representations.
class RatFun {
 public:
  RatFun() : den_(1L) {}
  RatFun(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Int& c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFun(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  RatFun(IntPoly2 p) : num_(std::move(p)), den_(1L) {}  // NOLINT(google-explicit-constructor)

  /// Reduced representative of num/den; throws DivisionByZero for den = 0.
  static RatFun make(IntPoly2 num, IntPoly2 den);
  static RatFun q() { return RatFun(IntPoly2::q()); }
  static RatFun t() { return RatFun(IntPoly2::t()); }
  /// q^a t^b with arbitrary integer exponents.
  static RatFun qt(int a, int b);

  const IntPoly2& num() const { return num_; }
  const IntPoly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFun inverse() const;
  RatFun pow(int e) const;

  /// Substitutes the bound variables (unbound ones stay symbolic).
  /// Throws PoleAtSpecialization when the denominator becomes zero.
  RatFun specialize(const std::optional<RatFun>& q, const std::optional<RatFun>& t) const;
  /// Value at a rational point; throws PoleAtSpecialization at a pole.
  mpq_class evaluate(const mpq_class& q0, const mpq_class& t0) const;

  /// Canonical text, e.g. "(1-t)/(1-q*t)", "(1-q)/q", "(-1+q^2)", "0".
  std::string to_string() const;
  static RatFun parse(std::string_view text);
  std::size_t hash() const { return num_.hash() * 31U + den_.hash(); }

 private:
  void normalize_sign();

  IntPoly2 num_;
  IntPoly2 den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& r);

/// Value of p at (q0, t0).
mpq_class evaluate(const IntPoly2& p, const mpq_class& q0, const mpq_class& t0);

}  // namespace symfun

template <>
struct std::hash<symfun::RatFun> {
  std::size_t operator()(const symfun::RatFun& r) const { return r.hash(); }
};
