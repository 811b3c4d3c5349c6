#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace symfun {

using Int = mpz_class;

/// Element of Z[q,t], kept as a sparse list of nonzero terms sorted by
/// total degree and, within one degree, by decreasing q-degree. This is
/// also the printed order: 1-q-t+q*t.
class IntPoly2 {
 public:
  struct Term {
    int dq = 0;
    int dt = 0;
    Int c;
  };

  IntPoly2() = default;
  IntPoly2(long c);  // NOLINT(google-explicit-constructor)
  IntPoly2(const Int& c);  // NOLINT(google-explicit-constructor)

  static IntPoly2 monomial(const Int& c, int dq, int dt);
  static IntPoly2 q() { return monomial(1, 1, 0); }
  static IntPoly2 t() { return monomial(1, 0, 1); }
  /// Sorts, merges equal exponents and drops zero coefficients.
  static IntPoly2 from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  int degree_q() const;
  int degree_t() const;
  int min_degree_q() const;
  int min_degree_t() const;
  /// First printed term: lowest total degree, largest q-degree.
  const Term& trailing() const { return terms_.front(); }
  /// Last printed term: highest total degree, smallest q-degree.
  const Term& leading() const { return terms_.back(); }
  /// Coefficient of q^dq t^dt (zero when absent).
  Int coeff(int dq, int dt) const;
  /// Gcd of the integer coefficients, nonnegative.
  Int content() const;

  IntPoly2 operator-() const;
  IntPoly2& operator+=(const IntPoly2& o);
  IntPoly2& operator-=(const IntPoly2& o);
  IntPoly2& operator*=(const IntPoly2& o);
  friend IntPoly2 operator+(IntPoly2 a, const IntPoly2& b) { return a += b; }
  friend IntPoly2 operator-(IntPoly2 a, const IntPoly2& b) { return a -= b; }
  friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b);
  friend bool operator==(const IntPoly2& a, const IntPoly2& b);

  IntPoly2 scaled(const Int& c) const;
  /// Divides every coefficient by c; c must divide all of them.
  IntPoly2 div_scalar_exact(const Int& c) const;
  /// Multiplies by q^dq t^dt; negative shifts require divisibility.
  IntPoly2 shifted(int dq, int dt) const;
  IntPoly2 pow(unsigned e) const;
  /// Exchanges the roles of q and t.
  IntPoly2 swapped() const;

  /// Canonical text form without surrounding parentheses, e.g. "-1+q^2".
  std::string to_string() const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b; throws NotDivisible when b does not divide a.
IntPoly2 exact_div(const IntPoly2& a, const IntPoly2& b);
/// Returns true and sets quotient when b divides a in Z[q,t].
bool try_exact_div(const IntPoly2& a, const IntPoly2& b, IntPoly2& quotient);
/// Greatest common divisor in Z[q,t]; the result has positive leading
/// coefficient (zero only when both inputs are zero).
IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b);

}  // namespace symfun
