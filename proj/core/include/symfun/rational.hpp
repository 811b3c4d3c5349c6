#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "symfun/errors.hpp"

namespace symfun {

/// Exact rational scalar. Used as the field when q and t are replaced by a
/// fixed rational point, which turns every identity into a check over Q.
class Rat {
 public:
  Rat() = default;
  Rat(long c) : v_(c) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpq_class& c) : v_(c) {}  // NOLINT(google-explicit-constructor)

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }

  Rat inverse() const { return Rat(1L) / *this; }
  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace symfun
