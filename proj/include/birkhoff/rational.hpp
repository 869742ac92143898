#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "birkhoff/errors.hpp"

namespace birkhoff {

/// Exact rational scalar backed by GMP.  Values are always stored in lowest
/// terms with positive denominator (mpq_class keeps results canonical; raw
/// constructions are canonicalized on entry).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw SingularMatrixError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long n) { return Rational(n); }

  /// Parses "num", "num/den" or "-num/den".
  static Rational from_string(std::string_view s) {
    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0)
      throw ParseError("invalid rational literal '" + std::string(s) + "'", 0);
    if (v.get_den() == 0)
      throw ParseError("rational literal with zero denominator", 0);
    v.canonicalize();
    return Rational(std::move(v));
  }

  bool is_zero() const { return sgn(v_) == 0; }

  Rational inv() const {
    if (is_zero()) throw SingularMatrixError("inverse of zero");
    return Rational(1 / v_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw SingularMatrixError("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  /// Canonical decimal form: "n" for integers, "n/d" otherwise.
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace birkhoff
