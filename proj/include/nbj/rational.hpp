#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace nbj {

/// Arbitrary-precision rational number, always in canonical form
/// (gcd(|num|, den) = 1, den >= 1).  The only scalar type in the library;
/// no floating point is used anywhere.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, scalars mix freely
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "num" or "num/den"; throws std::invalid_argument on bad input.
  static Rational from_string(const std::string& s);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Canonical string: "num" when the denominator is 1, else "num/den".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

}  // namespace nbj
