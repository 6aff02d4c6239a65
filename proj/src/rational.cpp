#include "nbj/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nbj {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace nbj
