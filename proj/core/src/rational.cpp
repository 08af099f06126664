#include "burnside/rational.hpp"

#include <limits>
#include <stdexcept>

namespace burnside {

namespace {

mpz_class from_int64(std::int64_t v) {
  // mpz_class has no portable int64 constructor; go through a string.
  return mpz_class(std::to_string(v), 10);
}

}  // namespace

Rational::Rational(std::int64_t n) : v_(from_int64(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(from_int64(num), from_int64(den));
  v_.canonicalize();
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw std::invalid_argument("Rational: not a decimal integer");
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::numerator() const { return v_.get_num().get_str(10); }
std::string Rational::denominator() const { return v_.get_den().get_str(10); }
bool Rational::is_integer() const { return v_.get_den() == 1; }

std::int64_t Rational::to_integer() const {
  if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
  const mpz_class& n = v_.get_num();
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
  if (n < lo || n > hi) throw std::domain_error("Rational: out of int64 range");
  return std::stoll(n.get_str(10));
}

std::string Rational::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.v_, b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace burnside
