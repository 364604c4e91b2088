#include "munarini/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace munarini {

long long norm(const IndexVector& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

bool in_natural_cone(const IndexVector& v) {
  for (long long e : v) {
    if (e < 0) return false;
  }
  return true;
}

Integer factorial(unsigned long long t) {
  Integer r = 1;
  for (unsigned long long j = 2; j <= t; ++j) r *= j;
  return r;
}

Integer falling_factorial(const Integer& x, unsigned long long t) {
  Integer r = 1;
  for (unsigned long long j = 0; j < t; ++j) r *= x - j;
  return r;
}

Integer multinomial(const Integer& x, const IndexVector& n) {
  if (!in_natural_cone(n)) return 0;
  Integer num = falling_factorial(x, static_cast<unsigned long long>(norm(n)));
  Integer den = 1;
  for (long long e : n) den *= factorial(static_cast<unsigned long long>(e));
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("multinomial: inexact division");
  return q;
}

Rational power_vec(const std::vector<Rational>& base, const IndexVector& exps) {
  if (base.size() != exps.size())
    throw std::invalid_argument("power_vec: length mismatch");
  if (!in_natural_cone(exps))
    throw std::invalid_argument("power_vec: negative exponent");
  Rational r = 1;
  for (std::size_t i = 0; i < base.size(); ++i)
    r *= rational_pow(base[i], static_cast<unsigned long long>(exps[i]));
  return r;
}

Rational rational_pow(const Rational& b, unsigned long long e) {
  Rational r = 1;
  Rational p = b;
  while (e > 0) {
    if (e & 1) r *= p;
    p *= p;
    e >>= 1;
  }
  return r;
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  Integer num = boost::multiprecision::numerator(v);
  Integer den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer integer_from_string(const std::string& s) { return Integer(s); }

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer num(s.substr(0, slash));
  Integer den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

}  // namespace munarini
