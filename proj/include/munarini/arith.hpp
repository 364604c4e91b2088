#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace munarini {

// Exact arithmetic only. All scalar values in the workbench are arbitrary
// precision integers or reduced rationals; there is no floating point path.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An m-tuple of integers playing the roles of n, k, n-k and exponent
// vectors. Negative entries are allowed; the multinomial coefficient is 0
// on them.
using IndexVector = std::vector<long long>;

long long norm(const IndexVector& v);
bool in_natural_cone(const IndexVector& v);

Integer factorial(unsigned long long t);

// x(x-1)...(x-t+1); the empty product (t = 0) is 1.
Integer falling_factorial(const Integer& x, unsigned long long t);

// Multinomial coefficient of an integer top argument:
//   x(x-1)...(x-|n|+1) / (n1! ... nm!)   if every entry of n is >= 0,
//   0                                     otherwise.
// The division is always exact; a nonzero remainder is an internal bug and
// throws std::logic_error.
Integer multinomial(const Integer& x, const IndexVector& n);

// b^a = b1^{a1} ... bm^{am}; requires a in the natural cone and matching
// lengths.
Rational power_vec(const std::vector<Rational>& base, const IndexVector& exps);

Rational rational_pow(const Rational& b, unsigned long long e);

std::string to_string(const Integer& v);

// "p/q" with "/q" omitted when the denominator is 1.
std::string to_string(const Rational& v);

Integer integer_from_string(const std::string& s);
Rational rational_from_string(const std::string& s);

}  // namespace munarini
