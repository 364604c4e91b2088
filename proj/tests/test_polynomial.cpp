#include "munarini/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace munarini;

namespace {

Polynomial C(long long v) { return Polynomial::constant(Rational(v)); }
Polynomial V(VariableId v) { return Polynomial::variable(v); }

// random polynomial over {alpha, beta, x1, y1} with small degrees
Polynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> nterms(0, 4);
  const VariableId vars[] = {VariableId::alpha(), VariableId::beta(),
                             VariableId::x(1), VariableId::y(1)};
  Polynomial p;
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Polynomial term = C(coeff(rng));
    for (VariableId v : vars) term *= V(v).pow(static_cast<unsigned>(exp(rng)));
    p += term;
  }
  return p;
}

std::map<VariableId, Rational> random_assignment(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> val(-9, 9);
  return {{VariableId::alpha(), Rational(val(rng))},
          {VariableId::beta(), Rational(val(rng))},
          {VariableId::x(1), Rational(val(rng))},
          {VariableId::y(1), Rational(val(rng))}};
}

}  // namespace

TEST_CASE("constructors and canonical strings") {
  CHECK(C(0).is_zero());
  CHECK(C(0).str() == "0");
  CHECK(V(VariableId::alpha()).str() == "alpha");
  CHECK(Polynomial::constant(Rational(3, 2)).str() == "3/2");
  const Polynomial p = C(2) * V(VariableId::x(1)).pow(2) * V(VariableId::y(2)) - C(1);
  CHECK(p.str() == "2*x1^2*y2 - 1");
  const Polynomial q =
      C(2) * V(VariableId::x(1)).pow(2) * V(VariableId::y(2)) -
      Polynomial::constant(Rational(3, 2)) * V(VariableId::alpha()) * V(VariableId::beta()) +
      C(1);
  CHECK(q.str() == "2*x1^2*y2 - 3/2*alpha*beta + 1");
}

TEST_CASE("variable order and term order") {
  // alpha < beta < x1 < ... < y1 < ...; graded lex, descending
  CHECK(VariableId::alpha() < VariableId::beta());
  CHECK(VariableId::beta() < VariableId::x(1));
  CHECK(VariableId::x(3) < VariableId::y(1));
  CHECK(VariableId::x(1) < VariableId::x(2));
  const Polynomial p = V(VariableId::y(1)) + V(VariableId::alpha()) +
                       V(VariableId::x(1)) * V(VariableId::x(2));
  CHECK(p.str() == "x1*x2 + alpha + y1");
}

TEST_CASE("variable names round trip") {
  for (VariableId v : {VariableId::alpha(), VariableId::beta(), VariableId::x(1),
                       VariableId::y(12)})
    CHECK(VariableId::parse(v.name()) == v);
  CHECK_FALSE(VariableId::parse("z1").has_value());
  CHECK_FALSE(VariableId::parse("x0").has_value());
}

TEST_CASE("basic arithmetic examples") {
  const Polynomial x = V(VariableId::x(1)), y = V(VariableId::y(1));
  CHECK((x + (-x)).is_zero());
  CHECK((x * y).str() == "x1*y1");
  CHECK((x + y).pow(2).str() == "x1^2 + 2*x1*y1 + y1^2");
  CHECK((x - x + C(0)) == Polynomial{});
  CHECK(x.pow(0) == C(1));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const Polynomial p = random_poly(rng), q = random_poly(rng);
    const auto asg = random_assignment(rng);
    CHECK((p + q).evaluate(asg) == p.evaluate(asg) + q.evaluate(asg));
    CHECK((p * q).evaluate(asg) == p.evaluate(asg) * q.evaluate(asg));
  }
}

TEST_CASE("evaluate examples and errors") {
  CHECK(Polynomial{}.evaluate({}) == 0);
  const Polynomial ab = V(VariableId::alpha()) + V(VariableId::beta());
  CHECK(ab.evaluate({{VariableId::alpha(), Rational(2)},
                     {VariableId::beta(), Rational(3)}}) == 5);
  const Polynomial p = (V(VariableId::beta()) + C(1)) * V(VariableId::x(1)) +
                       V(VariableId::alpha()) * V(VariableId::y(1));
  const std::map<VariableId, Rational> ones = {{VariableId::alpha(), Rational(1)},
                                               {VariableId::beta(), Rational(1)},
                                               {VariableId::x(1), Rational(1)},
                                               {VariableId::y(1), Rational(1)}};
  CHECK(p.evaluate(ones) == 3);
  CHECK_THROWS_AS(p.evaluate({}), std::invalid_argument);
}

TEST_CASE("multinomial_poly examples") {
  const Polynomial a = V(VariableId::alpha()), b = V(VariableId::beta());
  CHECK(multinomial_poly(b, {1}) == b);
  const Polynomial top = b - a + C(2);
  CHECK(multinomial_poly(top, {1, 1}) == top * (top - C(1)));
  CHECK(multinomial_poly(a, {}) == C(1));
  CHECK(multinomial_poly(a, {-1}).is_zero());
  // factorial scaling: (beta choose 2) = beta(beta-1)/2
  CHECK(multinomial_poly(b, {2}) == Rational(1, 2) * (b * (b - C(1))));
}

TEST_CASE("multinomial_poly of a constant matches the numeric multinomial") {
  for (long long c = -10; c <= 10; ++c) {
    for (long long n1 = 0; n1 <= 6; ++n1)
      for (long long n2 = 0; n1 + n2 <= 6; ++n2)
        CHECK(multinomial_poly(C(c), {n1, n2}) ==
              Polynomial::constant(Rational(multinomial(c, {n1, n2}))));
  }
}

TEST_CASE("rename handles permutations") {
  const Polynomial p = V(VariableId::x(1)) * V(VariableId::y(2)).pow(2) +
                       V(VariableId::x(2));
  const std::map<VariableId, VariableId> swap12 = {
      {VariableId::x(1), VariableId::x(2)},
      {VariableId::x(2), VariableId::x(1)},
      {VariableId::y(1), VariableId::y(2)},
      {VariableId::y(2), VariableId::y(1)}};
  const Polynomial q = p.rename(swap12);
  CHECK(q == V(VariableId::x(2)) * V(VariableId::y(1)).pow(2) + V(VariableId::x(1)));
  CHECK(q.rename(swap12) == p);
}

TEST_CASE("degree queries") {
  const Polynomial p = V(VariableId::alpha()).pow(2) * V(VariableId::x(1)) +
                       V(VariableId::y(1)).pow(3);
  auto is_xy = [](VariableId v) { return v.kind == VarKind::X || v.kind == VarKind::Y; };
  CHECK(p.degree_where(is_xy) == 3);
  CHECK(p.degree_where([](VariableId v) { return v.kind == VarKind::Alpha; }) == 2);
  CHECK(Polynomial{}.degree_where(is_xy) == -1);
}
