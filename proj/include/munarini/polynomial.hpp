#pragma once

#include "munarini/arith.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace munarini {

// The variable universe is {alpha, beta, x1..xm, y1..ym} with the fixed
// order alpha < beta < x1 < ... < xm < y1 < ... < ym. m is not stored on
// the polynomial; any subset of variables may occur.
enum class VarKind : int { Alpha = 0, Beta = 1, X = 2, Y = 3 };

struct VariableId {
  VarKind kind = VarKind::Alpha;
  int index = 0;  // 1-based for X/Y, 0 for Alpha/Beta

  friend auto operator<=>(const VariableId&, const VariableId&) = default;

  static VariableId alpha() { return {VarKind::Alpha, 0}; }
  static VariableId beta() { return {VarKind::Beta, 0}; }
  static VariableId x(int i) { return {VarKind::X, i}; }
  static VariableId y(int i) { return {VarKind::Y, i}; }

  std::string name() const;                                  // "alpha", "x3", ...
  static std::optional<VariableId> parse(const std::string&);  // inverse of name()
};

// Exponent map of one monomial: sorted ascending by VariableId, all
// exponents strictly positive. The empty map is the constant monomial.
using ExponentMap = std::vector<std::pair<VariableId, int>>;

// Graded lexicographic, descending: higher total degree first, ties broken
// lexicographically over the VariableId order.
struct TermOrderGreater {
  bool operator()(const ExponentMap& a, const ExponentMap& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients, kept in
// canonical form at all times: no zero coefficients, terms in strictly
// descending graded-lex order. Structural equality is mathematical equality.
class Polynomial {
 public:
  using TermMap = std::map<ExponentMap, Rational, TermOrderGreater>;

  Polynomial() = default;

  static Polynomial constant(const Rational& c);
  static Polynomial variable(VariableId v);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Accumulates c * monomial(e) into the polynomial, dropping the term if
  // the coefficient cancels. e must be sorted with positive exponents.
  void add_term(const ExponentMap& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned long long e) const;

  // Exact evaluation; every variable occurring in the polynomial must be
  // assigned, otherwise std::invalid_argument.
  Rational evaluate(const std::map<VariableId, Rational>& assignment) const;

  // Max over monomials of the exponent sum restricted to variables matching
  // the predicate; -1 for the zero polynomial.
  long long degree_where(const std::function<bool(VariableId)>& pred) const;

  // Variable substitution v -> mapping[v] (identity where absent); handles
  // permutations.
  Polynomial rename(const std::map<VariableId, VariableId>& mapping) const;

  std::vector<VariableId> variables() const;

  // Canonical text form, e.g. "2*x1^2*y2 - 3/2*alpha*beta + 1"; "0" for the
  // zero polynomial.
  std::string str() const;

 private:
  TermMap terms_;
};

// Falling-factorial multinomial of a polynomial top argument:
//   (1 / (n1!...nm!)) * prod_{j=0}^{|n|-1} (p - j)   if n is in N^m,
//   0                                                 otherwise.
Polynomial multinomial_poly(const Polynomial& p, const IndexVector& n);

}  // namespace munarini
