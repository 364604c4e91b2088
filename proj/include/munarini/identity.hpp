#pragma once

#include "munarini/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace munarini {

// One instance of the identity family: m, the top vector n, and whether
// alpha/beta and x/y are left symbolic or pinned to concrete values.
struct IdentityInstance {
  int m = 1;
  IndexVector n;                                // entries >= 0, length m
  std::optional<Integer> alpha;                 // empty = symbolic
  std::optional<Integer> beta;                  // empty = symbolic
  std::optional<std::vector<Rational>> x;       // empty = symbolic
  std::optional<std::vector<Rational>> y;       // empty = symbolic

  static IdentityInstance symbolic(IndexVector n_);
  void check() const;  // throws std::invalid_argument on malformed fields
};

struct VerifyReport {
  bool equal = false;
  Polynomial difference;  // lhs - rhs (symbolic and enumerative modes)
  std::string mode;       // "symbolic" | "random" | "enumerate"
  std::optional<long long> trials;
  std::optional<std::map<VariableId, Rational>> witness;

  nlohmann::ordered_json to_json() const;
};

// Builders. Both sides of each identity are constructed independently from
// their own summation formulas; symbolic parameters become the variables
// alpha, beta, x_i, y_i and concrete ones become rational constants. The
// k-sum runs in ascending lexicographic order.
Polynomial lhs_eq3(const IdentityInstance& inst);
Polynomial rhs_eq3(const IdentityInstance& inst);

// The univariate ancestor identities; eq2 takes an m=1 instance, eq1 is
// fully determined by a scalar n (y = 1, alpha = beta = n).
Polynomial lhs_eq2(const IdentityInstance& inst);
Polynomial rhs_eq2(const IdentityInstance& inst);
Polynomial lhs_eq1(long long n);
Polynomial rhs_eq1(long long n);

// Exact equality of canonical forms; difference = lhs - rhs.
VerifyReport verify_symbolic(const IdentityInstance& inst);

// Randomized polynomial identity testing: both sides are evaluated at
// `trials` assignments with each free variable drawn uniformly from
// [-range, range], deterministically seeded. Evaluation substitutes into
// the summation formula term by term, so large instances never expand.
VerifyReport verify_random(const IdentityInstance& inst, long long trials,
                           std::uint64_t seed, long long range);

// Same PIT driver over two explicitly built polynomials.
VerifyReport verify_random_polys(const Polynomial& lhs, const Polynomial& rhs,
                                 long long trials, std::uint64_t seed,
                                 long long range);

// Cross-validations of the specialization chain: the m=1 member of the
// multivariate identity must coincide with the univariate identity, which
// at alpha = beta = n, y = 1 must coincide with the Simons form.
VerifyReport check_reduction_eq3_to_eq2(long long n);
VerifyReport check_reduction_eq2_to_eq1(long long n);

}  // namespace munarini
