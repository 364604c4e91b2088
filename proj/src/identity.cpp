#include "munarini/identity.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace munarini {

namespace {

// Visits every k with 0 <= k_i <= n_i in ascending lexicographic order.
void for_each_k(const IndexVector& n, const std::function<void(const IndexVector&)>& fn) {
  IndexVector k(n.size(), 0);
  while (true) {
    fn(k);
    int i = static_cast<int>(n.size()) - 1;
    while (i >= 0 && k[i] == n[i]) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
}

Polynomial alpha_poly(const IdentityInstance& inst) {
  return inst.alpha ? Polynomial::constant(Rational(*inst.alpha))
                    : Polynomial::variable(VariableId::alpha());
}

Polynomial beta_poly(const IdentityInstance& inst) {
  return inst.beta ? Polynomial::constant(Rational(*inst.beta))
                   : Polynomial::variable(VariableId::beta());
}

Polynomial x_poly(const IdentityInstance& inst, int i) {
  return inst.x ? Polynomial::constant((*inst.x)[i - 1])
                : Polynomial::variable(VariableId::x(i));
}

Polynomial y_poly(const IdentityInstance& inst, int i) {
  return inst.y ? Polynomial::constant((*inst.y)[i - 1])
                : Polynomial::variable(VariableId::y(i));
}

IndexVector vec_sub(const IndexVector& a, const IndexVector& b) {
  IndexVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Polynomial build_eq3_side(const IdentityInstance& inst, bool lhs) {
  inst.check();
  const long long abs_n = norm(inst.n);
  const Polynomial a = alpha_poly(inst);
  const Polynomial b = beta_poly(inst);
  Polynomial sum;
  for_each_k(inst.n, [&](const IndexVector& k) {
    const IndexVector nk = vec_sub(inst.n, k);
    const long long abs_k = norm(k);
    Polynomial term =
        lhs ? multinomial_poly(b - a + Polynomial::constant(Rational(abs_n)), nk)
            : multinomial_poly(a, nk);
    term *= multinomial_poly(b + Polynomial::constant(Rational(abs_k)), k);
    for (int i = 1; i <= inst.m; ++i) {
      const Polynomial xi = x_poly(inst, i);
      const Polynomial yi = y_poly(inst, i);
      term *= (lhs ? xi + yi : xi).pow(static_cast<unsigned long long>(k[i - 1]));
      term *= yi.pow(static_cast<unsigned long long>(nk[i - 1]));
    }
    if (lhs && ((abs_n - abs_k) & 1)) term = -term;
    sum += term;
  });
  return sum;
}

Polynomial build_eq2_side(const IdentityInstance& inst, bool lhs) {
  inst.check();
  if (inst.m != 1) throw std::invalid_argument("eq2: requires m = 1");
  const long long n = inst.n[0];
  const Polynomial a = alpha_poly(inst);
  const Polynomial b = beta_poly(inst);
  const Polynomial x = x_poly(inst, 1);
  const Polynomial y = y_poly(inst, 1);
  Polynomial sum;
  for (long long k = 0; k <= n; ++k) {
    Polynomial term =
        lhs ? multinomial_poly(b - a + Polynomial::constant(Rational(n)), {n - k})
            : multinomial_poly(a, {n - k});
    term *= multinomial_poly(b + Polynomial::constant(Rational(k)), {k});
    term *= (lhs ? x + y : x).pow(static_cast<unsigned long long>(k));
    term *= y.pow(static_cast<unsigned long long>(n - k));
    if (lhs && ((n - k) & 1)) term = -term;
    sum += term;
  }
  return sum;
}

Polynomial build_eq1_side(long long n, bool lhs) {
  if (n < 0) throw std::invalid_argument("eq1: n must be nonnegative");
  const Polynomial x = Polynomial::variable(VariableId::x(1));
  const Polynomial one = Polynomial::constant(1);
  Polynomial sum;
  for (long long k = 0; k <= n; ++k) {
    Rational c = Rational(multinomial(n, {k}) * multinomial(n + k, {k}));
    if (lhs && ((n - k) & 1)) c = -c;
    sum += c * (lhs ? one + x : x).pow(static_cast<unsigned long long>(k));
  }
  return sum;
}

// Direct numeric evaluation of one side of the multivariate identity at a
// full assignment, term by term. Used by the randomized verifier so that
// large instances never pay for symbolic expansion.
Rational eval_eq3_side(const IdentityInstance& inst, bool lhs,
                       const std::map<VariableId, Rational>& asg) {
  const long long abs_n = norm(inst.n);
  auto scalar = [&](VariableId v, const std::optional<Integer>& pinned) {
    if (pinned) return Rational(*pinned);
    return asg.at(v);
  };
  const Rational av = scalar(VariableId::alpha(), inst.alpha);
  const Rational bv = scalar(VariableId::beta(), inst.beta);
  // Assignments are integral by construction; the multinomial top arguments
  // are exact integers here.
  const Integer ai = boost::multiprecision::numerator(av);
  const Integer bi = boost::multiprecision::numerator(bv);
  std::vector<Rational> xv(inst.m), yv(inst.m);
  for (int i = 1; i <= inst.m; ++i) {
    xv[i - 1] = inst.x ? (*inst.x)[i - 1] : asg.at(VariableId::x(i));
    yv[i - 1] = inst.y ? (*inst.y)[i - 1] : asg.at(VariableId::y(i));
  }
  Rational sum = 0;
  for_each_k(inst.n, [&](const IndexVector& k) {
    const IndexVector nk = vec_sub(inst.n, k);
    const long long abs_k = norm(k);
    Rational term(lhs ? multinomial(bi - ai + abs_n, nk) : multinomial(ai, nk));
    term *= Rational(multinomial(bi + abs_k, k));
    for (int i = 0; i < inst.m; ++i) {
      term *= rational_pow(lhs ? xv[i] + yv[i] : xv[i],
                           static_cast<unsigned long long>(k[i]));
      term *= rational_pow(yv[i], static_cast<unsigned long long>(nk[i]));
    }
    if (lhs && ((abs_n - abs_k) & 1)) term = -term;
    sum += term;
  });
  return sum;
}

std::vector<VariableId> free_variables(const IdentityInstance& inst) {
  std::vector<VariableId> vars;
  if (!inst.alpha) vars.push_back(VariableId::alpha());
  if (!inst.beta) vars.push_back(VariableId::beta());
  if (!inst.x)
    for (int i = 1; i <= inst.m; ++i) vars.push_back(VariableId::x(i));
  if (!inst.y)
    for (int i = 1; i <= inst.m; ++i) vars.push_back(VariableId::y(i));
  return vars;
}

VerifyReport run_pit(const std::vector<VariableId>& vars, long long trials,
                     std::uint64_t seed, long long range,
                     const std::function<Rational(const std::map<VariableId, Rational>&)>& lhs,
                     const std::function<Rational(const std::map<VariableId, Rational>&)>& rhs) {
  if (trials < 1) throw std::invalid_argument("verify_random: trials must be >= 1");
  if (range < 0) throw std::invalid_argument("verify_random: range must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-range, range);
  VerifyReport report;
  report.mode = "random";
  report.trials = trials;
  report.equal = true;
  for (long long t = 0; t < trials; ++t) {
    std::map<VariableId, Rational> asg;
    for (VariableId v : vars) asg[v] = Rational(dist(rng));
    if (lhs(asg) != rhs(asg)) {
      report.equal = false;
      report.witness = asg;
      break;
    }
  }
  return report;
}

}  // namespace

IdentityInstance IdentityInstance::symbolic(IndexVector n_) {
  IdentityInstance inst;
  inst.m = static_cast<int>(n_.size());
  inst.n = std::move(n_);
  return inst;
}

void IdentityInstance::check() const {
  if (m < 1) throw std::invalid_argument("instance: m must be positive");
  if (static_cast<int>(n.size()) != m)
    throw std::invalid_argument("instance: n must have length m");
  if (!in_natural_cone(n))
    throw std::invalid_argument("instance: n entries must be nonnegative");
  if (x && static_cast<int>(x->size()) != m)
    throw std::invalid_argument("instance: x must have length m");
  if (y && static_cast<int>(y->size()) != m)
    throw std::invalid_argument("instance: y must have length m");
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["equal"] = equal;
  j["mode"] = mode;
  j["difference"] = difference.str();
  if (trials) j["trials"] = *trials;
  if (witness) {
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [v, val] : *witness) w[v.name()] = to_string(val);
    j["witness"] = w;
  }
  return j;
}

Polynomial lhs_eq3(const IdentityInstance& inst) { return build_eq3_side(inst, true); }
Polynomial rhs_eq3(const IdentityInstance& inst) { return build_eq3_side(inst, false); }
Polynomial lhs_eq2(const IdentityInstance& inst) { return build_eq2_side(inst, true); }
Polynomial rhs_eq2(const IdentityInstance& inst) { return build_eq2_side(inst, false); }
Polynomial lhs_eq1(long long n) { return build_eq1_side(n, true); }
Polynomial rhs_eq1(long long n) { return build_eq1_side(n, false); }

VerifyReport verify_symbolic(const IdentityInstance& inst) {
  VerifyReport report;
  report.mode = "symbolic";
  report.difference = lhs_eq3(inst) - rhs_eq3(inst);
  report.equal = report.difference.is_zero();
  return report;
}

VerifyReport verify_random(const IdentityInstance& inst, long long trials,
                           std::uint64_t seed, long long range) {
  inst.check();
  return run_pit(
      free_variables(inst), trials, seed, range,
      [&](const auto& asg) { return eval_eq3_side(inst, true, asg); },
      [&](const auto& asg) { return eval_eq3_side(inst, false, asg); });
}

VerifyReport verify_random_polys(const Polynomial& lhs, const Polynomial& rhs,
                                 long long trials, std::uint64_t seed,
                                 long long range) {
  std::vector<VariableId> vars = lhs.variables();
  for (VariableId v : rhs.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  return run_pit(
      vars, trials, seed, range,
      [&](const auto& asg) { return lhs.evaluate(asg); },
      [&](const auto& asg) { return rhs.evaluate(asg); });
}

namespace {

VerifyReport compare_sides(const Polynomial& l1, const Polynomial& l2,
                           const Polynomial& r1, const Polynomial& r2) {
  VerifyReport report;
  report.mode = "symbolic";
  const Polynomial dl = l1 - l2;
  const Polynomial dr = r1 - r2;
  report.equal = dl.is_zero() && dr.is_zero();
  report.difference = dl.is_zero() ? dr : dl;
  return report;
}

}  // namespace

VerifyReport check_reduction_eq3_to_eq2(long long n) {
  if (n < 0) throw std::invalid_argument("reduction: n must be nonnegative");
  IdentityInstance inst = IdentityInstance::symbolic({n});
  return compare_sides(lhs_eq3(inst), lhs_eq2(inst), rhs_eq3(inst), rhs_eq2(inst));
}

VerifyReport check_reduction_eq2_to_eq1(long long n) {
  if (n < 0) throw std::invalid_argument("reduction: n must be nonnegative");
  IdentityInstance inst = IdentityInstance::symbolic({n});
  inst.alpha = Integer(n);
  inst.beta = Integer(n);
  inst.y = std::vector<Rational>{Rational(1)};
  return compare_sides(lhs_eq2(inst), lhs_eq1(n), rhs_eq2(inst), rhs_eq1(n));
}

}  // namespace munarini
