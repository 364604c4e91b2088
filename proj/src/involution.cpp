#include "munarini/involution.hpp"

#include "munarini/identity.hpp"

#include <algorithm>
#include <stdexcept>

namespace munarini {

std::optional<long long> first_y_position(const Configuration& c) {
  require_valid(c);
  const long long F = c.params.first_segment();
  for (long long p = 1; p <= F; ++p)
    if (c.marks[p - 1] == Configuration::Mark::Y) return p;
  return std::nullopt;
}

InvolutionOutcome apply_involution(const Configuration& c) {
  InvolutionOutcome out;
  const auto pos = first_y_position(c);
  if (!pos) {
    out.fixed = true;
    return out;
  }
  Configuration partner = c;
  auto it = std::lower_bound(partner.circled.begin(), partner.circled.end(), *pos);
  if (it != partner.circled.end() && *it == *pos)
    partner.circled.erase(it);
  else
    partner.circled.insert(it, *pos);
  if (!validate(partner).empty())
    throw std::logic_error("involution produced an invalid partner");
  out.fixed = false;
  out.partner = std::move(partner);
  out.toggled_position = *pos;
  return out;
}

bool is_fixed(const Configuration& c) { return !first_y_position(c).has_value(); }

Polynomial fixed_point_sum(const ConfigParams& params, std::uint64_t max_configs) {
  Polynomial sum;
  enumerate(params, std::nullopt, max_configs, [&](const Configuration& c) {
    if (is_fixed(c)) sum += weight(c);
  });
  return sum;
}

namespace {

IdentityInstance concrete_ab_instance(const ConfigParams& params) {
  IdentityInstance inst = IdentityInstance::symbolic(params.n);
  inst.alpha = Integer(params.alpha);
  inst.beta = Integer(params.beta);
  return inst;
}

}  // namespace

AuditReport audit(const ConfigParams& params, std::uint64_t max_configs) {
  AuditReport report;
  report.instance = params;

  std::uint64_t paired = 0;
  auto fail = [&](bool& flag, const std::string& name, const Configuration& c) {
    if (report.failed_check.empty()) {
      report.failed_check = name;
      report.counterexample = c;
    }
    flag = false;
  };

  enumerate(params, std::nullopt, max_configs, [&](const Configuration& c) {
    ++report.configurations;
    const int s = sign(c);
    const Polynomial w = weight(c);
    report.signed_total += Rational(s) * w;

    const InvolutionOutcome out = apply_involution(c);
    if (out.fixed != is_fixed(c))
      fail(report.fixed_characterization, "fixed_characterization", c);
    if (out.fixed) {
      ++report.fixed_points;
      report.fixed_sum += w;
      // a fixed point has no first-segment y, hence no circles and sign +1
      if (!c.circled.empty() || s != +1)
        fail(report.fixed_characterization, "fixed_characterization", c);
    } else {
      ++paired;
      const Configuration& partner = *out.partner;
      if (partner == c) fail(report.involutive, "involutive", c);
      const InvolutionOutcome back = apply_involution(partner);
      if (back.fixed || !(*back.partner == c))
        fail(report.involutive, "involutive", c);
      if (sign(partner) != -s) fail(report.sign_reversal, "sign_reversal", c);
      if (!(weight(partner) == w)) fail(report.weight_preserved, "weight_preserved", c);
    }
  });

  if (paired % 2 != 0) {
    report.involutive = false;
    if (report.failed_check.empty()) report.failed_check = "involutive";
  }
  report.pairs = paired / 2;

  const IdentityInstance inst = concrete_ab_instance(params);
  report.lhs = lhs_eq3(inst);
  report.rhs = rhs_eq3(inst);
  report.sums_match =
      report.signed_total == report.lhs && report.fixed_sum == report.rhs;
  if (!report.sums_match && report.failed_check.empty())
    report.failed_check = "sums_match";
  return report;
}

nlohmann::ordered_json AuditReport::to_json() const {
  nlohmann::ordered_json j;
  j["instance"] = {{"m", instance.m},
                   {"n", instance.n},
                   {"alpha", instance.alpha},
                   {"beta", instance.beta}};
  j["checks"] = {{"involutive", involutive},
                 {"sign_reversal", sign_reversal},
                 {"weight_preserved", weight_preserved},
                 {"fixed_characterization", fixed_characterization},
                 {"sums_match", sums_match}};
  j["totals"] = {{"configurations", configurations},
                 {"fixed_points", fixed_points},
                 {"pairs", pairs}};
  j["sums"] = {{"lhs", lhs.str()},
               {"rhs", rhs.str()},
               {"signed_total", signed_total.str()},
               {"fixed_sum", fixed_sum.str()}};
  j["counterexample"] =
      counterexample ? config_to_json(*counterexample) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace munarini
