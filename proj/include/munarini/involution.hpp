#pragma once

#include "munarini/configspace.hpp"
#include "munarini/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace munarini {

// Result of applying the sign-reversing involution to one configuration.
struct InvolutionOutcome {
  bool fixed = false;
  std::optional<Configuration> partner;        // present iff !fixed
  std::optional<long long> toggled_position;   // present iff !fixed
};

// Smallest position p <= first_segment with a y-weighted letter (circled or
// not); absent characterizes the fixed points.
std::optional<long long> first_y_position(const Configuration& c);

// Toggles the circle on the first y-weighted first-segment position. The
// partner of a non-fixed configuration is always valid; a validation
// failure there is an internal bug and throws std::logic_error.
InvolutionOutcome apply_involution(const Configuration& c);

bool is_fixed(const Configuration& c);

// Sum of weights over the fixed points; equals the right-hand side of the
// identity at the instance's concrete alpha, beta and symbolic x, y.
Polynomial fixed_point_sum(const ConfigParams& params,
                           std::uint64_t max_configs = kDefaultMaxConfigs);

struct AuditReport {
  ConfigParams instance;

  bool involutive = true;
  bool sign_reversal = true;
  bool weight_preserved = true;
  bool fixed_characterization = true;
  bool sums_match = true;

  std::uint64_t configurations = 0;
  std::uint64_t fixed_points = 0;
  std::uint64_t pairs = 0;

  Polynomial lhs, rhs, signed_total, fixed_sum;

  std::optional<Configuration> counterexample;  // first failure in stream order
  std::string failed_check;                     // empty when all pass

  bool all_passed() const {
    return involutive && sign_reversal && weight_preserved &&
           fixed_characterization && sums_match;
  }

  nlohmann::ordered_json to_json() const;
};

// Exhaustive audit of the involution over one instance: involutivity, sign
// reversal, weight preservation, the fixed-point characterization, the
// pair/fixed partition count, and the two weight-sum identities.
AuditReport audit(const ConfigParams& params,
                  std::uint64_t max_configs = kDefaultMaxConfigs);

}  // namespace munarini
