#pragma once

#include "munarini/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace munarini {

// Thrown when an enumeration would exceed the configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMaxConfigs = 10'000'000;

// Parameters of one configuration space over the alphabet {a, b1..bm}:
// words of length beta + |n| with beta copies of 'a' and n_i copies of b_i.
struct ConfigParams {
  int m = 1;
  IndexVector n;        // entries >= 0, length m
  long long alpha = 1;  // 0 allowed only behind the permissive flag
  long long beta = 1;

  long long word_length() const { return beta + norm(n); }
  // Circles may only appear in positions 1..first_segment().
  long long first_segment() const { return beta - alpha + norm(n); }
};

// Throws std::invalid_argument on malformed parameters; beta < alpha is
// always rejected, alpha = 0 only without allow_zero_alpha.
void check_params(const ConfigParams& params, bool allow_zero_alpha = false);

// A weighted word with per-position marks and a set of circled positions.
// Positions are 1-based throughout, matching the JSON interface.
struct Configuration {
  enum class Mark : std::uint8_t { One, X, Y };

  ConfigParams params;
  std::vector<int> letters;          // 0 = 'a', i >= 1 = b_i; length L
  std::vector<Mark> marks;           // index of X/Y implied by the letter
  std::vector<long long> circled;    // sorted ascending, 1-based

  bool is_circled(long long pos) const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.letters == b.letters && a.marks == b.marks && a.circled == b.circled;
  }
};

// Returns every violated invariant as a human-readable message with
// position indices; empty means valid.
std::vector<std::string> validate(const Configuration& c);

// Throws std::invalid_argument if c fails validate.
void require_valid(const Configuration& c);

// k_i = n_i - (number of circled b_i positions).
IndexVector k_of(const Configuration& c);

// (-1)^(number of circles) = (-1)^(|n| - |k|).
int sign(const Configuration& c);

// Product of position weights: a single monomial in the x/y variables with
// coefficient 1 (letter 'a' contributes 1, b_i contributes x_i or y_i).
Polynomial weight(const Configuration& c);

// Streams every valid configuration exactly once in a fixed deterministic
// order: ascending k (lex), circled placement, uncircled letter placement,
// then mark choices with X before Y. Throws CapExceeded past max_configs.
void enumerate(const ConfigParams& params,
               const std::optional<IndexVector>& k_filter,
               std::uint64_t max_configs,
               const std::function<void(const Configuration&)>& visit,
               bool allow_zero_alpha = false);

// Exact cardinality by the closed form
//   sum_k multinomial(F, n-k) * multinomial(beta+|k|, k) * 2^|k|,
// no enumeration.
Integer count(const ConfigParams& params,
              const std::optional<IndexVector>& k = std::nullopt);

// Sum over configurations of sign * weight; with k fixed, the per-k sum is
// uniform in sign and is returned unsigned.
Polynomial signed_sum(const ConfigParams& params,
                      const std::optional<IndexVector>& k = std::nullopt,
                      std::uint64_t max_configs = kDefaultMaxConfigs);

nlohmann::ordered_json config_to_json(const Configuration& c);
Configuration config_from_json(const nlohmann::ordered_json& j);

}  // namespace munarini
