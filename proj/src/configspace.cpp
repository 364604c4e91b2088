#include "munarini/configspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace munarini {

void check_params(const ConfigParams& params, bool allow_zero_alpha) {
  if (params.m < 1) throw std::invalid_argument("params: m must be positive");
  if (static_cast<int>(params.n.size()) != params.m)
    throw std::invalid_argument("params: n must have length m");
  if (!in_natural_cone(params.n))
    throw std::invalid_argument("params: n entries must be nonnegative");
  if (params.beta < 1) throw std::invalid_argument("params: beta must be >= 1");
  const long long min_alpha = allow_zero_alpha ? 0 : 1;
  if (params.alpha < min_alpha)
    throw std::invalid_argument("params: alpha must be >= " + std::to_string(min_alpha));
  if (params.beta < params.alpha)
    throw std::invalid_argument("params: beta must be >= alpha");
}

bool Configuration::is_circled(long long pos) const {
  return std::binary_search(circled.begin(), circled.end(), pos);
}

std::vector<std::string> validate(const Configuration& c) {
  std::vector<std::string> violations;
  const long long L = c.params.word_length();
  const long long F = c.params.first_segment();
  if (static_cast<long long>(c.letters.size()) != L ||
      static_cast<long long>(c.marks.size()) != L) {
    violations.push_back("letters/marks length differs from beta + |n|");
    return violations;
  }
  // letter multiplicities: beta copies of 'a', n_i copies of b_i
  std::vector<long long> counts(static_cast<std::size_t>(c.params.m) + 1, 0);
  for (long long p = 1; p <= L; ++p) {
    const int letter = c.letters[p - 1];
    if (letter < 0 || letter > c.params.m) {
      violations.push_back("letter index out of range at position " + std::to_string(p));
      continue;
    }
    ++counts[letter];
    const Configuration::Mark mark = c.marks[p - 1];
    if (letter == 0 ? mark != Configuration::Mark::One
                    : mark == Configuration::Mark::One)
      violations.push_back("mark incompatible with letter at position " + std::to_string(p));
  }
  if (counts[0] != c.params.beta)
    violations.push_back("count of letter a differs from beta");
  for (int i = 1; i <= c.params.m; ++i)
    if (counts[i] != c.params.n[i - 1])
      violations.push_back("count of letter b" + std::to_string(i) + " differs from n" +
                           std::to_string(i));
  if (!std::is_sorted(c.circled.begin(), c.circled.end()) ||
      std::adjacent_find(c.circled.begin(), c.circled.end()) != c.circled.end())
    violations.push_back("circled positions not strictly ascending");
  for (long long p : c.circled) {
    if (p < 1 || p > L) {
      violations.push_back("circled position " + std::to_string(p) + " out of range");
      continue;
    }
    if (p > F)
      violations.push_back("circled outside first segment at position " + std::to_string(p));
    if (c.letters[p - 1] == 0)
      violations.push_back("circled position " + std::to_string(p) + " holds letter a");
    else if (c.marks[p - 1] != Configuration::Mark::Y)
      violations.push_back("circled position " + std::to_string(p) + " not weighted y");
  }
  return violations;
}

void require_valid(const Configuration& c) {
  const auto violations = validate(c);
  if (!violations.empty())
    throw std::invalid_argument("invalid configuration: " + violations.front());
}

IndexVector k_of(const Configuration& c) {
  require_valid(c);
  IndexVector k = c.params.n;
  for (long long p : c.circled) --k[c.letters[p - 1] - 1];
  return k;
}

int sign(const Configuration& c) {
  require_valid(c);
  return (c.circled.size() % 2 == 0) ? 1 : -1;
}

namespace {

ExponentMap weight_exponents(const Configuration& c) {
  std::map<VariableId, int> exps;
  for (std::size_t p = 0; p < c.letters.size(); ++p) {
    const int letter = c.letters[p];
    if (letter == 0) continue;
    const VariableId v = c.marks[p] == Configuration::Mark::X ? VariableId::x(letter)
                                                              : VariableId::y(letter);
    ++exps[v];
  }
  return ExponentMap(exps.begin(), exps.end());
}

// Visits all size-r index subsets of `pool` in lexicographic order.
void for_each_combination(const std::vector<long long>& pool, std::size_t r,
                          const std::function<void(const std::vector<long long>&)>& fn) {
  std::vector<long long> chosen;
  chosen.reserve(r);
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (chosen.size() == r) {
      fn(chosen);
      return;
    }
    const std::size_t need = r - chosen.size();
    for (std::size_t i = start; i + need <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

void for_each_k_lex(const IndexVector& n,
                    const std::function<void(const IndexVector&)>& fn) {
  IndexVector k(n.size(), 0);
  while (true) {
    fn(k);
    int i = static_cast<int>(n.size()) - 1;
    while (i >= 0 && k[i] == n[i]) k[i--] = 0;
    if (i < 0) return;
    ++k[i];
  }
}

}  // namespace

void enumerate(const ConfigParams& params,
               const std::optional<IndexVector>& k_filter,
               std::uint64_t max_configs,
               const std::function<void(const Configuration&)>& visit,
               bool allow_zero_alpha) {
  check_params(params, allow_zero_alpha);
  if (k_filter) {
    if (static_cast<int>(k_filter->size()) != params.m)
      throw std::invalid_argument("k filter: wrong length");
    for (int i = 0; i < params.m; ++i)
      if ((*k_filter)[i] < 0 || (*k_filter)[i] > params.n[i])
        throw std::invalid_argument("k filter: entry out of range");
  }
  const long long L = params.word_length();
  const long long F = params.first_segment();
  std::uint64_t emitted = 0;

  Configuration c;
  c.params = params;
  c.letters.assign(static_cast<std::size_t>(L), 0);
  c.marks.assign(static_cast<std::size_t>(L), Configuration::Mark::One);

  std::vector<long long> first_segment_positions;
  for (long long p = 1; p <= F; ++p) first_segment_positions.push_back(p);

  for_each_k_lex(params.n, [&](const IndexVector& k) {
    if (k_filter && k != *k_filter) return;
    IndexVector circled_counts(params.m);
    for (int i = 0; i < params.m; ++i) circled_counts[i] = params.n[i] - k[i];

    // circled placement: per letter type, a lex subset of the positions
    // still free in the first segment
    std::vector<std::pair<long long, int>> circled_assignment;  // (pos, letter)
    std::function<void(int, const std::vector<long long>&)> place_circled =
        [&](int letter, const std::vector<long long>& avail) {
          if (letter > params.m) {
            // uncircled multiset {a^beta, b1^k1, ..., bm^km} fills every
            // remaining position of the whole word, lex over letter words
            std::vector<long long> rest;
            std::set<long long> taken;
            for (const auto& [pos, l] : circled_assignment) taken.insert(pos);
            for (long long p = 1; p <= L; ++p)
              if (!taken.count(p)) rest.push_back(p);
            std::vector<int> word;
            word.insert(word.end(), static_cast<std::size_t>(params.beta), 0);
            for (int i = 1; i <= params.m; ++i)
              word.insert(word.end(), static_cast<std::size_t>(k[i - 1]), i);
            do {
              for (const auto& [pos, l] : circled_assignment) {
                c.letters[pos - 1] = l;
                c.marks[pos - 1] = Configuration::Mark::Y;
              }
              std::vector<long long> marked_positions;  // uncircled b's
              for (std::size_t j = 0; j < rest.size(); ++j) {
                const long long pos = rest[j];
                c.letters[pos - 1] = word[j];
                c.marks[pos - 1] = word[j] == 0 ? Configuration::Mark::One
                                                : Configuration::Mark::X;
                if (word[j] != 0) marked_positions.push_back(pos);
              }
              c.circled.clear();
              for (const auto& [pos, l] : circled_assignment) c.circled.push_back(pos);
              std::sort(c.circled.begin(), c.circled.end());
              // mark choices: binary counter, earlier position more
              // significant, X before Y
              const std::size_t u = marked_positions.size();
              for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask) {
                for (std::size_t j = 0; j < u; ++j)
                  c.marks[marked_positions[j] - 1] =
                      (mask >> (u - 1 - j)) & 1 ? Configuration::Mark::Y
                                                : Configuration::Mark::X;
                if (++emitted > max_configs)
                  throw CapExceeded("enumeration exceeds cap of " +
                                    std::to_string(max_configs) + " configurations");
                visit(c);
              }
            } while (std::next_permutation(word.begin(), word.end()));
            return;
          }
          for_each_combination(
              avail, static_cast<std::size_t>(circled_counts[letter - 1]),
              [&](const std::vector<long long>& chosen) {
                std::vector<long long> remaining;
                std::set_difference(avail.begin(), avail.end(), chosen.begin(),
                                    chosen.end(), std::back_inserter(remaining));
                for (long long pos : chosen) circled_assignment.emplace_back(pos, letter);
                place_circled(letter + 1, remaining);
                circled_assignment.resize(circled_assignment.size() - chosen.size());
              });
        };
    place_circled(1, first_segment_positions);
  });
}

Integer count(const ConfigParams& params, const std::optional<IndexVector>& k) {
  check_params(params);
  const long long F = params.first_segment();
  Integer total = 0;
  auto per_k = [&](const IndexVector& kv) {
    IndexVector nk(params.m);
    for (int i = 0; i < params.m; ++i) nk[i] = params.n[i] - kv[i];
    const long long abs_k = norm(kv);
    total += multinomial(F, nk) * multinomial(params.beta + abs_k, kv) *
             boost::multiprecision::pow(Integer(2), static_cast<unsigned>(abs_k));
  };
  if (k) {
    if (static_cast<int>(k->size()) != params.m)
      throw std::invalid_argument("k filter: wrong length");
    per_k(*k);
  } else {
    for_each_k_lex(params.n, per_k);
  }
  return total;
}

Polynomial signed_sum(const ConfigParams& params,
                      const std::optional<IndexVector>& k,
                      std::uint64_t max_configs) {
  Polynomial sum;
  enumerate(params, k, max_configs, [&](const Configuration& c) {
    // per-k sums carry a uniform sign and are reported unsigned
    const Rational coeff = (!k && c.circled.size() % 2 == 1) ? Rational(-1) : Rational(1);
    sum.add_term(weight_exponents(c), coeff);
  });
  return sum;
}

Polynomial weight(const Configuration& c) {
  require_valid(c);
  Polynomial w;
  w.add_term(weight_exponents(c), Rational(1));
  return w;
}

nlohmann::ordered_json config_to_json(const Configuration& c) {
  nlohmann::ordered_json j;
  j["m"] = c.params.m;
  j["n"] = c.params.n;
  j["alpha"] = c.params.alpha;
  j["beta"] = c.params.beta;
  nlohmann::ordered_json letters = nlohmann::ordered_json::array();
  nlohmann::ordered_json marks = nlohmann::ordered_json::array();
  for (std::size_t p = 0; p < c.letters.size(); ++p) {
    const int letter = c.letters[p];
    letters.push_back(letter == 0 ? "a" : "b" + std::to_string(letter));
    switch (c.marks[p]) {
      case Configuration::Mark::One: marks.push_back("1"); break;
      case Configuration::Mark::X: marks.push_back("x" + std::to_string(letter)); break;
      case Configuration::Mark::Y: marks.push_back("y" + std::to_string(letter)); break;
    }
  }
  j["letters"] = letters;
  j["marks"] = marks;
  j["circled"] = c.circled;
  return j;
}

Configuration config_from_json(const nlohmann::ordered_json& j) {
  Configuration c;
  c.params.m = j.at("m").get<int>();
  c.params.n = j.at("n").get<IndexVector>();
  c.params.alpha = j.at("alpha").get<long long>();
  c.params.beta = j.at("beta").get<long long>();
  for (const auto& item : j.at("letters")) {
    const std::string s = item.get<std::string>();
    if (s == "a") {
      c.letters.push_back(0);
    } else if (s.size() >= 2 && s[0] == 'b') {
      c.letters.push_back(std::stoi(s.substr(1)));
    } else {
      throw std::invalid_argument("bad letter token: " + s);
    }
  }
  std::size_t p = 0;
  for (const auto& item : j.at("marks")) {
    const std::string s = item.get<std::string>();
    if (p >= c.letters.size()) throw std::invalid_argument("marks longer than letters");
    if (s == "1") {
      c.marks.push_back(Configuration::Mark::One);
    } else if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'y')) {
      const int idx = std::stoi(s.substr(1));
      // an x/y mark on letter 'a' is representable and left for validate();
      // an index clashing with a b-letter's own index is not
      if (c.letters[p] != 0 && idx != c.letters[p])
        throw std::invalid_argument("mark index clashes with letter at position " +
                                    std::to_string(p + 1));
      c.marks.push_back(s[0] == 'x' ? Configuration::Mark::X : Configuration::Mark::Y);
    } else {
      throw std::invalid_argument("bad mark token: " + s);
    }
    ++p;
  }
  c.circled = j.at("circled").get<std::vector<long long>>();
  std::sort(c.circled.begin(), c.circled.end());
  return c;
}

}  // namespace munarini
