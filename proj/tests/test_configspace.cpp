#include "munarini/configspace.hpp"

#include "munarini/identity.hpp"

#include <doctest.h>

#include <set>

using namespace munarini;
using Mark = Configuration::Mark;

namespace {

Polynomial C(long long v) { return Polynomial::constant(Rational(v)); }
Polynomial V(VariableId v) { return Polynomial::variable(v); }

ConfigParams figure_params() {
  ConfigParams p;
  p.m = 2;
  p.n = {2, 2};
  p.alpha = 2;
  p.beta = 4;
  return p;
}

// the worked example instance: word a b2 a b1 b2 a b1 a with one circle
Configuration figure_left() {
  Configuration c;
  c.params = figure_params();
  c.letters = {0, 2, 0, 1, 2, 0, 1, 0};
  c.marks = {Mark::One, Mark::X, Mark::One, Mark::Y,
             Mark::Y, Mark::One, Mark::X, Mark::One};
  c.circled = {5};
  return c;
}

Configuration figure_right() {
  Configuration c = figure_left();
  c.circled = {4, 5};
  return c;
}

ConfigParams tiny_params() {
  ConfigParams p;
  p.m = 1;
  p.n = {1};
  p.alpha = 1;
  p.beta = 1;
  return p;
}

}  // namespace

TEST_CASE("params validation") {
  CHECK_NOTHROW(check_params(figure_params()));
  ConfigParams p = figure_params();
  p.alpha = 5;  // beta < alpha
  CHECK_THROWS_AS(check_params(p), std::invalid_argument);
  p = figure_params();
  p.alpha = 0;
  CHECK_THROWS_AS(check_params(p), std::invalid_argument);
  CHECK_NOTHROW(check_params(p, /*allow_zero_alpha=*/true));
  p = figure_params();
  p.n = {2, -1};
  CHECK_THROWS_AS(check_params(p), std::invalid_argument);
  CHECK(figure_params().word_length() == 8);
  CHECK(figure_params().first_segment() == 6);
}

TEST_CASE("validate on the worked example") {
  CHECK(validate(figure_left()).empty());
  CHECK(validate(figure_right()).empty());

  Configuration bad = figure_left();
  bad.circled = {7};  // past the first segment (F = 6)
  const auto violations = validate(bad);
  REQUIRE_FALSE(violations.empty());
  bool found = false;
  for (const auto& v : violations)
    if (v.find("circled outside first segment") != std::string::npos) found = true;
  CHECK(found);

  bad = figure_left();
  bad.marks[0] = Mark::X;  // an 'a' weighted x
  REQUIRE_FALSE(validate(bad).empty());
  CHECK(validate(bad).front().find("mark incompatible") != std::string::npos);
}

TEST_CASE("k_of") {
  CHECK(k_of(figure_left()) == IndexVector{2, 1});
  CHECK(k_of(figure_right()) == IndexVector{1, 1});
  Configuration c = figure_left();
  c.circled = {};
  c.marks[4] = Mark::Y;  // still a valid uncircled y
  CHECK(k_of(c) == c.params.n);
}

TEST_CASE("sign") {
  CHECK(sign(figure_left()) == -1);
  CHECK(sign(figure_right()) == +1);
  Configuration c = figure_left();
  c.circled = {};
  CHECK(sign(c) == +1);
}

TEST_CASE("weight") {
  const Polynomial expected = V(VariableId::x(1)) * V(VariableId::x(2)) *
                              V(VariableId::y(1)) * V(VariableId::y(2));
  CHECK(weight(figure_left()) == expected);
  CHECK(weight(figure_right()) == expected);  // circles do not change weight

  Configuration word;  // [b1 weighted y, a] with alpha = beta = 1
  word.params = tiny_params();
  word.letters = {1, 0};
  word.marks = {Mark::Y, Mark::One};
  word.circled = {};
  CHECK(weight(word) == V(VariableId::y(1)));

  Configuration all_a;
  all_a.params = {1, {0}, 1, 2};
  all_a.letters = {0, 0};
  all_a.marks = {Mark::One, Mark::One};
  CHECK(weight(all_a) == C(1));
}

TEST_CASE("enumerate the 5-element space") {
  std::vector<Configuration> configs;
  enumerate(tiny_params(), std::nullopt, kDefaultMaxConfigs,
            [&](const Configuration& c) { configs.push_back(c); });
  REQUIRE(configs.size() == 5);
  // k = 0 first: the single circled word, then the four uncircled ones
  CHECK(configs[0].letters == std::vector<int>{1, 0});
  CHECK(configs[0].circled == std::vector<long long>{1});
  CHECK(configs[0].marks[0] == Mark::Y);
  for (const auto& c : configs) {
    CHECK(validate(c).empty());
    CHECK(sign(c) == ((norm(c.params.n) - norm(k_of(c))) % 2 == 0 ? 1 : -1));
  }
  std::set<std::string> dumps;
  for (const auto& c : configs) dumps.insert(config_to_json(c).dump());
  CHECK(dumps.size() == 5);  // no duplicates
}

TEST_CASE("n = 0 has exactly one configuration") {
  ConfigParams p{1, {0}, 1, 2};
  std::vector<Configuration> configs;
  enumerate(p, std::nullopt, kDefaultMaxConfigs,
            [&](const Configuration& c) { configs.push_back(c); });
  REQUIRE(configs.size() == 1);
  CHECK(configs[0].letters == std::vector<int>{0, 0});
  CHECK(configs[0].circled.empty());
  CHECK(count(p) == 1);
}

TEST_CASE("count matches enumeration") {
  for (ConfigParams p : {tiny_params(), ConfigParams{1, {2}, 1, 2},
                         ConfigParams{2, {1, 1}, 1, 2}, ConfigParams{1, {3}, 2, 3}}) {
    std::uint64_t seen = 0;
    std::set<std::string> dumps;
    enumerate(p, std::nullopt, kDefaultMaxConfigs, [&](const Configuration& c) {
      ++seen;
      dumps.insert(config_to_json(c).dump());
      CHECK(validate(c).empty());
    });
    CHECK(count(p) == seen);
    CHECK(dumps.size() == seen);  // stream has no duplicates
  }
  CHECK(count(tiny_params()) == 5);
}

TEST_CASE("figure instance counts") {
  const ConfigParams p = figure_params();
  CHECK(count(p) == 23490);
  const IndexVector k{2, 1};
  CHECK(count(p, k) == 5040);
  std::uint64_t seen = 0;
  enumerate(p, k, kDefaultMaxConfigs, [&](const Configuration& c) {
    ++seen;
    CHECK(k_of(c) == k);
  });
  CHECK(seen == 5040);
}

TEST_CASE("signed sums") {
  // all k: (x+y) + (x+y) - y = 2x + y
  CHECK(signed_sum(tiny_params()) ==
        C(2) * V(VariableId::x(1)) + V(VariableId::y(1)));
  // k fixed to n: the unsigned per-k sum 2(x+y)
  CHECK(signed_sum(tiny_params(), IndexVector{1}) ==
        C(2) * (V(VariableId::x(1)) + V(VariableId::y(1))));
  CHECK(signed_sum({1, {0}, 1, 2}) == C(1));
}

TEST_CASE("per-k sums match the closed form") {
  for (ConfigParams p : {tiny_params(), ConfigParams{1, {2}, 1, 2},
                         ConfigParams{2, {1, 1}, 1, 2}}) {
    const long long F = p.first_segment();
    IndexVector k(p.m, 0);
    while (true) {
      IndexVector nk(p.m);
      for (int i = 0; i < p.m; ++i) nk[i] = p.n[i] - k[i];
      Polynomial expected =
          C(1) * Polynomial::constant(Rational(multinomial(F, nk) *
                                               multinomial(p.beta + norm(k), k)));
      for (int i = 1; i <= p.m; ++i) {
        expected *= (V(VariableId::x(i)) + V(VariableId::y(i)))
                        .pow(static_cast<unsigned long long>(k[i - 1]));
        expected *= V(VariableId::y(i)).pow(static_cast<unsigned long long>(nk[i - 1]));
      }
      CHECK(signed_sum(p, k) == expected);
      int i = p.m - 1;
      while (i >= 0 && k[i] == p.n[i]) k[i--] = 0;
      if (i < 0) break;
      ++k[i];
    }
  }
}

TEST_CASE("total signed sum equals the identity's signed side") {
  for (ConfigParams p : {tiny_params(), ConfigParams{1, {2}, 1, 2},
                         ConfigParams{2, {1, 1}, 1, 2}}) {
    IdentityInstance inst = IdentityInstance::symbolic(p.n);
    inst.alpha = Integer(p.alpha);
    inst.beta = Integer(p.beta);
    CHECK(signed_sum(p) == lhs_eq3(inst));
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(
      enumerate(figure_params(), std::nullopt, 100, [](const Configuration&) {}),
      CapExceeded);
}

TEST_CASE("json round trip and ingestion rejection") {
  const Configuration c = figure_left();
  const auto j = config_to_json(c);
  CHECK(j["letters"][1] == "b2");
  CHECK(j["marks"][3] == "y1");
  CHECK(j["circled"][0] == 5);
  const Configuration back = config_from_json(j);
  CHECK(back == c);
  CHECK(validate(back).empty());

  auto bad = j;
  bad["circled"] = {7};
  CHECK_FALSE(validate(config_from_json(bad)).empty());

  bad = j;
  bad["marks"][3] = "y2";  // index clashes with the letter b1
  CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
}
