#include "munarini/configspace.hpp"
#include "munarini/identity.hpp"
#include "munarini/involution.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace munarini;

namespace {

Integer integer_from_py(const py::object& obj) {
  return Integer(py::str(obj).cast<std::string>());
}

py::object integer_to_py(const Integer& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<Rational> rationals_from_strings(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(rational_from_string(s));
  return out;
}

IdentityInstance make_instance(const IndexVector& n, const py::object& alpha,
                               const py::object& beta,
                               const std::optional<std::vector<std::string>>& x,
                               const std::optional<std::vector<std::string>>& y) {
  IdentityInstance inst = IdentityInstance::symbolic(n);
  if (!alpha.is_none()) inst.alpha = integer_from_py(alpha);
  if (!beta.is_none()) inst.beta = integer_from_py(beta);
  if (x) inst.x = rationals_from_strings(*x);
  if (y) inst.y = rationals_from_strings(*y);
  inst.check();
  return inst;
}

ConfigParams make_params(const IndexVector& n, long long alpha, long long beta) {
  ConfigParams params;
  params.n = n;
  params.m = static_cast<int>(n.size());
  params.alpha = alpha;
  params.beta = beta;
  check_params(params);
  return params;
}

}  // namespace

PYBIND11_MODULE(_munarini, m) {
  m.doc() = "exact workbench for a multinomial Munarini-type identity";

  m.def("factorial",
        [](unsigned long long t) { return integer_to_py(factorial(t)); }, py::arg("t"));
  m.def(
      "falling_factorial",
      [](const py::object& x, unsigned long long t) {
        return integer_to_py(falling_factorial(integer_from_py(x), t));
      },
      py::arg("x"), py::arg("t"));
  m.def(
      "multinomial",
      [](const py::object& x, const IndexVector& n) {
        return integer_to_py(multinomial(integer_from_py(x), n));
      },
      py::arg("x"), py::arg("n"));

  m.def(
      "eq3_lhs",
      [](const IndexVector& n, const py::object& alpha, const py::object& beta,
         const std::optional<std::vector<std::string>>& x,
         const std::optional<std::vector<std::string>>& y) {
        return lhs_eq3(make_instance(n, alpha, beta, x, y)).str();
      },
      py::arg("n"), py::arg("alpha") = py::none(), py::arg("beta") = py::none(),
      py::arg("x") = py::none(), py::arg("y") = py::none(),
      "canonical string of the signed summation side");
  m.def(
      "eq3_rhs",
      [](const IndexVector& n, const py::object& alpha, const py::object& beta,
         const std::optional<std::vector<std::string>>& x,
         const std::optional<std::vector<std::string>>& y) {
        return rhs_eq3(make_instance(n, alpha, beta, x, y)).str();
      },
      py::arg("n"), py::arg("alpha") = py::none(), py::arg("beta") = py::none(),
      py::arg("x") = py::none(), py::arg("y") = py::none(),
      "canonical string of the unsigned summation side");

  m.def(
      "verify_symbolic",
      [](const IndexVector& n, const py::object& alpha, const py::object& beta,
         const std::optional<std::vector<std::string>>& x,
         const std::optional<std::vector<std::string>>& y) {
        return json_to_py(verify_symbolic(make_instance(n, alpha, beta, x, y)).to_json());
      },
      py::arg("n"), py::arg("alpha") = py::none(), py::arg("beta") = py::none(),
      py::arg("x") = py::none(), py::arg("y") = py::none());
  m.def(
      "verify_random",
      [](const IndexVector& n, long long trials, std::uint64_t seed, long long range,
         const py::object& alpha, const py::object& beta,
         const std::optional<std::vector<std::string>>& x,
         const std::optional<std::vector<std::string>>& y) {
        return json_to_py(
            verify_random(make_instance(n, alpha, beta, x, y), trials, seed, range)
                .to_json());
      },
      py::arg("n"), py::arg("trials") = 1000, py::arg("seed") = 0,
      py::arg("range") = 1000, py::arg("alpha") = py::none(),
      py::arg("beta") = py::none(), py::arg("x") = py::none(),
      py::arg("y") = py::none());

  m.def(
      "count",
      [](const IndexVector& n, long long alpha, long long beta,
         const std::optional<IndexVector>& k) {
        return integer_to_py(count(make_params(n, alpha, beta), k));
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("k") = py::none());
  m.def(
      "enumerate_configs",
      [](const IndexVector& n, long long alpha, long long beta,
         const std::optional<IndexVector>& k, std::uint64_t max_configs) {
        py::list out;
        enumerate(make_params(n, alpha, beta), k, max_configs,
                  [&](const Configuration& c) { out.append(json_to_py(config_to_json(c))); });
        return out;
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("k") = py::none(),
      py::arg("max_configs") = kDefaultMaxConfigs);
  m.def(
      "signed_sum",
      [](const IndexVector& n, long long alpha, long long beta,
         const std::optional<IndexVector>& k, std::uint64_t max_configs) {
        return signed_sum(make_params(n, alpha, beta), k, max_configs).str();
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("k") = py::none(),
      py::arg("max_configs") = kDefaultMaxConfigs);
  m.def(
      "fixed_point_sum",
      [](const IndexVector& n, long long alpha, long long beta,
         std::uint64_t max_configs) {
        return fixed_point_sum(make_params(n, alpha, beta), max_configs).str();
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"),
      py::arg("max_configs") = kDefaultMaxConfigs);
  m.def(
      "audit",
      [](const IndexVector& n, long long alpha, long long beta,
         std::uint64_t max_configs) {
        return json_to_py(audit(make_params(n, alpha, beta), max_configs).to_json());
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"),
      py::arg("max_configs") = kDefaultMaxConfigs);

  m.def(
      "validate_config",
      [](const py::object& config) {
        const std::string dumped =
            py::module_::import("json").attr("dumps")(config).cast<std::string>();
        return validate(config_from_json(nlohmann::ordered_json::parse(dumped)));
      },
      py::arg("config"), "returns the list of violated invariants; empty = valid");

  m.def(
      "reduce_checks",
      [](long long n) {
        nlohmann::ordered_json j;
        j["eq3_to_eq2"] = check_reduction_eq3_to_eq2(n).to_json();
        j["eq2_to_eq1"] = check_reduction_eq2_to_eq1(n).to_json();
        return json_to_py(j);
      },
      py::arg("n"));
}
