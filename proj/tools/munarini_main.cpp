// munarini: exact verification of a multinomial generalization of
// Munarini's identity, symbolically and by exhaustive audit of the
// sign-reversing involution on its weighted-word configuration space.

#include "munarini/configspace.hpp"
#include "munarini/identity.hpp"
#include "munarini/involution.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace munarini;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

IndexVector parse_index_csv(const std::string& csv) {
  IndexVector out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::vector<Rational> parse_rational_csv(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rational_from_string(item));
  return out;
}

struct Options {
  std::string n_csv;
  long long alpha = -1, beta = -1;  // -1 = not given
  bool symbolic_ab = false, symbolic_xy = false;
  std::string x_csv, y_csv, k_csv;
  std::string mode = "symbolic";
  long long trials = 1000;
  std::uint64_t seed = 0;
  long long range = 1000;
  std::uint64_t max_configs = kDefaultMaxConfigs;
  std::string format;
};

IdentityInstance make_instance(const Options& opt) {
  IdentityInstance inst = IdentityInstance::symbolic(parse_index_csv(opt.n_csv));
  if (!opt.symbolic_ab) {
    if (opt.alpha >= 0) inst.alpha = Integer(opt.alpha);
    if (opt.beta >= 0) inst.beta = Integer(opt.beta);
  }
  if (!opt.symbolic_xy) {
    if (!opt.x_csv.empty()) inst.x = parse_rational_csv(opt.x_csv);
    if (!opt.y_csv.empty()) inst.y = parse_rational_csv(opt.y_csv);
  }
  inst.check();
  return inst;
}

ConfigParams make_params(const Options& opt) {
  ConfigParams params;
  params.n = parse_index_csv(opt.n_csv);
  params.m = static_cast<int>(params.n.size());
  if (opt.alpha < 0 || opt.beta < 0)
    throw std::invalid_argument("--alpha and --beta are required");
  params.alpha = opt.alpha;
  params.beta = opt.beta;
  check_params(params);
  return params;
}

void emit(const ordered_json& j, const std::string& format) {
  if (format == "text") {
    std::cout << j.dump(2) << "\n";  // indented JSON doubles as the text form
  } else {
    std::cout << j.dump() << "\n";
  }
}

int cmd_verify(const Options& opt) {
  const IdentityInstance inst = make_instance(opt);
  VerifyReport report;
  if (opt.mode == "symbolic") {
    report = verify_symbolic(inst);
  } else if (opt.mode == "random") {
    report = verify_random(inst, opt.trials, opt.seed, opt.range);
  } else if (opt.mode == "enumerate") {
    if (!inst.alpha || !inst.beta)
      throw std::invalid_argument("--mode enumerate requires concrete --alpha/--beta");
    ConfigParams params;
    params.m = inst.m;
    params.n = inst.n;
    params.alpha = static_cast<long long>(*inst.alpha);
    params.beta = static_cast<long long>(*inst.beta);
    check_params(params);
    report.mode = "enumerate";
    const Polynomial signed_total = signed_sum(params, std::nullopt, opt.max_configs);
    const Polynomial fixed = fixed_point_sum(params, opt.max_configs);
    report.difference = signed_total - fixed;
    report.equal = report.difference.is_zero();
  } else {
    throw std::invalid_argument("unknown --mode: " + opt.mode);
  }
  emit(report.to_json(), opt.format.empty() ? "json" : opt.format);
  return report.equal ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(const Options& opt) {
  const ConfigParams params = make_params(opt);
  std::optional<IndexVector> k;
  if (!opt.k_csv.empty()) k = parse_index_csv(opt.k_csv);
  const std::string format = opt.format.empty() ? "jsonl" : opt.format;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    enumerate(params, k, opt.max_configs,
              [&](const Configuration& c) { arr.push_back(config_to_json(c)); });
    std::cout << arr.dump() << "\n";
  } else {
    enumerate(params, k, opt.max_configs, [&](const Configuration& c) {
      std::cout << config_to_json(c).dump() << "\n";
    });
  }
  return kExitOk;
}

int cmd_count(const Options& opt) {
  const ConfigParams params = make_params(opt);
  std::optional<IndexVector> k;
  if (!opt.k_csv.empty()) k = parse_index_csv(opt.k_csv);
  const Integer total = count(params, k);
  if (opt.format == "json") {
    ordered_json j;
    j["count"] = to_string(total);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_string(total) << "\n";
  }
  return kExitOk;
}

int cmd_audit(const Options& opt) {
  const ConfigParams params = make_params(opt);
  const AuditReport report = audit(params, opt.max_configs);
  emit(report.to_json(), opt.format.empty() ? "json" : opt.format);
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_fixed_points(const Options& opt) {
  const ConfigParams params = make_params(opt);
  const Polynomial sum = fixed_point_sum(params, opt.max_configs);
  IdentityInstance inst = IdentityInstance::symbolic(params.n);
  inst.alpha = Integer(params.alpha);
  inst.beta = Integer(params.beta);
  const Polynomial rhs = rhs_eq3(inst);
  ordered_json j;
  j["fixed_sum"] = sum.str();
  j["rhs"] = rhs.str();
  j["equal"] = sum == rhs;
  emit(j, opt.format.empty() ? "json" : opt.format);
  return sum == rhs ? kExitOk : kExitCheckFailed;
}

int cmd_reduce(const Options& opt) {
  const IndexVector n = parse_index_csv(opt.n_csv);
  if (n.size() != 1) throw std::invalid_argument("reduce takes a scalar --n");
  const VerifyReport r32 = check_reduction_eq3_to_eq2(n[0]);
  const VerifyReport r21 = check_reduction_eq2_to_eq1(n[0]);
  ordered_json j;
  j["eq3_to_eq2"] = r32.to_json();
  j["eq2_to_eq1"] = r21.to_json();
  emit(j, opt.format.empty() ? "json" : opt.format);
  return (r32.equal && r21.equal) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for a multinomial Munarini-type identity"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_n = true) {
    auto* n_opt = sub->add_option("--n", opt.n_csv, "comma-separated nonnegative entries of n");
    if (needs_n) n_opt->required();
    sub->add_option("--alpha", opt.alpha, "concrete alpha");
    sub->add_option("--beta", opt.beta, "concrete beta");
    sub->add_option("--max-configs", opt.max_configs, "enumeration cap")
        ->default_val(kDefaultMaxConfigs);
    sub->add_option("--format", opt.format, "text|json|jsonl");
  };

  auto* verify = app.add_subcommand("verify", "check the identity for one instance");
  add_common(verify);
  verify->add_flag("--symbolic-ab", opt.symbolic_ab, "leave alpha, beta symbolic");
  verify->add_flag("--symbolic-xy", opt.symbolic_xy, "leave x, y symbolic (default)");
  verify->add_option("--x", opt.x_csv, "concrete x values (csv rationals)");
  verify->add_option("--y", opt.y_csv, "concrete y values (csv rationals)");
  verify->add_option("--mode", opt.mode, "symbolic|random|enumerate")->default_val("symbolic");
  verify->add_option("--trials", opt.trials)->default_val(1000);
  verify->add_option("--seed", opt.seed)->default_val(0);
  verify->add_option("--range", opt.range)->default_val(1000);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "stream the configuration space");
  add_common(enumerate_cmd);
  enumerate_cmd->add_option("--k", opt.k_csv, "restrict to one k vector (csv)");

  auto* count_cmd = app.add_subcommand("count", "closed-form cardinality");
  add_common(count_cmd);
  count_cmd->add_option("--k", opt.k_csv, "restrict to one k vector (csv)");

  auto* audit_cmd = app.add_subcommand("audit", "exhaustive involution audit");
  add_common(audit_cmd);

  auto* fixed_cmd = app.add_subcommand("fixed-points", "fixed-point weight sum vs rhs");
  add_common(fixed_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "specialization chain checks");
  add_common(reduce_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (enumerate_cmd->parsed()) return cmd_enumerate(opt);
    if (count_cmd->parsed()) return cmd_count(opt);
    if (audit_cmd->parsed()) return cmd_audit(opt);
    if (fixed_cmd->parsed()) return cmd_fixed_points(opt);
    if (reduce_cmd->parsed()) return cmd_reduce(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
