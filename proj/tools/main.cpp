// kdfab command-line tool: group inspection, pure-state enumeration, KD
// symbols, positivity and hull-membership checks, chain decompositions, and
// the bundled Z6 / Z2xZ2 reference verification suites.

#include <complex>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdfab/json_io.hpp"

using json = nlohmann::json;
using namespace kdfab;
namespace io = kdfab::jsonio;

namespace {

// 0 ok / in hull; 2 usage, parse, or shape error; 3 KD-positive but outside
// the pure hull; 4 not KD-positive; 5 not a state; 6 decomposition
// infeasible under --lp; 1 failed verification checks.
enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kOutsideHull = 3,
  kNotKdPositive = 4,
  kNotState = 5,
  kDecompositionInfeasible = 6,
};

int max_order_from_env() {
  const char* env = std::getenv("KD_ABELIAN_MAX_ORDER");
  if (env == nullptr) return Group::kDefaultMaxOrder;
  try {
    const int v = std::stoi(env);
    if (v < 1) throw std::invalid_argument("nonpositive");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("KD_ABELIAN_MAX_ORDER is not a positive integer");
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    io::write_file(out_path, text + "\n");
  }
}

std::string orders_string(const Group& g) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < g.orders().size(); ++i) {
    if (i) os << ",";
    os << g.orders()[i];
  }
  os << "]";
  return os.str();
}

json element_json(const GroupElement& e) { return json(e.coords); }

json subgroup_json(const Group& g, const Subgroup& h) {
  json elements = json::array();
  for (const auto& e : h.elements) elements.push_back(element_json(e));
  json generators = json::array();
  for (const auto& e : h.generators) generators.push_back(element_json(e));
  const Subgroup hp = annihilator(g, h);
  json ann_generators = json::array();
  for (const auto& e : hp.generators) ann_generators.push_back(element_json(e));
  return json{{"order", h.order()},
              {"elements", elements},
              {"generators", generators},
              {"annihilator", json{{"order", hp.order()}, {"generators", ann_generators}}}};
}

Group group_from_orders(const std::vector<int>& orders) {
  if (orders.empty()) throw std::runtime_error("no group orders given");
  return make_group(orders, max_order_from_env());
}

Operator load_operator(const std::string& path, const std::vector<int>& expected_orders) {
  const Operator op = io::operator_from_json(io::read_file(path), max_order_from_env());
  if (!expected_orders.empty() && op.group().orders() != expected_orders) {
    throw std::runtime_error("operator group does not match --orders");
  }
  return op;
}

int cmd_group_info(const std::vector<int>& orders, const std::string& format,
                   const std::string& out) {
  const Group g = group_from_orders(orders);
  const auto subs = all_subgroups(g);
  const std::size_t predicted = static_cast<std::size_t>(g.order()) * subs.size();
  if (format == "json") {
    json j{{"orders", g.orders()},
           {"order", g.order()},
           {"subgroup_count", subs.size()},
           {"pure_positive_count", predicted}};
    json sub_list = json::array();
    for (const auto& h : subs) sub_list.push_back(subgroup_json(g, h));
    j["subgroups"] = std::move(sub_list);
    emit(out, j.dump(2));
  } else {
    std::ostringstream os;
    os << "group " << orders_string(g) << ", |G| = " << g.order() << "\n";
    os << "subgroups: " << subs.size() << "\n";
    for (const auto& h : subs) {
      const Subgroup hp = annihilator(g, h);
      os << "  |H| = " << h.order() << "  elements";
      for (const auto& e : h.elements) os << " " << element_json(e).dump();
      os << "  |H_perp| = " << hp.order() << "\n";
    }
    os << "pure KD-positive states: " << predicted;
    emit(out, os.str());
  }
  return kOk;
}

int cmd_pure_states(const std::vector<int>& orders, const std::string& format,
                    const std::string& out) {
  const Group g = group_from_orders(orders);
  const auto states = pure_positive_states(g);
  if (format == "json") {
    json j{{"group", json::parse(io::to_json(g))}, {"count", states.size()}};
    json list = json::array();
    for (const auto& s : states) {
      json gens = json::array();
      for (const auto& e : s.subgroup.generators) gens.push_back(element_json(e));
      list.push_back(json{{"subgroup_order", s.subgroup.order()},
                          {"subgroup_generators", gens},
                          {"g0", element_json(s.g0)},
                          {"chi0", element_json(s.chi0)},
                          {"vector", json::parse(io::to_json(s.vector))},
                          {"eta", json::parse(io::to_json(eta(s)))}});
    }
    j["states"] = std::move(list);
    emit(out, j.dump(2));
  } else {
    std::ostringstream os;
    os << "pure KD-positive states of " << orders_string(g) << ": " << states.size() << "\n";
    for (const auto& s : states) {
      os << "  |H| = " << s.subgroup.order() << "  g0 = " << element_json(s.g0).dump()
         << "  chi0 = " << element_json(s.chi0).dump() << "\n";
    }
    os << "count: " << states.size();
    emit(out, os.str());
  }
  return kOk;
}

int cmd_kd_symbol(const std::string& file, const std::vector<int>& orders, bool upper,
                  const std::string& format, const std::string& out) {
  const Operator op = load_operator(file, orders);
  const KDDistribution q = upper ? kd_upper(op) : kd_lower(op);
  if (format == "json") {
    emit(out, io::to_json(q));
  } else {
    std::ostringstream os;
    os.precision(12);
    os << (upper ? "upper" : "lower") << " KD symbol on " << orders_string(q.group) << "\n";
    for (int x = 0; x < q.group.order(); ++x) {
      for (int chi = 0; chi < q.group.order(); ++chi) {
        const auto v = q.at(x, chi);
        os << "  (" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
      }
      os << "\n";
    }
    os << "sum = " << q.sum().real();
    emit(out, os.str());
  }
  return kOk;
}

int cmd_check(const std::string& file, const std::vector<int>& orders, double tol,
              std::string witness_path, const std::string& format, const std::string& out) {
  const Operator rho = load_operator(file, orders);
  const PositivityReport report = check_kd_positive(rho, tol);

  json j{{"is_state", report.is_state},
         {"min_eigenvalue", report.min_eigenvalue},
         {"trace_error", report.trace_error},
         {"min_kd_value", report.min_kd_value},
         {"max_imag_kd", report.max_imag_kd},
         {"kd_positive", report.verdict}};
  int code;
  if (!report.is_state) {
    code = kNotState;
  } else if (!report.verdict) {
    code = kNotKdPositive;
  } else {
    const HullMembership m = membership_conv_pure(rho);
    j["in_hull"] = m.lp.feasible;
    if (m.lp.feasible) {
      j["weights"] = m.weights;
      code = kOk;
    } else {
      if (witness_path.empty()) witness_path = file + ".witness.json";
      io::write_file(witness_path, io::to_json(m.witness) + "\n");
      j["witness_file"] = witness_path;
      j["witness_state_pairing"] = m.witness_state_pairing;
      j["witness_min_pure_pairing"] = m.witness_min_pure_pairing;
      code = kOutsideHull;
    }
  }
  if (format == "json") {
    emit(out, j.dump(2));
  } else {
    std::ostringstream os;
    os.precision(12);
    os << "state: " << (report.is_state ? "yes" : "no") << " (min eig " << report.min_eigenvalue
       << ", trace err " << report.trace_error << ")\n";
    os << "KD-positive: " << (report.verdict ? "yes" : "no") << " (min " << report.min_kd_value
       << ", max imag " << report.max_imag_kd << ")";
    if (j.contains("in_hull")) {
      os << "\nin conv(pure KD-positive): " << (j["in_hull"].get<bool>() ? "yes" : "no");
      if (j.contains("witness_file")) os << "\nwitness written to " << witness_path;
    }
    emit(out, os.str());
  }
  return code;
}

json decomposition_json(const PeriodicDecomposition& d) {
  json parts = json::array();
  for (const auto& part : d.parts) {
    json gens = json::array();
    for (const auto& e : part.subgroup.generators) gens.push_back(element_json(e));
    parts.push_back(json{{"subgroup_order", part.subgroup.order()},
                         {"subgroup_generators", gens},
                         {"table", json::parse(io::to_json(part.table))}});
  }
  return parts;
}

int cmd_decompose(const std::string& file, const std::vector<int>& orders, bool use_lp,
                  const std::string& format, const std::string& out) {
  const Operator rho = load_operator(file, orders);
  const Group& g = rho.group();
  const PositivityReport report = check_kd_positive(rho);
  if (!report.is_state) {
    std::cerr << "input is not a state\n";
    return kNotState;
  }
  if (!report.verdict) {
    std::cerr << "input is not KD-positive\n";
    return kNotKdPositive;
  }

  PeriodicDecomposition parts;
  if (use_lp) {
    const HullMembership m = membership_conv_pure(rho);
    if (!m.lp.feasible) {
      std::cerr << "KD-positive state outside conv(pure KD-positive): "
                   "no nonnegative decomposition exists\n";
      return kDecompositionInfeasible;
    }
    parts = weights_by_subgroup(g, pure_positive_states(g), m.weights);
  } else {
    const auto subs = all_subgroups(g);
    for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
      for (int e : subs[i].indices) {
        if (!subs[i + 1].contains_index(e)) {
          std::cerr << "subgroup lattice of " << orders_string(g)
                    << " is not a chain; rerun with --lp\n";
          return kUsage;
        }
      }
    }
    const RealTable q = real_part(kd_lower(rho));
    parts = greedy_nonnegative_repair(q, decompose_into_periodic(q, subs));
  }

  const RealTable q = real_part(kd_lower(rho));
  double resum = 0.0;
  for (std::size_t c = 0; c < q.values.size(); ++c) {
    double s = 0.0;
    for (const auto& part : parts.parts) s += part.table.values[c];
    resum = std::max(resum, std::abs(s - q.values[c]));
  }

  if (format == "json") {
    json j{{"group", json::parse(io::to_json(g))},
           {"mode", use_lp ? "lp" : "chain"},
           {"parts", decomposition_json(parts)},
           {"resum_error", resum}};
    emit(out, j.dump(2));
  } else {
    std::ostringstream os;
    os.precision(12);
    os << "nonnegative periodic decomposition (" << (use_lp ? "lp" : "chain") << " mode), "
       << parts.parts.size() << " parts, resum error " << resum;
    emit(out, os.str());
  }
  return kOk;
}

int cmd_pair(const std::string& witness_file, const std::string& state_file,
             const std::vector<int>& orders, const std::string& format,
             const std::string& out) {
  const KDDistribution w =
      io::kd_from_json(io::read_file(witness_file), max_order_from_env());
  if (w.max_abs_imag() > 1e-10) throw std::runtime_error("witness table is not real");
  const Operator rho = load_operator(state_file, orders);
  if (!(w.group == rho.group())) throw std::runtime_error("witness and state group mismatch");
  const std::complex<double> pairing = table_pairing(real_part(w), kd_lower(rho));
  if (format == "json") {
    emit(out, json{{"pairing", {pairing.real(), pairing.imag()}}}.dump());
  } else {
    std::ostringstream os;
    os.precision(12);
    os << "pairing: " << pairing.real();
    if (std::abs(pairing.imag()) > 1e-12) os << " + " << pairing.imag() << "i";
    emit(out, os.str());
  }
  return kOk;
}

int cmd_verify_paper(const std::string& which, unsigned long long seed,
                     const std::string& format, const std::string& out) {
  std::vector<VerificationReport> reports;
  if (which == "z6" || which == "all") reports.push_back(verify_z6());
  if (which == "z2z2" || which == "all") reports.push_back(verify_z2z2());
  if (reports.empty()) throw std::runtime_error("unknown suite: " + which);

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass();

  if (format == "json") {
    json suites = json::array();
    for (const auto& r : reports) suites.push_back(json::parse(io::to_json(r)));
    emit(out, json{{"seed", seed}, {"suites", std::move(suites)}, {"pass", all_pass}}.dump(2));
  } else {
    std::ostringstream os;
    os.precision(12);
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        os << "[" << r.suite << "] " << (c.pass ? "PASS" : "FAIL") << "  " << c.label << "  ("
           << c.relation << "; computed " << c.computed << ", tolerance " << c.tolerance
           << ")\n";
      }
      os << "[" << r.suite << "] suite: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    }
    os << (all_pass ? "all checks passed" : "some checks FAILED");
    emit(out, os.str());
  }
  return all_pass ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Kirkwood-Dirac symbols, positivity, and hull membership over finite abelian groups"};
  app.require_subcommand(1);

  std::vector<int> positional_orders, flag_orders;
  std::string format_text = "text", format_json = "json";
  std::string out_path, file_a, file_b, which = "all", witness_path;
  bool upper = false, use_lp = false;
  double tol = 1e-9;
  unsigned long long seed = 7;

  auto add_format = [](CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* info = app.add_subcommand("group-info", "group, subgroup, and annihilator summary");
  info->add_option("orders,--orders", positional_orders, "cyclic factor orders");
  add_format(info, format_text);
  info->add_option("--out", out_path, "write output to a file");

  CLI::App* pure = app.add_subcommand("pure-states", "enumerate pure KD-positive states");
  pure->add_option("--orders", flag_orders, "cyclic factor orders")->required();
  add_format(pure, format_json);
  pure->add_option("--out", out_path, "write output to a file");

  CLI::App* symbol = app.add_subcommand("kd-symbol", "KD symbol of an operator file");
  symbol->add_option("file", file_a, "operator JSON file")->required();
  symbol->add_option("--orders", flag_orders, "expected group orders");
  symbol->add_flag("--upper", upper, "emit the upper symbol instead of the lower");
  add_format(symbol, format_json);
  symbol->add_option("--out", out_path, "write output to a file");

  CLI::App* check = app.add_subcommand("check", "KD positivity and hull membership of a state");
  check->add_option("file", file_a, "operator JSON file")->required();
  check->add_option("--orders", flag_orders, "expected group orders");
  check->add_option("--tol", tol, "positivity tolerance")->check(CLI::PositiveNumber);
  check->add_option("--witness", witness_path, "where to write a nonpositivity witness");
  add_format(check, format_text);
  check->add_option("--out", out_path, "write output to a file");

  CLI::App* decompose = app.add_subcommand("decompose", "nonnegative periodic decomposition");
  decompose->add_option("file", file_a, "operator JSON file")->required();
  decompose->add_option("--orders", flag_orders, "expected group orders");
  decompose->add_flag("--lp", use_lp, "use hull-membership weights instead of chain repair");
  add_format(decompose, format_json);
  decompose->add_option("--out", out_path, "write output to a file");

  CLI::App* pair = app.add_subcommand("pair", "Frobenius pairing of a witness with a state");
  pair->add_option("witness", file_a, "witness JSON file (KD table layout)")->required();
  pair->add_option("state", file_b, "operator JSON file")->required();
  pair->add_option("--orders", flag_orders, "expected group orders");
  add_format(pair, format_text);
  pair->add_option("--out", out_path, "write output to a file");

  CLI::App* verify = app.add_subcommand("verify-paper", "run the bundled reference data checks");
  verify->add_option("which", which, "z6, z2z2, or all")
      ->check(CLI::IsMember({"z6", "z2z2", "all"}));
  verify->add_option("--seed", seed, "seed recorded in the report");
  add_format(verify, format_json);
  verify->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::vector<int>& orders = flag_orders.empty() ? positional_orders : flag_orders;
  try {
    if (info->parsed()) return cmd_group_info(orders, format_text, out_path);
    if (pure->parsed()) return cmd_pure_states(orders, format_json, out_path);
    if (symbol->parsed()) return cmd_kd_symbol(file_a, flag_orders, upper, format_json, out_path);
    if (check->parsed())
      return cmd_check(file_a, flag_orders, tol, witness_path, format_text, out_path);
    if (decompose->parsed())
      return cmd_decompose(file_a, flag_orders, use_lp, format_json, out_path);
    if (pair->parsed()) return cmd_pair(file_a, file_b, flag_orders, format_text, out_path);
    if (verify->parsed()) return cmd_verify_paper(which, seed, format_json, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
