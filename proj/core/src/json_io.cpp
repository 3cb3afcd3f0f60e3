#include "kdfab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kdfab::jsonio {

namespace {

using nlohmann::json;

json group_json(const Group& g) { return json{{"orders", g.orders()}}; }

json element_json(const GroupElement& e) { return json(e.coords); }

json complex_json(const std::complex<double>& v) { return json::array({v.real(), v.imag()}); }

json matrix_json(const Group& g, const std::vector<std::complex<double>>& values) {
  const int n = g.order();
  json rows = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) row.push_back(complex_json(values[static_cast<std::size_t>(r) * n + c]));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::complex<double> parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::runtime_error("expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Group parse_group(const json& j, int max_order) {
  if (!j.is_object() || !j.contains("orders") || !j["orders"].is_array()) {
    throw std::runtime_error("expected {\"orders\":[...]}");
  }
  std::vector<int> orders;
  for (const auto& v : j["orders"]) {
    if (!v.is_number_integer()) throw std::runtime_error("orders must be integers");
    orders.push_back(v.get<int>());
  }
  return make_group(orders, max_order);
}

GroupElement parse_element(const Group& g, const json& j) {
  if (!j.is_array()) throw std::runtime_error("expected coordinate list");
  GroupElement e;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::runtime_error("coordinates must be integers");
    e.coords.push_back(v.get<int>());
  }
  g.index(e);  // validates shape and range
  return e;
}

std::vector<std::complex<double>> parse_matrix(const Group& g, const json& j,
                                               const char* what) {
  const int n = g.order();
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw std::runtime_error(std::string(what) + ": expected " + std::to_string(n) + " rows");
  }
  std::vector<std::complex<double>> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::runtime_error(std::string(what) + ": expected " + std::to_string(n) +
                               " columns per row");
    }
    for (const auto& v : row) values.push_back(parse_complex(v));
  }
  return values;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::runtime_error("invalid JSON");
  return j;
}

}  // namespace

std::string to_json(const Group& g) { return group_json(g).dump(); }

std::string to_json(const Group&, const GroupElement& e) { return element_json(e).dump(); }

std::string to_json(const Subgroup& h) {
  json gens = json::array();
  for (const auto& e : h.generators) gens.push_back(element_json(e));
  return json{{"generators", std::move(gens)}}.dump();
}

std::string to_json(const StateVector& psi) {
  json amps = json::array();
  for (const auto& a : psi.amplitudes) amps.push_back(complex_json(a));
  return json{{"group", group_json(psi.group)}, {"amplitudes", std::move(amps)}}.dump();
}

std::string to_json(const Operator& op) {
  return json{{"group", group_json(op.group())}, {"entries", matrix_json(op.group(), op.entries())}}
      .dump();
}

std::string to_json(const KDDistribution& q) {
  return json{{"group", group_json(q.group)}, {"values", matrix_json(q.group, q.values)}}.dump();
}

std::string to_json(const RealTable& t) {
  std::vector<std::complex<double>> values(t.values.begin(), t.values.end());
  return json{{"group", group_json(t.group)}, {"values", matrix_json(t.group, values)}}.dump();
}

std::string to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(json{{"label", c.label},
                          {"relation", c.relation},
                          {"computed", c.computed},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
  }
  return json{{"suite", report.suite}, {"checks", std::move(checks)}, {"pass", report.pass()}}
      .dump();
}

Group group_from_json(const std::string& text, int max_order) {
  return parse_group(parse_text(text), max_order);
}

GroupElement element_from_json(const Group& g, const std::string& text) {
  return parse_element(g, parse_text(text));
}

Subgroup subgroup_from_json(const Group& g, const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw std::runtime_error("expected {\"generators\":[...]}");
  }
  std::vector<GroupElement> gens;
  for (const auto& e : j["generators"]) gens.push_back(parse_element(g, e));
  return subgroup_closure(g, gens);
}

StateVector state_from_json(const std::string& text, int max_order) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("group") || !j.contains("amplitudes")) {
    throw std::runtime_error("expected {\"group\":...,\"amplitudes\":...}");
  }
  const Group g = parse_group(j["group"], max_order);
  const auto& amps = j["amplitudes"];
  if (!amps.is_array() || static_cast<int>(amps.size()) != g.order()) {
    throw std::runtime_error("amplitudes: wrong length");
  }
  StateVector psi{g, {}};
  for (const auto& a : amps) psi.amplitudes.push_back(parse_complex(a));
  return psi;
}

Operator operator_from_json(const std::string& text, int max_order) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("group") || !j.contains("entries")) {
    throw std::runtime_error("expected {\"group\":...,\"entries\":...}");
  }
  const Group g = parse_group(j["group"], max_order);
  Operator op(g);
  op.entries() = parse_matrix(g, j["entries"], "entries");
  return op;
}

KDDistribution kd_from_json(const std::string& text, int max_order) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("group") || !j.contains("values")) {
    throw std::runtime_error("expected {\"group\":...,\"values\":...}");
  }
  const Group g = parse_group(j["group"], max_order);
  return KDDistribution{g, parse_matrix(g, j["values"], "values")};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace kdfab::jsonio
