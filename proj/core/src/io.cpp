#include "blowchern/io.hpp"

namespace blowchern {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  throw Error(ErrorKind::parse, where + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) bad(where + "." + key, "expected an integer");
  return v.get<int>();
}

Rational parse_rational(const std::string& s, const std::string& where) {
  try {
    Rational q(s);
    q.canonicalize();
    if (q.get_den() == 0) bad(where, "zero denominator");
    return q;
  } catch (const std::invalid_argument&) {
    bad(where, "not a rational number: \"" + s + "\"");
  }
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  Scenario s;
  s.ambient_dim = int_field(j, "ambient_dim", "scenario");
  const json& c = field(j, "center", "scenario");
  const json& type = field(c, "type", "scenario.center");
  if (!type.is_string()) bad("scenario.center.type", "expected a string");
  if (type == "linear") {
    s.center = LinearCenter{int_field(c, "dim", "scenario.center")};
  } else if (type == "ci") {
    const json& deg = field(c, "degrees", "scenario.center");
    if (!deg.is_array()) bad("scenario.center.degrees", "expected an array");
    CompleteIntersectionCenter ci;
    for (std::size_t i = 0; i < deg.size(); ++i) {
      if (!deg[i].is_number_integer()) {
        bad("scenario.center.degrees[" + std::to_string(i) + "]", "expected an integer");
      }
      ci.degrees.push_back(deg[i].get<int>());
    }
    s.center = std::move(ci);
  } else {
    bad("scenario.center.type", "unknown center type \"" + type.get<std::string>() + "\"");
  }
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) bad("scenario.label", "expected a string");
    s.label = it->get<std::string>();
  }
  try {
    s.validate();
  } catch (const Error& e) {
    bad("scenario", e.what());
  }
  if (s.label.empty()) {
    s.label = std::holds_alternative<LinearCenter>(s.center)
                  ? linear_scenario(s.ambient_dim, s.center_dim()).label
                  : ci_scenario(s.ambient_dim, s.normal_degrees()).label;
  }
  return s;
}

json scenario_to_json(const Scenario& s) {
  json center;
  if (const auto* lin = std::get_if<LinearCenter>(&s.center)) {
    center = {{"type", "linear"}, {"dim", lin->dim}};
  } else {
    center = {{"type", "ci"}, {"degrees", std::get<CompleteIntersectionCenter>(s.center).degrees}};
  }
  return {{"ambient_dim", s.ambient_dim}, {"center", center}, {"label", s.label}};
}

Scenario parse_scenario(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, "malformed scenario JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return scenario_from_json(j);
}

json ring_to_json(const RingPresentation& ring) {
  json vars = json::array();
  for (const auto& e : ring.table()->entries()) vars.push_back({{"name", e.name}, {"degree", e.degree}});
  json rules = json::array();
  for (const auto& r : ring.rules()) {
    rules.push_back({{"var", (*ring.table())[r.var].name},
                     {"power", r.power},
                     {"replacement", r.replacement.to_string()}});
  }
  json out = {{"variables", vars}, {"rules", rules}};
  out["dim"] = ring.dim() ? json(*ring.dim()) : json(nullptr);
  if (ring.fundamental()) {
    out["fundamental"] = GradedPoly::monomial(ring.table(), *ring.fundamental()).to_string();
    out["fundamental_degree"] = to_string(ring.fundamental_degree());
  } else {
    out["fundamental"] = nullptr;
  }
  return out;
}

RingPtr ring_from_json(const json& j) {
  const json& vars = field(j, "variables", "ring");
  if (!vars.is_array()) bad("ring.variables", "expected an array");
  std::vector<VarTable::Entry> entries;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string where = "ring.variables[" + std::to_string(i) + "]";
    const json& name = field(vars[i], "name", where);
    if (!name.is_string()) bad(where + ".name", "expected a string");
    entries.push_back({name.get<std::string>(), int_field(vars[i], "degree", where)});
  }
  TablePtr table;
  try {
    table = VarTable::make(std::move(entries));
  } catch (const Error& e) {
    bad("ring.variables", e.what());
  }

  std::vector<RewriteRule> rules;
  if (auto it = j.find("rules"); it != j.end()) {
    if (!it->is_array()) bad("ring.rules", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string where = "ring.rules[" + std::to_string(i) + "]";
      const json& r = (*it)[i];
      const json& var = field(r, "var", where);
      const json& rep = field(r, "replacement", where);
      if (!var.is_string() || !rep.is_string()) bad(where, "var and replacement must be strings");
      auto idx = table->find(var.get<std::string>());
      if (!idx) bad(where + ".var", "unknown variable");
      int power = int_field(r, "power", where);
      if (power < 1) bad(where + ".power", "must be positive");
      try {
        rules.push_back({*idx, static_cast<unsigned>(power), parse_poly(rep.get<std::string>(), table)});
      } catch (const Error& e) {
        bad(where + ".replacement", e.what());
      }
    }
  }

  std::optional<int> dim;
  if (auto it = j.find("dim"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer()) bad("ring.dim", "expected an integer or null");
    dim = it->get<int>();
  }
  std::optional<Monomial> fundamental;
  Rational weight = 1;
  if (auto it = j.find("fundamental"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) bad("ring.fundamental", "expected a string");
    GradedPoly m;
    try {
      m = parse_poly(it->get<std::string>(), table);
    } catch (const Error& e) {
      bad("ring.fundamental", e.what());
    }
    if (m.size() != 1 || m.terms()[0].coeff != 1) bad("ring.fundamental", "expected a single monomial");
    fundamental = m.terms()[0].mono;
  }
  if (auto it = j.find("fundamental_degree"); it != j.end() && !it->is_null()) {
    if (it->is_number_integer()) {
      weight = it->get<long>();
    } else if (it->is_string()) {
      weight = parse_rational(it->get<std::string>(), "ring.fundamental_degree");
    } else {
      bad("ring.fundamental_degree", "expected an integer or rational string");
    }
  }
  try {
    return std::make_shared<const RingPresentation>(table, std::move(rules), dim, fundamental, weight);
  } catch (const Error& e) {
    bad("ring", e.what());
  }
}

json bundle_to_json(const BundleClass& b) {
  json chern = json::array();
  for (const auto& c : b.components()) chern.push_back(c.to_string());
  return {{"rank", b.rank()}, {"chern", chern}};
}

BundleClass bundle_from_json(const json& j, const RingPtr& ring) {
  int rank = int_field(j, "rank", "bundle");
  std::vector<GradedPoly> comps;
  if (auto it = j.find("chern"); it != j.end()) {
    if (!it->is_array()) bad("bundle.chern", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string where = "bundle.chern[" + std::to_string(i) + "]";
      if (!(*it)[i].is_string()) bad(where, "expected a polynomial string");
      try {
        comps.push_back(ring->parse((*it)[i].get<std::string>()));
      } catch (const Error& e) {
        bad(where, e.what());
      }
    }
  }
  try {
    return BundleClass(ring, rank, std::move(comps));
  } catch (const Error& e) {
    bad("bundle", e.what());
  }
}

json reports_to_json(const std::vector<VerificationReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace blowchern
