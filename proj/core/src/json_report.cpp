#include "crossdef/json_report.hpp"

#include "crossdef/format.hpp"

namespace crossdef {

json group_data_to_json(const GroupData& data) {
  json j;
  j["name"] = data.name;
  j["group"] = data.group.factors();
  j["variables"] = data.variable_names;
  j["elements"] = data.element_names;
  json chars = json::object();
  for (int v = 0; v < data.action.nvars(); ++v) {
    std::vector<int> col;
    for (int s = 0; s < data.group.size(); ++s) col.push_back(data.action.char_pow(v, s));
    chars[data.variable_names[v]] = col;
  }
  j["characters"] = chars;
  std::vector<std::vector<int>> alpha;
  for (int s = 0; s < data.group.size(); ++s) {
    std::vector<int> row;
    for (int t = 0; t < data.group.size(); ++t) row.push_back(data.cocycle.pow(s, t));
    alpha.push_back(row);
  }
  j["cocycle"] = alpha;
  return j;
}

GroupData group_data_from_json(const json& j) {
  AbelianGroup group(j.at("group").get<std::vector<int>>());
  auto variables = j.at("variables").get<std::vector<std::string>>();
  std::vector<std::vector<int>> chars;
  for (const auto& v : variables)
    chars.push_back(j.at("characters").at(v).get<std::vector<int>>());
  DiagonalAction action(group, chars);
  Cocycle cocycle(group, j.at("cocycle").get<std::vector<std::vector<int>>>());
  std::vector<std::string> elements;
  if (j.contains("elements")) {
    elements = j.at("elements").get<std::vector<std::string>>();
  } else {
    for (int s = 0; s < group.size(); ++s) {
      std::string name;
      for (int r : group.tuple_of(s)) name += (name.empty() ? "" : ",") + std::to_string(r);
      elements.push_back(name);
    }
  }
  return GroupData{group, action, cocycle, variables, elements, j.value("name", "")};
}

json to_json(const CrossedElement& e, const GroupData& data) {
  json terms = json::array();
  for (const auto& [k, c] : e.terms()) {
    json t;
    t["coeff"] = c.str();
    t["mono"] = k.mono;
    t["sigma"] = data.element_names[k.sigma];
    terms.push_back(t);
  }
  return terms;
}

CrossedElement crossed_from_json(const json& j, const GroupData& data) {
  CrossedElement e;
  for (const auto& t : j) {
    int sigma = data.element_by_name(t.at("sigma").get<std::string>());
    if (sigma < 0) throw std::invalid_argument("unknown group element in JSON term");
    e.add_term({t.at("mono").get<Exponents>(), sigma},
               GaussRational::parse(t.at("coeff").get<std::string>()));
  }
  return e;
}

json to_json(const TElement& e, const GroupData& data) {
  json j = json::array();
  for (const auto& [d, coeff] : e.coeffs()) {
    json entry;
    entry["t"] = d;
    entry["terms"] = to_json(coeff, data);
    entry["text"] = format(coeff, data);
    j.push_back(entry);
  }
  return j;
}

json to_json(const Cochain& c, const GroupData& data) {
  json comps = json::array();
  for (const auto& e : c.components) comps.push_back(format(e, data));
  json j;
  j["degree"] = c.degree;
  j["components"] = comps;
  return j;
}

json to_json(const HHClassRow& row, const GroupData& data) {
  json j;
  j["n"] = row.n;
  j["sigma"] = data.element_names[row.sigma];
  j["multidegree"] = row.effective;
  j["degree"] = row.total_degree;
  j["dim"] = row.dim;
  json basis = json::array();
  for (const auto& c : row.basis) basis.push_back(to_json(c, data));
  j["basis"] = basis;
  return j;
}

json to_json(const ModuleAlgebraReport& report) {
  json axioms = json::array();
  for (const auto& a : report.axioms) {
    json ja;
    ja["axiom"] = a.axiom;
    ja["passed"] = a.passed;
    if (!a.passed) ja["witness"] = a.witness;
    axioms.push_back(ja);
  }
  json j;
  j["all_passed"] = report.all_passed;
  j["axioms"] = axioms;
  return j;
}

json hat_poly_to_json(const HatPoly& p) {
  json terms = json::array();
  for (const auto& [k, c] : p) {
    json t;
    t["coeff"] = c.str();
    t["xhat"] = k.a;
    t["yhat"] = k.b;
    t["zhat"] = k.c;
    t["what"] = k.w;
    t["t"] = k.t;
    terms.push_back(t);
  }
  return terms;
}

json to_json(const CenterRelationReport& report, const GroupData& data) {
  json j;
  j["i"] = report.i;
  j["j"] = report.j;
  j["k"] = report.k;
  json scal = json::array();
  for (const auto& s : report.scaling) scal.push_back(s.str());
  j["scaling"] = scal;
  j["w_square"] = to_json(report.w_square_value, data);
  j["rewrite_ok"] = report.rewrite_ok;
  j["realized"] = hat_poly_to_json(report.realized);
  j["realized_text"] = "W^2 = " + format_hat(report.realized);
  j["reference"] = hat_poly_to_json(report.reference);
  j["reference_text"] = "W^2 = " + format_hat(report.reference);
  j["matches_reference"] = report.matches_reference;
  json cands = json::array();
  for (const auto& [s, ok] : report.candidate_scalings) {
    json c;
    c["scaling"] = s.str();
    c["matches_reference"] = ok;
    cands.push_back(c);
  }
  j["candidate_scalings"] = cands;
  j["reference_scaling"] =
      report.reference_scaling.is_zero() ? json(nullptr) : json(report.reference_scaling.str());
  j["notes"] = report.notes;
  return j;
}

}  // namespace crossdef
