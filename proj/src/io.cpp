#include "coxrig/io.hpp"

#include <sstream>

namespace coxrig {

const char* const kVerdictCsvHeader = "family,rank,r,m,irr0,dimI0,dimIinf,dimI,n,rigid,method";

Json to_json(const RootSystem& rs) {
  Json j;
  j["family"] = std::string(1, family_letter(rs.type.family));
  j["rank"] = rs.rank;
  j["h"] = rs.coxeter_number;
  Json roots = Json::array();
  for (const Root& r : rs.roots) roots.push_back(r.coeffs);
  j["roots"] = std::move(roots);
  return j;
}

Json to_json(const Partition& p) { return Json(p.parts); }

Json to_json(const NilpotentData& d) {
  Json j;
  j["family"] = std::string(1, family_letter(d.family));
  j["rank"] = d.rank;
  j["r"] = d.r;
  j["jordan"] = d.jordan ? to_json(*d.jordan) : Json(nullptr);
  j["dual"] = d.dual ? to_json(*d.dual) : Json(nullptr);
  j["dimC"] = d.dim_centralizer;
  j["dimO"] = d.dim_orbit;
  if (d.family == Family::D) j["very_even"] = d.very_even;
  if (!d.label.empty() || !d.dynkin.empty()) {
    Json labels;
    if (!d.label.empty()) labels["orbit"] = d.label;
    if (!d.dynkin.empty()) labels["dynkin"] = d.dynkin;
    j["labels"] = std::move(labels);
  }
  return j;
}

Json to_json(const RigidityVerdict& v) {
  Json j;
  j["family"] = std::string(1, family_letter(v.params.type.family));
  j["rank"] = v.params.type.rank;
  j["r"] = v.params.r;
  j["m"] = v.params.m;
  j["irr0"] = v.irr0;
  j["dimI0"] = v.dim_g_I0;
  j["dimIinf"] = v.dim_g_Iinf;
  j["dimI"] = v.dim_g_I;
  j["n"] = v.n_value;
  j["rigid"] = v.rigid;
  j["method"] = v.method;
  return j;
}

Json to_json(const ApartmentPoint& x) {
  Json j = Json::array();
  for (const Rat& v : x.values) j.push_back(rat_string(v));
  return j;
}

Json to_json(const RootSystem& rs, const LoopElement& a) {
  Json terms = Json::array();
  for (const auto& [d, g] : a.terms) {
    for (int j = 0; j < rs.rank; ++j)
      if (g.cartan[j] != 0) {
        Json t;
        t["degree"] = d;
        t["basis"] = "cartan";
        t["cartan_index"] = j;
        t["value"] = rat_string(g.cartan[j]);
        terms.push_back(std::move(t));
      }
    for (const auto& [idx, c] : g.root_part) {
      Json t;
      t["degree"] = d;
      t["basis"] = "root";
      t["root_coeffs"] = rs.roots[idx].coeffs;
      t["value"] = rat_string(c);
      terms.push_back(std::move(t));
    }
  }
  return terms;
}

Json to_json(const Stratum& s) {
  Json j;
  j["point"] = to_json(s.point);
  j["depth"] = rat_string(s.depth);
  j["fundamental"] = s.fundamental;
  j["regular_singular"] = s.regular_singular;
  return j;
}

Json to_json(const NewtonPolygon& p) {
  Json j = Json::array();
  for (const auto& [slope, mult] : p.slopes) {
    Json e;
    e["slope"] = rat_string(slope);
    e["mult"] = mult;
    j.push_back(std::move(e));
  }
  return j;
}

LoopElement loop_element_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("loop element: expected a JSON array of terms");
  LoopElement a;
  for (const Json& t : j) {
    const int d = t.at("degree").get<int>();
    const Rat value = parse_rat(t.at("value").get<std::string>());
    auto it = a.terms.find(d);
    if (it == a.terms.end()) it = a.terms.emplace(d, zero_element(rs)).first;
    const std::string basis = t.at("basis").get<std::string>();
    if (basis == "cartan") {
      const int idx = t.at("cartan_index").get<int>();
      if (idx < 0 || idx >= rs.rank) throw std::invalid_argument("cartan_index out of range");
      it->second.cartan[idx] += value;
    } else if (basis == "root") {
      const std::vector<int> coeffs = t.at("root_coeffs").get<std::vector<int>>();
      const int idx = rs.find(coeffs);
      if (idx < 0) throw std::invalid_argument("root_coeffs is not a root of " + rs.type.name());
      it->second.root_part[idx] += value;
    } else {
      throw std::invalid_argument("basis must be \"root\" or \"cartan\"");
    }
  }
  for (auto& [d, g] : a.terms) g.prune();
  a.prune();
  return a;
}

ApartmentPoint apartment_point_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != rs.rank)
    throw std::invalid_argument("apartment point: expected a rational vector of length rank");
  ApartmentPoint x;
  for (const Json& v : j)
    x.values.push_back(v.is_string() ? parse_rat(v.get<std::string>()) : Rat(v.get<long>()));
  return x;
}

RigidityVerdict verdict_from_json(const Json& j) {
  RigidityVerdict v;
  v.params.type.family = family_from_letter(j.at("family").get<std::string>().at(0));
  v.params.type.rank = j.at("rank").get<int>();
  v.params.r = j.at("r").get<int>();
  v.params.m = j.at("m").get<int>();
  v.irr0 = j.at("irr0").get<long>();
  v.dim_g_I0 = j.at("dimI0").get<long>();
  v.dim_g_Iinf = j.at("dimIinf").get<long>();
  v.dim_g_I = j.at("dimI").get<long>();
  v.n_value = j.at("n").get<long>();
  v.rigid = j.at("rigid").get<bool>();
  v.method = j.at("method").get<std::string>();
  return v;
}

std::string verdict_csv_row(const RigidityVerdict& v) {
  std::ostringstream os;
  os << family_letter(v.params.type.family) << ',' << v.params.type.rank << ',' << v.params.r << ',' << v.params.m
     << ',' << v.irr0 << ',' << v.dim_g_I0 << ',' << v.dim_g_Iinf << ',' << v.dim_g_I << ',' << v.n_value << ','
     << (v.rigid ? "true" : "false") << ',' << v.method;
  return os.str();
}

Json output_record(const std::string& command, Json payload) {
  Json j;
  j["schema_version"] = "1";
  j["command"] = command;
  j["payload"] = std::move(payload);
  return j;
}

}  // namespace coxrig
