#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "coxrig/io.hpp"
#include "coxrig/parallel.hpp"

using namespace coxrig;

namespace {

constexpr int kExitBadFlags = 2;
constexpr int kExitIllegalParams = 3;
constexpr int kExitOracleMismatch = 4;

struct TypeSpec {
  std::string type_str;
  int rank = 0;  // 0 = not given
};

SimpleType resolve_type(const TypeSpec& given) {
  if (given.type_str.empty()) throw CLI::ValidationError("--type is required");
  char letter = static_cast<char>(std::toupper(given.type_str[0]));
  if (std::string("ABCDEFG").find(letter) == std::string::npos)
    throw CLI::ValidationError("--type must start with a family letter A..G");
  int rank = given.rank;
  if (given.type_str.size() > 1) {
    int embedded = 0;
    for (size_t i = 1; i < given.type_str.size(); ++i) {
      if (!std::isdigit(given.type_str[i])) throw CLI::ValidationError("bad --type: " + given.type_str);
      embedded = embedded * 10 + (given.type_str[i] - '0');
    }
    if (rank != 0 && rank != embedded)
      throw CLI::ValidationError("--rank contradicts the rank embedded in --type");
    rank = embedded;
  }
  if (rank == 0) {
    if (letter == 'F') rank = 4;
    else if (letter == 'G') rank = 2;
    else throw CLI::ValidationError("--rank is required for family " + std::string(1, letter));
  }
  return SimpleType{family_from_letter(letter), rank};
}

Oracle parse_oracle(const std::string& s) {
  if (s == "brute" || s == "bruteforce") return Oracle::bruteforce;
  if (s == "partition") return Oracle::partition;
  if (s == "both") return Oracle::both;
  throw CLI::ValidationError("--oracle must be brute|partition|both");
}

std::vector<Family> parse_families(const std::string& s) {
  if (s == "all") return {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G};
  std::vector<Family> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() != 1 || std::string("ABCDEFG").find(std::toupper(tok[0])) == std::string::npos)
      throw CLI::ValidationError("--families takes a comma list of letters A..G, or 'all'");
    out.push_back(family_from_letter(static_cast<char>(std::toupper(tok[0]))));
  }
  if (out.empty()) throw CLI::ValidationError("--families is empty");
  return out;
}

void emit(const Json& record) { std::cout << record.dump(2) << "\n"; }

std::string verdict_text(const RigidityVerdict& v) {
  std::ostringstream os;
  os << v.params.type.name() << " r=" << v.params.r << " m=" << v.params.m << ": "
     << (v.rigid ? "rigid" : "not rigid") << " (n=" << v.n_value << "; irr0=" << v.irr0 << ", dimI0=" << v.dim_g_I0
     << ", dimIinf=" << v.dim_g_Iinf << ", dimI=" << v.dim_g_I << "; oracle=" << v.method << ")";
  return os.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

LoopElement input_matrix(const RootSystem& rs, const std::string& input_file, int r, int m) {
  if (input_file.empty()) return connection_matrix(rs, r, m);
  Json j = load_json_file(input_file);
  return loop_element_from_json(rs, j.is_object() ? j.at("terms") : j);
}

ApartmentPoint parse_point(const RootSystem& rs, const std::string& s) {
  if (s.empty() || s == "barycenter") return barycenter(rs);
  if (s == "origin") return origin_point(rs);
  if (s[0] == '[') return apartment_point_from_json(rs, Json::parse(s));
  return apartment_point_from_json(rs, load_json_file(s));
}

// ---- subcommand drivers ----------------------------------------------------

int run_check(const TypeSpec& ts, int r, int m, const std::string& oracle_str, const std::string& format) {
  SimpleType type = resolve_type(ts);
  RigidityVerdict v = numerical_index(CoxeterParams{type, r, m}, parse_oracle(oracle_str));
  if (format == "json")
    emit(output_record("check", to_json(v)));
  else if (format == "csv")
    std::cout << kVerdictCsvHeader << "\n" << verdict_csv_row(v) << "\n";
  else
    std::cout << verdict_text(v) << "\n";
  return 0;
}

int run_table(const std::string& families_str, int rank_max, int m_max, const std::string& oracle_str,
              const std::string& format) {
  std::vector<Family> fams = parse_families(families_str);
  std::vector<RigidityVerdict> rows = classify_range(fams, rank_max, m_max, parse_oracle(oracle_str));

  // summary: rigid numerators per (type, m)
  struct Line {
    std::string type;
    int h;
    std::map<int, std::vector<int>> rigid_r;  // m -> list of r
  };
  std::vector<Line> summary;
  for (const RigidityVerdict& v : rows) {
    std::string name = v.params.type.name();
    if (summary.empty() || summary.back().type != name)
      summary.push_back({name, coxeter_number_table(v.params.type), {}});
    if (v.rigid) summary.back().rigid_r[v.params.m].push_back(v.params.r);
  }

  if (format == "json") {
    Json payload;
    Json jr = Json::array();
    for (const RigidityVerdict& v : rows) jr.push_back(to_json(v));
    payload["verdicts"] = std::move(jr);
    Json js = Json::array();
    for (const Line& l : summary) {
      Json e;
      e["type"] = l.type;
      e["h"] = l.h;
      Json per_m = Json::array();
      for (const auto& [m, rs] : l.rigid_r) per_m.push_back(Json{{"m", m}, {"rigid_r", rs}});
      e["rigid"] = std::move(per_m);
      js.push_back(std::move(e));
    }
    payload["summary"] = std::move(js);
    emit(output_record("table", std::move(payload)));
  } else if (format == "csv") {
    std::cout << kVerdictCsvHeader << "\n";
    for (const RigidityVerdict& v : rows) std::cout << verdict_csv_row(v) << "\n";
  } else {
    for (const RigidityVerdict& v : rows) std::cout << verdict_text(v) << "\n";
    std::cout << "--- rigid cases ---\n";
    for (const Line& l : summary) {
      std::cout << l.type << " (h=" << l.h << "):";
      if (l.rigid_r.empty()) std::cout << " none";
      for (const auto& [m, rs] : l.rigid_r) {
        std::cout << " m=" << m << " r={";
        for (size_t i = 0; i < rs.size(); ++i) std::cout << (i ? "," : "") << rs[i];
        std::cout << "}";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_orbit(const TypeSpec& ts, int r, const std::string& oracle_str, const std::string& format) {
  SimpleType type = resolve_type(ts);
  Oracle oracle = parse_oracle(oracle_str);
  bool brute = oracle != Oracle::partition;
  NilpotentData d = nilpotent_data(type, r, brute);
  if (format == "json") {
    emit(output_record("orbit", to_json(d)));
  } else if (format == "csv") {
    std::cout << "family,rank,r,dimC,dimO\n"
              << family_letter(d.family) << ',' << d.rank << ',' << d.r << ',' << d.dim_centralizer << ','
              << d.dim_orbit << "\n";
  } else {
    std::cout << type.name() << " r=" << d.r << ": dimC=" << d.dim_centralizer << " dimO=" << d.dim_orbit;
    if (d.jordan) {
      std::cout << " jordan=[";
      for (size_t i = 0; i < d.jordan->parts.size(); ++i) std::cout << (i ? "," : "") << d.jordan->parts[i];
      std::cout << "]";
    }
    if (!d.label.empty()) std::cout << " label=" << d.label;
    std::cout << "\n";
  }
  return 0;
}

int run_grading(const TypeSpec& ts, const std::string& format) {
  SimpleType type = resolve_type(ts);
  StructureConstants sc = structure_constants(build_root_system(type));
  const RootSystem& rs = sc.roots();
  const int h = rs.coxeter_number;
  std::vector<int> kmp(h), ccg(h, 0);
  for (int i = 0; i < h; ++i) kmp[i] = kmp_graded_dim(rs, i);
  for (int i = 1; i < h; ++i) ccg[i] = coxeter_cartan_graded_dim(sc, i);
  std::vector<int> mult = exponent_multiplicities(rs);
  std::vector<int> exps;
  for (int m = 1; m < h; ++m)
    for (int c = 0; c < mult[m]; ++c) exps.push_back(m);

  if (format == "json") {
    Json payload;
    payload["type"] = type.name();
    payload["h"] = h;
    payload["rank"] = rs.rank;
    payload["exponents"] = exps;
    payload["kmp_graded_dim"] = kmp;
    payload["coxeter_cartan_graded_dim"] = std::vector<int>(ccg.begin() + 1, ccg.end());
    emit(output_record("grading", std::move(payload)));
  } else if (format == "csv") {
    std::cout << "i,kmp_dim,coxeter_cartan_dim\n";
    for (int i = 0; i < h; ++i) std::cout << i << ',' << kmp[i] << ',' << (i == 0 ? 0 : ccg[i]) << "\n";
  } else {
    std::cout << type.name() << ": h=" << h << " rank=" << rs.rank << " exponents={";
    for (size_t i = 0; i < exps.size(); ++i) std::cout << (i ? "," : "") << exps[i];
    std::cout << "}\n";
    for (int i = 0; i < h; ++i) {
      std::cout << "degree " << i << "/" << h << ": dim=" << kmp[i];
      if (i > 0) std::cout << "  cartan-slice=" << ccg[i];
      std::cout << "\n";
    }
  }
  return 0;
}

int run_strata(const TypeSpec& ts, int r, int m, const std::string& input_file, const std::string& point_str,
               const std::string& format) {
  SimpleType type = resolve_type(ts);
  StructureConstants sc = structure_constants(build_root_system(type));
  const RootSystem& rs = sc.roots();
  LoopElement a = input_matrix(rs, input_file, r, m);
  ApartmentPoint x = parse_point(rs, point_str);
  Stratum s = leading_stratum(sc, a, x);
  if (format == "json") {
    Json j = to_json(s);
    j["leading"] = to_json(rs, s.leading);
    emit(output_record("strata", std::move(j)));
  } else if (format == "csv") {
    std::cout << "depth,fundamental,regular_singular\n"
              << rat_string(s.depth) << ',' << (s.fundamental ? "true" : "false") << ','
              << (s.regular_singular ? "true" : "false") << "\n";
  } else {
    std::cout << type.name() << ": depth=" << rat_string(s.depth) << " fundamental="
              << (s.fundamental ? "true" : "false")
              << (s.regular_singular ? " (regular singular)" : "") << "\n";
  }
  return 0;
}

int run_irregularity(const TypeSpec& ts, int r, int m, const std::string& input_file, const std::string& format) {
  SimpleType type = resolve_type(ts);
  StructureConstants sc = structure_constants(build_root_system(type));
  const RootSystem& rs = sc.roots();
  LoopElement a = input_matrix(rs, input_file, r, m);
  NewtonPolygon p = newton_polygon(sc, a);
  Rat irr = newton_irregularity(sc, a);
  if (format == "json") {
    Json payload;
    payload["type"] = type.name();
    payload["irregularity"] = rat_string(irr);
    payload["slopes"] = to_json(p);
    emit(output_record("irregularity", std::move(payload)));
  } else if (format == "csv") {
    std::cout << "slope,mult\n";
    for (const auto& [s, mult] : p.slopes) std::cout << rat_string(s) << ',' << mult << "\n";
  } else {
    std::cout << type.name() << ": irregularity=" << rat_string(irr) << " slopes:";
    for (const auto& [s, mult] : p.slopes) std::cout << " " << rat_string(s) << "x" << mult;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classifier of rigid Coxeter connections"};
  app.require_subcommand(1);

  TypeSpec ts;
  int r = 1, m = 0, rank_max = 8, m_max = 2;
  std::string oracle = "partition", format = "text", families = "all", input_file, point_str;

  auto add_common = [&](CLI::App* cmd, bool with_type) {
    if (with_type) {
      cmd->add_option("--type", ts.type_str, "family letter, optionally with rank (A, E7, G2)");
      cmd->add_option("--rank", ts.rank, "rank when --type has no digits");
    }
    cmd->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* check = app.add_subcommand("check", "evaluate the numerical rigidity criterion for one connection");
  add_common(check, true);
  check->add_option("--r", r, "slope numerator");
  check->add_option("--m", m, "twist exponent (slope = m + r/h)");
  check->add_option("--oracle", oracle, "brute|partition|both");

  CLI::App* table = app.add_subcommand("table", "classify every legal (type, r, m) in range");
  add_common(table, false);
  table->add_option("--families", families, "comma list of family letters, or 'all'");
  table->add_option("--rank-max", rank_max, "largest rank per family");
  table->add_option("--m-max", m_max, "largest twist exponent");
  table->add_option("--oracle", oracle, "brute|partition|both");

  CLI::App* orbit = app.add_subcommand("orbit", "Jordan data and orbit/centralizer dimensions of the lowering element");
  add_common(orbit, true);
  orbit->add_option("--r", r, "slope numerator");
  orbit->add_option("--oracle", oracle, "brute|partition|both");

  CLI::App* grading = app.add_subcommand("grading", "graded dimensions at the alcove barycenter");
  add_common(grading, true);

  CLI::App* strata = app.add_subcommand("strata", "leading stratum of a connection matrix at an apartment point");
  add_common(strata, true);
  strata->add_option("--r", r, "slope numerator (ignored with --input)");
  strata->add_option("--m", m, "twist exponent (ignored with --input)");
  strata->add_option("--input", input_file, "JSON file with the matrix terms");
  strata->add_option("--point", point_str, "barycenter|origin|inline JSON vector|file");

  CLI::App* irreg = app.add_subcommand("irregularity", "Newton-polygon slopes and adjoint irregularity");
  add_common(irreg, true);
  irreg->add_option("--r", r, "slope numerator (ignored with --input)");
  irreg->add_option("--m", m, "twist exponent (ignored with --input)");
  irreg->add_option("--input", input_file, "JSON file with the matrix terms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadFlags;
  }

  try {
    if (check->parsed()) return run_check(ts, r, m, oracle, format);
    if (table->parsed()) return run_table(families, rank_max, m_max, oracle, format);
    if (orbit->parsed()) return run_orbit(ts, r, oracle, format);
    if (grading->parsed()) return run_grading(ts, format);
    if (strata->parsed()) return run_strata(ts, r, m, input_file, point_str, format);
    if (irreg->parsed()) return run_irregularity(ts, r, m, input_file, format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const MismatchFound& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kExitOracleMismatch;
  } catch (const IllegalRank& e) {
    std::cerr << "illegal parameters: " << e.what() << "\n";
    return kExitIllegalParams;
  } catch (const BadSlopeNumerator& e) {
    std::cerr << "illegal parameters: " << e.what() << "\n";
    return kExitIllegalParams;
  } catch (const NotClassical& e) {
    std::cerr << "illegal parameters: " << e.what() << "\n";
    return kExitIllegalParams;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  }
  return 0;
}
