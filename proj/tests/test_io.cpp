#include "doctest.h"

#include "coxrig/io.hpp"

using namespace coxrig;

TEST_CASE("root system JSON carries family, rank, h and integer root vectors") {
  RootSystem rs = build_root_system({Family::G, 2});
  Json j = to_json(rs);
  CHECK(j["family"] == "G");
  CHECK(j["rank"] == 2);
  CHECK(j["h"] == 6);
  CHECK(j["roots"].size() == 12);
  CHECK(j["roots"][0].is_array());
}

TEST_CASE("verdict JSON round-trips and CSV row is stable") {
  RigidityVerdict v = numerical_index(CoxeterParams{{Family::A, 4}, 2, 0}, Oracle::partition);
  Json j = to_json(v);
  RigidityVerdict back = verdict_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(verdict_csv_row(v) == "A,4,2,0,8,0,8,0,0,true,partition");
  CHECK(std::string(kVerdictCsvHeader) == "family,rank,r,m,irr0,dimI0,dimIinf,dimI,n,rigid,method");
}

TEST_CASE("loop element JSON round-trips") {
  RootSystem rs = build_root_system({Family::B, 2});
  LoopElement a = connection_matrix(rs, 1, 1);
  // add a Cartan term with a fractional coefficient
  GElement extra = coroot_vector(rs, 1, make_rat(3, 7));
  a = loop_add(a, loop_term(extra, 2));
  Json j = to_json(rs, a);
  LoopElement back = loop_element_from_json(rs, j);
  CHECK(to_json(rs, back) == j);

  CHECK_THROWS_AS(loop_element_from_json(rs, Json::object()), std::invalid_argument);
  Json bad = Json::array();
  bad.push_back({{"degree", 0}, {"basis", "root"}, {"root_coeffs", {9, 9}}, {"value", "1"}});
  CHECK_THROWS_AS(loop_element_from_json(rs, bad), std::invalid_argument);
}

TEST_CASE("apartment point parsing") {
  RootSystem rs = build_root_system({Family::A, 2});
  Json j = Json::array({"1/3", "0"});
  ApartmentPoint x = apartment_point_from_json(rs, j);
  CHECK(x.values[0] == make_rat(1, 3));
  CHECK(x.values[1] == 0);
  CHECK(to_json(x) == Json::array({"1/3", "0"}));
  CHECK_THROWS_AS(apartment_point_from_json(rs, Json::array({"1/3"})), std::invalid_argument);
}

TEST_CASE("nilpotent data JSON distinguishes classical and exceptional") {
  Json a = to_json(nilpotent_data({Family::A, 4}, 2, false));
  CHECK(a["jordan"] == Json::array({3, 2}));
  CHECK(a["dimC"] == 8);
  CHECK(a["dimO"] == 16);
  Json g = to_json(nilpotent_data({Family::G, 2}, 5, true));
  CHECK(g["jordan"].is_null());
  CHECK(g["dimO"] == 6);
}

TEST_CASE("output record envelope") {
  Json j = output_record("check", Json{{"x", 1}});
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "check");
  CHECK(j["payload"]["x"] == 1);
  // key order is fixed by construction
  std::string s = j.dump();
  CHECK(s.find("schema_version") < s.find("command"));
  CHECK(s.find("command") < s.find("payload"));
}
