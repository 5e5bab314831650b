#pragma once

#include "coxrig/rigidity.hpp"
#include "coxrig/strata.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace coxrig {

// insertion-ordered JSON so identical invocations emit identical bytes
using Json = nlohmann::ordered_json;

Json to_json(const RootSystem& rs);
Json to_json(const Partition& p);
Json to_json(const NilpotentData& d);
Json to_json(const RigidityVerdict& v);
Json to_json(const Stratum& s);
Json to_json(const NewtonPolygon& p);
Json to_json(const RootSystem& rs, const LoopElement& a);
Json to_json(const ApartmentPoint& x);

/// Terms format: [{"degree": d, "basis": "root"|"cartan",
///   "root_coeffs": [...] | "cartan_index": j, "value": "p/q"}, ...]
LoopElement loop_element_from_json(const RootSystem& rs, const Json& j);

/// Rational vector ["a/b", ...] of length rank.
ApartmentPoint apartment_point_from_json(const RootSystem& rs, const Json& j);

RigidityVerdict verdict_from_json(const Json& j);

/// Fixed verdict CSV schema.
extern const char* const kVerdictCsvHeader;  // family,rank,r,m,irr0,dimI0,dimIinf,dimI,n,rigid,method
std::string verdict_csv_row(const RigidityVerdict& v);

/// Envelope for machine-readable CLI output.
Json output_record(const std::string& command, Json payload);

}  // namespace coxrig
