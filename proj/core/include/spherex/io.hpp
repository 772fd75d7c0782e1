#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "spherex/boundary.hpp"
#include "spherex/error.hpp"
#include "spherex/lfactors.hpp"
#include "spherex/multiplicity.hpp"
#include "spherex/spherical.hpp"
#include "spherex/weights.hpp"

namespace spherex {

using json = nlohmann::json;

// Reads and parses a JSON file. Syntax errors become Error(ParseError) with
// "file:line:column".
json load_json_file(const std::filesystem::path& path);

SphericalDatum datum_from_json(const json& j);
json datum_to_json(const SphericalDatum& d);
// Accepts either a bare datum or a catalogue entry with a "datum" member.
SphericalDatum load_datum(const std::filesystem::path& path);

RootDatum root_datum_from_json(const json& j);
json root_datum_to_json(const RootDatum& rd);

GradedWeightMultiset weights_from_json(const json& j);
json weights_to_json(const GradedWeightMultiset& m);

Fan fan_from_json(const json& j, std::size_t dim);
json fan_to_json(const Fan& f);

mpq_class rational_from_json(const json& j);  // integer or "p/q" string

// "t1=1/2,t2=3" on a rank-r torus, with an optional place suffix.
SatakeParam parse_chi(const std::string& spec, std::size_t rank, const std::string& suffix = "");
std::vector<Place> places_from_json(const json& j, std::size_t rank);

std::vector<SelfDualConstituent> constituents_from_json(const json& j);
RootNumberOracle oracle_from_json(const json& j);
ComponentGroupDatum component_group_from_json(const json& j);
RefinedInput refined_from_json(const json& j, const ComponentGroupDatum& cg);
std::vector<BcConstituent> bc_from_json(const json& j);

[[noreturn]] void rethrow_in_file(const std::filesystem::path& file);

// Runs `body`; schema failures are rethrown as Error(ParseError) naming the
// file and the line where the offending key first appears.
template <class F>
auto with_schema_context(const std::filesystem::path& file, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (...) {
    rethrow_in_file(file);
  }
}

}  // namespace spherex
