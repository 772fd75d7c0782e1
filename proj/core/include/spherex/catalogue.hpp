#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spherex/spherical.hpp"

namespace spherex {

struct Expectation {
  std::string key;
  nlohmann::json value;
  std::string provenance;  // paper | derived | trivial
};

// One catalogue file. `kind` is "datum" for spherical data and "ggp",
// "prasad" or "bc" for multiplicity cases.
struct CatalogueEntry {
  std::string name;
  std::string kind = "datum";
  std::filesystem::path file;
  std::optional<SphericalDatum> datum;
  nlohmann::json body;  // every member other than name, kind, datum and expected
  std::vector<Expectation> expected;
};

// SPHEREX_CATALOGUE if set, otherwise the directory shipped with the sources.
std::filesystem::path default_catalogue_dir();

CatalogueEntry entry_from_json(const nlohmann::json& j);
nlohmann::json entry_to_json(const CatalogueEntry& e);
CatalogueEntry load_entry(const std::filesystem::path& file);
// All *.json files under dir, sorted by path.
std::vector<CatalogueEntry> load_catalogue(const std::filesystem::path& dir);

// Computes the current value of one named invariant for an entry.
nlohmann::json compute_invariant(const CatalogueEntry& e, const std::string& key);

struct CheckResult {
  std::string entry;
  std::string key;
  std::string provenance;
  nlohmann::json expected;
  nlohmann::json actual;
  bool ok = false;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::size_t failures() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

ValidationReport validate_entry(const CatalogueEntry& e);
ValidationReport validate_all(const std::filesystem::path& dir);
ValidationReport validate_all(const std::vector<CatalogueEntry>& entries);

struct ReportSections {
  bool invariants = true;
  bool dual_group = true;
  bool morphism = true;
  bool boundary = true;
  bool fans = true;
  bool lfactors = true;
};

// Deterministic document describing a datum. Fans come from the entry when
// one is given.
nlohmann::json report_json(const SphericalDatum& d, const ReportSections& s = {},
                           const nlohmann::json& fans = nlohmann::json::array());
std::string report_text(const SphericalDatum& d, const ReportSections& s = {},
                        const nlohmann::json& fans = nlohmann::json::array());

}  // namespace spherex
