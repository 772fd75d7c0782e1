#pragma once

#include <filesystem>
#include <string>

#include "spherex/io.hpp"

namespace spherex::testing {

inline std::filesystem::path catalogue_dir() { return SPHEREX_TEST_CATALOGUE; }

inline SphericalDatum fixture(const std::string& name) {
  return load_datum(catalogue_dir() / "data" / (name + ".json"));
}

}  // namespace spherex::testing
