#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "fixtures.hpp"
#include "spherex/catalogue.hpp"

using namespace spherex;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("spherex_" + tag + "_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("every catalogue entry survives parse, serialize, parse") {
  auto entries = load_catalogue(testing::catalogue_dir());
  REQUIRE(entries.size() >= 15);
  for (const auto& e : entries) {
    json once = entry_to_json(e);
    CatalogueEntry again = entry_from_json(once);
    CHECK_MESSAGE(entry_to_json(again) == once, e.name);
    if (e.datum) CHECK_MESSAGE(*again.datum == *e.datum, e.name);
  }
}

TEST_CASE("shipped catalogue validates") {
  auto report = validate_all(testing::catalogue_dir());
  CHECK(report.failures() == 0);
  CHECK(report.checks.size() > 100);
}

TEST_CASE("an injected wrong expectation is reported by name") {
  TempDir dir("fault");
  for (const auto& e : load_catalogue(testing::catalogue_dir())) {
    json j = entry_to_json(e);
    if (e.name == "torus_pgl2") j["expected"]["wavefront"]["value"] = false;
    write(dir.path / (e.name + ".json"), j.dump(2));
  }
  auto report = validate_all(dir.path);
  REQUIRE(report.failures() == 1);
  for (const auto& c : report.checks)
    if (!c.ok) {
      CHECK(c.entry == "torus_pgl2");
      CHECK(c.key == "wavefront");
    }
  CHECK(report.to_text().find("FAIL torus_pgl2 wavefront") != std::string::npos);
}

TEST_CASE("syntax errors carry file and line") {
  TempDir dir("syntax");
  write(dir.path / "broken.json", "{\n  \"name\": \"x\",\n  \"datum\": [1, 2,, 3]\n}\n");
  try {
    load_entry(dir.path / "broken.json");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("broken.json:3:") != std::string::npos);
  }
}

TEST_CASE("schema errors point at the offending key") {
  TempDir dir("schema");
  write(dir.path / "bad.json",
        "{\n  \"name\": \"bad\",\n  \"datum\": {\n    \"group\": {\"rank\": 1, \"simple_roots\": [[1]],\n"
        "      \"simple_coroots\": [[2]]},\n    \"lambda\": \"oops\"\n  }\n}\n");
  try {
    load_entry(dir.path / "bad.json");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("bad.json:6") != std::string::npos);
  }
}

TEST_CASE("reports are deterministic") {
  auto d = testing::fixture("gl2_so5");
  CHECK(report_json(d) == report_json(d));
  auto text = report_text(testing::fixture("whittaker_pgl2"));
  CHECK(text.find("ρ_X = 0") != std::string::npos);
}
