#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "spherex/boundary.hpp"
#include "spherex/error.hpp"

using namespace spherex;
using spherex::testing::fixture;

TEST_CASE("boundary degenerations keep Lambda and restrict the roots") {
  auto d = fixture("gl2_so5");
  auto b = boundary_degeneration(d, {0});
  CHECK(b.datum.lambda == d.lambda);
  CHECK(b.datum.spherical_roots == IntMat{d.spherical_roots[0]});
  CHECK(b.center_lattice.size() == 1);
  auto full = boundary_degeneration(d, {0, 1});
  CHECK(full.datum.spherical_roots == d.spherical_roots);
}

TEST_CASE("transitivity of degenerations") {
  for (const char* name : {"gl2_so5", "group_pgl2", "galois_gl3", "whittaker_pgl2"}) {
    auto r = transitivity_check(fixture(name));
    CHECK_MESSAGE(r.ok(), name);
  }
}

TEST_CASE("fan validation rejects overlapping cones") {
  auto d = testing::torus_datum(2);
  Fan f = make_fan(2, {{{1, 0}, {1, 2}}, {{1, 1}, {0, 1}}});
  CHECK_THROWS_AS(fan_validate(d, f), Error);
}

TEST_CASE("fan outside the positive cone is rejected") {
  auto d = fixture("torus_pgl2");
  CHECK_THROWS_AS(fan_validate(d, make_fan(1, {{{-1}}})), Error);
}

TEST_CASE("smooth subdivision of a singular cone") {
  auto d = testing::torus_datum(2);
  Fan f = make_fan(2, {{{1, 0}, {1, 3}}});
  CHECK_FALSE(fan_is_smooth(f));
  auto check = check_smooth_subdivision(d, f);
  CHECK(check.ok());
  CHECK(check.result.cones.size() == 3);
}

TEST_CASE("smooth subdivision on random fans") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 6; ++i) {
    std::size_t r = 2 + static_cast<std::size_t>(i % 2);
    auto d = testing::torus_datum(r);
    Fan f = testing::random_fan(rng, r, i % 3 == 0);
    fan_validate(d, f);
    CHECK(check_smooth_subdivision(d, f).ok());
  }
}

TEST_CASE("orbit poset of the GL2\\SO5 chamber fan") {
  auto d = fixture("gl2_so5");
  Fan f = make_fan(2, {{{1, 0}, {0, 1}}});
  auto p = orbit_poset(d, f);
  CHECK(p.nodes.size() == 4);
  CHECK(check_anti_isomorphism(p));
}
