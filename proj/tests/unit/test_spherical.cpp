#include <doctest.h>

#include "fixtures.hpp"
#include "spherex/error.hpp"
#include "spherex/spherical.hpp"

using namespace spherex;
using spherex::testing::fixture;

namespace {

std::vector<RootType> types(const SphericalDatum& d) {
  std::vector<RootType> out;
  for (const auto& r : spherical_system(d).roots) out.push_back(r.type);
  return out;
}

}  // namespace

TEST_CASE("spherical root types") {
  CHECK(types(fixture("torus_pgl2")) == std::vector{RootType::T});
  CHECK(types(fixture("normalizer_pgl2")) == std::vector{RootType::N});
  auto group = spherical_system(fixture("group_pgl2"));
  REQUIRE(group.roots.size() == 1);
  CHECK(group.roots[0].type == RootType::G);
  CHECK(group.roots[0].is_d2);
  CHECK(types(fixture("gl2_so5")) == std::vector{RootType::T, RootType::T});
}

TEST_CASE("validation of the shipped data") {
  for (const char* name : {"torus_pgl2", "group_pgl2", "whittaker_pgl2", "gl2_so5", "ggp_shell", "point_a1"})
    CHECK_MESSAGE(validate(fixture(name)).empty(), name);
}

TEST_CASE("type G root outside the root lattice is rejected") {
  auto d = fixture("group_pgl2");
  d.spherical_roots = {{1, 2}};
  CHECK_THROWS_AS(validate(d), Error);
}

TEST_CASE("little Weyl group and wavefront") {
  CHECK(little_weyl_group(fixture("torus_pgl2")).size() == 2);
  CHECK(little_weyl_group(fixture("gl2_so5")).size() == 4);
  CHECK(wavefront(fixture("torus_pgl2")));
  CHECK_FALSE(wavefront(fixture("gl2_so5")));
}

TEST_CASE("coroot containment and center") {
  CHECK(check_coroot_containment(fixture("torus_pgl2")).ok);
  CHECK(center(fixture("gl2_so5")).rank() == 0);
  CHECK(center(fixture("gl2_so5_boundary_alpha")).rank() == 1);
}

TEST_CASE("fundamental domain sampling") {
  for (const char* name : {"torus_pgl2", "gl2_so5", "galois_gl3"}) {
    auto r = check_fundamental_domain(fixture(name), 200, 7);
    CHECK_MESSAGE(r.ok(), name);
    CHECK(r.samples == 200);
  }
}
