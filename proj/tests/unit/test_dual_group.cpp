#include <doctest.h>

#include "fixtures.hpp"
#include "spherex/dual_group.hpp"
#include "spherex/error.hpp"

using namespace spherex;
using spherex::testing::fixture;

TEST_CASE("dual group of T\\PGL2 is SL2") {
  auto dual = build_dual(fixture("torus_pgl2"));
  CHECK(dual.datum.simple_roots == IntMat{{2}});
  CHECK(dual.datum.simple_coroots == IntMat{{1}});
}

TEST_CASE("type N roots block the dual group") {
  try {
    build_dual(fixture("normalizer_pgl2"));
    FAIL("expected TypeNPresent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TypeNPresent);
  }
}

TEST_CASE("GL2\\SO5 has dual group of type A1xA1") {
  auto dual = build_dual(fixture("gl2_so5"));
  CHECK(cartan_type(dual.datum.cartan()) == "A1xA1");
}

TEST_CASE("rho_X of the Whittaker model vanishes") {
  CHECK(derive_rho_adjoint_part(fixture("whittaker_pgl2")).empty());
  CHECK(rho_X(fixture("whittaker_pgl2")).empty());
}

TEST_CASE("rho_X of T\\PGL2 is the supplied symplectic part") {
  auto d = fixture("torus_pgl2");
  CHECK(derive_rho_adjoint_part(d).empty());
  CHECK(rho_X(d) == d.symplectic);
}

TEST_CASE("distinguished morphism of the point") {
  auto m = distinguished_morphism(fixture("point_a1"));
  CHECK(m.sl2_cocharacter == IntVec{1});
  CHECK(m.torus_map.empty());
}

TEST_CASE("adjoint weights count dimensions") {
  auto d = fixture("gl2_so5");
  CHECK(adjoint_weights(d, 2, true).total() == 6);
  CHECK(adjoint_weights(d, 2, false).total() == 4);
}

TEST_CASE("Galois pinning fixability") {
  CHECK(galois_action(fixture("galois_gl3")).pinning_fixable);
  CHECK_FALSE(galois_action(fixture("galois_gl2")).pinning_fixable);
}
