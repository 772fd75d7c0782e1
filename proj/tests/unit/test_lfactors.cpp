#include <doctest.h>

#include "fixtures.hpp"
#include "spherex/dual_group.hpp"
#include "spherex/error.hpp"
#include "spherex/lfactors.hpp"

using namespace spherex;
using spherex::testing::fixture;

namespace {

LaurentRational q_minus(long k) { return LaurentRational::one_minus({{"u", 2 * k}}); }

// chi -> w chi for w acting on X_*(A_X) by x -> m x.
Substitution weyl_substitution(const SatakeParam& chi, const IntMat& m) {
  Substitution s;
  for (std::size_t j = 0; j < chi.rank; ++j) {
    Monomial image;
    for (std::size_t k = 0; k < chi.rank; ++k)
      if (m[k][j] != 0) image[chi.t_var(k)] = static_cast<long>(m[k][j]);
    s[chi.t_var(j)] = VarImage{1, 1, image};
  }
  return s;
}

}  // namespace

TEST_CASE("eval_L is multiplicative in the representation") {
  auto d = fixture("gl2_so5");
  auto chi = SatakeParam::formal(2);
  auto a = adjoint_weights(d, 2, true);
  auto b = d.symplectic;
  b.add({1, 0}, 1);
  b.add({-1, 0}, 1);
  auto ab = a;
  ab += b;
  CHECK(eval_L(ab, chi, 0) == eval_L(a, chi, 0) * eval_L(b, chi, 0));
  CHECK(eval_L({}, chi, 3) == LaurentRational());
}

TEST_CASE("eval_L specializes to numbers") {
  auto d = fixture("whittaker_pgl2");
  auto chi = SatakeParam::formal(1);
  chi.values[0] = 2;
  chi.q = 5;
  auto l = eval_L(adjoint_weights(d, 0, true), chi, 2);
  REQUIRE(l.is_constant());
  CHECK(l.constant() == mpq_class(125, 19));
}

TEST_CASE("Tamagawa factors") {
  RootDatum pgl2{1, {{1}}, {{2}}, {"alpha"}};
  CHECK(tamagawa_factor(pgl2) == q_minus(2).inverse());
  RootDatum torus{2, {}, {}, {}};
  CHECK(hyperspecial_volume(torus) == q_minus(1).pow(2));
}

TEST_CASE("Plancherel density is W_X-invariant") {
  for (const char* name : {"torus_pgl2", "gl2_so5", "group_pgl2", "galois_gl3"}) {
    auto d = fixture(name);
    auto chi = SatakeParam::formal(d.r());
    auto mu = plancherel_density(d, chi);
    auto w = little_weyl_group(d);
    for (std::size_t i = 0; i < w.size(); ++i)
      CHECK_MESSAGE(mu.substitute(weyl_substitution(chi, w.matrix(i))) == mu, name);
  }
}

TEST_CASE("Whittaker relative character") {
  auto d = fixture("whittaker_pgl2");
  auto chi = SatakeParam::formal(1);
  auto rc = relative_character_unramified(d, chi);
  CHECK(rc.rho.empty());
  CHECK(rc.J == rc.delta_inv / eval_L(adjoint_weights(d, 0, true), chi, 2));
  CHECK(rc.omega == tamagawa_factor(d.g) * rc.J * plancherel_density(d, chi));
}

TEST_CASE("HII density and regularization") {
  auto d = fixture("torus_pgl2");
  auto chi = SatakeParam::formal(1);
  chi.values[0] = 1;
  auto ad = adjoint_weights(d, 0, true);
  auto r = hii_density(ad, chi, 3, 1, 1);
  CHECK(r.vanishing_order == 3);
  try {
    hii_density(ad, chi, 1, 1, 1);
    FAIL("expected RegularizationMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RegularizationMismatch);
  }
}

TEST_CASE("global assembly is independent of S") {
  auto d = fixture("torus_pgl2");
  std::vector<Place> places;
  for (const char* name : {"v1", "v2", "v3"}) places.push_back({name, SatakeParam::formal(1, std::string("_") + name)});
  auto report = global_assembly(d, places, all_splits(places));
  CHECK(report.splits.size() == 8);
  CHECK(report.s_independent);
  CHECK(report.rational_constant == "q_phi");
  CHECK(report.tail_places == 22);
}
