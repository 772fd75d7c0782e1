#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "spherex/error.hpp"
#include "spherex/multiplicity.hpp"

using namespace spherex;

namespace {

ComponentGroupDatum z2() {
  ComponentGroupDatum cg;
  cg.group = FiniteGroup::elementary_abelian(1);
  cg.subgroups = {{"trivial", {0}}, {"all", {0, 1}}};
  cg.characters = {{"triv", {1, 1}}, {"sign", {1, -1}}};
  return cg;
}

RefinedInput z2_refined(const ComponentGroupDatum& cg) {
  RefinedInput in;
  in.a_rank = 1;
  in.norm_image = {0};
  in.fibers.push_back({cg.subgroups.at("trivial"), cg.subgroups.at("all"), {{0, 0}, {1, 1}}});
  in.fibers.push_back({cg.subgroups.at("all"), cg.subgroups.at("all"), {{0, 0}, {1, 0}}});
  return in;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidDatum;
}

}  // namespace

TEST_CASE("Gross-Prasad signs on a small case") {
  std::vector<SelfDualConstituent> M{{"sigma", 2, SignType::Symplectic, 1, 1},
                                     {"sigma2", 2, SignType::Symplectic, 1, 1}};
  std::vector<SelfDualConstituent> N{{"tau", 2, SignType::Orthogonal, -1, 1}};
  RootNumberOracle o{{{"sigma", "tau"}, -1}, {{"sigma2", "tau"}, 1}};
  CHECK(gp_character(M, N, o, {}) == 1);
  CHECK(gp_character(M, N, o, {0}) == 1);
  CHECK(gp_character(M, N, o, {1}) == -1);
  CHECK(gp_character(M, N, o, {0, 1}) == -1);
  CHECK(gp_is_character(M, N, o));
  o.erase({"sigma2", "tau"});
  CHECK(code_of([&] { gp_character(M, N, o, {1}); }) == ErrorCode::MissingOracleEntry);
}

TEST_CASE("odd-dimensional flips are refused") {
  std::vector<SelfDualConstituent> M{{"chi", 1, SignType::Orthogonal, -1, 1}};
  std::vector<SelfDualConstituent> N{{"tau", 2, SignType::Symplectic, 1, 1}};
  RootNumberOracle o{{{"chi", "tau"}, 1}};
  CHECK(code_of([&] { gp_character(M, N, o, {0}); }) == ErrorCode::OddDimension);
}

TEST_CASE("random oracles give characters") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 25; ++i) {
    auto c = testing::random_gp_case(rng, 5);
    CHECK(gp_is_character(c.M, c.N, c.oracle));
  }
}

TEST_CASE("finite group checks") {
  FiniteGroup bad{{{0, 1}, {1, 1}}};
  CHECK_THROWS_AS(bad.validate(), Error);
  FiniteGroup::cyclic(6).validate();
  CHECK(FiniteGroup::cyclic(6).inverse(2) == 4);
  CHECK(code_of([] { check_subgroup(FiniteGroup::cyclic(4), {0, 1}); }) == ErrorCode::NotASubgroup);
  auto cg = z2();
  cg.validate();
  CHECK(pairing(cg.group, cg.subgroups.at("all"), cg.characters.at("sign"), cg.characters.at("triv")) == 0);
  cg.characters["twice"] = {2, 2};
  CHECK_THROWS_AS(cg.validate(), Error);
}

TEST_CASE("Prasad multiplicities on Z/2") {
  auto cg = z2();
  std::vector<Subgroup> fibers{cg.subgroups.at("trivial"), cg.subgroups.at("all")};
  CHECK(prasad_multiplicity(cg, cg.characters.at("triv"), fibers) == 2);
  CHECK(prasad_multiplicity(cg, cg.characters.at("sign"), fibers) == 1);
  for (const auto& [name, rho] : cg.characters)
    CHECK(fixed_point_multiplicity(cg, rho, fibers) == prasad_multiplicity(cg, rho, fibers));
  CHECK(stable_multiplicity(cg, fibers) == 3);
}

TEST_CASE("refined count sums to the coarse count") {
  auto cg = z2();
  auto in = z2_refined(cg);
  std::vector<Subgroup> psi{in.fibers[0].s_psi, in.fibers[1].s_psi};
  for (const auto& [name, rho] : cg.characters) {
    mpq_class sum = 0;
    for (const auto& [beta, m] : prasad_refined(cg, rho, in)) sum += m;
    CHECK(sum == prasad_multiplicity(cg, rho, psi));
  }
}

TEST_CASE("heart sequence must be exact") {
  auto cg = z2();
  auto in = z2_refined(cg);
  in.fibers[0].theta[1] = 0;
  CHECK(code_of([&] { check_heart_sequence(cg, in); }) == ErrorCode::InconsistentHeartSequence);
}

TEST_CASE("base-change degrees") {
  auto one = bc_degree({{"d", true, 1}});
  CHECK(one.deg == 2);
  CHECK(one.fiber == 2);
  auto two = bc_degree({{"d", true, 2}});
  CHECK(two.deg == 4);
  CHECK(two.fiber == 3);
  auto merged = bc_degree({{"d", true, 1}, {"d", true, 1}, {"e", false, 3}});
  CHECK(merged.deg == 4);
  CHECK(merged.fiber == 3);
  auto five = bc_degree({{"a", true, 1}, {"b", true, 1}, {"c", true, 1}});
  CHECK(five.m_qs == 4);
  CHECK(five.m_nqs == 4);
}

TEST_CASE("degree-weighted count for GL2/SL2") {
  CHECK(degree_weighted_count({{2, 1}, {1, 2}}) == 4);
}
