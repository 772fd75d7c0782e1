#include <doctest.h>

#include "point_counts.hpp"
#include "spherex/error.hpp"
#include "spherex/root_data.hpp"

using namespace spherex;

namespace {

RootDatum sl2() { return {1, {{2}}, {{1}}, {"alpha"}}; }
RootDatum pgl2() { return {1, {{1}}, {{2}}, {"alpha"}}; }
RootDatum sp4() { return {2, {{1, -1}, {0, 2}}, {{1, -1}, {0, 1}}, {"a", "b"}}; }
RootDatum gl3() { return {3, {{1, -1, 0}, {0, 1, -1}}, {{1, -1, 0}, {0, 1, -1}}, {"a", "b"}}; }
RootDatum g2() { return {2, {{1, 0}, {0, 1}}, {{2, -1}, {-3, 2}}, {"a", "b"}}; }

}  // namespace

TEST_CASE("Weyl group orders and longest length") {
  CHECK(generate_weyl(sl2()).size() == 2);
  CHECK(generate_weyl(gl3()).size() == 6);
  auto w = generate_weyl(sp4());
  CHECK(w.size() == 8);
  CHECK(w.max_length() == 4);
  CHECK(positive_roots(sp4()).size() == 4);
  CHECK(generate_weyl(g2()).size() == 12);
  CHECK(positive_roots(g2()).size() == 6);
}

TEST_CASE("reduced words reproduce the matrices") {
  auto rd = sp4();
  auto w = generate_weyl(rd);
  for (std::size_t i = 0; i < w.size(); ++i) {
    IntMat m = identity(rd.rank);
    for (int s : w.word(i)) m = mul(m, w.generators()[static_cast<std::size_t>(s)]);
    CHECK(w.word(i).size() == static_cast<std::size_t>(w.length(i)));
    CHECK(m == w.matrix(i));
  }
}

TEST_CASE("Weyl cap is enforced") {
  CHECK_THROWS_AS(generate_weyl(g2(), 5), Error);
}

TEST_CASE("cartan types") {
  CHECK(cartan_type(sp4().cartan()) == "B2");
  RootDatum sp6{3, {{1, -1, 0}, {0, 1, -1}, {0, 0, 2}}, {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}, {"a", "b", "c"}};
  CHECK(cartan_type(sp6.cartan()) == "C3");
  CHECK(cartan_type(dual_root_datum(sp6).cartan()) == "B3");
  CHECK(cartan_type(gl3().cartan()) == "A2");
  CHECK(cartan_type(g2().cartan()) == "G2");
  CHECK(cartan_type(dual_root_datum(sp4()).cartan()) == "B2");
}

TEST_CASE("dual root datum is an involution") {
  CHECK(dual_root_datum(dual_root_datum(sp4())) == sp4());
  CHECK(dual_root_datum(sl2()).simple_roots == pgl2().simple_roots);
}

TEST_CASE("point counts agree with brute force") {
  for (int q : {2, 3}) {
    CHECK(point_count(sl2(), generate_weyl(sl2()), q) == testing::count_sl2(q));
    CHECK(point_count(pgl2(), generate_weyl(pgl2()), q) == testing::count_pgl2(q));
    CHECK(point_count(sp4(), generate_weyl(sp4()), q) == testing::count_sp4(q));
  }
}

TEST_CASE("duality involution") {
  auto rd = gl3();
  auto inv = duality_involution(rd, generate_weyl(rd));
  CHECK(inv.perm == std::vector<int>{1, 0});
}
