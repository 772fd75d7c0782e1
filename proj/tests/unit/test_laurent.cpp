#include <doctest.h>

#include "spherex/laurent.hpp"

using namespace spherex;

namespace {

LaurentRational var(const std::string& v, long e = 1) { return LaurentRational::monomial({{v, e}}); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == UPoly{1, -1});
  CHECK(cyclotomic(2) == UPoly{1, 1});
  CHECK(cyclotomic(4) == UPoly{1, 0, 1});
  CHECK(cyclotomic(6) == UPoly{1, -1, 1});
  CHECK(cyclotomic(12) == UPoly{1, 0, -1, 0, 1});
  // Product over divisors of 12 is x^12 - 1 up to sign.
  LaurentRational prod;
  for (int d : {1, 2, 3, 4, 6, 12}) {
    std::map<long, mpq_class> terms;
    const auto& p = cyclotomic(d);
    for (std::size_t i = 0; i < p.size(); ++i) terms[static_cast<long>(i)] = mpq_class(p[i]);
    prod *= LaurentRational::univariate({{"x", 1}}, terms);
  }
  CHECK(prod == LaurentRational::one_minus({{"x", 12}}));
}

TEST_CASE("factored equality is exact") {
  auto a = LaurentRational::one_minus({{"u", 4}});
  auto b = LaurentRational::one_minus({{"u", 2}}) * LaurentRational::univariate({{"u", 2}}, {{0, 1}, {1, 1}});
  CHECK(a == b);
  CHECK(a != LaurentRational::one_minus({{"u", 2}}));
  CHECK((a / a) == LaurentRational());
  // 1 - t^-2 = -t^-2 (1 - t^2)
  auto c = LaurentRational::one_minus({{"t1", -2}});
  auto d = var("t1", -2) * LaurentRational(-1) * LaurentRational::one_minus({{"t1", 2}});
  CHECK(c == d);
}

TEST_CASE("non-cyclotomic factors use a coprime basis") {
  // (1 + 2x)(1 - x) against (1 + x - 2x^2)
  auto a = LaurentRational::univariate({{"x", 1}}, {{0, 1}, {1, 2}}) * LaurentRational::one_minus({{"x", 1}});
  auto b = LaurentRational::univariate({{"x", 1}}, {{0, 1}, {1, 1}, {2, -2}});
  CHECK(a == b);
  auto c = LaurentRational::univariate({{"x", 1}}, {{0, 1}, {1, 3}});
  CHECK((a * c) / c == b);
}

TEST_CASE("multivariate monomial bases") {
  auto a = LaurentRational::one_minus({{"u", 2}, {"t1", 2}});
  auto b = LaurentRational::one_minus({{"u", 1}, {"t1", 1}}) * LaurentRational::one_minus({{"u", 1}, {"t1", 1}}, -1);
  CHECK(a == b);
  CHECK(a.to_string() == "(1 - u^2*t1^2)");
}

TEST_CASE("q-form printing pairs u with -u") {
  auto a = LaurentRational::one_minus({{"u", 4}}).pow(2);
  REQUIRE(a.has_q_form());
  CHECK(a.to_string(true) == "(1 - q^-2)^2");
  // Phi_3(u^2) = Phi_3(u) Phi_6(u) has no (1 - u^k) grouping.
  auto b = LaurentRational::univariate({{"u", 2}}, {{0, 1}, {1, 1}, {2, 1}});
  REQUIRE(b.has_q_form());
  CHECK(b.to_string(true) == "(1 + q^-1 + q^-2)");
  auto odd = LaurentRational::one_minus({{"u", 1}, {"t1", 1}});
  CHECK_FALSE(odd.has_q_form());
  CHECK_THROWS(odd.to_string(true));
}

TEST_CASE("substitution and evaluation") {
  auto f = LaurentRational::one_minus({{"u", 2}, {"t1", 2}}).inverse();
  // u^2 = 1/5, t1 = 2: 1 / (1 - 4/5) = 5
  CHECK(f.evaluate({{"t1", 2}}, "u", 5) == 5);
  auto g = LaurentRational::one_minus({{"u", 1}, {"t1", 1}}) * LaurentRational::one_minus({{"u", 1}, {"t1", -1}});
  CHECK_THROWS(g.evaluate({{"t1", 1}}, "u", 5));
  auto h = g * LaurentRational::one_minus({{"u", 1}, {"t1", 1}}, -1) * LaurentRational::one_minus({{"u", 1}, {"t1", -1}}, -1);
  // (1 - u^2 t^2)(1 - u^2 t^-2) at t = 3, q = 2: (1 - 9/2)(1 - 1/18)
  CHECK(h.evaluate({{"t1", 3}}, "u", 2) == mpq_class(-7, 2) * mpq_class(17, 18));
  Substitution s;
  s["t1"] = VarImage{1, 1, {{"t2", 1}}};
  CHECK(f.substitute(s) == LaurentRational::one_minus({{"u", 2}, {"t2", 2}}).inverse());
}

TEST_CASE("zero and poles") {
  auto z = LaurentRational::zero();
  CHECK(z.is_zero());
  CHECK(z.to_string() == "0");
  CHECK_THROWS(z.inverse());
  auto f = LaurentRational::one_minus({{"t1", 1}}).inverse();
  CHECK_THROWS(f.evaluate({{"t1", 1}}));
}
