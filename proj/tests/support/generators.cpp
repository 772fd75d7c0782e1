#include "generators.hpp"

#include <algorithm>
#include <string>

#include "spherex/cone.hpp"

namespace spherex::testing {

SphericalDatum torus_datum(std::size_t r) {
  SphericalDatum d;
  d.name = "torus" + std::to_string(r);
  d.g.rank = r;
  d.lambda = identity(r);
  return d;
}

Fan random_fan(std::mt19937_64& rng, std::size_t r, bool triangulated) {
  std::uniform_int_distribution<Int> coord(-4, 4);
  std::uniform_int_distribution<Int> lead(1, 4);
  std::uniform_int_distribution<std::size_t> extra(0, 3);
  for (;;) {
    IntMat gens;
    std::size_t count = r + extra(rng);
    for (std::size_t i = 0; i < count; ++i) {
      IntVec v(r);
      v[0] = lead(rng);
      for (std::size_t k = 1; k < r; ++k) v[k] = coord(rng);
      gens.push_back(primitive(v));
    }
    Cone c(r, gens);
    if (c.span_dim() != r) continue;
    IntMat extreme;
    for (const auto& g : c.gens) {
      IntMat others;
      for (const auto& h : c.gens)
        if (h != g) others.push_back(h);
      if (others.empty() || !contains(Cone(r, others), g)) extreme.push_back(g);
    }
    Cone pointed(r, extreme);
    if (!triangulated) return make_fan(r, {pointed.gens});
    std::vector<IntMat> pieces;
    for (const auto& piece : pulling_triangulation(pointed, pointed.gens)) pieces.push_back(piece.gens);
    return make_fan(r, pieces);
  }
}

GpCase random_gp_case(std::mt19937_64& rng, int max_constituents) {
  std::uniform_int_distribution<int> count(1, max_constituents);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> half_dim(1, 2);
  GpCase out;
  auto fill = [&](std::vector<SelfDualConstituent>& side, const std::string& prefix) {
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      SelfDualConstituent c;
      c.label = prefix + std::to_string(i);
      c.dim = 2 * half_dim(rng);
      c.sign_type = coin(rng) ? SignType::Symplectic : SignType::Orthogonal;
      c.det_at_minus1 = c.sign_type == SignType::Orthogonal && coin(rng) ? -1 : 1;
      c.mult = 1 + coin(rng);
      side.push_back(c);
    }
  };
  fill(out.M, "sigma");
  fill(out.N, "tau");
  for (const auto& a : out.M)
    for (const auto& b : out.N) out.oracle[{a.label, b.label}] = coin(rng) ? 1 : -1;
  return out;
}

}  // namespace spherex::testing
