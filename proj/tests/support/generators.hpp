#pragma once

#include <random>
#include <vector>

#include "spherex/boundary.hpp"
#include "spherex/multiplicity.hpp"
#include "spherex/spherical.hpp"

namespace spherex::testing {

// A rank-r torus acting on itself: no roots, Lambda_X = X*(A), so A_X^+ is
// the whole space and any fan is admissible.
SphericalDatum torus_datum(std::size_t r);

// A random fan of rank r supported on one random pointed full-dimensional
// cone: either its pulling triangulation or the cone alone, which is usually
// not simplicial.
Fan random_fan(std::mt19937_64& rng, std::size_t r, bool triangulated);

struct GpCase {
  std::vector<SelfDualConstituent> M, N;
  RootNumberOracle oracle;
};

// Random constituents of even total dimension (1 to max_constituents on each
// side) and random root numbers for every pair.
GpCase random_gp_case(std::mt19937_64& rng, int max_constituents);

}  // namespace spherex::testing
