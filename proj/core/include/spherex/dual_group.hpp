#pragma once

#include <vector>

#include "spherex/root_data.hpp"
#include "spherex/spherical.hpp"
#include "spherex/weights.hpp"

namespace spherex {

// (X_*(A_X), Delta_X^vee, X*(A_X), Delta_X): the root datum of the dual group.
struct DualGroupDatum {
  RootDatum datum;

  // Standard Levi of the dual group attached to a subset of Delta_X.
  RootDatum levi(const std::vector<int>& theta) const;
};

DualGroupDatum build_dual(const SphericalDatum& d);

struct RootTarget {
  RootType type = RootType::T;
  std::vector<IntVec> coroots;  // G-coroots in X_*(A)
  std::vector<int> signs;
  bool is_d2 = false;
};

struct DistinguishedMorphismData {
  IntMat torus_map;        // rows lambda_i: X_*(A) -> X_*(A_X)
  IntVec sl2_cocharacter;  // 2 rho of the Levi of Delta(X), in X*(A)
  std::vector<RootTarget> targets;
};

DistinguishedMorphismData distinguished_morphism(const SphericalDatum& d);

struct GaloisActionResult {
  std::vector<int> perm;  // on the simple roots of the dual group
  IntMat lattice;         // on X_*(A_X)
  bool pinning_fixable = true;
  bool involutive = true;
};

GaloisActionResult galois_action(const SphericalDatum& d);

// Roots of the dual group as weights in X_*(A_X).
IntMat dual_roots(const SphericalDatum& d);
// Weights of the adjoint representation of the dual group in the given degree.
GradedWeightMultiset adjoint_weights(const SphericalDatum& d, int degree, bool with_zeros = true);

GradedWeightMultiset derive_rho_adjoint_part(const SphericalDatum& d);
// S_X plus the derived adjoint part.
GradedWeightMultiset rho_X(const SphericalDatum& d);

}  // namespace spherex
