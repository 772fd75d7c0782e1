#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spherex/cone.hpp"
#include "spherex/root_data.hpp"
#include "spherex/weights.hpp"

namespace spherex {

struct GaloisData {
  bool galois_case = false;
  std::vector<int> sigma;  // permutation of the simple roots of the dual group
  IntMat lattice;          // action on X_*(A_X); empty means the identity
  bool operator==(const GaloisData&) const = default;
};

struct SphericalDatum {
  std::string name;
  RootDatum g;
  IntMat lambda;           // basis rows of Lambda_X inside X*(A), kept in HNF
  IntMat spherical_roots;  // coordinates in the simple roots of G
  std::vector<int> parabolic;  // indices of Delta(X) in the simple roots
  bool whittaker = false;
  std::optional<GaloisData> galois;
  GradedWeightMultiset symplectic;  // supplied S_X, weights in X_*(A_X)
  // Optional sign override for the line of a type-G root (index into Delta_X).
  std::vector<std::pair<std::size_t, std::pair<int, int>>> line_signs;

  std::size_t r() const { return lambda.size(); }
  bool operator==(const SphericalDatum&) const = default;
};

enum class RootType { T, N, G };
const char* to_string(RootType t);

struct SphericalRootInfo {
  IntVec root;  // simple-root coordinates
  RootType type = RootType::T;
  std::optional<std::pair<IntVec, IntVec>> associated;  // simple-root coordinates
  bool is_d2 = false;
  IntVec coroot;  // in X_*(A_X); filled by spherical_coroot
};

// Character of A in X*(A) for simple-root coordinates.
IntVec root_vector(const SphericalDatum& d, const IntVec& coords);
// Coordinates of a character in the basis of Lambda_X (over Q), if it lies in Q Lambda_X.
std::optional<QVec> lambda_coords(const SphericalDatum& d, const IntVec& chi);
// Image of a cocharacter of A in X_*(A_X).
IntVec restrict_cocharacter(const SphericalDatum& d, const IntVec& mu);

SphericalRootInfo classify_root(const SphericalDatum& d, const IntVec& alpha);
IntVec spherical_coroot(const SphericalDatum& d, const SphericalRootInfo& info);

// Classification plus derived data for every spherical root.
struct SphericalSystem {
  std::vector<SphericalRootInfo> roots;
  QMat roots_lambda;  // Delta_X in Lambda_X coordinates
  IntMat coroots;     // Delta_X^vee in X_*(A_X)
  IntMat cartan;      // <alpha_i, alpha_j^vee>
  std::vector<std::string> warnings;
};

SphericalSystem spherical_system(const SphericalDatum& d);

// Structural checks, classification and spherical Cartan finiteness.
// Throws Error on the first violation; returns non-fatal warnings.
std::vector<std::string> validate(const SphericalDatum& d);

struct CorootContainment {
  bool ok = true;
  std::vector<std::optional<IntVec>> witness;  // G-coroot in X_*(A) per spherical root
};
CorootContainment check_coroot_containment(const SphericalDatum& d);

struct CenterLattice {
  IntMat basis;  // saturated sublattice of X_*(A_X)
  std::size_t rank() const { return basis.size(); }
};
CenterLattice center(const SphericalDatum& d);

WeylGroup little_weyl_group(const SphericalDatum& d, std::size_t cap = WeylGroup::kDefaultCap);
// Action of W_X element i on Lambda_X coordinates (contragredient action).
QMat character_action(const WeylGroup& w, std::size_t i);

Cone valuation_cone(const SphericalDatum& d);
Cone negative_chamber_image(const SphericalDatum& d);

struct WavefrontReport {
  bool image_contained = false;
  bool wavefront = false;
};
WavefrontReport wavefront_report(const SphericalDatum& d);
bool wavefront(const SphericalDatum& d);

struct FundamentalDomainReport {
  std::size_t samples = 0;
  std::size_t distinct = 0;
  std::size_t interior = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};
FundamentalDomainReport check_fundamental_domain(const SphericalDatum& d, std::size_t samples,
                                                 std::uint64_t seed, Int box = 10);

// Subsets are given as sorted index lists into Delta_X.
std::vector<std::size_t> wx_theta_omega(const SphericalDatum& d, const WeylGroup& w,
                                        const std::vector<int>& theta,
                                        const std::vector<int>& omega);

struct CosetRepresentatives {
  std::vector<std::size_t> minimal;  // w with w(theta) > 0 for theta in Theta
  std::vector<std::size_t> union_over_omega;
  bool equal = false;
};
CosetRepresentatives wx_theta(const SphericalDatum& d, const WeylGroup& w,
                              const std::vector<int>& theta);

}  // namespace spherex
