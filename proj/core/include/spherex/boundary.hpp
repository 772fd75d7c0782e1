#pragma once

#include <string>
#include <vector>

#include "spherex/cone.hpp"
#include "spherex/spherical.hpp"

namespace spherex {

struct BoundaryDatum {
  std::vector<int> theta;  // indices into Delta_X
  SphericalDatum datum;
  IntMat center_lattice;   // A_{X,Theta} inside X_*(A_X)
};

BoundaryDatum boundary_degeneration(const SphericalDatum& d, const std::vector<int>& theta);

struct TransitivityReport {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};
// Checks (X_Theta)_Omega = X_Omega and Delta_{X_Theta} = Theta over all Omega in Theta in Delta_X.
TransitivityReport transitivity_check(const SphericalDatum& d);

// Maximal cones of a fan in X_*(A_X).
struct Fan {
  std::size_t dim = 0;
  std::vector<Cone> cones;
  bool operator==(const Fan&) const = default;
};

Fan make_fan(std::size_t dim, const std::vector<IntMat>& cones);
std::vector<Cone> all_cones(const Fan& f);  // closed under faces, sorted
IntMat rays(const Fan& f);

// A_X^+ = { x : <alpha, x> >= 0 for all spherical roots }.
Cone positive_cone(const SphericalDatum& d);

struct FanReport {
  std::size_t maximal_cones = 0;
  std::size_t cones = 0;
  bool smooth = false;
  bool complete = false;
};
// Throws Error(MalformedFan) when a cone is not strongly convex or irredundant,
// leaves A_X^+, or two cones meet outside a common face.
FanReport fan_validate(const SphericalDatum& d, const Fan& f);
bool fan_is_smooth(const Fan& f);
bool fan_is_complete(const SphericalDatum& d, const Fan& f);

// True when the pieces (all of the region's dimension) are contained in the
// region and cover it exactly: interior facets are shared by exactly two
// pieces lying on opposite sides, and unshared facets lie on the boundary.
bool subdivides(const Cone& region, const std::vector<Cone>& pieces);

Fan triangulate(const Fan& f);
Fan smooth_subdivision(const SphericalDatum& d, const Fan& f);

struct OrbitNode {
  Cone cone;
  std::vector<int> theta;            // spherical roots orthogonal to the cone
  std::vector<std::size_t> divisors;  // node indices of the rays of the cone
};

struct OrbitPoset {
  std::vector<OrbitNode> nodes;  // one per cone, sorted by dimension
  // (i, j): Z_j is contained in Z_i, i.e. cone i is a face of cone j.
  std::vector<std::pair<std::size_t, std::size_t>> closure;
  std::vector<std::size_t> divisor_nodes;
};

OrbitPoset orbit_poset(const SphericalDatum& d, const Fan& f);
// C in C' iff Z_{C'} in Z_C, with Z_C computed as the intersection of the divisors of C.
bool check_anti_isomorphism(const OrbitPoset& p);

// Output of smooth_subdivision together with its three checks: every cone is
// smooth, each input cone is exactly covered by the output cones inside it,
// and the orbit poset is anti-isomorphic to the face poset.
struct SubdivisionCheck {
  Fan result;
  bool smooth = false;
  bool support = false;
  bool anti_isomorphism = false;
  bool ok() const { return smooth && support && anti_isomorphism; }
};
SubdivisionCheck check_smooth_subdivision(const SphericalDatum& d, const Fan& f);

struct ConeTorus {
  IntMat basis;  // primitive generators realizing G_m^k inside A_X
  std::size_t rank() const { return basis.size(); }
};
ConeTorus torus_of_cone(const SphericalDatum& d, const Cone& c);

std::vector<int> wavefront_parabolic(const SphericalDatum& d, const std::vector<int>& theta);

}  // namespace spherex
