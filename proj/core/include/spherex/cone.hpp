#pragma once

#include <cstddef>
#include <vector>

#include "spherex/linalg.hpp"

namespace spherex {

// Cone generated by integer vectors in Q^dim. Generators are stored primitive,
// sorted and without duplicates, so equal generator sets compare equal.
struct Cone {
  std::size_t dim = 0;
  IntMat gens;

  Cone() = default;
  Cone(std::size_t d, IntMat g);

  std::size_t span_dim() const;
  bool operator==(const Cone& o) const { return dim == o.dim && gens == o.gens; }
  bool operator<(const Cone& o) const { return gens < o.gens; }
};

// Inward facet normals within the linear span, plus equations cutting out the span:
// C = { x : perp * x = 0, normals * x >= 0 }.
struct HRep {
  IntMat normals;
  IntMat perp;
};

HRep h_representation(const Cone& c);

bool contains(const Cone& c, const QVec& x);
bool contains(const Cone& c, const IntVec& x);
bool is_pointed(const Cone& c);
// No generator lies in the cone spanned by the others.
bool is_irredundant(const Cone& c);
bool is_simplicial(const Cone& c);
// Simplicial with generators forming a basis of the saturated span lattice.
bool is_smooth(const Cone& c);
// Index of the generator lattice in its saturation (simplicial cones only).
Int multiplicity(const Cone& c);

// Generators of { x : eqs x = 0, ineqs x >= 0 }: extreme rays of the pointed
// part followed by +/- a basis of the lineality space.
IntMat h_cone_generators(const IntMat& ineqs, const IntMat& eqs, std::size_t dim);

// Facets as cones (generators lying on each facet hyperplane).
std::vector<Cone> facets(const Cone& c);
// All faces including {0} and c itself.
std::vector<Cone> faces(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
// Smallest face of c containing every generator of s (s must lie in c).
Cone minimal_face(const Cone& c, const Cone& s);

// Pulling triangulation: the first generator of c in `order` is pulled, and the
// recursion runs over the facets avoiding it. With one global order the
// triangulations of adjacent cones agree on common faces.
std::vector<Cone> pulling_triangulation(const Cone& c, const IntMat& order);

}  // namespace spherex
