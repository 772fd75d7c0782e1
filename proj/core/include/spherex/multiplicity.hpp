#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace spherex {

enum class SignType { Symplectic, Orthogonal };

struct SelfDualConstituent {
  std::string label;
  long dim = 2;
  SignType sign_type = SignType::Symplectic;
  int det_at_minus1 = 1;
  long mult = 1;
};

void validate_constituents(const std::vector<SelfDualConstituent>& cs);

// epsilon(sigma_i (x) tau_j) keyed by (label of M constituent, label of N constituent).
using RootNumberOracle = std::map<std::pair<std::string, std::string>, int>;

enum class Side { Left, Right };

// Gross-Prasad sign of the flip subset `s` (indices into M for Side::Left,
// into N for Side::Right).
int gp_character(const std::vector<SelfDualConstituent>& M, const std::vector<SelfDualConstituent>& N,
                 const RootNumberOracle& oracle, const std::set<std::size_t>& s, Side side = Side::Left);

// Exhaustive multiplicativity check on both sides.
bool gp_is_character(const std::vector<SelfDualConstituent>& M, const std::vector<SelfDualConstituent>& N,
                     const RootNumberOracle& oracle);

// Finite group given by a multiplication table on 0..n-1 with identity 0.
struct FiniteGroup {
  std::vector<std::vector<int>> table;

  static FiniteGroup elementary_abelian(int k);
  static FiniteGroup cyclic(int n);
  std::size_t order() const { return table.size(); }
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const;
  void validate() const;  // identity, closure, associativity, inverses
};

using Subgroup = std::vector<int>;       // element indices
using ClassFunction = std::vector<mpq_class>;  // value per element

void check_subgroup(const FiniteGroup& g, const Subgroup& h);

struct ComponentGroupDatum {
  FiniteGroup group;
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, ClassFunction> characters;

  void validate() const;  // subgroup closure and irreducibility of the characters
};

// <f1, f2>_H = |H|^{-1} sum_{h in H} f1(h) f2(h^{-1}).
mpq_class pairing(const FiniteGroup& g, const Subgroup& h, const ClassFunction& f1, const ClassFunction& f2);

// sum over fibers of <rho|_{S_psi}, 1>.
long prasad_multiplicity(const ComponentGroupDatum& cg, const ClassFunction& rho, const std::vector<Subgroup>& fibers);

// The same count read off the fixed points: sum over fibers of
// dim Hom_{S_phi}(rho, C[S_phi / S_psi]).
long fixed_point_multiplicity(const ComponentGroupDatum& cg, const ClassFunction& rho,
                              const std::vector<Subgroup>& fibers);

// sum over irreducible rho of rho(1) * m(rho); needs the full character list.
long stable_multiplicity(const ComponentGroupDatum& cg, const std::vector<Subgroup>& fibers);

// Heart data for one fiber. theta sends each element of S_psi^heart to an
// element of A = pi_0(Z(H^)^Gamma), an elementary abelian 2-group given as
// bitmasks; `norm_image` is the image of the norm map inside A, so that
// D = A / norm_image.
struct HeartDatum {
  Subgroup s_psi;
  Subgroup s_heart;
  std::map<int, std::uint32_t> theta;
};

struct RefinedInput {
  int a_rank = 0;  // A = (Z/2)^a_rank
  std::vector<std::uint32_t> norm_image;
  std::vector<HeartDatum> fibers;
};

void check_heart_sequence(const ComponentGroupDatum& cg, const RefinedInput& in);

// Multiplicity for every character chi_beta of A (indexed by bitmask beta).
std::map<std::uint32_t, mpq_class> prasad_refined(const ComponentGroupDatum& cg, const ClassFunction& rho,
                                                   const RefinedInput& in);

struct BcConstituent {
  std::string label;
  bool selfdual = false;
  long mult = 1;
};

struct BcDegree {
  mpz_class deg, fiber, m_qs, m_nqs, m_X;
};

BcDegree bc_degree(const std::vector<BcConstituent>& cs);

// Experimental degree-weighted stable count sum_psi deg(psi) |pi_0(Z_phi / Z_psi)|.
struct WeightedFiber {
  long degree = 1;
  long components = 1;
};

long degree_weighted_count(const std::vector<WeightedFiber>& fibers);

}  // namespace spherex
