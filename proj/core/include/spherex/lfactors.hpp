#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spherex/laurent.hpp"
#include "spherex/root_data.hpp"
#include "spherex/spherical.hpp"
#include "spherex/weights.hpp"

namespace spherex {

// An unramified parameter in the dual torus of A_X. Coordinate i is the
// variable t{i+1}{suffix}; q^{-1/2} is u{suffix}. Coordinates listed in
// `values` are specialized to those rationals, the rest stay formal. When
// `q` is set, u{suffix}^2 is specialized to 1/q.
struct SatakeParam {
  std::size_t rank = 0;
  std::string suffix;
  std::map<std::size_t, mpq_class> values;
  std::optional<long> q;

  static SatakeParam formal(std::size_t rank, const std::string& suffix = "");
  std::string u_var() const;
  std::string t_var(std::size_t i) const;
  // chi^w as a monomial in the formal coordinates.
  Monomial character(const IntVec& w) const;
  LaurentRational specialize(const LaurentRational& f) const;
};

// prod over (w, d, m) of (1 - u^{2s + d} chi^w)^{-m}; the shift is given as 2s.
LaurentRational eval_L(const GradedWeightMultiset& rep, const SatakeParam& chi, int two_s);

// Delta_G = [|G(F_q)| / q^{dim G}]^{-1} in u = q^{-1/2}.
LaurentRational tamagawa_factor(const RootDatum& rd, const std::string& u = "u");
// |G(F_q)| / q^{dim G}, the volume of G(O).
LaurentRational hyperspecial_volume(const RootDatum& rd, const std::string& u = "u");

LaurentRational plancherel_density(const SphericalDatum& d, const SatakeParam& chi);

struct RelativeCharacter {
  GradedWeightMultiset rho;
  LaurentRational delta_inv;  // Delta_G^{-1}
  LaurentRational J;
  LaurentRational omega;      // Delta_G * J * mu_X
};

// With no override, S_X is the symplectic part carried by the datum.
RelativeCharacter relative_character_unramified(const SphericalDatum& d, const SatakeParam& chi,
                                                const std::optional<GradedWeightMultiset>& s_x = {});

struct HiiResult {
  LaurentRational gamma_star;  // L(1, Ad) / L*(0, Ad)
  LaurentRational density;     // rho(1) / |S| * gamma_star
  int vanishing_order = 0;
};

HiiResult hii_density(const GradedWeightMultiset& ad, const SatakeParam& chi, int a_m, long rho_at_one,
                      long component_order);

struct Place {
  std::string name;
  SatakeParam chi;
};

struct GlobalSplit {
  std::vector<std::string> S;
  LaurentRational value;
  bool matches_reference = false;
};

struct GlobalReport {
  LaurentRational reference;  // every supplied place explicit
  std::vector<GlobalSplit> splits;
  std::size_t tail_places = 0;
  bool s_independent = true;
  std::string rational_constant = "q_phi";  // never assigned a value
};

// Every subset of the supplied place names.
std::vector<std::vector<std::string>> all_splits(const std::vector<Place>& places);

// Partial product Delta^{-1} L(0, rho) / L(1, Ad) over the complement of S,
// as explicit factors for supplied places and a formal Euler product for the
// remaining places up to `bound`, times the local J at places in S.
GlobalReport global_assembly(const SphericalDatum& d, const std::vector<Place>& places,
                             const std::vector<std::vector<std::string>>& splits,
                             const std::optional<GradedWeightMultiset>& s_x = {}, std::size_t bound = 25);

}  // namespace spherex
