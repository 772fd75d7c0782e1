#include "spherex/lfactors.hpp"

#include <algorithm>

#include "spherex/dual_group.hpp"
#include "spherex/error.hpp"

namespace spherex {

SatakeParam SatakeParam::formal(std::size_t rank, const std::string& suffix) {
  SatakeParam p;
  p.rank = rank;
  p.suffix = suffix;
  return p;
}

std::string SatakeParam::u_var() const { return "u" + suffix; }

std::string SatakeParam::t_var(std::size_t i) const { return "t" + std::to_string(i + 1) + suffix; }

Monomial SatakeParam::character(const IntVec& w) const {
  if (w.size() != rank)
    throw Error(ErrorCode::InvalidDatum, "weight " + to_string(w) + " does not live on a rank " +
                                             std::to_string(rank) + " torus");
  Monomial m;
  for (std::size_t i = 0; i < rank; ++i)
    if (w[i] != 0) m[t_var(i)] = w[i];
  return m;
}

LaurentRational SatakeParam::specialize(const LaurentRational& f) const {
  Substitution s;
  for (const auto& [i, v] : values) {
    if (v == 0) throw Error(ErrorCode::PoleAtSpecialization, "torus coordinate specialized to 0");
    s[t_var(i)] = VarImage{v, 1, {}};
  }
  if (q) s[u_var()] = VarImage{mpq_class(1, *q), 2, {}};
  if (s.empty()) return f;
  return f.substitute(s);
}

LaurentRational eval_L(const GradedWeightMultiset& rep, const SatakeParam& chi, int two_s) {
  LaurentRational out;
  for (const auto& [key, mult] : rep.entries) {
    const auto& [degree, w] = key;
    Monomial m = chi.character(w);
    long uexp = two_s + degree;
    if (uexp != 0) m[chi.u_var()] = uexp;
    LaurentRational f = chi.specialize(LaurentRational::one_minus(m));
    if (f.is_zero())
      throw Error(ErrorCode::PoleAtSpecialization, "factor for weight " + to_string(w) + " in degree " +
                                                       std::to_string(degree) + " vanishes");
    out *= f.pow(-mult);
  }
  return out;
}

LaurentRational hyperspecial_volume(const RootDatum& rd, const std::string& u) {
  WeylGroup w = generate_weyl(rd);
  long n = static_cast<long>(w.max_length());
  std::map<long, mpq_class> terms;
  for (std::size_t i = 0; i < w.size(); ++i) terms[n - w.length(i)] += 1;
  LaurentRational vol = LaurentRational::univariate(Monomial{{u, 2}}, terms);
  vol *= LaurentRational::one_minus(Monomial{{u, 2}}).pow(static_cast<long>(rd.rank));
  return vol;
}

LaurentRational tamagawa_factor(const RootDatum& rd, const std::string& u) {
  return hyperspecial_volume(rd, u).inverse();
}

LaurentRational plancherel_density(const SphericalDatum& d, const SatakeParam& chi) {
  return eval_L(adjoint_weights(d, 0, true), chi, 2) / eval_L(adjoint_weights(d, 0, false), chi, 0);
}

RelativeCharacter relative_character_unramified(const SphericalDatum& d, const SatakeParam& chi,
                                                const std::optional<GradedWeightMultiset>& s_x) {
  RelativeCharacter rc;
  rc.rho = s_x ? *s_x : d.symplectic;
  rc.rho += derive_rho_adjoint_part(d);
  rc.delta_inv = chi.specialize(hyperspecial_volume(d.g, chi.u_var()));
  LaurentRational ad = eval_L(adjoint_weights(d, 0, true), chi, 2);
  rc.J = rc.delta_inv * eval_L(rc.rho, chi, 0) / ad;
  rc.omega = rc.delta_inv.inverse() * rc.J * plancherel_density(d, chi);
  return rc;
}

HiiResult hii_density(const GradedWeightMultiset& ad, const SatakeParam& chi, int a_m, long rho_at_one,
                      long component_order) {
  if (component_order <= 0) throw Error(ErrorCode::InvalidDatum, "|S| must be positive");
  HiiResult r;
  LaurentRational l_star;
  for (const auto& [key, mult] : ad.entries) {
    LaurentRational f = chi.specialize(LaurentRational::one_minus(chi.character(key.second)));
    if (f.is_zero()) r.vanishing_order += static_cast<int>(mult);
    else l_star *= f.pow(-mult);
  }
  if (r.vanishing_order != a_m)
    throw Error(ErrorCode::RegularizationMismatch, "declared a_M = " + std::to_string(a_m) +
                                                       " but L(s, Ad) has a pole of order " +
                                                       std::to_string(r.vanishing_order) + " at s = 0");
  r.gamma_star = eval_L(ad, chi, 2) / l_star;
  r.density = LaurentRational(mpq_class(rho_at_one, component_order)) * r.gamma_star;
  return r;
}

std::vector<std::vector<std::string>> all_splits(const std::vector<Place>& places) {
  std::vector<std::vector<std::string>> out;
  std::size_t n = places.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(places[i].name);
    out.push_back(s);
  }
  return out;
}

namespace {

// Delta_v^{-1} L_v(0, rho) / L_v(1, Ad): the v-th factor of the partial product.
LaurentRational euler_factor(const SphericalDatum& d, const GradedWeightMultiset& rho, const SatakeParam& chi) {
  LaurentRational vol = chi.specialize(hyperspecial_volume(d.g, chi.u_var()));
  return vol * eval_L(rho, chi, 0) / eval_L(adjoint_weights(d, 0, true), chi, 2);
}

}  // namespace

GlobalReport global_assembly(const SphericalDatum& d, const std::vector<Place>& places,
                             const std::vector<std::vector<std::string>>& splits,
                             const std::optional<GradedWeightMultiset>& s_x, std::size_t bound) {
  GradedWeightMultiset rho = s_x ? *s_x : d.symplectic;
  rho += derive_rho_adjoint_part(d);
  for (const auto& p : places)
    if (p.chi.rank != d.r())
      throw Error(ErrorCode::InvalidDatum, "place " + p.name + " carries a parameter of the wrong rank");

  GlobalReport rep;
  rep.tail_places = bound > places.size() ? bound - places.size() : 0;
  LaurentRational tail;
  for (std::size_t k = 0; k < rep.tail_places; ++k)
    tail *= euler_factor(d, rho, SatakeParam::formal(d.r(), "_w" + std::to_string(k + 1)));

  auto assemble = [&](const std::vector<std::string>& S) {
    LaurentRational value = tail;
    for (const auto& p : places) {
      bool explicit_place = std::find(S.begin(), S.end(), p.name) != S.end();
      if (explicit_place) value *= relative_character_unramified(d, p.chi, s_x).J;
      else value *= euler_factor(d, rho, p.chi);
    }
    return value;
  };

  std::vector<std::string> everything;
  for (const auto& p : places) everything.push_back(p.name);
  rep.reference = assemble(everything);
  for (const auto& S : splits) {
    for (const auto& name : S)
      if (std::find(everything.begin(), everything.end(), name) == everything.end())
        throw Error(ErrorCode::InvalidDatum, "S names an unknown place " + name);
    GlobalSplit g{S, assemble(S), false};
    g.matches_reference = g.value == rep.reference;
    rep.s_independent = rep.s_independent && g.matches_reference;
    rep.splits.push_back(std::move(g));
  }
  return rep;
}

}  // namespace spherex
