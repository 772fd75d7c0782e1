#include "spherex/dual_group.hpp"

#include <map>

#include "spherex/error.hpp"

namespace spherex {

RootDatum DualGroupDatum::levi(const std::vector<int>& theta) const {
  RootDatum l;
  l.rank = datum.rank;
  for (int t : theta) {
    auto i = static_cast<std::size_t>(t);
    l.simple_roots.push_back(datum.simple_roots.at(i));
    l.simple_coroots.push_back(datum.simple_coroots.at(i));
    if (!datum.names.empty()) l.names.push_back(datum.names[i]);
  }
  return l;
}

DualGroupDatum build_dual(const SphericalDatum& d) {
  auto s = spherical_system(d);
  DualGroupDatum dual;
  dual.datum.rank = d.r();
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    if (s.roots[i].type == RootType::N)
      throw Error(ErrorCode::TypeNPresent, "spherical root " + to_string(s.roots[i].root) +
                                               " has type N; the dual group is undefined");
    dual.datum.simple_roots.push_back(s.coroots[i]);
    dual.datum.simple_coroots.push_back(to_int(s.roots_lambda[i]));
    dual.datum.names.push_back("a" + std::to_string(i + 1));
  }
  dual.datum.validate();
  return dual;
}

DistinguishedMorphismData distinguished_morphism(const SphericalDatum& d) {
  build_dual(d);
  DistinguishedMorphismData dm;
  dm.torus_map = d.lambda;
  for (int p : d.parabolic)
    for (const auto& l : d.lambda)
      if (dot(l, d.g.simple_coroots.at(static_cast<std::size_t>(p))) != 0)
        throw Error(ErrorCode::InvalidParabolicType,
                    "Lambda_X does not annihilate the coroot of simple root " + std::to_string(p));
  dm.sl2_cocharacter = IntVec(d.g.rank, 0);
  for (const auto& r : positive_roots(d.g)) {
    bool inside = true;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
      if (r.coords[i] != 0 &&
          std::find(d.parabolic.begin(), d.parabolic.end(), static_cast<int>(i)) == d.parabolic.end())
        inside = false;
    if (inside) dm.sl2_cocharacter = add(dm.sl2_cocharacter, r.vec);
  }
  auto s = spherical_system(d);
  auto pos = positive_roots(d.g);
  auto covec_of = [&](const IntVec& coords) {
    for (const auto& r : pos)
      if (r.coords == coords) return r.covec;
    throw Error(ErrorCode::InvalidDatum, "missing positive root " + to_string(coords));
  };
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    const auto& info = s.roots[i];
    RootTarget t;
    t.type = info.type;
    t.is_d2 = info.is_d2;
    if (info.type == RootType::G) {
      t.coroots = {covec_of(info.associated->first), covec_of(info.associated->second)};
      t.signs = {1, -1};
      for (const auto& [idx, sg] : d.line_signs) {
        if (idx != i) continue;
        if (info.is_d2 && (sg.first != 1 || sg.second != -1))
          throw Error(ErrorCode::InvalidDatum, "D2 lines carry the sign pair (+1,-1)");
        t.signs = {sg.first, sg.second};
      }
      for (const auto& c : t.coroots)
        if (restrict_cocharacter(d, c) != info.coroot)
          throw Error(ErrorCode::InconsistentCoroot, "root target does not restrict to the spherical coroot");
    } else {
      t.coroots = {covec_of(info.root)};
      t.signs = {1};
      if (restrict_cocharacter(d, t.coroots[0]) != info.coroot)
        throw Error(ErrorCode::InconsistentCoroot, "type-T target does not restrict to the spherical coroot");
    }
    dm.targets.push_back(std::move(t));
  }
  return dm;
}

GaloisActionResult galois_action(const SphericalDatum& d) {
  DualGroupDatum dual = build_dual(d);
  std::size_t k = dual.datum.semisimple_rank(), r = d.r();
  GaloisActionResult res;
  res.perm.resize(k);
  for (std::size_t i = 0; i < k; ++i) res.perm[i] = static_cast<int>(i);
  res.lattice = identity(r);
  if (!d.galois) return res;
  const GaloisData& g = *d.galois;
  std::vector<int> sigma = g.sigma.empty() ? res.perm : g.sigma;
  if (sigma.size() != k)
    throw Error(ErrorCode::ActionNotDefined, "sigma has the wrong number of entries");
  std::vector<bool> hit(k, false);
  for (int s : sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= k || hit[static_cast<std::size_t>(s)])
      throw Error(ErrorCode::ActionNotDefined, "sigma is not a permutation of Delta_X");
    hit[static_cast<std::size_t>(s)] = true;
  }
  IntMat lat = g.lattice.empty() ? identity(r) : g.lattice;
  if (lat.size() != r || std::abs(det(lat)) != 1)
    throw Error(ErrorCode::ActionNotDefined, "lattice action is not an automorphism of X_*(A_X)");
  for (std::size_t i = 0; i < k; ++i)
    if (mul(lat, dual.datum.simple_roots[i]) != dual.datum.simple_roots[static_cast<std::size_t>(sigma[i])])
      throw Error(ErrorCode::ActionNotDefined,
                  "sigma does not preserve Delta_X at index " + std::to_string(i));
  if (!g.galois_case) {
    res.perm = sigma;
    res.lattice = lat;
  } else {
    auto inv = duality_involution(dual.datum, generate_weyl(dual.datum));
    for (std::size_t i = 0; i < k; ++i) {
      res.perm[i] = inv.perm[static_cast<std::size_t>(sigma[i])];
      if (res.perm[i] == static_cast<int>(i)) res.pinning_fixable = false;
    }
    res.lattice = mul(inv.matrix, lat);
  }
  for (std::size_t i = 0; i < k; ++i)
    if (res.perm[static_cast<std::size_t>(res.perm[i])] != static_cast<int>(i)) res.involutive = false;
  if (mul(res.lattice, res.lattice) != identity(r)) res.involutive = false;
  return res;
}

IntMat dual_roots(const SphericalDatum& d) {
  DualGroupDatum dual = build_dual(d);
  IntMat out;
  for (const auto& r : all_roots(dual.datum)) out.push_back(r.vec);
  return out;
}

GradedWeightMultiset adjoint_weights(const SphericalDatum& d, int degree, bool with_zeros) {
  GradedWeightMultiset m;
  for (const auto& w : dual_roots(d)) m.add(w, degree);
  if (with_zeros) m.add(IntVec(d.r(), 0), degree, static_cast<Int>(d.r()));
  return m;
}

GradedWeightMultiset derive_rho_adjoint_part(const SphericalDatum& d) {
  auto dm = distinguished_morphism(d);
  std::map<std::pair<IntVec, Int>, Int> m;  // (weight, h-eigenvalue) -> multiplicity
  for (const auto& r : all_roots(d.g))
    ++m[{restrict_cocharacter(d, r.covec), dot(dm.sl2_cocharacter, r.covec)}];
  m[{IntVec(d.r(), 0), 0}] += static_cast<Int>(d.g.rank);
  GradedWeightMultiset out;
  for (const auto& [key, mult] : m) {
    if (key.second < 0) continue;
    auto above = m.find({key.first, key.second + 2});
    Int strings = mult - (above == m.end() ? 0 : above->second);
    if (strings < 0)
      throw Error(ErrorCode::NegativeMultiplicity, "sl2 string count is negative at weight " +
                                                       to_string(key.first));
    out.add(key.first, static_cast<int>(key.second + 2), strings);
  }
  GradedWeightMultiset gx = adjoint_weights(d, 2);
  for (const auto& [key, mult] : gx.entries) {
    auto it = out.entries.find(key);
    Int have = it == out.entries.end() ? 0 : it->second;
    if (have < mult)
      throw Error(ErrorCode::NegativeMultiplicity,
                  "removing the adjoint of the dual group goes negative at weight " +
                      to_string(key.second));
    out.add(key.second, key.first, -mult);
  }
  return out;
}

GradedWeightMultiset rho_X(const SphericalDatum& d) {
  GradedWeightMultiset r = d.symplectic;
  r += derive_rho_adjoint_part(d);
  return r;
}

}  // namespace spherex
