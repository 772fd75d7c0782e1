#include "spherex/spherical.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "spherex/error.hpp"

namespace spherex {

const char* to_string(RootType t) {
  switch (t) {
    case RootType::T: return "T";
    case RootType::N: return "N";
    case RootType::G: return "G";
  }
  return "?";
}

IntVec root_vector(const SphericalDatum& d, const IntVec& coords) {
  IntVec v(d.g.rank, 0);
  for (std::size_t i = 0; i < coords.size(); ++i) v = add(v, scale(d.g.simple_roots[i], coords[i]));
  return v;
}

std::optional<QVec> lambda_coords(const SphericalDatum& d, const IntVec& chi) {
  if (d.lambda.empty()) {
    if (is_zero(chi)) return QVec{};
    return std::nullopt;
  }
  return solve_rows(to_q(d.lambda), to_q(chi));
}

IntVec restrict_cocharacter(const SphericalDatum& d, const IntVec& mu) {
  IntVec r;
  for (const auto& l : d.lambda) r.push_back(dot(l, mu));
  return r;
}

namespace {

bool strongly_orthogonal(const std::vector<Root>& roots, const IntVec& g1, const IntVec& g2) {
  for (const auto& b : roots) {
    if (rank(IntMat{g1, g2, b.coords}) != 2) continue;
    if (b.coords == g1 || b.coords == g2 || b.coords == neg(g1) || b.coords == neg(g2)) continue;
    return false;
  }
  return true;
}

// gamma_1^vee - gamma_2^vee = delta_1^vee - delta_2^vee for simple delta_i.
bool simple_coroot_difference(const IntVec& c1, const IntVec& c2) {
  IntVec diff = sub(c1, c2);
  int plus = 0, minus = 0;
  for (Int x : diff) {
    if (x == 1) ++plus;
    else if (x == -1) ++minus;
    else if (x != 0) return false;
  }
  return plus == 1 && minus == 1;
}

const Root* find_root(const std::vector<Root>& roots, const IntVec& coords) {
  for (const auto& r : roots)
    if (r.coords == coords) return &r;
  return nullptr;
}

}  // namespace

SphericalRootInfo classify_root(const SphericalDatum& d, const IntVec& alpha) {
  SphericalRootInfo info;
  info.root = alpha;
  auto pos = positive_roots(d.g);
  if (find_root(pos, alpha)) {
    IntVec v = root_vector(d, alpha);
    if (in_lattice(v, d.lambda)) {
      info.type = RootType::T;
    } else if (in_lattice(scale(v, 2), d.lambda)) {
      info.type = RootType::N;
    } else {
      throw Error(ErrorCode::TypeNWithout2Alpha,
                  "root " + to_string(alpha) + " is not in Lambda_X and neither is twice it");
    }
    return info;
  }
  auto all = all_roots(d.g);
  std::vector<std::pair<const Root*, const Root*>> candidates;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      if (add(pos[i].coords, pos[j].coords) != alpha) continue;
      if (!strongly_orthogonal(all, pos[i].coords, pos[j].coords)) continue;
      if (!simple_coroot_difference(pos[i].co_coords, pos[j].co_coords)) continue;
      candidates.emplace_back(&pos[i], &pos[j]);
    }
  if (candidates.empty())
    throw Error(ErrorCode::NoDecomposition,
                "spherical root " + to_string(alpha) + " is neither a positive root nor a valid sum");
  if (candidates.size() > 1)
    throw Error(ErrorCode::AmbiguousDecomposition,
                "spherical root " + to_string(alpha) + " has " +
                    std::to_string(candidates.size()) + " admissible decompositions");
  IntVec g1 = candidates[0].first->coords, g2 = candidates[0].second->coords;
  if (g1 < g2) std::swap(g1, g2);
  info.type = RootType::G;
  info.associated = std::make_pair(g1, g2);
  auto simple = [](const IntVec& c) {
    Int s = 0;
    for (Int x : c) s += x;
    return s == 1;
  };
  info.is_d2 = simple(g1) && simple(g2);
  return info;
}

IntVec spherical_coroot(const SphericalDatum& d, const SphericalRootInfo& info) {
  auto pos = positive_roots(d.g);
  if (info.type != RootType::G) {
    const Root* r = find_root(pos, info.root);
    if (!r) throw Error(ErrorCode::InvalidDatum, "root of type T/N is not a positive root");
    return restrict_cocharacter(d, r->covec);
  }
  const Root* r1 = find_root(pos, info.associated->first);
  const Root* r2 = find_root(pos, info.associated->second);
  IntVec c1 = restrict_cocharacter(d, r1->covec);
  IntVec c2 = restrict_cocharacter(d, r2->covec);
  if (c1 != c2)
    throw Error(ErrorCode::InconsistentCoroot, "associated coroots restrict to " + to_string(c1) +
                                                   " and " + to_string(c2));
  return c1;
}

SphericalSystem spherical_system(const SphericalDatum& d) {
  SphericalSystem s;
  for (const auto& a : d.spherical_roots) {
    auto info = classify_root(d, a);
    info.coroot = spherical_coroot(d, info);
    auto lc = lambda_coords(d, root_vector(d, a));
    if (!lc)
      throw Error(ErrorCode::InvalidDatum,
                  "spherical root " + to_string(a) + " is not in the span of Lambda_X");
    s.roots_lambda.push_back(*lc);
    s.coroots.push_back(info.coroot);
    s.roots.push_back(std::move(info));
  }
  std::size_t k = s.roots.size();
  s.cartan.assign(k, IntVec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Q c = dot(s.roots_lambda[i], to_q(s.coroots[j]));
      if (c.get_den() != 1)
        throw Error(ErrorCode::InvalidDatum, "spherical Cartan matrix is not integral");
      s.cartan[i][j] = c.get_num().get_si();
    }
  return s;
}

std::vector<std::string> validate(const SphericalDatum& d) {
  std::vector<std::string> warnings;
  d.g.validate();
  std::size_t n = d.g.rank, k = d.g.semisimple_rank();
  for (const auto& l : d.lambda)
    if (l.size() != n) throw Error(ErrorCode::InvalidDatum, "Lambda_X generator of wrong length");
  if (rank(d.lambda) != d.lambda.size())
    throw Error(ErrorCode::InvalidDatum, "Lambda_X generators are dependent");
  if (!d.lambda.empty() && saturation_index(d.lambda) != 1)
    warnings.push_back("Lambda_X is not saturated in X*(A)");
  std::set<int> seen;
  for (int p : d.parabolic) {
    if (p < 0 || static_cast<std::size_t>(p) >= k || !seen.insert(p).second)
      throw Error(ErrorCode::InvalidDatum, "bad parabolic type index");
    for (const auto& l : d.lambda)
      if (dot(l, d.g.simple_coroots[static_cast<std::size_t>(p)]) != 0)
        throw Error(ErrorCode::InvalidParabolicType,
                    "Lambda_X is not orthogonal to the coroot of " +
                        (d.g.names.empty() ? std::to_string(p) : d.g.names[static_cast<std::size_t>(p)]));
  }
  std::set<IntVec> distinct;
  for (const auto& a : d.spherical_roots) {
    if (a.size() != k) throw Error(ErrorCode::InvalidDatum, "spherical root of wrong length");
    if (is_zero(a) || std::any_of(a.begin(), a.end(), [](Int x) { return x < 0; }))
      throw Error(ErrorCode::InvalidDatum, "spherical root " + to_string(a) + " is not positive");
    if (gcd_of(a) != 1)
      throw Error(ErrorCode::InvalidDatum, "spherical root " + to_string(a) + " is not primitive");
    if (!distinct.insert(a).second)
      throw Error(ErrorCode::InvalidDatum, "repeated spherical root");
  }
  auto sys = spherical_system(d);
  if (!is_finite_type_cartan(sys.cartan))
    throw Error(ErrorCode::InvalidDatum, "spherical Cartan matrix is not of finite type");
  for (const auto& [key, m] : d.symplectic.entries) {
    if (key.second.size() != d.r())
      throw Error(ErrorCode::InvalidDatum, "symplectic weight of wrong length");
    if (key.first != 1 || m < 0)
      throw Error(ErrorCode::InvalidDatum, "symplectic part must sit in degree 1");
  }
  if (d.whittaker) {
    bool shell = d.parabolic.empty() && d.spherical_roots.size() == k &&
                 hnf(d.lambda) == identity(n);
    if (!shell)
      throw Error(ErrorCode::InvalidDatum,
                  "Whittaker datum must have Lambda_X = X*(A), Delta_X = Delta, empty parabolic type");
  }
  return warnings;
}

CorootContainment check_coroot_containment(const SphericalDatum& d) {
  CorootContainment rep;
  auto sys = spherical_system(d);
  auto roots = all_roots(d.g);
  std::stable_sort(roots.begin(), roots.end(),
                   [](const Root& a, const Root& b) { return (a.height > 0) > (b.height > 0); });
  for (const auto& info : sys.roots) {
    std::optional<IntVec> w;
    for (const auto& r : roots)
      if (restrict_cocharacter(d, r.covec) == info.coroot) {
        w = r.covec;
        break;
      }
    if (!w) rep.ok = false;
    rep.witness.push_back(w);
  }
  return rep;
}

namespace {

IntMat integral_roots(const SphericalSystem& s) {
  IntMat rows;
  for (const auto& a : s.roots_lambda) rows.push_back(primitive_on_ray(a));
  return rows;
}

}  // namespace

CenterLattice center(const SphericalDatum& d) {
  auto s = spherical_system(d);
  CenterLattice c;
  c.basis = kernel(integral_roots(s), d.r());
  return c;
}

WeylGroup little_weyl_group(const SphericalDatum& d, std::size_t cap) {
  auto s = spherical_system(d);
  std::size_t r = d.r();
  std::vector<IntMat> gens;
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    QMat m(r, QVec(r, 0));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        m[a][b] = Q(a == b ? 1 : 0) - Q(static_cast<long>(s.coroots[i][a])) * s.roots_lambda[i][b];
    IntMat im;
    for (const auto& row : m) {
      if (!is_integral(row))
        throw Error(ErrorCode::InvalidDatum, "spherical reflection is not integral on X_*(A_X)");
      im.push_back(to_int(row));
    }
    gens.push_back(im);
  }
  return WeylGroup::generate(gens, r, cap);
}

QMat character_action(const WeylGroup& w, std::size_t i) {
  QMat m = to_q(identity(w.dim()));
  for (int s : w.word(i)) m = mul(m, to_q(transpose(w.generators()[static_cast<std::size_t>(s)])));
  return m;
}

Cone valuation_cone(const SphericalDatum& d) {
  auto s = spherical_system(d);
  IntMat ineqs;
  for (const auto& a : integral_roots(s)) ineqs.push_back(neg(a));
  return Cone(d.r(), h_cone_generators(ineqs, {}, d.r()));
}

Cone negative_chamber_image(const SphericalDatum& d) {
  IntMat ineqs;
  for (const auto& a : d.g.simple_roots) ineqs.push_back(neg(a));
  IntMat img;
  for (const auto& g : h_cone_generators(ineqs, {}, d.g.rank)) img.push_back(restrict_cocharacter(d, g));
  return Cone(d.r(), img);
}

WavefrontReport wavefront_report(const SphericalDatum& d) {
  WavefrontReport rep;
  auto s = spherical_system(d);
  Cone val = valuation_cone(d);
  Cone img = negative_chamber_image(d);
  rep.image_contained = std::all_of(img.gens.begin(), img.gens.end(), [&](const IntVec& g) {
    return std::all_of(s.roots_lambda.begin(), s.roots_lambda.end(),
                       [&](const QVec& a) { return sgn(dot(a, to_q(g))) <= 0; });
  });
  rep.wavefront = rep.image_contained &&
                  std::all_of(val.gens.begin(), val.gens.end(),
                              [&](const IntVec& g) { return contains(img, g); });
  return rep;
}

bool wavefront(const SphericalDatum& d) { return wavefront_report(d).wavefront; }

FundamentalDomainReport check_fundamental_domain(const SphericalDatum& d, std::size_t samples,
                                                 std::uint64_t seed, Int box) {
  FundamentalDomainReport rep;
  auto s = spherical_system(d);
  WeylGroup w = little_weyl_group(d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> dist(-box, box);
  std::set<IntVec> distinct;
  auto pairing_signs = [&](const IntVec& y, bool& in_closed, bool& in_interior) {
    in_closed = in_interior = true;
    for (const auto& a : s.roots_lambda) {
      int sg = sgn(dot(a, to_q(y)));
      if (sg > 0) in_closed = false;
      if (sg >= 0) in_interior = false;
    }
    if (!in_closed) in_interior = false;
  };
  for (std::size_t t = 0; t < samples; ++t) {
    IntVec x(d.r());
    for (auto& c : x) c = dist(rng);
    distinct.insert(x);
    std::set<IntVec> orbit;
    for (std::size_t i = 0; i < w.size(); ++i) orbit.insert(mul(w.matrix(i), x));
    std::size_t met = 0;
    bool interior = false;
    for (const auto& y : orbit) {
      bool closed, inner;
      pairing_signs(y, closed, inner);
      met += closed ? 1 : 0;
      interior |= inner;
    }
    if (interior) ++rep.interior;
    if (met == 0 || (interior && met != 1)) ++rep.failures;
  }
  rep.samples = samples;
  rep.distinct = distinct.size();
  return rep;
}

std::vector<std::size_t> wx_theta_omega(const SphericalDatum& d, const WeylGroup& w,
                                        const std::vector<int>& theta,
                                        const std::vector<int>& omega) {
  auto s = spherical_system(d);
  std::vector<std::size_t> out;
  if (theta.size() != omega.size()) return out;
  std::set<QVec> target;
  for (int o : omega) target.insert(s.roots_lambda[static_cast<std::size_t>(o)]);
  for (std::size_t i = 0; i < w.size(); ++i) {
    QMat a = character_action(w, i);
    bool ok = true;
    for (int t : theta)
      if (!target.count(mul(a, s.roots_lambda[static_cast<std::size_t>(t)]))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(i);
  }
  return out;
}

CosetRepresentatives wx_theta(const SphericalDatum& d, const WeylGroup& w,
                              const std::vector<int>& theta) {
  auto s = spherical_system(d);
  CosetRepresentatives rep;
  std::size_t k = s.roots.size();
  std::set<std::size_t> uni;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> omega;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) omega.push_back(static_cast<int>(i));
    if (omega.size() != theta.size()) continue;
    for (auto e : wx_theta_omega(d, w, theta, omega)) uni.insert(e);
  }
  rep.union_over_omega.assign(uni.begin(), uni.end());
  for (std::size_t i = 0; i < w.size(); ++i) {
    QMat a = character_action(w, i);
    bool positive = true;
    for (int t : theta) {
      auto c = solve_rows(s.roots_lambda, mul(a, s.roots_lambda[static_cast<std::size_t>(t)]));
      if (!c || std::any_of(c->begin(), c->end(), [](const Q& q) { return sgn(q) < 0; })) {
        positive = false;
        break;
      }
    }
    if (positive) rep.minimal.push_back(i);
  }
  rep.equal = rep.minimal == rep.union_over_omega;
  return rep;
}

}  // namespace spherex
