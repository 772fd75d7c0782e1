#include "spherex/boundary.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spherex/error.hpp"

namespace spherex {

BoundaryDatum boundary_degeneration(const SphericalDatum& d, const std::vector<int>& theta) {
  BoundaryDatum b;
  b.theta = theta;
  std::sort(b.theta.begin(), b.theta.end());
  b.datum = d;
  b.datum.spherical_roots.clear();
  b.datum.line_signs.clear();
  for (std::size_t pos = 0; pos < b.theta.size(); ++pos) {
    auto t = static_cast<std::size_t>(b.theta[pos]);
    if (t >= d.spherical_roots.size())
      throw Error(ErrorCode::InvalidDatum, "Theta index outside Delta_X");
    b.datum.spherical_roots.push_back(d.spherical_roots[t]);
    for (const auto& [idx, sg] : d.line_signs)
      if (idx == t) b.datum.line_signs.emplace_back(pos, sg);
  }
  if (b.theta.size() != d.spherical_roots.size()) {
    b.datum.galois.reset();
    b.datum.whittaker = false;
  }
  auto s = spherical_system(b.datum);
  IntMat rows;
  for (const auto& a : s.roots_lambda) rows.push_back(primitive_on_ray(a));
  b.center_lattice = kernel(rows, d.r());
  return b;
}

TransitivityReport transitivity_check(const SphericalDatum& d) {
  TransitivityReport rep;
  std::size_t k = d.spherical_roots.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  // Each root is in Omega (2), in Theta only (1), or outside Theta (0).
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> theta, omega, omega_in_theta;
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i, c /= 3) {
      std::size_t digit = c % 3;
      if (digit >= 1) theta.push_back(static_cast<int>(i));
      if (digit == 2) omega.push_back(static_cast<int>(i));
    }
    for (std::size_t p = 0; p < theta.size(); ++p)
      if (std::find(omega.begin(), omega.end(), theta[p]) != omega.end())
        omega_in_theta.push_back(static_cast<int>(p));
    ++rep.pairs;
    BoundaryDatum bt = boundary_degeneration(d, theta);
    BoundaryDatum nested = boundary_degeneration(bt.datum, omega_in_theta);
    BoundaryDatum direct = boundary_degeneration(d, omega);
    IntMat theta_roots;
    for (int t : theta) theta_roots.push_back(d.spherical_roots[static_cast<std::size_t>(t)]);
    bool ok = bt.datum.spherical_roots == theta_roots && nested.datum == direct.datum &&
              nested.center_lattice == direct.center_lattice;
    if (ok) {
      validate(bt.datum);
      ok = check_coroot_containment(bt.datum).ok;
    }
    if (!ok) ++rep.failures;
  }
  return rep;
}

Fan make_fan(std::size_t dim, const std::vector<IntMat>& cones) {
  Fan f;
  f.dim = dim;
  for (const auto& g : cones) f.cones.emplace_back(dim, g);
  std::sort(f.cones.begin(), f.cones.end());
  f.cones.erase(std::unique(f.cones.begin(), f.cones.end()), f.cones.end());
  if (f.cones.empty()) f.cones.emplace_back(dim, IntMat{});
  return f;
}

std::vector<Cone> all_cones(const Fan& f) {
  std::set<Cone> s;
  for (const auto& c : f.cones)
    for (auto& x : faces(c)) s.insert(x);
  std::vector<Cone> out(s.begin(), s.end());
  std::stable_sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    return a.gens.size() < b.gens.size();
  });
  return out;
}

IntMat rays(const Fan& f) {
  std::set<IntVec> s;
  for (const auto& c : f.cones)
    for (const auto& g : c.gens) s.insert(g);
  return {s.begin(), s.end()};
}

namespace {

IntMat integral_spherical_roots(const SphericalDatum& d) {
  IntMat rows;
  for (const auto& a : spherical_system(d).roots_lambda) rows.push_back(primitive_on_ray(a));
  return rows;
}

}  // namespace

Cone positive_cone(const SphericalDatum& d) {
  return Cone(d.r(), h_cone_generators(integral_spherical_roots(d), {}, d.r()));
}

FanReport fan_validate(const SphericalDatum& d, const Fan& f) {
  IntMat roots = integral_spherical_roots(d);
  if (f.dim != d.r()) throw Error(ErrorCode::MalformedFan, "fan dimension differs from rank of A_X");
  for (const auto& c : f.cones) {
    if (!is_pointed(c))
      throw Error(ErrorCode::MalformedFan, "cone " + to_string(c.gens.empty() ? IntVec{} : c.gens[0]) +
                                               "... is not strongly convex");
    if (!is_irredundant(c)) throw Error(ErrorCode::MalformedFan, "cone has a redundant generator");
    for (const auto& g : c.gens)
      for (const auto& a : roots)
        if (dot(a, g) < 0)
          throw Error(ErrorCode::MalformedFan, "generator " + to_string(g) + " lies outside A_X^+");
  }
  for (std::size_t i = 0; i < f.cones.size(); ++i)
    for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
      const Cone &a = f.cones[i], &b = f.cones[j];
      Cone meet = intersect(a, b);
      Cone fa = minimal_face(a, meet), fb = minimal_face(b, meet);
      bool ok = std::all_of(fa.gens.begin(), fa.gens.end(), [&](const IntVec& g) { return contains(b, g); }) &&
                std::all_of(fb.gens.begin(), fb.gens.end(), [&](const IntVec& g) { return contains(a, g); });
      if (!ok)
        throw Error(ErrorCode::MalformedFan,
                    "cones #" + std::to_string(i) + " and #" + std::to_string(j) +
                        " do not meet in a common face");
    }
  FanReport rep;
  rep.maximal_cones = f.cones.size();
  rep.cones = all_cones(f).size();
  rep.smooth = fan_is_smooth(f);
  rep.complete = fan_is_complete(d, f);
  return rep;
}

bool fan_is_smooth(const Fan& f) {
  return std::all_of(f.cones.begin(), f.cones.end(), [](const Cone& c) { return is_smooth(c); });
}

bool subdivides(const Cone& region, const std::vector<Cone>& pieces) {
  std::size_t k = region.span_dim();
  if (pieces.empty()) return false;
  HRep h = h_representation(region);
  for (const auto& p : pieces) {
    if (p.span_dim() != k || !is_simplicial(p)) return false;
    for (const auto& g : p.gens)
      if (!contains(region, g)) return false;
  }
  if (k == 0) return true;
  struct Side {
    std::size_t piece;
    int sign;
  };
  std::map<IntMat, std::vector<Side>> shared;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& g = pieces[i].gens;
    for (std::size_t drop = 0; drop < g.size(); ++drop) {
      IntMat facet;
      for (std::size_t t = 0; t < g.size(); ++t)
        if (t != drop) facet.push_back(g[t]);
      IntMat sys = facet;
      sys.insert(sys.end(), h.perp.begin(), h.perp.end());
      IntMat normal = sys.empty() ? identity(region.dim) : nullspace(to_q(sys));
      if (normal.size() != 1) return false;
      Int side = dot(normal[0], g[drop]);
      // Orient by the facet itself so both neighbours use the same normal.
      shared[facet].push_back({i, side > 0 ? 1 : -1});
    }
  }
  for (const auto& [facet, sides] : shared) {
    if (sides.size() > 2) return false;
    if (sides.size() == 2) {
      if (sides[0].sign == sides[1].sign) return false;
      continue;
    }
    bool on_boundary = std::any_of(h.normals.begin(), h.normals.end(), [&](const IntVec& f) {
      return std::all_of(facet.begin(), facet.end(), [&](const IntVec& g) { return dot(f, g) == 0; });
    });
    if (!on_boundary) return false;
  }
  return true;
}

Fan triangulate(const Fan& f) {
  IntMat order = rays(f);
  Fan t;
  t.dim = f.dim;
  std::set<Cone> s;
  for (const auto& c : f.cones)
    for (auto& p : pulling_triangulation(c, order)) s.insert(p);
  t.cones.assign(s.begin(), s.end());
  return t;
}

bool fan_is_complete(const SphericalDatum& d, const Fan& f) {
  std::size_t r = d.r();
  if (r == 0) return true;
  for (const auto& c : f.cones)
    if (c.span_dim() != r) return false;
  Fan t = triangulate(f);
  return subdivides(positive_cone(d), t.cones);
}

namespace {

// Lattice points sum_i a_i v_i with 0 <= a_i < 1 of a simplicial cone, as
// coefficient vectors; the zero point is excluded.
std::vector<QVec> parallelepiped_points(const Cone& c) {
  std::size_t k = c.gens.size();
  IntMat sat = saturate(c.gens, c.dim);
  QMat m;
  for (const auto& g : c.gens) m.push_back(to_q(*lattice_coords(g, sat)));
  // Row x of Z^k corresponds to coefficients x M^{-1}; generate the group
  // Z^k / Z^k M from the unit vectors.
  QMat inv(k, QVec(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    QVec e(k, 0);
    e[j] = 1;
    inv[j] = *solve_rows(m, e);
  }
  auto frac = [](QVec v) {
    for (auto& x : v) {
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      x -= fl;
    }
    return v;
  };
  std::set<QVec> group{QVec(k, 0)};
  std::vector<QVec> frontier{QVec(k, 0)};
  while (!frontier.empty()) {
    std::vector<QVec> next;
    for (const auto& p : frontier)
      for (const auto& gen : inv) {
        QVec q(k);
        for (std::size_t i = 0; i < k; ++i) q[i] = p[i] + gen[i];
        q = frac(q);
        if (group.insert(q).second) next.push_back(q);
      }
    frontier.swap(next);
  }
  group.erase(QVec(k, 0));
  return {group.begin(), group.end()};
}

IntVec combine(const Cone& c, const QVec& a) {
  QVec w(c.dim, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < c.dim; ++j) w[j] += a[i] * Q(static_cast<long>(c.gens[i][j]));
  return to_int(w);
}

}  // namespace

Fan smooth_subdivision(const SphericalDatum& d, const Fan& f) {
  (void)d;
  if (fan_is_smooth(f)) return f;
  Fan cur = triangulate(f);
  for (int iter = 0; iter < 100000; ++iter) {
    const Cone* worst = nullptr;
    Int best_mult = 0;
    for (const auto& c : cur.cones) {
      Int m = multiplicity(c);
      if (m == 1) continue;
      if (!worst || m < best_mult) {
        worst = &c;
        best_mult = m;
      }
    }
    if (!worst) return cur;
    IntVec w;
    Q best_sum;
    bool have = false;
    for (const auto& a : parallelepiped_points(*worst)) {
      Q s = 0;
      for (const auto& x : a) s += x;
      IntVec p = combine(*worst, a);
      if (!have || s < best_sum || (s == best_sum && p < w)) {
        w = p;
        best_sum = s;
        have = true;
      }
    }
    std::set<Cone> next;
    for (const auto& c : cur.cones) {
      if (!contains(c, w)) {
        next.insert(c);
        continue;
      }
      auto coef = *solve_rows(to_q(c.gens), to_q(w));
      for (std::size_t j = 0; j < coef.size(); ++j) {
        if (sgn(coef[j]) <= 0) continue;
        IntMat g = c.gens;
        g[j] = w;
        next.emplace(c.dim, g);
      }
    }
    cur.cones.assign(next.begin(), next.end());
  }
  throw std::runtime_error("smooth_subdivision: iteration limit reached");
}

OrbitPoset orbit_poset(const SphericalDatum& d, const Fan& f) {
  OrbitPoset p;
  auto cones = all_cones(f);
  auto s = spherical_system(d);
  for (const auto& c : cones) {
    OrbitNode n;
    n.cone = c;
    for (std::size_t i = 0; i < s.roots_lambda.size(); ++i) {
      bool orth = std::all_of(c.gens.begin(), c.gens.end(), [&](const IntVec& g) {
        return sgn(dot(s.roots_lambda[i], to_q(g))) == 0;
      });
      if (orth) n.theta.push_back(static_cast<int>(i));
    }
    p.nodes.push_back(std::move(n));
  }
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    if (p.nodes[i].cone.gens.size() == 1) p.divisor_nodes.push_back(i);
  for (auto& n : p.nodes)
    for (auto di : p.divisor_nodes)
      if (std::binary_search(n.cone.gens.begin(), n.cone.gens.end(), p.nodes[di].cone.gens[0]))
        n.divisors.push_back(di);
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    for (std::size_t j = 0; j < p.nodes.size(); ++j) {
      const auto& a = p.nodes[i].cone.gens;
      const auto& b = p.nodes[j].cone.gens;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) p.closure.emplace_back(i, j);
    }
  return p;
}

bool check_anti_isomorphism(const OrbitPoset& p) {
  std::size_t n = p.nodes.size();
  // Z_L for a divisor: the cones containing the ray.
  std::map<std::size_t, std::set<std::size_t>> zdiv;
  for (auto di : p.divisor_nodes)
    for (std::size_t j = 0; j < n; ++j)
      if (contains(p.nodes[j].cone, p.nodes[di].cone.gens[0])) zdiv[di].insert(j);
  std::vector<std::set<std::size_t>> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> acc;
    for (std::size_t j = 0; j < n; ++j) acc.insert(j);
    for (auto di : p.nodes[i].divisors) {
      std::set<std::size_t> keep;
      std::set_intersection(acc.begin(), acc.end(), zdiv[di].begin(), zdiv[di].end(),
                            std::inserter(keep, keep.begin()));
      acc.swap(keep);
    }
    z[i] = acc;
  }
  std::set<std::pair<std::size_t, std::size_t>> rel(p.closure.begin(), p.closure.end());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool sub = std::all_of(p.nodes[i].cone.gens.begin(), p.nodes[i].cone.gens.end(),
                             [&](const IntVec& g) { return contains(p.nodes[j].cone, g); });
      bool zsub = std::includes(z[i].begin(), z[i].end(), z[j].begin(), z[j].end());
      if (sub != zsub || sub != static_cast<bool>(rel.count({i, j}))) return false;
    }
  return true;
}

ConeTorus torus_of_cone(const SphericalDatum& d, const Cone& c) {
  if (c.dim != d.r()) throw Error(ErrorCode::InvalidDatum, "cone lives in the wrong lattice");
  if (!is_smooth(c))
    throw Error(ErrorCode::NotSmoothCone, "cone generators do not extend to a lattice basis");
  ConeTorus t;
  t.basis = c.gens;
  return t;
}

std::vector<int> wavefront_parabolic(const SphericalDatum& d, const std::vector<int>& theta) {
  if (!wavefront(d)) throw Error(ErrorCode::NotWavefront, d.name + " is not wavefront");
  std::set<int> out(d.parabolic.begin(), d.parabolic.end());
  for (int t : theta) {
    const auto& a = d.spherical_roots.at(static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) out.insert(static_cast<int>(i));
  }
  return {out.begin(), out.end()};
}

SubdivisionCheck check_smooth_subdivision(const SphericalDatum& d, const Fan& f) {
  SubdivisionCheck out;
  out.result = smooth_subdivision(d, f);
  out.smooth = fan_is_smooth(out.result);
  out.support = true;
  for (const auto& c : f.cones) {
    std::vector<Cone> pieces;
    for (const auto& p : out.result.cones)
      if (p.span_dim() == c.span_dim() &&
          std::all_of(p.gens.begin(), p.gens.end(), [&](const IntVec& g) { return contains(c, g); }))
        pieces.push_back(p);
    if (!subdivides(c, pieces)) out.support = false;
  }
  for (const auto& p : out.result.cones) {
    bool inside = std::any_of(f.cones.begin(), f.cones.end(), [&](const Cone& c) {
      return std::all_of(p.gens.begin(), p.gens.end(), [&](const IntVec& g) { return contains(c, g); });
    });
    if (!inside) out.support = false;
  }
  out.anti_isomorphism = check_anti_isomorphism(orbit_poset(d, out.result));
  return out;
}

}  // namespace spherex
