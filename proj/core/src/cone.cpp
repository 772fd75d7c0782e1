#include "spherex/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace spherex {

Cone::Cone(std::size_t d, IntMat g) : dim(d) {
  std::set<IntVec> s;
  for (auto& v : g) {
    if (v.size() != d) throw std::invalid_argument("Cone: generator of wrong dimension");
    if (is_zero(v)) continue;
    s.insert(primitive(v));
  }
  gens.assign(s.begin(), s.end());
}

std::size_t Cone::span_dim() const { return rank(gens); }

namespace {

IntMat span_perp(const Cone& c) {
  if (c.gens.empty()) return identity(c.dim);
  return nullspace(to_q(c.gens));
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

HRep h_representation(const Cone& c) {
  HRep h;
  h.perp = span_perp(c);
  std::size_t k = c.span_dim();
  if (k == 0) return h;
  std::set<IntVec> normals;
  for_each_subset(c.gens.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
    IntMat sys;
    for (auto i : idx) sys.push_back(c.gens[i]);
    if (rank(sys) != k - 1) return true;
    for (const auto& p : h.perp) sys.push_back(p);
    IntMat ns = sys.empty() ? identity(c.dim) : nullspace(to_q(sys));
    if (ns.size() != 1) return true;
    IntVec f = ns[0];
    bool pos = false, negs = false;
    for (const auto& g : c.gens) {
      Int v = dot(f, g);
      pos |= v > 0;
      negs |= v < 0;
    }
    if (pos && negs) return true;
    if (negs) f = neg(f);
    normals.insert(f);
    return true;
  });
  h.normals.assign(normals.begin(), normals.end());
  return h;
}

bool contains(const Cone& c, const QVec& x) {
  if (is_zero(x)) return true;
  if (c.gens.empty()) return false;
  std::size_t k = c.span_dim();
  bool found = false;
  for_each_subset(c.gens.size(), k, [&](const std::vector<std::size_t>& idx) {
    QMat rows;
    for (auto i : idx) rows.push_back(to_q(c.gens[i]));
    if (rank(rows) != k) return true;
    auto sol = solve_rows(rows, x);
    if (!sol) {
      found = false;
      return false;  // outside the span: no basis will work
    }
    if (std::all_of(sol->begin(), sol->end(), [](const Q& q) { return sgn(q) >= 0; })) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool contains(const Cone& c, const IntVec& x) { return contains(c, to_q(x)); }

bool is_pointed(const Cone& c) {
  if (c.gens.empty()) return true;
  HRep h = h_representation(c);
  IntMat all = h.normals;
  all.insert(all.end(), h.perp.begin(), h.perp.end());
  return rank(all) == c.dim;
}

bool is_irredundant(const Cone& c) {
  for (std::size_t i = 0; i < c.gens.size(); ++i) {
    IntMat others;
    for (std::size_t j = 0; j < c.gens.size(); ++j)
      if (j != i) others.push_back(c.gens[j]);
    Cone o(c.dim, others);
    if (contains(o, c.gens[i])) return false;
  }
  return true;
}

bool is_simplicial(const Cone& c) { return rank(c.gens) == c.gens.size(); }

Int multiplicity(const Cone& c) {
  if (!is_simplicial(c)) throw std::invalid_argument("multiplicity: cone is not simplicial");
  return saturation_index(c.gens);
}

bool is_smooth(const Cone& c) { return is_simplicial(c) && multiplicity(c) == 1; }

IntMat h_cone_generators(const IntMat& ineqs, const IntMat& eqs, std::size_t dim) {
  IntMat all = eqs;
  all.insert(all.end(), ineqs.begin(), ineqs.end());
  IntMat lineality = all.empty() ? identity(dim) : nullspace(to_q(all));
  IntMat base = eqs;
  base.insert(base.end(), lineality.begin(), lineality.end());
  std::size_t k = dim - (base.empty() ? 0 : rank(base));
  std::set<IntVec> rays;
  if (k > 0) {
    for_each_subset(ineqs.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
      IntMat sys = base;
      for (auto i : idx) sys.push_back(ineqs[i]);
      IntMat ns = sys.empty() ? identity(dim) : nullspace(to_q(sys));
      if (ns.size() != 1) return true;
      for (int sign : {1, -1}) {
        IntVec r = scale(ns[0], sign);
        bool ok = std::all_of(ineqs.begin(), ineqs.end(),
                              [&](const IntVec& f) { return dot(f, r) >= 0; });
        if (ok) rays.insert(r);
      }
      return true;
    });
  }
  IntMat out(rays.begin(), rays.end());
  for (const auto& l : lineality) {
    out.push_back(l);
    out.push_back(neg(l));
  }
  return out;
}

std::vector<Cone> facets(const Cone& c) {
  std::vector<Cone> out;
  HRep h = h_representation(c);
  for (const auto& f : h.normals) {
    IntMat on;
    for (const auto& g : c.gens)
      if (dot(f, g) == 0) on.push_back(g);
    out.emplace_back(c.dim, on);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cone> faces(const Cone& c) {
  std::set<Cone> seen;
  std::vector<Cone> stack{c};
  while (!stack.empty()) {
    Cone x = stack.back();
    stack.pop_back();
    if (!seen.insert(x).second) continue;
    for (auto& f : facets(x)) stack.push_back(f);
  }
  seen.insert(Cone(c.dim, {}));
  return {seen.begin(), seen.end()};
}

Cone intersect(const Cone& a, const Cone& b) {
  HRep ha = h_representation(a), hb = h_representation(b);
  IntMat ineqs = ha.normals, eqs = ha.perp;
  ineqs.insert(ineqs.end(), hb.normals.begin(), hb.normals.end());
  eqs.insert(eqs.end(), hb.perp.begin(), hb.perp.end());
  return Cone(a.dim, h_cone_generators(ineqs, eqs, a.dim));
}

Cone minimal_face(const Cone& c, const Cone& s) {
  HRep h = h_representation(c);
  IntMat gens = c.gens;
  for (const auto& f : h.normals) {
    bool holds = std::all_of(s.gens.begin(), s.gens.end(),
                             [&](const IntVec& g) { return dot(f, g) == 0; });
    if (!holds) continue;
    IntMat keep;
    for (const auto& g : gens)
      if (dot(f, g) == 0) keep.push_back(g);
    gens = keep;
  }
  return Cone(c.dim, gens);
}

std::vector<Cone> pulling_triangulation(const Cone& c, const IntMat& order) {
  if (c.gens.empty() || is_simplicial(c)) return {c};
  const IntVec* pulled = nullptr;
  for (const auto& v : order)
    if (std::binary_search(c.gens.begin(), c.gens.end(), v)) {
      pulled = &v;
      break;
    }
  if (!pulled) pulled = &c.gens.front();
  std::vector<Cone> out;
  for (const auto& f : facets(c)) {
    if (std::binary_search(f.gens.begin(), f.gens.end(), *pulled)) continue;
    for (const auto& s : pulling_triangulation(f, order)) {
      IntMat g = s.gens;
      g.push_back(*pulled);
      out.emplace_back(c.dim, g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spherex
