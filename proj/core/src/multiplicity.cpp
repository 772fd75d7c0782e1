#include "spherex/multiplicity.hpp"

#include <algorithm>
#include <bit>

#include "spherex/error.hpp"

namespace spherex {

void validate_constituents(const std::vector<SelfDualConstituent>& cs) {
  for (const auto& c : cs) {
    if (c.dim <= 0 || c.mult <= 0)
      throw Error(ErrorCode::InvalidDatum, "constituent " + c.label + " needs positive dim and multiplicity");
    if (c.det_at_minus1 != 1 && c.det_at_minus1 != -1)
      throw Error(ErrorCode::InvalidDatum, "det(-1) of " + c.label + " must be +1 or -1");
    if (c.sign_type == SignType::Symplectic && c.det_at_minus1 != 1)
      throw Error(ErrorCode::InvalidDatum, "symplectic constituent " + c.label + " has det(-1) = -1");
  }
}

namespace {

int sign_pow(int base, long e) { return (base == -1 && (e % 2 != 0)) ? -1 : 1; }

int oracle_entry(const RootNumberOracle& o, const std::string& a, const std::string& b) {
  auto it = o.find({a, b});
  if (it == o.end() || (it->second != 1 && it->second != -1))
    throw Error(ErrorCode::MissingOracleEntry, "no root number for (" + a + ", " + b + ")");
  return it->second;
}

struct Totals {
  long dim = 0;
  int det = 1;
};

Totals totals(const std::vector<SelfDualConstituent>& cs, const std::set<std::size_t>* subset) {
  Totals t;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (subset && !subset->count(i)) continue;
    t.dim += cs[i].dim * cs[i].mult;
    t.det *= sign_pow(cs[i].det_at_minus1, cs[i].mult);
  }
  return t;
}

}  // namespace

int gp_character(const std::vector<SelfDualConstituent>& M, const std::vector<SelfDualConstituent>& N,
                 const RootNumberOracle& oracle, const std::set<std::size_t>& s, Side side) {
  const auto& flipped = side == Side::Left ? M : N;
  const auto& other = side == Side::Left ? N : M;
  for (auto i : s)
    if (i >= flipped.size()) throw Error(ErrorCode::InvalidDatum, "flip index out of range");
  if (s.empty()) return 1;

  int eps = 1;
  for (auto i : s)
    for (const auto& c : other) {
      const auto& a = side == Side::Left ? flipped[i].label : c.label;
      const auto& b = side == Side::Left ? c.label : flipped[i].label;
      eps *= sign_pow(oracle_entry(oracle, a, b), flipped[i].mult * c.mult);
    }
  Totals minus = totals(flipped, &s);
  Totals whole = totals(other, nullptr);
  if (minus.dim % 2 != 0) throw Error(ErrorCode::OddDimension, "flipped part has odd dimension");
  if (whole.dim % 2 != 0) throw Error(ErrorCode::OddDimension, "the other side has odd dimension");
  return eps * sign_pow(minus.det, whole.dim / 2) * sign_pow(whole.det, minus.dim / 2);
}

bool gp_is_character(const std::vector<SelfDualConstituent>& M, const std::vector<SelfDualConstituent>& N,
                     const RootNumberOracle& oracle) {
  for (Side side : {Side::Left, Side::Right}) {
    std::size_t n = (side == Side::Left ? M : N).size();
    if (n > 20) throw Error(ErrorCode::InvalidDatum, "more than 2^20 flip subsets");
    std::size_t count = std::size_t{1} << n;
    auto subset = [&](std::size_t mask) {
      std::set<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.insert(i);
      return s;
    };
    std::vector<int> chi(count);
    for (std::size_t mask = 0; mask < count; ++mask) chi[mask] = gp_character(M, N, oracle, subset(mask), side);
    if (n <= 10) {
      for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
          if (chi[a ^ b] != chi[a] * chi[b]) return false;
    } else {
      // On (Z/2)^n this is equivalent to the pairwise identity.
      for (std::size_t mask = 0; mask < count; ++mask) {
        int prod = 1;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) prod *= chi[std::size_t{1} << i];
        if (prod != chi[mask]) return false;
      }
    }
  }
  return true;
}

FiniteGroup FiniteGroup::elementary_abelian(int k) {
  FiniteGroup g;
  int n = 1 << k;
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  FiniteGroup g;
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return g;
}

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < static_cast<int>(order()); ++b)
    if (mul(a, b) == 0) return b;
  throw Error(ErrorCode::InvalidDatum, "element without inverse");
}

void FiniteGroup::validate() const {
  int n = static_cast<int>(order());
  if (n == 0) throw Error(ErrorCode::InvalidDatum, "empty group");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::InvalidDatum, "multiplication table is not square");
  for (int a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw Error(ErrorCode::InvalidDatum, "element 0 is not the identity");
    for (int b = 0; b < n; ++b)
      if (mul(a, b) < 0 || mul(a, b) >= n) throw Error(ErrorCode::InvalidDatum, "table leaves the group");
    inverse(a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error(ErrorCode::InvalidDatum, "table is not associative");
}

void check_subgroup(const FiniteGroup& g, const Subgroup& h) {
  std::set<int> s(h.begin(), h.end());
  if (s.size() != h.size() || !s.count(0))
    throw Error(ErrorCode::NotASubgroup, "subgroup must list distinct elements including the identity");
  for (int a : h) {
    if (a < 0 || a >= static_cast<int>(g.order())) throw Error(ErrorCode::NotASubgroup, "element out of range");
    for (int b : h)
      if (!s.count(g.mul(a, b))) throw Error(ErrorCode::NotASubgroup, "subset is not closed under multiplication");
  }
}

mpq_class pairing(const FiniteGroup& g, const Subgroup& h, const ClassFunction& f1, const ClassFunction& f2) {
  mpq_class sum = 0;
  for (int x : h)
    sum += f1[static_cast<std::size_t>(x)] * f2[static_cast<std::size_t>(g.inverse(x))];
  return sum / static_cast<long>(h.size());
}

void ComponentGroupDatum::validate() const {
  group.validate();
  Subgroup all(group.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  for (const auto& [name, h] : subgroups) check_subgroup(group, h);
  for (const auto& [name, chi] : characters) {
    if (chi.size() != group.order())
      throw Error(ErrorCode::InvalidDatum, "character " + name + " has the wrong number of values");
    for (int a : all)
      for (int b : all)
        if (chi[static_cast<std::size_t>(group.mul(group.mul(a, b), group.inverse(a)))] !=
            chi[static_cast<std::size_t>(b)])
          throw Error(ErrorCode::InvalidDatum, "character " + name + " is not a class function");
    if (pairing(group, all, chi, chi) != 1)
      throw Error(ErrorCode::InvalidDatum, "character " + name + " is not irreducible");
  }
  for (auto a = characters.begin(); a != characters.end(); ++a)
    for (auto b = std::next(a); b != characters.end(); ++b)
      if (pairing(group, all, a->second, b->second) != 0)
        throw Error(ErrorCode::InvalidDatum, "characters " + a->first + " and " + b->first + " are not orthogonal");
}

namespace {

long as_integer(const mpq_class& x, const char* what) {
  if (x.get_den() != 1) throw Error(ErrorCode::InvalidDatum, std::string(what) + " is not an integer: " + x.get_str());
  return x.get_num().get_si();
}

ClassFunction trivial(std::size_t n) { return ClassFunction(n, 1); }

}  // namespace

long prasad_multiplicity(const ComponentGroupDatum& cg, const ClassFunction& rho, const std::vector<Subgroup>& fibers) {
  mpq_class m = 0;
  for (const auto& h : fibers) {
    check_subgroup(cg.group, h);
    m += pairing(cg.group, h, rho, trivial(cg.group.order()));
  }
  return as_integer(m, "multiplicity");
}

long fixed_point_multiplicity(const ComponentGroupDatum& cg, const ClassFunction& rho,
                              const std::vector<Subgroup>& fibers) {
  const FiniteGroup& g = cg.group;
  Subgroup all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  mpq_class m = 0;
  for (const auto& h : fibers) {
    check_subgroup(g, h);
    std::set<int> hs(h.begin(), h.end());
    // Permutation character of S_phi on left cosets x S_psi: x fixes y S_psi iff y^{-1} x y in S_psi.
    ClassFunction perm(g.order(), 0);
    for (int x : all) {
      long fixed = 0;
      for (int y : all)
        if (hs.count(g.mul(g.mul(g.inverse(y), x), y))) ++fixed;
      perm[static_cast<std::size_t>(x)] = mpq_class(fixed, static_cast<long>(h.size()));
    }
    m += pairing(g, all, rho, perm);
  }
  return as_integer(m, "multiplicity");
}

long stable_multiplicity(const ComponentGroupDatum& cg, const std::vector<Subgroup>& fibers) {
  long total = 0;
  for (const auto& [name, rho] : cg.characters)
    total += as_integer(rho[0], "character degree") * prasad_multiplicity(cg, rho, fibers);
  return total;
}

void check_heart_sequence(const ComponentGroupDatum& cg, const RefinedInput& in) {
  if (in.a_rank < 0 || in.a_rank > 20) throw Error(ErrorCode::InvalidDatum, "rank of A out of range");
  std::uint32_t a_order = std::uint32_t{1} << in.a_rank;
  std::set<std::uint32_t> norm(in.norm_image.begin(), in.norm_image.end());
  for (auto x : norm)
    if (x >= a_order) throw Error(ErrorCode::InconsistentHeartSequence, "norm image leaves A");
  for (auto x : norm)
    for (auto y : norm)
      if (!norm.count(x ^ y)) throw Error(ErrorCode::InconsistentHeartSequence, "norm image is not a subgroup");
  if (!norm.count(0)) throw Error(ErrorCode::InconsistentHeartSequence, "norm image misses the identity");
  for (const auto& f : in.fibers) {
    check_subgroup(cg.group, f.s_psi);
    check_subgroup(cg.group, f.s_heart);
    std::set<int> heart(f.s_heart.begin(), f.s_heart.end());
    for (int x : f.s_psi)
      if (!heart.count(x)) throw Error(ErrorCode::InconsistentHeartSequence, "S_psi is not inside S_psi^heart");
    std::set<std::uint32_t> image;
    std::set<int> kernel;
    for (int x : f.s_heart) {
      auto it = f.theta.find(x);
      if (it == f.theta.end() || it->second >= a_order)
        throw Error(ErrorCode::InconsistentHeartSequence, "theta is undefined on element " + std::to_string(x));
      image.insert(it->second);
      if (it->second == 0) kernel.insert(x);
    }
    for (int x : f.s_heart)
      for (int y : f.s_heart)
        if (f.theta.at(cg.group.mul(x, y)) != (f.theta.at(x) ^ f.theta.at(y)))
          throw Error(ErrorCode::InconsistentHeartSequence, "theta is not a homomorphism");
    if (kernel != std::set<int>(f.s_psi.begin(), f.s_psi.end()))
      throw Error(ErrorCode::InconsistentHeartSequence, "kernel of theta differs from S_psi");
    for (auto x : norm)
      if (!image.count(x))
        throw Error(ErrorCode::InconsistentHeartSequence, "image of theta does not contain the norm image");
  }
}

std::map<std::uint32_t, mpq_class> prasad_refined(const ComponentGroupDatum& cg, const ClassFunction& rho,
                                                   const RefinedInput& in) {
  check_heart_sequence(cg, in);
  std::uint32_t a_order = std::uint32_t{1} << in.a_rank;
  std::set<std::uint32_t> norm(in.norm_image.begin(), in.norm_image.end());
  mpq_class d_order(a_order, static_cast<unsigned long>(norm.size()));
  std::map<std::uint32_t, mpq_class> out;
  for (std::uint32_t beta = 0; beta < a_order; ++beta) {
    mpq_class m = 0;
    for (const auto& f : in.fibers) {
      ClassFunction chi(cg.group.order(), 0);
      for (int x : f.s_heart) {
        std::uint32_t t = f.theta.at(x);
        chi[static_cast<std::size_t>(x)] = std::popcount(t & beta) % 2 ? -1 : 1;
      }
      // |D_psi| = |image(theta) * N| / |N|.
      std::set<std::uint32_t> img_n;
      for (int x : f.s_heart)
        for (auto n : norm) img_n.insert(f.theta.at(x) ^ n);
      mpq_class d_psi_order(static_cast<unsigned long>(img_n.size()), static_cast<unsigned long>(norm.size()));
      m += pairing(cg.group, f.s_heart, rho, chi) * d_psi_order / d_order;
    }
    out[beta] = m;
  }
  return out;
}

BcDegree bc_degree(const std::vector<BcConstituent>& cs) {
  if (cs.empty()) throw Error(ErrorCode::InvalidDatum, "base change needs at least one constituent");
  std::map<std::string, long> selfdual;
  for (const auto& c : cs) {
    if (c.mult <= 0) throw Error(ErrorCode::InvalidDatum, "multiplicity of " + c.label + " must be positive");
    if (c.selfdual) selfdual[c.label] += c.mult;
  }
  BcDegree r;
  r.deg = 1;
  r.fiber = 1;
  for (const auto& [label, mult] : selfdual) {
    for (long i = 0; i < mult; ++i) r.deg *= 2;
    r.fiber *= 1 + mult;
  }
  r.m_qs = (r.deg + 1) / 2;
  r.m_nqs = r.deg / 2;
  r.m_X = r.deg;
  return r;
}

long degree_weighted_count(const std::vector<WeightedFiber>& fibers) {
  long total = 0;
  for (const auto& f : fibers) total += f.degree * f.components;
  return total;
}

}  // namespace spherex
