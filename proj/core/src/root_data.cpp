#include "spherex/root_data.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "spherex/error.hpp"

namespace spherex {

IntMat RootDatum::cartan() const {
  std::size_t k = semisimple_rank();
  IntMat c(k, IntVec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c[i][j] = dot(simple_roots[i], simple_coroots[j]);
  return c;
}

bool is_finite_type_cartan(const IntMat& c) {
  std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (c[i].size() != k || c[i][i] != 2) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) return false;
      if ((c[i][j] == 0) != (c[j][i] == 0)) return false;
    }
  }
  if (k > 20) return false;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    QMat sub;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      QVec row;
      for (std::size_t j = 0; j < k; ++j)
        if (mask >> j & 1) row.emplace_back(static_cast<long>(c[i][j]));
      sub.push_back(row);
    }
    if (sgn(det(sub)) <= 0) return false;
  }
  return true;
}

std::string cartan_type(const IntMat& c) {
  std::size_t k = c.size();
  std::vector<int> comp(k, -1);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    comps.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(comps.size() - 1);
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comps.back().push_back(i);
      for (std::size_t j = 0; j < k; ++j)
        if (j != i && c[i][j] != 0 && comp[j] < 0) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
    }
  }
  std::vector<std::string> labels;
  for (auto& nodes : comps) {
    std::size_t n = nodes.size();
    std::string n_str = std::to_string(n);
    auto deg = [&](std::size_t i) {
      int d = 0;
      for (std::size_t j : nodes)
        if (j != i && c[i][j] != 0) ++d;
      return d;
    };
    std::size_t branch = k;
    bool multiple = false;
    std::size_t long_end = k, short_end = k;
    for (std::size_t i : nodes) {
      if (deg(i) == 3) branch = i;
      for (std::size_t j : nodes)
        if (j != i && c[i][j] * c[j][i] > 1) {
          multiple = true;
          if (c[i][j] * c[j][i] == 3) long_end = short_end = k + 1;
          else if (c[i][j] < c[j][i]) {
            long_end = i;
            short_end = j;
          }
        }
    }
    std::string label;
    if (n == 1) {
      label = "A1";
    } else if (long_end == k + 1) {
      label = "G2";
    } else if (multiple) {
      if (n == 2) label = "B2";
      else if (n == 4 && deg(long_end) == 2 && deg(short_end) == 2) label = "F4";
      else label = (deg(short_end) == 1 ? "B" : "C") + n_str;
    } else if (branch == k) {
      label = "A" + n_str;
    } else {
      // Arm lengths from the branch node.
      std::vector<std::size_t> arms;
      for (std::size_t j : nodes) {
        if (j == branch || c[branch][j] == 0) continue;
        std::size_t len = 1, prev = branch, cur = j;
        for (;;) {
          std::size_t next = k;
          for (std::size_t x : nodes)
            if (x != cur && x != prev && c[cur][x] != 0) next = x;
          if (next == k) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) label = "D" + n_str;
      else label = "E" + n_str;
    }
    labels.push_back(label);
  }
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "x") + l;
  return out;
}

void RootDatum::validate() const {
  if (simple_roots.size() != simple_coroots.size())
    throw Error(ErrorCode::InvalidDatum, "simple roots and coroots differ in number");
  if (!names.empty() && names.size() != simple_roots.size())
    throw Error(ErrorCode::InvalidDatum, "names do not match simple roots");
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    if (simple_roots[i].size() != rank || simple_coroots[i].size() != rank)
      throw Error(ErrorCode::InvalidDatum, "root vector of wrong length");
    if (dot(simple_roots[i], simple_coroots[i]) != 2)
      throw Error(ErrorCode::InvalidDatum, "<alpha, alpha^vee> != 2 for simple root " +
                                               std::to_string(i));
  }
  if (!is_finite_type_cartan(cartan()))
    throw Error(ErrorCode::InvalidDatum, "Cartan matrix is not of finite type");
}

int RootDatum::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

RootDatum dual_root_datum(const RootDatum& rd) {
  RootDatum d;
  d.rank = rd.rank;
  d.simple_roots = rd.simple_coroots;
  d.simple_coroots = rd.simple_roots;
  d.names = rd.names;
  return d;
}

IntMat simple_reflection(const IntVec& root, const IntVec& coroot) {
  std::size_t n = root.size();
  IntMat m = identity(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a][b] -= root[a] * coroot[b];
  return m;
}

namespace {

struct VecHash {
  std::size_t operator()(const IntVec& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

IntVec flatten(const IntMat& m) {
  IntVec f;
  for (const auto& r : m) f.insert(f.end(), r.begin(), r.end());
  return f;
}

}  // namespace

WeylGroup WeylGroup::generate(const std::vector<IntMat>& generators, std::size_t dim,
                              std::size_t cap) {
  WeylGroup g;
  g.dim_ = dim;
  g.gens_ = generators;
  std::unordered_map<IntVec, std::size_t, VecHash> seen;
  IntMat id = identity(dim);
  g.matrices_.push_back(id);
  g.lengths_.push_back(0);
  g.parent_.push_back(0);
  g.last_gen_.push_back(-1);
  seen.emplace(flatten(id), 0);
  for (std::size_t head = 0; head < g.matrices_.size(); ++head) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      IntMat next = mul(g.matrices_[head], generators[s]);
      IntVec key = flatten(next);
      if (seen.count(key)) continue;
      if (g.matrices_.size() >= cap)
        throw Error(ErrorCode::CapExceeded,
                    "Weyl group enumeration passed cap " + std::to_string(cap));
      seen.emplace(std::move(key), g.matrices_.size());
      g.matrices_.push_back(std::move(next));
      g.lengths_.push_back(g.lengths_[head] + 1);
      g.parent_.push_back(head);
      g.last_gen_.push_back(static_cast<int>(s));
    }
  }
  g.longest_ = static_cast<std::size_t>(
      std::max_element(g.lengths_.begin(), g.lengths_.end()) - g.lengths_.begin());
  return g;
}

std::vector<int> WeylGroup::word(std::size_t i) const {
  std::vector<int> w;
  while (i != 0) {
    w.push_back(last_gen_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

WeylGroup generate_weyl(const RootDatum& rd, std::size_t cap) {
  std::vector<IntMat> gens;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
    gens.push_back(simple_reflection(rd.simple_roots[i], rd.simple_coroots[i]));
  return WeylGroup::generate(gens, rd.rank, cap);
}

std::vector<Root> all_roots(const RootDatum& rd) {
  std::size_t k = rd.semisimple_rank();
  IntMat c = rd.cartan();
  std::map<IntVec, IntVec> found;  // root coords -> coroot coords
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < k; ++i) {
    IntVec e(k, 0);
    e[i] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec b = queue.front();
    queue.pop_front();
    IntVec bc = found.at(b);
    for (std::size_t j = 0; j < k; ++j) {
      Int pair = 0, copair = 0;
      for (std::size_t t = 0; t < k; ++t) {
        pair += b[t] * c[t][j];
        copair += c[j][t] * bc[t];
      }
      IntVec nb(b), nbc(bc);
      nb[j] -= pair;
      nbc[j] -= copair;
      if (found.emplace(nb, nbc).second) queue.push_back(nb);
    }
  }
  std::vector<Root> out;
  for (const auto& [coords, co] : found) {
    Root r;
    r.coords = coords;
    r.co_coords = co;
    r.vec = IntVec(rd.rank, 0);
    r.covec = IntVec(rd.rank, 0);
    for (std::size_t t = 0; t < k; ++t) {
      r.vec = add(r.vec, scale(rd.simple_roots[t], coords[t]));
      r.covec = add(r.covec, scale(rd.simple_coroots[t], co[t]));
      r.height += coords[t];
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords > b.coords;
  });
  return out;
}

std::vector<Root> positive_roots(const RootDatum& rd) {
  std::vector<Root> out;
  for (auto& r : all_roots(rd))
    if (r.height > 0) out.push_back(std::move(r));
  return out;
}

DualityInvolution duality_involution(const RootDatum& rd, const WeylGroup& w) {
  DualityInvolution d;
  d.matrix = w.matrix(w.longest());
  for (auto& row : d.matrix)
    for (auto& x : row) x = -x;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    IntVec img = mul(d.matrix, rd.simple_roots[i]);
    int j = -1;
    for (std::size_t t = 0; t < rd.semisimple_rank(); ++t)
      if (rd.simple_roots[t] == img) j = static_cast<int>(t);
    if (j < 0) throw Error(ErrorCode::InvalidDatum, "-w_l does not permute the simple roots");
    d.perm.push_back(j);
  }
  return d;
}

std::vector<Int> poincare_polynomial(const WeylGroup& w) {
  std::vector<Int> p(static_cast<std::size_t>(w.max_length()) + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) ++p[static_cast<std::size_t>(w.length(i))];
  return p;
}

mpz_class point_count(const RootDatum& rd, const WeylGroup& w, long q) {
  auto p = poincare_polynomial(w);
  mpz_class pq = 0, qp = 1;
  for (Int c : p) {
    pq += qp * static_cast<long>(c);
    qp *= q;
  }
  mpz_class res = pq;
  std::size_t npos = positive_roots(rd).size();
  for (std::size_t i = 0; i < npos; ++i) res *= q;
  for (std::size_t i = 0; i < rd.rank; ++i) res *= (q - 1);
  return res;
}

}  // namespace spherex
