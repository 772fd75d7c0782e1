#include "spherex/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spherex/error.hpp"

namespace spherex {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidDatum: return "InvalidDatum";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::AmbiguousDecomposition: return "AmbiguousDecomposition";
    case ErrorCode::TypeNWithout2Alpha: return "TypeNWithout2Alpha";
    case ErrorCode::InconsistentCoroot: return "InconsistentCoroot";
    case ErrorCode::TypeNPresent: return "TypeNPresent";
    case ErrorCode::InvalidParabolicType: return "InvalidParabolicType";
    case ErrorCode::ActionNotDefined: return "ActionNotDefined";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::MalformedFan: return "MalformedFan";
    case ErrorCode::NotSmoothCone: return "NotSmoothCone";
    case ErrorCode::NotWavefront: return "NotWavefront";
    case ErrorCode::PoleAtSpecialization: return "PoleAtSpecialization";
    case ErrorCode::RegularizationMismatch: return "RegularizationMismatch";
    case ErrorCode::MissingOracleEntry: return "MissingOracleEntry";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::InconsistentHeartSequence: return "InconsistentHeartSequence";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("dot: int64 overflow");
  return static_cast<Int>(s);
}

Q dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVec scale(const IntVec& a, Int k) {
  IntVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

IntVec neg(const IntVec& a) { return scale(a, -1); }

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

bool is_zero(const QVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Q& x) { return sgn(x) == 0; });
}

Int gcd_of(const IntVec& a) {
  Int g = 0;
  for (Int x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IntVec primitive(const IntVec& a) {
  Int g = gcd_of(a);
  if (g <= 1) return a;
  IntVec r(a);
  for (auto& x : r) x /= g;
  return r;
}

QVec to_q(const IntVec& a) {
  QVec r;
  r.reserve(a.size());
  for (Int x : a) r.emplace_back(static_cast<long>(x));
  return r;
}

QMat to_q(const IntMat& m) {
  QMat r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(to_q(row));
  return r;
}

static Int to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in int64");
  return z.get_si();
}

IntVec primitive_on_ray(const QVec& a) {
  mpz_class l = 1;
  for (const auto& x : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& x : a) {
    mpz_class v = x.get_num() * (l / x.get_den());
    z.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  IntVec r;
  for (auto& v : z) r.push_back(to_int64(g == 0 ? v : mpz_class(v / g)));
  return r;
}

bool is_integral(const QVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Q& x) { return x.get_den() == 1; });
}

IntVec to_int(const QVec& a) {
  IntVec r;
  for (const auto& x : a) {
    if (x.get_den() != 1) throw std::domain_error("to_int: non-integral entry " + x.get_str());
    r.push_back(to_int64(x.get_num()));
  }
  return r;
}

IntMat transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat t(m[0].size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

QMat transpose(const QMat& m) {
  if (m.empty()) return {};
  QMat t(m[0].size(), QVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMat mul(const IntMat& a, const IntMat& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMat r(a.size(), IntVec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      Int x = a[i][k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += x * b[k][j];
    }
  return r;
}

QMat mul(const QMat& a, const QMat& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  QMat r(a.size(), QVec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

IntVec mul(const IntMat& a, const IntVec& x) {
  IntVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

QVec mul(const QMat& a, const QVec& x) {
  QVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

IntVec mul(const IntVec& x, const IntMat& a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  IntVec r(cols, 0);
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t j = 0; j < cols; ++j) r[j] += x[k] * a[k][j];
  return r;
}

QVec mul(const QVec& x, const QMat& a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  QVec r(cols, 0);
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t j = 0; j < cols; ++j) r[j] += x[k] * a[k][j];
  return r;
}

IntMat identity(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Gaussian elimination to reduced row echelon form; returns pivot columns.
static std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const QMat& m) {
  QMat a(m);
  return rref(a).size();
}

std::size_t rank(const IntMat& m) { return rank(to_q(m)); }

Q det(QMat m) {
  std::size_t n = m.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Q f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

Int det(const IntMat& m) {
  Q d = det(to_q(m));
  return to_int64(d.get_num());
}

IntMat nullspace(const QMat& m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  QMat a(m);
  auto piv = rref(a);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  IntMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    QVec v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(primitive_on_ray(v));
  }
  return basis;
}

std::optional<QVec> solve_rows(const QMat& rows, const QVec& x) {
  std::size_t k = rows.size();
  std::size_t n = x.size();
  // Columns of the augmented system are the rows; unknowns are c_0..c_{k-1}.
  QMat aug(n, QVec(k + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = rows[j][i];
    aug[i][k] = x[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  QVec c(k, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = aug[r][k];
  return c;
}

namespace {

using ZRow = std::vector<mpz_class>;
using ZMat = std::vector<ZRow>;

ZMat to_z(const IntMat& m) {
  ZMat z;
  for (const auto& r : m) {
    ZRow row;
    for (Int x : r) row.emplace_back(static_cast<long>(x));
    z.push_back(row);
  }
  return z;
}

IntMat from_z(const ZMat& m) {
  IntMat r;
  for (const auto& row : m) {
    IntVec v;
    for (const auto& x : row) v.push_back(to_int64(x));
    r.push_back(v);
  }
  return r;
}

void axpy(ZRow& dst, const mpz_class& f, const ZRow& src) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= f * src[j];
}

// Unimodular row reduction to Hermite normal form. If u is given, the same
// row operations are applied to it, so u_out * a_in = a_out.
std::size_t echelon(ZMat& a, ZMat* u) {
  if (a.empty()) return 0;
  std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (sgn(a[i][c]) == 0) continue;
        if (best == a.size() || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[best], a[r]);
      if (u) std::swap((*u)[best], (*u)[r]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (sgn(a[i][c]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        axpy(a[i], q, a[r]);
        if (u) axpy((*u)[i], q, (*u)[r]);
        if (sgn(a[i][c]) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= a.size() || sgn(a[r][c]) == 0) continue;
    if (sgn(a[r][c]) < 0) {
      for (auto& x : a[r]) x = -x;
      if (u)
        for (auto& x : (*u)[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      axpy(a[i], q, a[r]);
      if (u) axpy((*u)[i], q, (*u)[r]);
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMat hnf(const IntMat& rows) {
  ZMat a = to_z(rows);
  std::size_t r = echelon(a, nullptr);
  a.resize(r);
  return from_z(a);
}

IntMat kernel(const IntMat& m, std::size_t n) {
  if (m.empty()) return identity(n);
  ZMat at = to_z(transpose(m));
  ZMat u = to_z(identity(n));
  std::size_t r = echelon(at, &u);
  IntMat k;
  for (std::size_t i = r; i < n; ++i) {
    IntVec v;
    for (const auto& x : u[i]) v.push_back(to_int64(x));
    k.push_back(v);
  }
  return hnf(k);
}

IntMat saturate(const IntMat& rows, std::size_t n) {
  IntMat h = hnf(rows);
  if (h.empty()) return {};
  IntMat k = kernel(h, n);
  if (k.empty()) return identity(n);
  return kernel(k, n);
}

std::optional<IntVec> lattice_coords(const IntVec& x, const IntMat& rows) {
  auto c = solve_rows(to_q(rows), to_q(x));
  if (!c || !is_integral(*c)) return std::nullopt;
  return to_int(*c);
}

bool in_lattice(const IntVec& x, const IntMat& rows) {
  if (is_zero(x)) return true;
  IntMat h = hnf(rows);
  return lattice_coords(x, h).has_value();
}

Int saturation_index(const IntMat& rows) {
  if (rows.empty()) return 1;
  IntMat s = saturate(rows, rows[0].size());
  IntMat coords;
  for (const auto& r : rows) {
    auto c = lattice_coords(r, s);
    if (!c) throw std::logic_error("saturation_index: row outside saturation");
    coords.push_back(*c);
  }
  Int d = det(coords);
  return d < 0 ? -d : d;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const Q& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace spherex
