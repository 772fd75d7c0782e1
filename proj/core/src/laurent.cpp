#include "spherex/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "spherex/error.hpp"

namespace spherex {

namespace {

bool is_u_var(const std::string& v) { return v == "u" || v.rfind("u_", 0) == 0; }

mpq_class qpow(const mpq_class& b, long e) {
  mpq_class r = 1;
  mpq_class base = e < 0 ? mpq_class(1 / b) : b;
  for (long i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(UPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

void trim(std::vector<mpq_class>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division a / b over Q, if the remainder vanishes and the quotient is integral.
std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b) {
  std::vector<mpq_class> rem(a.begin(), a.end());
  int db = degree(b);
  if (degree(a) < db) return std::nullopt;
  std::vector<mpq_class> quo(static_cast<std::size_t>(degree(a) - db + 1), 0);
  for (int i = degree(a); i >= db; --i) {
    mpq_class c = rem[static_cast<std::size_t>(i)] / mpq_class(b[static_cast<std::size_t>(db)]);
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  UPoly q;
  for (const auto& x : quo) {
    if (x.get_den() != 1) return std::nullopt;
    q.push_back(x.get_num());
  }
  trim(q);
  return q;
}

// Scales to an integer polynomial with content 1 and positive constant term.
UPoly normalize(const std::vector<mpq_class>& p) {
  mpz_class l = 1, g = 0;
  for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  UPoly z;
  for (const auto& x : p) {
    mpz_class v = x.get_num() * (l / x.get_den());
    z.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g == 0) return {0};
  for (auto& v : z) v /= g;
  if (z[0] < 0)
    for (auto& v : z) v = -v;
  trim(z);
  return z;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  std::vector<mpq_class> x(a.begin(), a.end()), y(b.begin(), b.end());
  trim(x);
  trim(y);
  while (!y.empty()) {
    std::vector<mpq_class> r = x;
    int dy = static_cast<int>(y.size()) - 1;
    while (static_cast<int>(r.size()) - 1 >= dy && !r.empty()) {
      int dr = static_cast<int>(r.size()) - 1;
      mpq_class c = r.back() / y.back();
      for (int j = 0; j <= dy; ++j) r[static_cast<std::size_t>(dr - dy + j)] -= c * y[static_cast<std::size_t>(j)];
      r.pop_back();
      trim(r);
    }
    x = y;
    y = r;
  }
  return normalize(x);
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

void refine(std::vector<std::pair<UPoly, long>>& list) {
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < list.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < list.size() && !changed; ++j) {
        UPoly g = gcd(list[i].first, list[j].first);
        if (degree(g) <= 0) continue;
        auto [pi, ei] = list[i];
        auto [pj, ej] = list[j];
        list.erase(list.begin() + static_cast<long>(j));
        list.erase(list.begin() + static_cast<long>(i));
        list.emplace_back(g, ei + ej);
        UPoly qi = *divide_exact(pi, g), qj = *divide_exact(pj, g);
        if (degree(qi) > 0) list.emplace_back(qi, ei);
        if (degree(qj) > 0) list.emplace_back(qj, ej);
        changed = true;
      }
    if (!changed) break;
  }
  list.erase(std::remove_if(list.begin(), list.end(), [](const auto& e) { return e.second == 0; }),
             list.end());
  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
}

// base^k = m with base primitive and first exponent positive.
std::pair<Monomial, long> split_power(const Monomial& m) {
  long g = 0;
  for (const auto& [v, e] : m) g = std::gcd(g, std::abs(e));
  Monomial base;
  if (g == 0) return {base, 0};
  long sign = m.begin()->second > 0 ? 1 : -1;
  for (const auto& [v, e] : m) base[v] = e / g * sign;
  return {base, g * sign};
}

std::string poly_string(const UPoly& p, const Monomial& base, bool q_form);

}  // namespace

bool VarLess::operator()(const std::string& a, const std::string& b) const {
  bool ua = is_u_var(a), ub = is_u_var(b);
  if (ua != ub) return ua;
  return a < b;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b) {
    r[v] += e;
    if (r[v] == 0) r.erase(v);
  }
  return r;
}

Monomial mono_pow(const Monomial& a, long k) {
  Monomial r;
  if (k == 0) return r;
  for (const auto& [v, e] : a) r[v] = e * k;
  return r;
}

namespace {

std::string var_string(const std::string& v, long e, bool q_form) {
  std::string name = v;
  if (q_form && is_u_var(v)) {
    name = "q" + v.substr(1);
    e = -e / 2;
  }
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

std::string mono_string_impl(const Monomial& m, bool q_form) {
  std::string s;
  for (const auto& [v, e] : m) {
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += var_string(v, e, q_form);
  }
  return s;
}

std::string poly_string(const UPoly& p, const Monomial& base, bool q_form) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    mpz_class c = p[i];
    std::string m = mono_string_impl(mono_pow(base, static_cast<long>(i)), q_form);
    bool negative = c < 0;
    if (negative) c = -c;
    if (s.empty()) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    if (m.empty()) s += c.get_str();
    else if (c == 1) s += m;
    else s += c.get_str() + "*" + m;
  }
  return s;
}

}  // namespace

std::string mono_string(const Monomial& m) { return mono_string_impl(m, false); }

const UPoly& cyclotomic(int d) {
  static std::recursive_mutex mu;
  static std::map<int, UPoly> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  UPoly p;
  if (d == 1) {
    p = {1, -1};
  } else {
    p.assign(static_cast<std::size_t>(d) + 1, 0);
    p[0] = 1;
    p[static_cast<std::size_t>(d)] = -1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) p = *divide_exact(p, cyclotomic(e));
  }
  return cache.emplace(d, p).first->second;
}

LaurentRational::LaurentRational(const mpq_class& c) : constant_(c) {
  if (c == 0) zero_ = true;
}

LaurentRational LaurentRational::zero() { return LaurentRational(mpq_class(0)); }

LaurentRational LaurentRational::monomial(const Monomial& m, const mpq_class& c) {
  LaurentRational r(c);
  if (!r.zero_) r.mono_ = mono_pow(m, 1);
  return r;
}

LaurentRational LaurentRational::one_minus(const Monomial& m, const mpq_class& c) {
  auto [base, k] = split_power(m);
  std::map<long, mpq_class> terms;
  terms[0] += 1;
  terms[k] -= c;
  return univariate(base, terms);
}

LaurentRational LaurentRational::univariate(const Monomial& base,
                                            const std::map<long, mpq_class>& terms) {
  LaurentRational r;
  auto [b, k] = split_power(base);
  std::map<long, mpq_class> t;
  for (const auto& [i, c] : terms) t[i * (k == 0 ? 0 : k)] += c;
  if (k == 0) {
    mpq_class s = 0;
    for (const auto& [i, c] : terms) s += c;
    return LaurentRational(s);
  }
  r.absorb(b, t, 1);
  r.cleanup();
  return r;
}

void LaurentRational::absorb(const Monomial& base, std::map<long, mpq_class> terms, long e) {
  if (e == 0 || zero_) return;
  for (auto it = terms.begin(); it != terms.end();) it = it->second == 0 ? terms.erase(it) : std::next(it);
  if (terms.empty()) {
    if (e < 0) throw Error(ErrorCode::PoleAtSpecialization, "factor vanishes identically");
    *this = zero();
    return;
  }
  if (base.empty()) {
    mpq_class s = 0;
    for (const auto& [i, c] : terms) s += c;
    if (s == 0) {
      if (e < 0) throw Error(ErrorCode::PoleAtSpecialization, "factor vanishes at the specialization");
      *this = zero();
      return;
    }
    constant_ *= qpow(s, e);
    return;
  }
  long k0 = terms.begin()->first;
  long kmax = terms.rbegin()->first;
  mono_ = mono_mul(mono_, mono_pow(base, k0 * e));
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(kmax - k0 + 1), 0);
  for (const auto& [i, c] : terms) coeffs[static_cast<std::size_t>(i - k0)] = c;
  UPoly p = normalize(coeffs);
  // coeffs = scale * p
  mpq_class scale = coeffs[0] / mpq_class(p[0]);
  constant_ *= qpow(scale, e);
  absorb_poly(base, p, e);
}

void LaurentRational::absorb_poly(const Monomial& base, UPoly p, long e) {
  if (degree(p) <= 0) return;
  FactorGroup& g = factors_[base];
  for (long d = 1; degree(p) > 0 && d <= 2L * degree(p) * degree(p) + 2; ++d) {
    if (euler_phi(d) > degree(p)) continue;
    const UPoly& phi = cyclotomic(static_cast<int>(d));
    for (;;) {
      auto q = divide_exact(p, phi);
      if (!q) break;
      p = *q;
      g.cyclo[static_cast<int>(d)] += e;
    }
  }
  if (degree(p) > 0) {
    g.other.emplace_back(p, e);
    refine(g.other);
  }
}

void LaurentRational::cleanup() {
  for (auto it = factors_.begin(); it != factors_.end();) {
    auto& g = it->second;
    for (auto c = g.cyclo.begin(); c != g.cyclo.end();) c = c->second == 0 ? g.cyclo.erase(c) : std::next(c);
    refine(g.other);
    it = g.trivial() ? factors_.erase(it) : std::next(it);
  }
  if (zero_) {
    constant_ = 0;
    mono_.clear();
    factors_.clear();
  }
}

bool LaurentRational::is_constant() const { return zero_ || (mono_.empty() && factors_.empty()); }

LaurentRational& LaurentRational::operator*=(const LaurentRational& o) {
  if (zero_ || o.zero_) {
    *this = zero();
    return *this;
  }
  constant_ *= o.constant_;
  mono_ = mono_mul(mono_, o.mono_);
  for (const auto& [base, g] : o.factors_) {
    FactorGroup& mine = factors_[base];
    for (const auto& [d, e] : g.cyclo) mine.cyclo[d] += e;
    mine.other.insert(mine.other.end(), g.other.begin(), g.other.end());
  }
  cleanup();
  return *this;
}

LaurentRational LaurentRational::operator*(const LaurentRational& o) const {
  LaurentRational r = *this;
  r *= o;
  return r;
}

LaurentRational LaurentRational::pow(long k) const {
  if (k == 0) return LaurentRational();
  if (zero_) {
    if (k < 0) throw Error(ErrorCode::PoleAtSpecialization, "inverse of zero");
    return zero();
  }
  LaurentRational r;
  r.constant_ = qpow(constant_, k);
  r.mono_ = mono_pow(mono_, k);
  r.factors_ = factors_;
  for (auto& [base, g] : r.factors_) {
    for (auto& [d, e] : g.cyclo) e *= k;
    for (auto& [p, e] : g.other) e *= k;
  }
  return r;
}

LaurentRational LaurentRational::inverse() const { return pow(-1); }

LaurentRational& LaurentRational::operator/=(const LaurentRational& o) { return *this *= o.inverse(); }

LaurentRational LaurentRational::operator/(const LaurentRational& o) const {
  LaurentRational r = *this;
  r /= o;
  return r;
}

bool LaurentRational::operator==(const LaurentRational& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  LaurentRational q = *this / o;
  return q.constant_ == 1 && q.mono_.empty() && q.factors_.empty();
}

std::set<std::string> LaurentRational::variables() const {
  std::set<std::string> v;
  for (const auto& [x, e] : mono_) v.insert(x);
  for (const auto& [base, g] : factors_)
    for (const auto& [x, e] : base) v.insert(x);
  return v;
}

namespace {

std::pair<mpq_class, Monomial> image_of(const Monomial& m, const Substitution& s) {
  mpq_class coef = 1;
  Monomial out;
  for (const auto& [v, e] : m) {
    auto it = s.find(v);
    if (it == s.end()) {
      out = mono_mul(out, Monomial{{v, e}});
      continue;
    }
    const VarImage& img = it->second;
    if (e % img.root != 0)
      throw std::domain_error("odd power of " + v + ": the value at numeric q is not rational");
    coef *= qpow(img.value, e / img.root);
    out = mono_mul(out, mono_pow(img.image, e));
  }
  return {coef, out};
}

}  // namespace

mpq_class LaurentRational::evaluate(const std::map<std::string, mpq_class>& values, const std::string& u,
                                    long q) const {
  Substitution s;
  for (const auto& v : variables()) {
    auto it = values.find(v);
    if (it != values.end()) {
      s[v] = VarImage{it->second, 1, {}};
    } else if (v == u && q > 0) {
      s[v] = VarImage{mpq_class(1, q), 2, {}};
    } else {
      throw std::invalid_argument("evaluate: no value for variable " + v);
    }
  }
  LaurentRational r = substitute(s);
  if (!r.is_constant()) throw std::logic_error("evaluate: result is not constant");
  return r.constant_;
}

namespace {

bool u_even(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& ve) { return !is_u_var(ve.first) || ve.second % 2 == 0; });
}

UPoly negate_variable(const UPoly& p) {
  UPoly r = p;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return r;
}

UPoly multiply(const UPoly& a, const UPoly& b) {
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

UPoly even_part(const UPoly& p) {
  UPoly r;
  for (std::size_t i = 0; i < p.size(); i += 2) r.push_back(p[i]);
  return r;
}

// Rewrites the factor groups over bases with even u-exponents, pairing
// f(m) with f(-m) whenever m has an odd u-exponent. Fails when the product is
// not a function of u^2.
std::optional<std::map<Monomial, FactorGroup>> even_groups(const std::map<Monomial, FactorGroup>& fs) {
  std::map<Monomial, FactorGroup> out;
  for (const auto& [base, g] : fs) {
    if (u_even(base)) {
      FactorGroup& t = out[base];
      for (const auto& [d, e] : g.cyclo) t.cyclo[d] += e;
      t.other.insert(t.other.end(), g.other.begin(), g.other.end());
      continue;
    }
    FactorGroup& t = out[mono_pow(base, 2)];
    auto exp_of = [&](int d) {
      auto it = g.cyclo.find(d);
      return it == g.cyclo.end() ? 0L : it->second;
    };
    for (const auto& [d, e] : g.cyclo) {
      if (d % 4 == 0) {
        t.cyclo[d / 2] += e;
      } else if (d % 2 == 1) {
        if (exp_of(2 * d) != e) return std::nullopt;
        t.cyclo[d] += e;
      } else if (exp_of(d / 2) != e) {
        return std::nullopt;
      }
    }
    std::vector<bool> used(g.other.size(), false);
    for (std::size_t i = 0; i < g.other.size(); ++i) {
      if (used[i]) continue;
      const auto& [p, e] = g.other[i];
      UPoly mirror = negate_variable(p);
      if (mirror == p) {
        t.other.emplace_back(even_part(p), e);
        continue;
      }
      bool found = false;
      for (std::size_t j = i + 1; j < g.other.size() && !found; ++j)
        if (!used[j] && g.other[j].first == mirror && g.other[j].second == e) {
          used[j] = found = true;
          t.other.emplace_back(even_part(multiply(p, mirror)), e);
        }
      if (!found) return std::nullopt;
    }
  }
  for (auto& [base, g] : out) {
    for (auto c = g.cyclo.begin(); c != g.cyclo.end();) c = c->second == 0 ? g.cyclo.erase(c) : std::next(c);
    refine(g.other);
  }
  return out;
}

}  // namespace

LaurentRational LaurentRational::substitute(const Substitution& s) const {
  if (zero_) return zero();
  LaurentRational r(constant_);
  auto [c0, m0] = image_of(mono_, s);
  r *= monomial(m0, c0);
  auto apply = [&](const Monomial& base, const UPoly& p, long e) {
    auto [c1, m1] = image_of(base, s);
    (void)c1;
    auto [nb, k] = split_power(m1);
    std::map<long, mpq_class> terms;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      auto [ci, mi] = image_of(mono_pow(base, static_cast<long>(i)), s);
      terms[k * static_cast<long>(i)] += ci * mpq_class(p[i]);
    }
    LaurentRational piece;
    piece.absorb(nb, terms, e);
    piece.cleanup();
    r *= piece;
  };
  bool halves = std::any_of(s.begin(), s.end(), [](const auto& kv) { return kv.second.root != 1; });
  std::optional<std::map<Monomial, FactorGroup>> regrouped;
  if (halves) {
    regrouped = even_groups(factors_);
    if (!regrouped) throw std::domain_error("odd power of u: the value at numeric q is not rational");
  }
  for (const auto& [base, g] : halves ? *regrouped : factors_) {
    for (const auto& [d, e] : g.cyclo) apply(base, cyclotomic(d), e);
    for (const auto& [p, e] : g.other) apply(base, p, e);
  }
  return r;
}

bool LaurentRational::has_q_form() const {
  return zero_ || (u_even(mono_) && even_groups(factors_).has_value());
}

std::string LaurentRational::to_string(bool q_form) const {
  if (zero_) return "0";
  std::optional<std::map<Monomial, FactorGroup>> regrouped;
  if (q_form) {
    if (u_even(mono_)) regrouped = even_groups(factors_);
    if (!regrouped) throw std::domain_error("odd power of u: no q-form");
  }
  const auto& groups = q_form ? *regrouped : factors_;
  std::vector<std::string> num, den;
  auto emit = [](std::vector<std::string>& out, const std::string& body, long e) {
    std::string s = "(" + body + ")";
    if (e != 1) s += "^" + std::to_string(e);
    out.push_back(s);
  };
  for (const auto& [base, g] : groups) {
    for (int sign : {1, -1}) {
      std::map<int, long> left;
      for (const auto& [d, e] : g.cyclo)
        if (e * sign > 0) left[d] = e * sign;
      std::vector<std::pair<std::string, long>> pieces;
      while (!left.empty()) {
        int chosen = 0;
        for (auto it = left.rbegin(); it != left.rend() && !chosen; ++it) {
          int k = it->first;
          bool all = true;
          for (int d = 1; d <= k && all; ++d)
            if (k % d == 0 && !left.count(d)) all = false;
          if (all) chosen = k;
        }
        std::string body;
        if (chosen) {
          UPoly bin(static_cast<std::size_t>(chosen) + 1, 0);
          bin[0] = 1;
          bin[static_cast<std::size_t>(chosen)] = -1;
          body = poly_string(bin, base, q_form);
          for (int d = 1; d <= chosen; ++d)
            if (chosen % d == 0 && --left[d] == 0) left.erase(d);
        } else {
          int d = left.rbegin()->first;
          body = poly_string(cyclotomic(d), base, q_form);
          if (--left[d] == 0) left.erase(d);
        }
        if (!pieces.empty() && pieces.back().first == body) ++pieces.back().second;
        else pieces.emplace_back(body, 1);
      }
      for (const auto& [body, e] : pieces) emit(sign > 0 ? num : den, body, e);
    }
    for (const auto& [p, e] : g.other) emit(e > 0 ? num : den, poly_string(p, base, q_form), std::abs(e));
  }
  std::string head;
  std::string mono = mono_string_impl(mono_, q_form);
  if (constant_ != 1 || (mono.empty() && num.empty())) {
    if (constant_ == -1 && (!mono.empty() || !num.empty())) head = "-";
    else head = constant_.get_str() + (mono.empty() && num.empty() ? "" : "*");
  }
  std::string body = mono;
  for (const auto& n : num) body += (body.empty() ? "" : "*") + n;
  std::string s = head + body;
  if (!den.empty()) {
    std::string d;
    for (const auto& x : den) d += (d.empty() ? "" : "*") + x;
    if (den.size() > 1) d = "(" + d + ")";
    s += "/" + d;
  }
  return s;
}

nlohmann::json LaurentRational::to_json() const {
  nlohmann::json j;
  j["zero"] = zero_;
  j["constant"] = constant_.get_str();
  j["monomial"] = nlohmann::json::object();
  for (const auto& [v, e] : mono_) j["monomial"][v] = e;
  j["factors"] = nlohmann::json::array();
  for (const auto& [base, g] : factors_) {
    nlohmann::json b = nlohmann::json::object();
    for (const auto& [v, e] : base) b[v] = e;
    for (const auto& [d, e] : g.cyclo) j["factors"].push_back({{"base", b}, {"cyclotomic", d}, {"exponent", e}});
    for (const auto& [p, e] : g.other) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& c : p) coeffs.push_back(c.get_str());
      j["factors"].push_back({{"base", b}, {"poly", coeffs}, {"exponent", e}});
    }
  }
  j["text"] = to_string(false);
  if (has_q_form()) j["q_form"] = to_string(true);
  return j;
}

}  // namespace spherex
