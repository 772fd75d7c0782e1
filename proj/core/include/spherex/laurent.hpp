#pragma once

// Exact rational functions in Laurent variables (u = q^{-1/2} and torus
// coordinates), kept in factored form:
//
//   constant * monomial * prod_m prod_j p_{m,j}(m)^{e_{m,j}}
//
// where each m is a primitive monomial whose first nonzero exponent is
// positive, and each p is an integer polynomial with p(0) > 0 and content 1.
// Cyclotomic pieces Phi_d(m) are split off and stored by d; those are
// irreducible because a primitive monomial is a coordinate after a unimodular
// change of variables. Whatever remains is kept as a pairwise coprime basis,
// which is enough to decide equality exactly.

#include <gmpxx.h>

#include <functional>
#include <set>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace spherex {

struct VarLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

using Monomial = std::map<std::string, long, VarLess>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, long k);
std::string mono_string(const Monomial& m);

using UPoly = std::vector<mpz_class>;  // coefficient of x^i at index i

struct FactorGroup {
  std::map<int, long> cyclo;                  // d -> exponent of Phi_d(m) (1 - m for d = 1)
  std::vector<std::pair<UPoly, long>> other;  // pairwise coprime, no cyclotomic factors
  bool trivial() const { return cyclo.empty() && other.empty(); }
};

struct VarImage {
  mpq_class value = 1;  // numeric factor, raised to 1/root
  int root = 1;         // 1 or 2
  Monomial image;       // remaining monomial part
};
using Substitution = std::map<std::string, VarImage, VarLess>;

class LaurentRational {
 public:
  LaurentRational() = default;  // the constant 1
  explicit LaurentRational(const mpq_class& c);
  static LaurentRational zero();
  static LaurentRational monomial(const Monomial& m, const mpq_class& c = 1);
  // 1 - c * m
  static LaurentRational one_minus(const Monomial& m, const mpq_class& c = 1);
  // Laurent polynomial sum_i coef_i * base^i in a single monomial base.
  static LaurentRational univariate(const Monomial& base, const std::map<long, mpq_class>& terms);

  bool is_zero() const { return zero_; }
  bool is_constant() const;
  const mpq_class& constant() const { return constant_; }
  const Monomial& monomial_part() const { return mono_; }
  const std::map<Monomial, FactorGroup>& factors() const { return factors_; }

  LaurentRational operator*(const LaurentRational& o) const;
  LaurentRational operator/(const LaurentRational& o) const;
  LaurentRational& operator*=(const LaurentRational& o);
  LaurentRational& operator/=(const LaurentRational& o);
  LaurentRational pow(long k) const;
  LaurentRational inverse() const;

  // Exact equality of rational functions.
  bool operator==(const LaurentRational& o) const;
  bool operator!=(const LaurentRational& o) const { return !(*this == o); }

  LaurentRational substitute(const Substitution& s) const;
  // Value after substituting u^2 = 1/q and numeric torus values.
  mpq_class evaluate(const std::map<std::string, mpq_class>& values, const std::string& u = "u",
                     long q = 0) const;

  std::set<std::string> variables() const;

  // Canonical text. With q_form, every power of a u-variable must be even and
  // u^{2k} is printed as q^{-k} (u_v as q_v).
  std::string to_string(bool q_form = false) const;
  bool has_q_form() const;
  nlohmann::json to_json() const;

 private:
  bool zero_ = false;
  mpq_class constant_ = 1;
  Monomial mono_;
  std::map<Monomial, FactorGroup> factors_;

  void absorb(const Monomial& base, std::map<long, mpq_class> terms, long e);
  void absorb_poly(const Monomial& base, UPoly p, long e);
  void cleanup();
};

// Integer coefficients of the d-th cyclotomic polynomial.
const UPoly& cyclotomic(int d);

}  // namespace spherex
