#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spherex/linalg.hpp"

namespace spherex {

// Based root datum with X*(A) = X_*(A) = Z^rank paired by the dot product.
struct RootDatum {
  std::size_t rank = 0;
  IntMat simple_roots;    // rows, in X*(A)
  IntMat simple_coroots;  // rows, in X_*(A)
  std::vector<std::string> names;

  std::size_t semisimple_rank() const { return simple_roots.size(); }
  // c_ij = <alpha_i, alpha_j^vee>
  IntMat cartan() const;
  // Throws Error(InvalidDatum) on inconsistent sizes, <a,a^vee> != 2, or a
  // Cartan matrix that is not of finite type.
  void validate() const;
  int index_of(const std::string& name) const;  // -1 if absent

  bool operator==(const RootDatum&) const = default;
};

bool is_finite_type_cartan(const IntMat& c);
// Dynkin label such as "A1xA1" or "B2" for a finite-type Cartan matrix; "" when empty.
std::string cartan_type(const IntMat& c);

RootDatum dual_root_datum(const RootDatum& rd);

// Finite reflection group given by integer generator matrices acting on
// column vectors. Elements are found breadth-first, so the BFS depth is the
// length and the stored parent chain is a reduced word.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10'000'000;

  static WeylGroup generate(const std::vector<IntMat>& generators, std::size_t dim,
                            std::size_t cap = kDefaultCap);

  std::size_t size() const { return matrices_.size(); }
  std::size_t dim() const { return dim_; }
  const IntMat& matrix(std::size_t i) const { return matrices_[i]; }
  int length(std::size_t i) const { return lengths_[i]; }
  std::vector<int> word(std::size_t i) const;
  std::size_t longest() const { return longest_; }
  std::size_t identity_index() const { return 0; }
  const std::vector<IntMat>& generators() const { return gens_; }
  int max_length() const { return lengths_[longest_]; }

 private:
  std::size_t dim_ = 0;
  std::vector<IntMat> gens_;
  std::vector<IntMat> matrices_;
  std::vector<int> lengths_;
  std::vector<std::size_t> parent_;
  std::vector<int> last_gen_;
  std::size_t longest_ = 0;
};

// Reflection s_i(x) = x - <x, alpha_i^vee> alpha_i on X*(A), as a matrix.
IntMat simple_reflection(const IntVec& root, const IntVec& coroot);

WeylGroup generate_weyl(const RootDatum& rd, std::size_t cap = WeylGroup::kDefaultCap);

struct Root {
  IntVec coords;     // in the basis of simple roots
  IntVec vec;        // in X*(A)
  IntVec co_coords;  // coroot in the basis of simple coroots
  IntVec covec;      // coroot in X_*(A)
  Int height = 0;
};

// Positive roots sorted by height, then by decreasing simple-root coordinates.
std::vector<Root> positive_roots(const RootDatum& rd);
// All roots (positive and negative) with their coroots.
std::vector<Root> all_roots(const RootDatum& rd);

struct DualityInvolution {
  IntMat matrix;          // lambda -> -w_l lambda on X*(A)
  std::vector<int> perm;  // -w_l alpha_i = alpha_perm[i]
};

DualityInvolution duality_involution(const RootDatum& rd, const WeylGroup& w);

// Coefficients of sum_w q^{l(w)}, index = power of q.
std::vector<Int> poincare_polynomial(const WeylGroup& w);

// q^N (q-1)^rank P_W(q): the number of F_q points of the split group.
mpz_class point_count(const RootDatum& rd, const WeylGroup& w, long q);

}  // namespace spherex
