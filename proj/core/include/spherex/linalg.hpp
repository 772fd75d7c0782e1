#pragma once

// Dense exact linear algebra over Z and Q. Integer vectors are int64 at the
// interface; lattice reductions run on GMP integers internally.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spherex {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major
using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

Int dot(const IntVec& a, const IntVec& b);
Q dot(const QVec& a, const QVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, Int k);
IntVec neg(const IntVec& a);
bool is_zero(const IntVec& a);
bool is_zero(const QVec& a);
Int gcd_of(const IntVec& a);
// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(const IntVec& a);

QVec to_q(const IntVec& a);
QMat to_q(const IntMat& m);
// Scales a rational vector to the primitive integer vector on its ray.
IntVec primitive_on_ray(const QVec& a);
// Exact conversion; throws if some entry is not an integer.
IntVec to_int(const QVec& a);
bool is_integral(const QVec& a);

IntMat transpose(const IntMat& m);
QMat transpose(const QMat& m);
IntMat mul(const IntMat& a, const IntMat& b);
QMat mul(const QMat& a, const QMat& b);
IntVec mul(const IntMat& a, const IntVec& x);  // a * x (column)
QVec mul(const QMat& a, const QVec& x);
IntVec mul(const IntVec& x, const IntMat& a);  // x * a (row)
QVec mul(const QVec& x, const QMat& a);
IntMat identity(std::size_t n);

std::size_t rank(const QMat& m);
std::size_t rank(const IntMat& m);
Q det(QMat m);
Int det(const IntMat& m);

// Basis (rows) of {x : m x = 0} over Q, each row scaled to a primitive
// integer vector.
IntMat nullspace(const QMat& m);
// Coefficients c with sum_i c_i rows[i] = x, if x lies in the Q-span.
std::optional<QVec> solve_rows(const QMat& rows, const QVec& x);

// Row Hermite normal form of the lattice spanned by the rows (zero rows dropped).
IntMat hnf(const IntMat& rows);
// Saturated basis of {x in Z^n : m x = 0}. n must be given for empty m.
IntMat kernel(const IntMat& m, std::size_t n);
// Saturation (Q-span intersected with Z^n) of the row lattice, in HNF.
IntMat saturate(const IntMat& rows, std::size_t n);
bool in_lattice(const IntVec& x, const IntMat& rows);
// Integer coefficients of x in the given (independent) rows, if any.
std::optional<IntVec> lattice_coords(const IntVec& x, const IntMat& rows);
// Index of the row lattice inside its saturation; rows must be independent.
Int saturation_index(const IntMat& rows);

std::string to_string(const IntVec& v);
std::string to_string(const QVec& v);
std::string to_string(const Q& q);

}  // namespace spherex
