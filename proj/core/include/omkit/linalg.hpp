#pragma once

#include <optional>

#include "omkit/rational.hpp"

namespace omkit {

using QMatrix = std::vector<QVector>;          // row-major
using ZVector = std::vector<Integer>;
using ZMatrix = std::vector<ZVector>;          // row-major

std::size_t rank(QMatrix a);

// One solution of A x = b, if any.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// Basis of { x : A x = 0 }.
QMatrix nullspace(const QMatrix& a);

// Basis of { y : y^T A = 0 }.
QMatrix left_nullspace(const QMatrix& a);

Integer gcd(Integer a, Integer b);

// Positive generator of the subgroup of Q generated by the values (0 if all zero).
Rational rational_gcd(const std::vector<Rational>& values);

// Coefficients c with sum c_i * values_i == rational_gcd(values).
std::vector<Integer> rational_gcd_bezout(const std::vector<Rational>& values);

// Row-style Hermite normal form. Rows of the result generate the same lattice
// as the rows of `a`; pivots are positive, strictly right-descending, entries
// above a pivot are reduced into [0, pivot). Zero rows are dropped.
ZMatrix row_hnf(ZMatrix a);

// Unique coset representative of v modulo the lattice spanned by the rows of
// `hnf` (which must be in row_hnf form).
ZVector canonical_coset_rep(ZVector v, const ZMatrix& hnf);

// One integer solution of A x = b, if any.
std::optional<ZVector> solve_integer(const ZMatrix& a, const ZVector& b);

// Basis of the integer kernel { x in Z^n : A x = 0 }.
ZMatrix integer_kernel(const ZMatrix& a);

// Index [M : K] of the lattice spanned by the rows of `k_basis` inside the one
// spanned by the rows of `m_basis`. Both must have equal rank; returns nullopt
// if K is not a finite-index sublattice of M.
std::optional<Integer> lattice_index(const ZMatrix& m_basis, const ZMatrix& k_basis);

}  // namespace omkit
