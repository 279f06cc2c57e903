#pragma once

#include <optional>

#include "omkit/linalg.hpp"
#include "omkit/rational.hpp"

namespace omkit {

// One linear condition on points of Q^d: <coeffs, x> (kind) rhs.
struct LinearConstraint {
  enum class Kind { eq, ge, gt };
  QVector coeffs;
  Rational rhs;
  Kind kind = Kind::eq;

  static LinearConstraint equal(QVector c, Rational r) { return {std::move(c), std::move(r), Kind::eq}; }
  static LinearConstraint at_least(QVector c, Rational r) { return {std::move(c), std::move(r), Kind::ge}; }
  static LinearConstraint greater(QVector c, Rational r) { return {std::move(c), std::move(r), Kind::gt}; }
};

// Exact feasibility of a system of equalities and (possibly strict)
// inequalities over the rationals, by Gaussian elimination of the equality
// part followed by Fourier-Motzkin. Returns a witness point when feasible.
std::optional<QVector> feasible_point(const std::vector<LinearConstraint>& constraints,
                                      std::size_t dim);

}  // namespace omkit
