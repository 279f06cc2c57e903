#pragma once

#include "omkit/lp.hpp"
#include "omkit/sign_system.hpp"

namespace omkit {

struct RationalHyperplane {
  std::string name;
  QVector normal;   // must be nonzero
  Rational offset;  // positive side: <normal, x> > offset
  bool periodic = true;  // meaningful inside a PeriodicArrangement
};

struct FiniteArrangement {
  std::size_t dim = 0;
  std::vector<RationalHyperplane> hyperplanes;

  GroundSet ground() const;
  void validate() const;  // zero normals, duplicate names, coincident hyperplanes
};

struct PeriodicArrangement {
  std::size_t dim = 0;
  std::vector<RationalHyperplane> orbit_reps;
  std::vector<QVector> lattice;  // columns generating the translation lattice

  void validate() const;
};

struct Window {
  QVector lo, hi;  // closed box, lo < hi coordinatewise
  std::size_t dim() const { return lo.size(); }
  void validate() const;
};

Sign sign_at(const RationalHyperplane& h, const QVector& x);
SignVector sign_vector_at(const FiniteArrangement& a, const QVector& x);

// Exact face enumeration: every covector together with a rational point in the
// relative interior of its cell.
struct Realization {
  SignSystem system;
  std::vector<QVector> witnesses;  // aligned with system indices

  const QVector& witness_of(const SignVector& v) const;
};

Realization covectors(const FiniteArrangement& a);

// One lattice translate of an orbit rep that meets the window.
struct WindowProvenance {
  std::size_t orbit;       // index into orbit_reps
  Integer step;            // hyperplane offset = rep.offset + step * orbit_step(orbit)
  QVector lattice_vector;  // a lattice vector realizing this translate
};

struct RealizedWindow {
  FiniteArrangement arrangement;
  std::vector<WindowProvenance> provenance;  // per hyperplane
  PeriodicArrangement source;
  Window window;

  bool element_is_periodic(std::size_t i) const {
    return source.orbit_reps[provenance[i].orbit].periodic;
  }
};

// All lattice translates of the orbit reps meeting the closed box. Element
// names are canonical "rep@k" with k the offset step.
RealizedWindow window_restrict(const PeriodicArrangement& p, const Window& w);

// Positive generator of { <normal_i, lambda> : lambda in the lattice }.
Rational orbit_step(const PeriodicArrangement& p, std::size_t orbit);

// Deterministic generic point: box center perturbed by distinct prime
// denominators, re-drawn with larger primes while it lies on a hyperplane.
QVector generic_point(const FiniteArrangement& a, const QVector& center, unsigned seed = 0);

}  // namespace omkit
