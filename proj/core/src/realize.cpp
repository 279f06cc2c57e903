#include "omkit/realize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "omkit/linalg.hpp"

namespace omkit {

GroundSet FiniteArrangement::ground() const {
  std::vector<std::string> names;
  names.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) names.push_back(h.name);
  return GroundSet(std::move(names));
}

void FiniteArrangement::validate() const {
  std::set<std::string> names;
  for (const auto& h : hyperplanes) {
    if (h.normal.size() != dim)
      throw std::invalid_argument("hyperplane " + h.name + ": normal has wrong dimension");
    bool zero = std::all_of(h.normal.begin(), h.normal.end(),
                            [](const Rational& v) { return v == 0; });
    if (zero) throw std::invalid_argument("hyperplane " + h.name + ": zero normal");
    if (!names.insert(h.name).second)
      throw std::invalid_argument("duplicate hyperplane name " + h.name);
  }
  // coincident hyperplanes (equal as sets, either orientation) are rejected;
  // simplify() semantics live at the sign-system level
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    for (std::size_t j = i + 1; j < hyperplanes.size(); ++j) {
      const auto& a = hyperplanes[i];
      const auto& b = hyperplanes[j];
      std::optional<Rational> factor;
      bool proportional = true;
      for (std::size_t k = 0; k < dim && proportional; ++k) {
        if (b.normal[k] == 0) {
          if (a.normal[k] != 0) proportional = false;
        } else {
          Rational f = a.normal[k] / b.normal[k];
          if (!factor)
            factor = f;
          else if (*factor != f)
            proportional = false;
        }
      }
      if (!proportional || !factor) continue;
      if (a.offset == *factor * b.offset)
        throw std::invalid_argument("coincident hyperplanes " + a.name + " and " + b.name +
                                    "; simplify the input first");
    }
  }
}

void Window::validate() const {
  if (lo.size() != hi.size() || lo.empty())
    throw std::invalid_argument("window: malformed box");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i])) throw std::invalid_argument("window: empty box");
}

void PeriodicArrangement::validate() const {
  if (lattice.size() != dim)
    throw std::invalid_argument("periodic arrangement: lattice must have dim columns");
  QMatrix m(dim, QVector(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    if (lattice[j].size() != dim)
      throw std::invalid_argument("periodic arrangement: lattice column dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = lattice[j][i];
  }
  if (rank(m) != dim) throw std::invalid_argument("periodic arrangement: lattice not full rank");
  FiniteArrangement reps{dim, orbit_reps};
  reps.validate();
  // translates of distinct reps must never coincide
  for (std::size_t i = 0; i < orbit_reps.size(); ++i) {
    for (std::size_t j = i + 1; j < orbit_reps.size(); ++j) {
      const auto& a = orbit_reps[i];
      const auto& b = orbit_reps[j];
      std::optional<Rational> factor;
      bool proportional = true;
      for (std::size_t k = 0; k < dim && proportional; ++k) {
        if (b.normal[k] == 0) {
          if (a.normal[k] != 0) proportional = false;
        } else {
          Rational f = a.normal[k] / b.normal[k];
          if (!factor)
            factor = f;
          else if (*factor != f)
            proportional = false;
        }
      }
      if (!proportional || !factor) continue;
      // a = factor * b as linear forms; the two orbits share a hyperplane iff
      // a.offset - factor*b.offset lies in the combined offset lattice
      Rational diff = a.offset - *factor * b.offset;
      Rational ga = a.periodic ? orbit_step(*this, i) : Rational(0);
      Rational gb = b.periodic ? *factor * orbit_step(*this, j) : Rational(0);
      if (gb < 0) gb = -gb;
      Rational g = rational_gcd({ga, gb});
      bool hit = g == 0 ? diff == 0 : rat_den(diff / g) == 1;
      if (hit)
        throw std::invalid_argument("orbits " + a.name + " and " + b.name +
                                    " share a hyperplane translate");
    }
  }
}

Sign sign_at(const RationalHyperplane& h, const QVector& x) {
  return sign_of_value(dot(h.normal, x) - h.offset);
}

SignVector sign_vector_at(const FiniteArrangement& a, const QVector& x) {
  if (x.size() != a.dim) throw std::invalid_argument("sign_vector_at: dimension mismatch");
  SignVector v(a.ground());
  for (std::size_t i = 0; i < a.hyperplanes.size(); ++i) v.set(i, sign_at(a.hyperplanes[i], x));
  return v;
}

const QVector& Realization::witness_of(const SignVector& v) const {
  auto idx = system.index_of(v);
  if (!idx) throw std::invalid_argument("witness_of: covector not in realization");
  return witnesses[*idx];
}

QVector generic_point(const FiniteArrangement& a, const QVector& center, unsigned seed) {
  static const unsigned primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                    41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  const std::size_t nprimes = sizeof(primes) / sizeof(primes[0]);
  for (unsigned round = seed; round + a.dim < nprimes; ++round) {
    QVector p = center;
    for (std::size_t k = 0; k < a.dim; ++k)
      p[k] += Rational(1, primes[round + k]);
    bool on_hyperplane = false;
    for (const auto& h : a.hyperplanes)
      if (sign_at(h, p) == Sign::zero) {
        on_hyperplane = true;
        break;
      }
    if (!on_hyperplane) return p;
  }
  throw std::runtime_error("generic_point: failed to avoid all hyperplanes");
}

namespace {

// Constraints pinning the cell of a candidate covector: zeros as equalities,
// nonzeros strict.
std::vector<LinearConstraint> cell_constraints(const FiniteArrangement& a, const SignVector& v,
                                               bool strict) {
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < a.hyperplanes.size(); ++i) {
    const auto& h = a.hyperplanes[i];
    switch (v.at(i)) {
      case Sign::zero: cs.push_back(LinearConstraint::equal(h.normal, h.offset)); break;
      case Sign::plus:
        cs.push_back(strict ? LinearConstraint::greater(h.normal, h.offset)
                            : LinearConstraint::at_least(h.normal, h.offset));
        break;
      case Sign::minus: {
        QVector neg(h.normal.size());
        for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -h.normal[k];
        cs.push_back(strict ? LinearConstraint::greater(neg, -h.offset)
                            : LinearConstraint::at_least(neg, -h.offset));
        break;
      }
    }
  }
  return cs;
}

}  // namespace

Realization covectors(const FiniteArrangement& a) {
  a.validate();
  Realization out;
  GroundSet g = a.ground();
  if (a.hyperplanes.empty()) {
    out.system = SignSystem(g, {SignVector(g)});
    out.witnesses = {QVector(a.dim, 0)};
    return out;
  }

  QVector center(a.dim, 0);
  QVector start = generic_point(a, center);
  SignVector first = sign_vector_at(a, start);

  std::map<std::string, QVector> found;  // covector string -> witness
  std::deque<SignVector> queue;
  found.emplace(first.to_string(), start);
  queue.push_back(first);

  auto try_add = [&](const SignVector& cand) {
    if (found.count(cand.to_string())) return;
    auto p = feasible_point(cell_constraints(a, cand, true), a.dim);
    if (!p) return;
    // the witness must reproduce the candidate exactly
    if (!(sign_vector_at(a, *p) == cand))
      throw std::runtime_error("cell enumeration: witness point disagrees with candidate");
    found.emplace(cand.to_string(), *p);
    queue.push_back(cand);
  };

  while (!queue.empty()) {
    SignVector x = queue.front();
    queue.pop_front();
    // relax one wall: the relative interior of cl(cell) intersected with H_e
    for (std::size_t e = 0; e < g.size(); ++e) {
      if (x.at(e) == Sign::zero) continue;
      SignVector relaxed = x;
      relaxed.set(e, Sign::zero);
      auto closure_cs = cell_constraints(a, relaxed, false);
      auto base = feasible_point(closure_cs, a.dim);
      if (!base) continue;
      // which further walls become identically zero on that polyhedron
      SignVector face = relaxed;
      for (std::size_t f = 0; f < g.size(); ++f) {
        if (face.at(f) == Sign::zero) continue;
        auto cs = closure_cs;
        const auto& h = a.hyperplanes[f];
        if (x.at(f) == Sign::plus) {
          cs.push_back(LinearConstraint::greater(h.normal, h.offset));
        } else {
          QVector neg(h.normal.size());
          for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -h.normal[k];
          cs.push_back(LinearConstraint::greater(neg, -h.offset));
        }
        if (!feasible_point(cs, a.dim)) face.set(f, Sign::zero);
      }
      try_add(face);
    }
    // cross a wall: step off a hyperplane to either side
    for (std::size_t e = 0; e < g.size(); ++e) {
      if (x.at(e) != Sign::zero) continue;
      for (Sign sgn : {Sign::plus, Sign::minus}) {
        SignVector cand = x;
        cand.set(e, sgn);
        try_add(cand);
      }
    }
  }

  std::vector<SignVector> vecs;
  vecs.reserve(found.size());
  for (const auto& [str, wit] : found) vecs.emplace_back(g, str);
  out.system = SignSystem(g, std::move(vecs));
  out.witnesses.resize(out.system.size());
  for (const auto& [str, wit] : found) {
    auto idx = out.system.index_of(SignVector(g, str));
    out.witnesses[*idx] = wit;
  }
  return out;
}

Rational orbit_step(const PeriodicArrangement& p, std::size_t orbit) {
  const auto& n = p.orbit_reps[orbit].normal;
  std::vector<Rational> vals;
  for (const auto& col : p.lattice) vals.push_back(dot(n, col));
  return rational_gcd(vals);
}

RealizedWindow window_restrict(const PeriodicArrangement& p, const Window& w) {
  p.validate();
  w.validate();
  if (w.dim() != p.dim) throw std::invalid_argument("window dimension mismatch");
  RealizedWindow out;
  out.source = p;
  out.window = w;
  out.arrangement.dim = p.dim;

  for (std::size_t oi = 0; oi < p.orbit_reps.size(); ++oi) {
    const auto& rep = p.orbit_reps[oi];
    // range of <n,x> over the box
    Rational lo = 0, hi = 0;
    for (std::size_t k = 0; k < p.dim; ++k) {
      if (rep.normal[k] >= 0) {
        lo += rep.normal[k] * w.lo[k];
        hi += rep.normal[k] * w.hi[k];
      } else {
        lo += rep.normal[k] * w.hi[k];
        hi += rep.normal[k] * w.lo[k];
      }
    }
    if (!rep.periodic) {
      if (lo <= rep.offset && rep.offset <= hi) {
        out.arrangement.hyperplanes.push_back(rep);
        out.provenance.push_back({oi, Integer(0), QVector(p.dim, 0)});
      }
      continue;
    }
    Rational step = orbit_step(p, oi);
    if (step == 0)
      throw std::invalid_argument("orbit " + rep.name + ": lattice acts trivially on offsets");
    // offsets rep.offset + k*step inside [lo, hi]
    Rational kmin_r = (lo - rep.offset) / step;
    Rational kmax_r = (hi - rep.offset) / step;
    Integer kmin = rat_num(kmin_r) / rat_den(kmin_r);
    while (Rational(kmin) < kmin_r) ++kmin;
    while (Rational(kmin - 1) >= kmin_r) --kmin;
    Integer kmax = rat_num(kmax_r) / rat_den(kmax_r);
    while (Rational(kmax) > kmax_r) --kmax;
    while (Rational(kmax + 1) <= kmax_r) ++kmax;
    // a lattice vector with <n, v> = step
    std::vector<Rational> vals;
    for (const auto& col : p.lattice) vals.push_back(dot(rep.normal, col));
    auto bez = rational_gcd_bezout(vals);
    QVector unit(p.dim, 0);
    for (std::size_t j = 0; j < p.lattice.size(); ++j)
      for (std::size_t i = 0; i < p.dim; ++i) unit[i] += Rational(bez[j]) * p.lattice[j][i];
    for (Integer k = kmin; k <= kmax; ++k) {
      RationalHyperplane h = rep;
      h.offset = rep.offset + Rational(k) * step;
      h.name = rep.name + "@" + k.str();
      out.arrangement.hyperplanes.push_back(std::move(h));
      QVector lv(p.dim, 0);
      for (std::size_t i = 0; i < p.dim; ++i) lv[i] = Rational(k) * unit[i];
      out.provenance.push_back({oi, k, std::move(lv)});
    }
  }
  out.arrangement.validate();
  return out;
}

}  // namespace omkit
