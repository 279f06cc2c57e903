#pragma once

#include <random>

#include "omkit/realize.hpp"
#include "omkit/sign_system.hpp"

namespace omkit::testing {

inline SignVector sv(const GroundSet& g, const std::string& pattern) {
  return SignVector(g, pattern);
}

inline SignSystem system_of(const GroundSet& g, const std::vector<std::string>& patterns) {
  std::vector<SignVector> vecs;
  for (const auto& p : patterns) vecs.emplace_back(g, p);
  return SignSystem(g, std::move(vecs));
}

// The four-line arrangement of Figure 1: H1: y=x, H2: y=-x, H3: y=0, H4: y=-1,
// oriented so the chamber labels of the figure are realized verbatim.
inline FiniteArrangement fig1_arrangement() {
  FiniteArrangement a;
  a.dim = 2;
  a.hyperplanes = {
      {"H1", {Rational(-1), Rational(1)}, Rational(0)},
      {"H2", {Rational(1), Rational(1)}, Rational(0)},
      {"H3", {Rational(0), Rational(-1)}, Rational(0)},
      {"H4", {Rational(0), Rational(1)}, Rational(-1)},
  };
  return a;
}

// The five covectors of two points on a line (spec's two-point line system).
inline SignSystem two_point_line() {
  GroundSet g({"p1", "p2"});
  return system_of(g, {"++", "0+", "-+", "-0", "--"});
}

// A uniformly random sign vector / system, for property tests.
inline SignVector random_vector(const GroundSet& g, std::mt19937_64& rng) {
  SignVector v(g);
  std::uniform_int_distribution<int> d(0, 2);
  for (std::size_t i = 0; i < g.size(); ++i) {
    int k = d(rng);
    v.set(i, k == 0 ? Sign::zero : (k == 1 ? Sign::plus : Sign::minus));
  }
  return v;
}

inline SignSystem random_system(const GroundSet& g, std::size_t count, std::mt19937_64& rng) {
  std::vector<SignVector> vecs;
  for (std::size_t i = 0; i < count; ++i) vecs.push_back(random_vector(g, rng));
  return SignSystem(g, std::move(vecs));
}

// A random small rational arrangement; rejects degenerate (coincident) draws.
inline FiniteArrangement random_arrangement(std::size_t dim, std::size_t count,
                                            std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  while (true) {
    FiniteArrangement a;
    a.dim = dim;
    for (std::size_t i = 0; i < count; ++i) {
      RationalHyperplane h;
      h.name = "H" + std::to_string(i + 1);
      h.normal.resize(dim);
      bool zero = true;
      for (auto& v : h.normal) {
        v = Rational(coef(rng));
        if (v != 0) zero = false;
      }
      if (zero) h.normal[i % dim] = 1;
      h.offset = Rational(coef(rng), 1 + std::uniform_int_distribution<int>(0, 2)(rng));
      a.hyperplanes.push_back(std::move(h));
    }
    try {
      a.validate();
      return a;
    } catch (const std::invalid_argument&) {
      // coincident pair drawn; retry
    }
  }
}

}  // namespace omkit::testing
