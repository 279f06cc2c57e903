#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "omkit/axioms.hpp"
#include "omkit/minors.hpp"
#include "omkit/realize.hpp"

using namespace omkit;
using namespace omkit::testing;

namespace {

// Independent oracle: enumerate all 3^n candidate sign vectors and keep the
// feasible ones. Shares only the feasibility kernel with the BFS path.
SignSystem brute_force_covectors(const FiniteArrangement& a) {
  GroundSet g = a.ground();
  std::size_t n = g.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<SignVector> out;
  for (std::size_t code = 0; code < total; ++code) {
    SignVector v(g);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      int d = c % 3;
      c /= 3;
      v.set(i, d == 0 ? Sign::zero : (d == 1 ? Sign::plus : Sign::minus));
    }
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& h = a.hyperplanes[i];
      if (v.at(i) == Sign::zero) {
        cs.push_back(LinearConstraint::equal(h.normal, h.offset));
      } else if (v.at(i) == Sign::plus) {
        cs.push_back(LinearConstraint::greater(h.normal, h.offset));
      } else {
        QVector neg(h.normal.size());
        for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -h.normal[k];
        cs.push_back(LinearConstraint::greater(neg, -h.offset));
      }
    }
    if (feasible_point(cs, a.dim)) out.push_back(v);
  }
  return SignSystem(g, std::move(out));
}

std::size_t count_rank(const SignSystem& s, std::size_t zeros) {
  std::size_t c = 0;
  for (const auto& v : s)
    if (v.size() - v.support_size() == zeros) ++c;
  return c;
}

}  // namespace

TEST_CASE("signs at points") {
  FiniteArrangement a;
  a.dim = 1;
  a.hyperplanes = {{"e", {Rational(1)}, Rational(0)}};
  CHECK(sign_vector_at(a, {Rational(1)}).to_string() == "+");

  FiniteArrangement b;
  b.dim = 1;
  b.hyperplanes = {{"p0", {Rational(1)}, Rational(0)}, {"p1", {Rational(1)}, Rational(1)}};
  CHECK(sign_vector_at(b, {Rational(1, 2)}).to_string() == "+-");

  auto fig = fig1_arrangement();
  CHECK(sign_vector_at(fig, {Rational(0), Rational(0)}).to_string() == "000+");
  CHECK_THROWS_AS(sign_vector_at(fig, {Rational(0)}), std::invalid_argument);
}

TEST_CASE("one hyperplane and two points on a line") {
  FiniteArrangement a;
  a.dim = 1;
  a.hyperplanes = {{"e", {Rational(1)}, Rational(0)}};
  auto r = covectors(a);
  CHECK(r.system.size() == 3);

  FiniteArrangement b;
  b.dim = 1;
  b.hyperplanes = {{"p0", {Rational(1)}, Rational(0)}, {"p1", {Rational(1)}, Rational(1)}};
  auto rb = covectors(b);
  CHECK(rb.system.size() == 5);
  std::set<std::string> expect{"--", "0-", "+-", "+0", "++"};
  std::set<std::string> got;
  for (const auto& v : rb.system) got.insert(v.to_string());
  CHECK(got == expect);
}

TEST_CASE("figure-one arrangement") {
  auto r = covectors(fig1_arrangement());
  const auto& s = r.system;
  CHECK(s.size() == 23);
  CHECK(count_rank(s, 3) + count_rank(s, 2) == 3);  // the triple point and two H4 crossings
  CHECK(count_rank(s, 1) == 11);
  CHECK(count_rank(s, 0) == 9);

  // the nine chamber labels of the figure, realized verbatim (tau = identity)
  std::set<std::string> figure_labels{"++-+", "+--+", "+-++", "+-+-", "--+-",
                                      "-++-", "-+++", "-+-+", "--++"};
  std::set<std::string> chambers;
  for (const auto& v : s)
    if (v.support_size() == 4) chambers.insert(v.to_string());
  CHECK(chambers == figure_labels);

  CHECK(s.contains(SignVector(s.ground(), "000+")));
  CHECK(s.contains(SignVector(s.ground(), "+-0+")));
  CHECK(s.contains(SignVector(s.ground(), "+-+0")));

  // witnesses evaluate back to their covectors
  for (std::size_t i = 0; i < s.size(); ++i)
    CHECK(sign_vector_at(fig1_arrangement(), r.witnesses[i]) == s[i]);
}

TEST_CASE("bfs equals the exhaustive census") {
  auto fig = fig1_arrangement();
  CHECK(covectors(fig).system.vectors() == brute_force_covectors(fig).vectors());

  std::mt19937_64 rng(424242);
  for (int round = 0; round < 12; ++round) {
    auto a = random_arrangement(1 + rng() % 2, 1 + rng() % 4, rng);
    CHECK(covectors(a).system.vectors() == brute_force_covectors(a).vectors());
  }
}

TEST_CASE("realized systems are AOMs; central ones are OMs") {
  std::mt19937_64 rng(1234);
  for (int round = 0; round < 10; ++round) {
    auto a = random_arrangement(2, 2 + rng() % 3, rng);
    auto r = covectors(a);
    CHECK(is_aom_quick(r.system));
  }
  // all through the origin: contains the zero covector
  FiniteArrangement c;
  c.dim = 2;
  c.hyperplanes = {{"a", {Rational(1), Rational(0)}, Rational(0)},
                   {"b", {Rational(0), Rational(1)}, Rational(0)},
                   {"c", {Rational(1), Rational(1)}, Rational(0)}};
  auto cls = classify(covectors(c).system);
  CHECK(cls.is_OM);
}

TEST_CASE("degenerate input is rejected") {
  FiniteArrangement a;
  a.dim = 1;
  a.hyperplanes = {{"e", {Rational(1)}, Rational(0)}, {"f", {Rational(-2)}, Rational(0)}};
  CHECK_THROWS_AS(covectors(a), std::invalid_argument);
}

TEST_CASE("window restriction") {
  PeriodicArrangement p;
  p.dim = 1;
  p.orbit_reps = {{"x", {Rational(1)}, Rational(0)}};
  p.lattice = {{Rational(1)}};
  auto w = window_restrict(p, Window{{Rational(-2)}, {Rational(2)}});
  CHECK(w.arrangement.hyperplanes.size() == 5);
  CHECK(w.arrangement.hyperplanes.front().name == "x@-2");
  CHECK(w.arrangement.hyperplanes.back().name == "x@2");
  CHECK(orbit_step(p, 0) == 1);

  PeriodicArrangement q;
  q.dim = 2;
  q.orbit_reps = {{"x", {Rational(1), Rational(0)}, Rational(0)},
                  {"y", {Rational(0), Rational(1)}, Rational(0)}};
  q.lattice = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  auto w2 = window_restrict(q, Window{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
  CHECK(w2.arrangement.hyperplanes.size() == 4);

  PeriodicArrangement t;
  t.dim = 2;
  t.orbit_reps = {{"x", {Rational(1), Rational(0)}, Rational(0)},
                  {"y", {Rational(0), Rational(1)}, Rational(0)},
                  {"d", {Rational(1), Rational(1)}, Rational(0)}};
  t.lattice = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  auto w3 = window_restrict(
      t, Window{{Rational(-1, 4), Rational(-1, 4)}, {Rational(5, 4), Rational(5, 4)}});
  CHECK(w3.arrangement.hyperplanes.size() == 7);  // x in {0,1}, y in {0,1}, x+y in {0,1,2}
}

TEST_CASE("window coherence under nesting") {
  PeriodicArrangement p;
  p.dim = 1;
  p.orbit_reps = {{"x", {Rational(1)}, Rational(0)}};
  p.lattice = {{Rational(1)}};
  auto small = window_restrict(p, Window{{Rational(-1)}, {Rational(1)}});
  auto big = window_restrict(p, Window{{Rational(-2)}, {Rational(2)}});
  auto ssys = covectors(small.arrangement).system;
  auto bsys = covectors(big.arrangement).system;
  std::vector<std::string> small_names;
  for (const auto& h : small.arrangement.hyperplanes) small_names.push_back(h.name);
  auto restricted = restrict_to(bsys, small_names);
  CHECK(restricted.vectors() == ssys.vectors());
}
