#include <doctest.h>

#include "helpers.hpp"
#include "omkit/parallel.hpp"
#include "omkit/realize.hpp"

using namespace omkit;
using namespace omkit::testing;

namespace {

RealizedWindow line_window(int lo, int hi) {
  PeriodicArrangement p;
  p.dim = 1;
  p.orbit_reps = {{"x", {Rational(1)}, Rational(0)}};
  p.lattice = {{Rational(1)}};
  return window_restrict(p, Window{{Rational(lo)}, {Rational(hi)}});
}

}  // namespace

TEST_CASE("is_parallel on figure one") {
  auto s = covectors(fig1_arrangement()).system;
  GroundSet g = s.ground();
  CHECK(is_parallel(s, g.index("H3"), g.index("H4")));
  CHECK_FALSE(is_parallel(s, g.index("H1"), g.index("H2")));  // the triple point
  CHECK_THROWS_AS(is_parallel(s, 0, 0), std::invalid_argument);
}

TEST_CASE("parallel classes of figure one") {
  auto s = covectors(fig1_arrangement()).system;
  auto classes = parallel_classes(s);
  REQUIRE(classes.size() == 3);
  auto names = [&](const ParallelClass& c) {
    std::vector<std::string> out;
    for (auto i : c.members) out.push_back(s.ground().name(i));
    return out;
  };
  CHECK(names(classes[0]) == std::vector<std::string>{"H1"});
  CHECK(names(classes[1]) == std::vector<std::string>{"H2"});
  CHECK(names(classes[2]) == std::vector<std::string>{"H3", "H4"});
}

TEST_CASE("periodic window class is totally ordered by offsets") {
  auto w = line_window(-2, 2);
  auto s = covectors(w.arrangement).system;
  auto classes = parallel_classes(s);
  REQUIRE(classes.size() == 1);
  std::vector<std::string> got;
  for (auto i : classes[0].members) got.push_back(s.ground().name(i));
  std::vector<std::string> by_offset{"x@-2", "x@-1", "x@0", "x@1", "x@2"};
  std::vector<std::string> reversed(by_offset.rbegin(), by_offset.rend());
  bool matches = (got == by_offset) || (got == reversed);
  CHECK(matches);

  tag_order_types(classes, [&](std::size_t e) { return w.element_is_periodic(e); });
  CHECK(classes[0].order_type == OrderType::line2star);

  // realized orientation is already canonical along ascending offsets
  CHECK(classes[0].orientation_normalized);
}

TEST_CASE("sigma") {
  auto s = covectors(fig1_arrangement()).system;
  GroundSet g = s.ground();
  CHECK(sigma(s, g.index("H4"), g.index("H3")) == Sign::plus);

  auto w = line_window(-2, 2);
  auto sw = covectors(w.arrangement).system;
  GroundSet gw = sw.ground();
  CHECK(sigma(sw, gw.index("x@1"), gw.index("x@0")) == Sign::plus);

  // reorienting the target element flips sigma
  std::vector<int> tau(gw.size(), 1);
  tau[gw.index("x@0")] = -1;
  CHECK(sigma(reorient(sw, tau), gw.index("x@1"), gw.index("x@0")) == Sign::minus);

  CHECK_THROWS_AS(sigma(s, g.index("H3"), g.index("H1")), std::invalid_argument);
}

TEST_CASE("betweenness") {
  auto w = line_window(-2, 2);
  auto s = covectors(w.arrangement).system;
  GroundSet g = s.ground();
  auto e = [&](int k) { return g.index("x@" + std::to_string(k)); };
  CHECK(between(s, e(-1), e(0), e(1)));
  CHECK_FALSE(between(s, e(-1), e(1), e(0)));
  CHECK_THROWS_AS(between(s, e(0), e(0), e(1)), std::invalid_argument);

  // BR1-BR5 on the five-member class
  std::vector<std::size_t> cls;
  for (int k = -2; k <= 2; ++k) cls.push_back(e(k));
  for (auto a : cls)
    for (auto b : cls)
      for (auto c : cls) {
        if (a == b || b == c || a == c) continue;
        bool abc = between(s, a, b, c);
        // BR3 symmetry
        CHECK(abc == between(s, c, b, a));
        // BR4 mutual exclusion
        if (abc) CHECK_FALSE(between(s, a, c, b));
        // BR5
        if (abc)
          for (auto x : cls) {
            if (x == a || x == b || x == c) continue;
            CHECK((between(s, a, b, x) || between(s, x, b, c)));
          }
      }
  // BR2: some permutation is between
  for (auto a : cls)
    for (auto b : cls)
      for (auto c : cls) {
        if (a == b || b == c || a == c) continue;
        CHECK((between(s, a, b, c) || between(s, b, a, c) || between(s, a, c, b)));
      }

  // invariance under reorientation
  std::mt19937_64 rng(8);
  std::vector<int> tau;
  for (std::size_t i = 0; i < g.size(); ++i) tau.push_back((rng() & 1) ? 1 : -1);
  auto sr = reorient(s, tau);
  for (auto a : cls)
    for (auto b : cls)
      for (auto c : cls) {
        if (a == b || b == c || a == c) continue;
        CHECK(between(s, a, b, c) == between(sr, a, b, c));
      }
}

TEST_CASE("separating element") {
  auto w = line_window(-2, 2);
  auto s = covectors(w.arrangement).system;
  GroundSet g = s.ground();
  auto classes = parallel_classes(s);
  REQUIRE(classes.size() == 1);
  ParallelClass cls = classes[0];
  // orient members ascending by offset for the checks below
  if (s.ground().name(cls.members.front()) != "x@-2")
    std::reverse(cls.members.begin(), cls.members.end());

  // X = sign vector of the point x = 1/2: delta = x@1 with X(delta) = -
  auto x_half = sign_vector_at(w.arrangement, {Rational(1, 2)});
  auto se = separating_element(s, x_half, cls);
  CHECK(s.ground().name(cls.members[se.position]) == "x@1");
  CHECK(se.sign_at_delta == Sign::minus);

  // X = sign vector of x = 1 exactly
  auto x_one = sign_vector_at(w.arrangement, {Rational(1)});
  auto se1 = separating_element(s, x_one, cls);
  CHECK(s.ground().name(cls.members[se1.position]) == "x@1");
  CHECK(se1.sign_at_delta == Sign::zero);

  // all-minus pattern: delta is the class minimum
  SignVector allminus(g);
  for (auto m : cls.members) allminus.set(m, Sign::minus);
  auto se2 = separating_element(s, allminus, cls);
  CHECK(se2.position == 0);

  // non-monotone pattern signals non-AOM input
  SignVector bad(g);
  bad.set(cls.members[0], Sign::minus);
  bad.set(cls.members[4], Sign::plus);
  CHECK_THROWS_AS(separating_element(s, bad, cls), std::runtime_error);
}

TEST_CASE("order matches the offset oracle") {
  PeriodicArrangement p;
  p.dim = 2;
  p.orbit_reps = {{"x", {Rational(1), Rational(0)}, Rational(0)},
                  {"y", {Rational(0), Rational(1)}, Rational(0)},
                  {"d", {Rational(1), Rational(1)}, Rational(0)}};
  p.lattice = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  auto w = window_restrict(
      p, Window{{Rational(-5, 4), Rational(-5, 4)}, {Rational(9, 4), Rational(9, 4)}});
  auto s = covectors(w.arrangement).system;
  auto classes = parallel_classes(s);
  for (const auto& cls : classes) {
    // oracle: sort members by offset along the shared normal direction
    std::vector<std::pair<Rational, std::size_t>> oracle;
    for (auto m : cls.members) {
      const auto& h = w.arrangement.hyperplanes[m];
      oracle.emplace_back(h.offset, m);
    }
    std::sort(oracle.begin(), oracle.end());
    std::vector<std::size_t> expect;
    for (auto& [off, m] : oracle) expect.push_back(m);
    std::vector<std::size_t> reversed(expect.rbegin(), expect.rend());
    bool matches = cls.members == expect || cls.members == reversed;
    CHECK(matches);
  }
}
