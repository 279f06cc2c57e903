#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "omkit/sign_system.hpp"

using namespace omkit;
using namespace omkit::testing;

namespace {
std::set<std::string> name_set(const SignVector& v, const std::vector<std::size_t>& idx) {
  std::set<std::string> out;
  for (auto i : idx) out.insert(v.ground().name(i));
  return out;
}
}  // namespace

TEST_CASE("support and zero set") {
  GroundSet g({"H1", "H2", "H3", "H4"});
  CHECK(sv(g, "0000").support().empty());
  CHECK(name_set(sv(g, "+-0+"), sv(g, "+-0+").support()) ==
        std::set<std::string>{"H1", "H2", "H4"});
  CHECK(name_set(sv(g, "000+"), sv(g, "000+").support()) == std::set<std::string>{"H4"});

  CHECK(name_set(sv(g, "+-0+"), sv(g, "+-0+").zero_set()) == std::set<std::string>{"H3"});
  CHECK(sv(g, "++++").zero_set().empty());
  CHECK(name_set(sv(g, "000+"), sv(g, "000+").zero_set()) ==
        std::set<std::string>{"H1", "H2", "H3"});
}

TEST_CASE("separator") {
  GroundSet g({"H1", "H2", "H3", "H4"});
  CHECK(separator(sv(g, "++-+"), sv(g, "--+-")).size() == 4);
  auto x = sv(g, "+0-0");
  CHECK(separator(x, x).empty());
  GroundSet g3({"e1", "e2", "e3"});
  CHECK(name_set(sv(g3, "+0-"), separator(sv(g3, "+0-"), sv(g3, "0++"))) ==
        std::set<std::string>{"e3"});
}

TEST_CASE("composition") {
  GroundSet g({"H1", "H2", "H3", "H4"});
  CHECK(compose(sv(g, "000+"), sv(g, "+--+")) == sv(g, "+--+"));
  CHECK(compose(sv(g, "+-0+"), sv(g, "+-++")) == sv(g, "+-++"));
  SignVector zero(g);
  CHECK(compose(sv(g, "+0-0"), zero) == sv(g, "+0-0"));
}

TEST_CASE("oplus") {
  GroundSet g2({"e1", "e2"});
  CHECK(oplus(sv(g2, "++"), sv(g2, "-+")) == sv(g2, "0+"));
  auto x = sv(g2, "+-");
  CHECK(oplus(x, x) == x);
  GroundSet g3({"e1", "e2", "e3"});
  CHECK(oplus(sv(g3, "+0-"), sv(g3, "0-+")) == sv(g3, "+-0"));
}

TEST_CASE("natural partial order") {
  GroundSet g({"H1", "H2", "H3", "H4"});
  CHECK(natural_leq(sv(g, "000+"), sv(g, "+-0+")));
  GroundSet g2({"e1", "e2"});
  CHECK_FALSE(natural_leq(sv(g2, "+0"), sv(g2, "-+")));
  CHECK(natural_leq(sv(g2, "+0"), sv(g2, "+0")));
}

TEST_CASE("negation and reorientation") {
  GroundSet g3({"e1", "e2", "e3"});
  CHECK(sv(g3, "+0-").negated() == sv(g3, "-0+"));

  GroundSet g({"H1", "H2", "H3", "H4"});
  auto s = system_of(g, {"++-+", "+-0+", "000+"});
  CHECK(reorient(s, {1, 1, 1, 1}).vectors() == s.vectors());
  auto flipped = reorient(s, {-1, 1, 1, 1});
  CHECK(flipped.contains(sv(g, "-+-+")));
  CHECK(flipped.contains(sv(g, "--0+")));
  CHECK(flipped.contains(sv(g, "000+")));
  CHECK_THROWS_AS(reorient(sv(g, "++++"), {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("system canonical order and membership") {
  GroundSet g({"a", "b"});
  auto s = system_of(g, {"++", "--", "0+", "++"});
  CHECK(s.size() == 3);  // duplicate removed
  // canonical order: - < 0 < +
  CHECK(s[0].to_string() == "--");
  CHECK(s[1].to_string() == "0+");
  CHECK(s[2].to_string() == "++");
  CHECK(s.contains(sv(g, "0+")));
  CHECK_FALSE(s.contains(sv(g, "+0")));
}

TEST_CASE("composition properties on random vectors") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 200; ++round) {
    GroundSet g({"a", "b", "c", "d", "e"});
    auto x = random_vector(g, rng), y = random_vector(g, rng), z = random_vector(g, rng);
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    CHECK(compose(x, x) == x);
    // support(x o y) = support(x) union support(y)
    auto supp = [&](const SignVector& v) {
      std::set<std::size_t> s;
      for (auto i : v.support()) s.insert(i);
      return s;
    };
    auto u = supp(x);
    for (auto i : supp(y)) u.insert(i);
    CHECK(supp(compose(x, y)) == u);
    // separator and oplus identities used in the AOM equivalence proof
    CHECK(separator(x, y) == separator(compose(x, y), compose(y, x)));
    CHECK(oplus(x, y) == oplus(compose(x, y), compose(y, x)));
    // zero sets are reorientation invariant
    std::vector<int> tau;
    for (std::size_t i = 0; i < g.size(); ++i) tau.push_back((rng() & 1) ? 1 : -1);
    CHECK(reorient(x, tau).zero_set() == x.zero_set());
    // the zero map is order reversing
    if (natural_leq(x, y)) {
      auto zx = x.zero_set(), zy = y.zero_set();
      CHECK(std::includes(zx.begin(), zx.end(), zy.begin(), zy.end()));
    }
  }
}

TEST_CASE("exhaustive composition properties on two elements") {
  GroundSet g({"a", "b"});
  auto all = full_system(g);
  for (const auto& x : all)
    for (const auto& y : all) {
      CHECK(separator(x, y) == separator(compose(x, y), compose(y, x)));
      CHECK(oplus(x, y) == oplus(compose(x, y), compose(y, x)));
      for (const auto& z : all)
        CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    }
}
