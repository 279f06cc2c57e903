#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "omkit/axioms.hpp"
#include "omkit/io.hpp"
#include "omkit/realize.hpp"

using namespace omkit;
using namespace omkit::testing;

namespace {

// Naive reference for I_e / I(X,Y), written directly against the definitions
// and independent of the packed scan path.
std::vector<SignVector> naive_elimination(const SignSystem& s, const SignVector& x,
                                          const SignVector& y, std::size_t e, bool equal) {
  std::vector<SignVector> out;
  auto sep = separator(x, y);
  std::set<std::size_t> sepset(sep.begin(), sep.end());
  for (const auto& z : s) {
    if (z.at(e) != Sign::zero) continue;
    bool ok = true;
    for (std::size_t f = 0; f < s.ground().size() && ok; ++f) {
      if (sepset.count(f)) continue;
      Sign want = equal ? x.at(f) : compose(x, y).at(f);
      if (z.at(f) != want) ok = false;
    }
    if (ok) out.push_back(z);
  }
  return out;
}

bool naive_i_empty(const SignSystem& s, const SignVector& x, const SignVector& y) {
  for (auto e : separator(x, y))
    if (!naive_elimination(s, x, y, e, false).empty()) return false;
  return true;
}

SignSystem naive_p_set(const SignSystem& s) {
  std::vector<SignVector> out;
  for (const auto& x : s)
    for (const auto& y : s) {
      SignVector ny = y.negated(), nx = x.negated();
      if (naive_i_empty(s, x, ny) && naive_i_empty(s, nx, y)) out.push_back(oplus(x, ny));
    }
  return SignSystem(s.ground(), std::move(out));
}

}  // namespace

TEST_CASE("elimination sets") {
  GroundSet g1({"e"});
  auto line = system_of(g1, {"+", "0", "-"});
  auto i = elimination_set(line, sv(g1, "+"), sv(g1, "-"), 0);
  REQUIRE(i.size() == 1);
  CHECK(i[0] == sv(g1, "0"));

  auto r = covectors(fig1_arrangement());
  const auto& s = r.system;
  GroundSet g = s.ground();
  auto ih1 = elimination_set(s, sv(g, "++-+"), sv(g, "-+-+"), g.index("H1"));
  REQUIRE(ih1.size() == 1);
  CHECK(ih1[0] == sv(g, "0+-+"));

  // empty separator: the off-separator constraint pins Z = X o Y everywhere
  GroundSet g2({"e1", "e2"});
  auto full = full_system(g2);
  auto ixx = elimination_set(full, sv(g2, "+0"), sv(g2, "+0"), 0);
  CHECK(ixx.empty());
  // matches the naive reference on random pairs
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    auto x = random_vector(g2, rng), y = random_vector(g2, rng);
    for (std::size_t e = 0; e < 2; ++e) {
      CHECK(elimination_set(full, x, y, e) == naive_elimination(full, x, y, e, false));
      CHECK(elimination_set(full, x, y, e, EliminationVariant::equal) ==
            naive_elimination(full, x, y, e, true));
    }
  }
}

TEST_CASE("asym and p sets") {
  GroundSet g1({"e"});
  CHECK(asym(system_of(g1, {"+", "0", "-"})).empty());

  auto tp = two_point_line();
  // (+,+) and (-,-) are mutual negations; the other three vectors are asymmetric
  auto as = asym(tp);
  CHECK(as.size() == 3);
  GroundSet gtp = tp.ground();
  CHECK(as.contains(sv(gtp, "0+")));
  CHECK(as.contains(sv(gtp, "-+")));
  CHECK(as.contains(sv(gtp, "-0")));

  CHECK(p_set(tp).vectors() == naive_p_set(tp).vectors());
  std::mt19937_64 rng(99);
  GroundSet g3({"a", "b", "c"});
  for (int round = 0; round < 40; ++round) {
    auto s = random_system(g3, 2 + rng() % 8, rng);
    CHECK(p_set(s).vectors() == naive_p_set(s).vectors());
  }
}

TEST_CASE("single axioms") {
  GroundSet g2({"e1", "e2"});
  auto full = full_system(g2);
  CHECK(check_axiom(full, AxiomId::Zero).holds);

  auto r = covectors(fig1_arrangement());
  CHECK(check_axiom(r.system, AxiomId::SE).holds);
  CHECK_FALSE(check_axiom(r.system, AxiomId::Zero).holds);

  auto bad = system_of(g2, {"+0", "0-"});
  auto fs = check_axiom(bad, AxiomId::FS);
  CHECK_FALSE(fs.holds);
  REQUIRE(fs.witness.has_value());
  // witness re-checked by an independent evaluator
  CHECK(fs.witness->missing.has_value());
  CHECK(*fs.witness->missing == compose(*fs.witness->x, fs.witness->y->negated()));
  CHECK_FALSE(bad.contains(*fs.witness->missing));

  // finiteness axioms report metrics on finite systems
  auto srep = check_axiom(r.system, AxiomId::S);
  CHECK(srep.holds);
  CHECK(*srep.metric == 4);  // antipodal chambers separate everywhere
  auto zrep = check_axiom(r.system, AxiomId::Z);
  CHECK(zrep.holds);
  CHECK(*zrep.metric == 3);  // the triple point
}

TEST_CASE("classification of the running examples") {
  GroundSet g2({"e1", "e2"});
  auto full = full_system(g2);
  auto cf = classify(full);
  CHECK(cf.is_OM);
  CHECK(cf.is_COM);
  CHECK(cf.is_AOM_original);
  CHECK(cf.is_AOM_simplified);

  auto r = covectors(fig1_arrangement());
  auto cr = classify(r.system);
  CHECK(cr.is_AOM_original);
  CHECK(cr.is_AOM_simplified);
  CHECK(cr.is_COM);
  CHECK_FALSE(cr.is_OM);

  // two antipodal chambers: wrecks strong elimination, hence not a COM
  auto anti = system_of(g2, {"+-", "-+"});
  auto ca = classify(anti);
  CHECK_FALSE(ca.is_AOM_simplified);
  CHECK_FALSE(ca.is_AOM_original);
  CHECK_FALSE(ca.report(AxiomId::SE).holds);
  CHECK(ca.report(AxiomId::P).holds);  // P(S) = {+-, -+, 00} composes into S
}

TEST_CASE("axiom equivalence, exhaustive on one element") {
  GroundSet g({"e"});
  auto all = full_system(g);  // 3 vectors
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<SignVector> vecs;
    for (unsigned b = 0; b < 3; ++b)
      if ((mask >> b) & 1u) vecs.push_back(all[b]);
    SignSystem s(g, std::move(vecs));
    auto c = classify(s);
    CHECK(c.is_AOM_original == c.is_AOM_simplified);
    if (c.is_OM) CHECK(c.is_AOM_simplified);
    if (c.is_AOM_simplified) CHECK(c.is_COM);
    if (c.report(AxiomId::FS).holds) CHECK(c.report(AxiomId::C).holds);
  }
}

TEST_CASE("axiom equivalence on random five-element systems") {
  std::mt19937_64 rng(20240811);
  GroundSet g({"a", "b", "c", "d", "e"});
  for (int round = 0; round < 120; ++round) {
    auto s = random_system(g, 1 + rng() % 12, rng);
    auto c = classify(s);
    CHECK(c.is_AOM_original == c.is_AOM_simplified);
    if (c.report(AxiomId::FS).holds) CHECK(c.report(AxiomId::C).holds);
  }
}

TEST_CASE("report serialization") {
  GroundSet g2({"e1", "e2"});
  auto rep = check_axiom(system_of(g2, {"+0", "0-"}), AxiomId::FS);
  auto j = axiom_report_to_json(rep);
  CHECK(j["axiom"] == "FS");
  CHECK(j["holds"] == false);
  CHECK(j.contains("witness"));
}
