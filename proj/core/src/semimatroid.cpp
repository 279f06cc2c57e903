#include "omkit/semimatroid.hpp"

#include <algorithm>
#include <set>

#include "omkit/axioms.hpp"

namespace omkit {

namespace {

std::string mask_label(const GroundSet& g, std::uint64_t mask) {
  std::string l;
  for (std::size_t i = 0; i < g.size(); ++i)
    if ((mask >> i) & 1u) {
      if (!l.empty()) l += ",";
      l += g.name(i);
    }
  return l.empty() ? "{}" : l;
}

void check_ground_size(const GroundSet& g) {
  if (g.size() > 64)
    throw std::invalid_argument("semimatroid layer supports at most 64 ground elements");
}

}  // namespace

std::uint64_t element_mask(const GroundSet& g, const std::vector<std::string>& names) {
  check_ground_size(g);
  std::uint64_t m = 0;
  for (const auto& n : names) m |= 1ull << g.index(n);
  return m;
}

std::vector<std::string> mask_names(const GroundSet& g, std::uint64_t mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if ((mask >> i) & 1u) out.push_back(g.name(i));
  return out;
}

std::vector<std::uint64_t> Semimatroid::central_sets() const {
  std::set<std::uint64_t> all;
  for (auto f : facets) {
    // enumerate subsets of f
    std::uint64_t sub = f;
    while (true) {
      all.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  return {all.begin(), all.end()};
}

int Semimatroid::global_rank() const {
  int r = 0;
  for (const auto& [m, rk] : rank) r = std::max(r, rk);
  return r;
}

std::vector<SemimatroidAxiomReport> check_semimatroid(const Semimatroid& m) {
  std::vector<SemimatroidAxiomReport> reps;
  auto cs = m.central_sets();
  const GroundSet& g = m.ground;

  SemimatroidAxiomReport r1{"R1", true, ""};
  for (auto x : cs) {
    int rk = m.rank_of(x);
    if (rk < 0 || rk > std::popcount(x)) {
      r1.holds = false;
      r1.witness = mask_label(g, x);
      break;
    }
  }
  reps.push_back(r1);

  SemimatroidAxiomReport r2{"R2", true, ""};
  for (auto x : cs) {
    for (auto y : cs) {
      if ((x & ~y) == 0 && m.rank_of(x) > m.rank_of(y)) {
        r2.holds = false;
        r2.witness = mask_label(g, x) + " <= " + mask_label(g, y);
        break;
      }
    }
    if (!r2.holds) break;
  }
  reps.push_back(r2);

  SemimatroidAxiomReport r3{"R3", true, ""};
  for (auto x : cs) {
    for (auto y : cs) {
      if (!m.is_central(x | y)) continue;
      if (m.rank_of(x) + m.rank_of(y) < m.rank_of(x | y) + m.rank_of(x & y)) {
        r3.holds = false;
        r3.witness = mask_label(g, x) + " , " + mask_label(g, y);
        break;
      }
    }
    if (!r3.holds) break;
  }
  reps.push_back(r3);

  SemimatroidAxiomReport cr1{"CR1", true, ""};
  for (auto x : cs) {
    for (auto y : cs) {
      if (m.rank_of(x) == m.rank_of(x & y) && !m.is_central(x | y)) {
        cr1.holds = false;
        cr1.witness = mask_label(g, x) + " , " + mask_label(g, y);
        break;
      }
    }
    if (!cr1.holds) break;
  }
  reps.push_back(cr1);

  SemimatroidAxiomReport cr2{"CR2", true, ""};
  for (auto x : cs) {
    for (auto y : cs) {
      if (m.rank_of(x) >= m.rank_of(y)) continue;
      bool found = false;
      std::uint64_t cand = y & ~x;
      while (cand && !found) {
        std::uint64_t bit = cand & (~cand + 1);
        if (m.is_central(x | bit)) found = true;
        cand &= cand - 1;
      }
      if (!found) {
        cr2.holds = false;
        cr2.witness = mask_label(g, x) + " , " + mask_label(g, y);
        break;
      }
    }
    if (!cr2.holds) break;
  }
  reps.push_back(cr2);
  return reps;
}

bool semimatroid_ok(const Semimatroid& m) {
  auto reps = check_semimatroid(m);
  return std::all_of(reps.begin(), reps.end(),
                     [](const SemimatroidAxiomReport& r) { return r.holds; });
}

std::uint64_t closure(const Semimatroid& m, std::uint64_t x) {
  if (!m.is_central(x)) throw std::invalid_argument("closure: set is not central");
  std::uint64_t cl = x;
  int rk = m.rank_of(x);
  for (std::size_t i = 0; i < m.ground.size(); ++i) {
    std::uint64_t with = x | (1ull << i);
    if (m.is_central(with) && m.rank_of(with) == rk) cl |= 1ull << i;
  }
  return cl;
}

Semimatroid underlying_semimatroid(const SignSystem& s) {
  check_ground_size(s.ground());
  if (!is_aom_quick(s))
    throw std::invalid_argument("underlying_semimatroid: input fails AOM classification");
  Semimatroid m;
  m.ground = s.ground();

  // zero sets and their maxima
  std::set<std::uint64_t> zeros;
  for (const auto& v : s) {
    std::uint64_t z = 0;
    for (auto i : v.zero_set()) z |= 1ull << i;
    zeros.insert(z);
  }
  for (auto z : zeros) {
    bool maximal = true;
    for (auto w : zeros)
      if (w != z && (z & ~w) == 0) {
        maximal = false;
        break;
      }
    if (maximal) m.facets.push_back(z);
  }
  std::sort(m.facets.begin(), m.facets.end());

  // flats poset ranks; rank of a central set = rank of its minimal flat
  FlatsPoset fp = flats_poset(s);
  std::map<std::uint64_t, int> flat_rank;
  std::vector<std::uint64_t> flat_masks;
  for (std::size_t i = 0; i < fp.flats.size(); ++i) {
    std::uint64_t mask = 0;
    for (auto e : fp.flats[i]) mask |= 1ull << e;
    flat_rank[mask] = fp.poset.rank_of(i);
    flat_masks.push_back(mask);
  }
  for (auto a : m.central_sets()) {
    int best = -1;
    for (auto fmask : flat_masks) {
      if ((a & ~fmask) != 0) continue;
      if (best < 0 || flat_rank[fmask] < best) best = flat_rank[fmask];
    }
    m.rank[a] = best;
  }
  return m;
}

namespace {

// Unique minimal upper bound inside the family, if any.
std::optional<std::uint64_t> join_in(const std::vector<std::uint64_t>& family, std::uint64_t a,
                                     std::uint64_t b) {
  std::vector<std::uint64_t> ub;
  for (auto f : family)
    if ((a & ~f) == 0 && (b & ~f) == 0) ub.push_back(f);
  std::vector<std::uint64_t> minimal;
  for (auto u : ub) {
    bool is_min = true;
    for (auto v : ub)
      if (v != u && (v & ~u) == 0) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(u);
  }
  if (minimal.size() == 1) return minimal[0];
  return std::nullopt;
}

}  // namespace

GslReport check_geometric_semilattice(const FlatsPoset& l, const GroundSet& ground) {
  check_ground_size(ground);
  GslReport rep;
  std::vector<std::uint64_t> fam;
  std::map<std::uint64_t, int> rk;
  for (std::size_t i = 0; i < l.flats.size(); ++i) {
    std::uint64_t mask = 0;
    for (auto e : l.flats[i]) mask |= 1ull << e;
    fam.push_back(mask);
    rk[mask] = l.poset.rank_of(i);
  }
  auto in_fam = [&](std::uint64_t m) { return rk.count(m) > 0; };

  // meets: set intersection must realize the poset meet
  for (auto a : fam)
    for (auto b : fam)
      if (!in_fam(a & b)) {
        rep.meets = false;
        rep.witness = "meet missing: " + mask_label(ground, a) + " ^ " + mask_label(ground, b);
        return rep;
      }

  std::vector<std::uint64_t> atoms;
  for (auto f : fam)
    if (rk[f] == 1) atoms.push_back(f);

  // GSL1: each maximal interval [bottom, m] is a finite geometric lattice
  for (auto m : fam) {
    bool is_max = true;
    for (auto f : fam)
      if (f != m && (m & ~f) == 0) is_max = false;
    if (!is_max) continue;
    std::vector<std::uint64_t> interval;
    for (auto f : fam)
      if ((f & ~m) == 0) interval.push_back(f);
    for (auto x : interval) {
      for (auto y : interval) {
        auto j = join_in(interval, x, y);
        if (!j) {
          rep.gsl1 = false;
          rep.witness = "no join in maximal interval: " + mask_label(ground, x) + " v " +
                        mask_label(ground, y);
          return rep;
        }
        // submodularity within the interval
        if (rk[*j] + rk[x & y] > rk[x] + rk[y]) {
          rep.gsl1 = false;
          rep.witness = "rank not semimodular: " + mask_label(ground, x) + " , " +
                        mask_label(ground, y);
          return rep;
        }
      }
      // atomicity: x is the join of the atoms below it
      if (rk[x] > 0) {
        std::uint64_t aj = 0;
        for (auto a : atoms)
          if ((a & ~x) == 0) aj |= a;
        std::uint64_t acc = ~0ull;
        bool any = false;
        for (auto f : fam)
          if ((aj & ~f) == 0) {
            acc &= f;
            any = true;
          }
        if (!any || !in_fam(acc) || acc != x) {
          rep.gsl1 = false;
          rep.witness = "interval not atomistic at " + mask_label(ground, x);
          return rep;
        }
      }
    }
  }

  // GSL2
  // independent atom sets: join exists and has rank = #atoms
  std::size_t na = atoms.size();
  if (na > 20) throw std::invalid_argument("GSL2 check limited to 20 atoms");
  for (std::uint64_t sel = 1; sel < (1ull << na); ++sel) {
    std::vector<std::uint64_t> chosen;
    for (std::size_t i = 0; i < na; ++i)
      if ((sel >> i) & 1u) chosen.push_back(atoms[i]);
    // join of the atom family = unique minimal upper bound of all
    std::vector<std::uint64_t> ub;
    for (auto f : fam) {
      bool all = true;
      for (auto a : chosen)
        if ((a & ~f) != 0) all = false;
      if (all) ub.push_back(f);
    }
    std::vector<std::uint64_t> minimal;
    for (auto u : ub) {
      bool is_min = true;
      for (auto v : ub)
        if (v != u && (v & ~u) == 0) is_min = false;
      if (is_min) minimal.push_back(u);
    }
    if (minimal.size() != 1) continue;  // join does not exist
    std::uint64_t join = minimal[0];
    if (rk[join] != static_cast<int>(chosen.size())) continue;  // not independent
    for (auto x : fam) {
      if (rk[x] >= rk[join]) continue;
      bool found = false;
      for (auto a : chosen) {
        if ((a & ~x) == 0) continue;  // a <= x
        if (join_in(fam, x, a)) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.gsl2 = false;
        rep.witness = "GSL2 fails for x = " + mask_label(ground, x);
        return rep;
      }
    }
  }
  return rep;
}

FlatsPoset flats_of_semimatroid(const Semimatroid& m) {
  std::set<std::vector<std::size_t>> flats;
  for (auto a : m.central_sets()) {
    std::uint64_t cl = closure(m, a);
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < m.ground.size(); ++i)
      if ((cl >> i) & 1u) f.push_back(i);
    flats.insert(f);
  }
  FlatsPoset fp;
  fp.flats.assign(flats.begin(), flats.end());
  std::sort(fp.flats.begin(), fp.flats.end(),
            [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<std::string> labels;
  for (const auto& f : fp.flats) {
    std::string l;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k) l += ",";
      l += m.ground.name(f[k]);
    }
    labels.push_back(l.empty() ? "{}" : l);
  }
  const auto& flats_ref = fp.flats;
  fp.poset =
      RankedPoset::from_relation(std::move(labels), [&flats_ref](std::size_t a, std::size_t b) {
        return std::includes(flats_ref[b].begin(), flats_ref[b].end(), flats_ref[a].begin(),
                             flats_ref[a].end());
      });
  return fp;
}

Cryptomorphism cryptomorphism_roundtrip(const FlatsPoset& l, const GroundSet& ground) {
  Cryptomorphism out;
  out.derived.ground = ground;
  // facets = maximal flats; rank of a central set = rank of its minimal flat
  std::vector<std::uint64_t> fam;
  std::map<std::uint64_t, int> rk;
  for (std::size_t i = 0; i < l.flats.size(); ++i) {
    std::uint64_t mask = 0;
    for (auto e : l.flats[i]) mask |= 1ull << e;
    fam.push_back(mask);
    rk[mask] = l.poset.rank_of(i);
  }
  for (auto f : fam) {
    bool is_max = true;
    for (auto g : fam)
      if (g != f && (f & ~g) == 0) is_max = false;
    if (is_max) out.derived.facets.push_back(f);
  }
  std::sort(out.derived.facets.begin(), out.derived.facets.end());
  for (auto a : out.derived.central_sets()) {
    int best = -1;
    for (auto f : fam)
      if ((a & ~f) == 0 && (best < 0 || rk[f] < best)) best = rk[f];
    out.derived.rank[a] = best;
  }
  out.derived_flats = flats_of_semimatroid(out.derived);
  out.round_trip_identity = out.derived_flats.flats == l.flats;
  return out;
}

std::vector<std::uint64_t> bases(const Semimatroid& m) {
  int r = m.global_rank();
  std::vector<std::uint64_t> out;
  for (auto a : m.central_sets())
    if (m.rank_of(a) == r && std::popcount(a) == r) out.push_back(a);
  return out;
}

SignVector basis_max_covector(const SignSystem& s, const std::vector<std::string>& basis) {
  Semimatroid m = underlying_semimatroid(s);
  std::uint64_t b = element_mask(s.ground(), basis);
  if (!m.is_central(b) || m.rank_of(b) != static_cast<int>(basis.size()) ||
      m.rank_of(b) != m.global_rank())
    throw std::invalid_argument("basis_max_covector: input is not a basis");
  std::vector<const SignVector*> vanishing;
  for (const auto& v : s) {
    bool ok = true;
    for (const auto& name : basis)
      if (v.at(name) != Sign::zero) {
        ok = false;
        break;
      }
    if (ok) vanishing.push_back(&v);
  }
  // maximal within the covectors vanishing on the basis
  std::vector<const SignVector*> maximal;
  for (auto* x : vanishing) {
    bool is_max = true;
    for (auto* y : vanishing)
      if (y != x && natural_leq(*x, *y)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(x);
  }
  if (maximal.size() != 1)
    throw std::runtime_error("basis_max_covector: maximal covector is not unique (" +
                             std::to_string(maximal.size()) + " candidates)");
  return *maximal[0];
}

}  // namespace omkit
