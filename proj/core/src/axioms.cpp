#include "omkit/axioms.hpp"

#include <algorithm>
#include <bit>

namespace omkit {

namespace {

constexpr std::size_t kMaxWords = 8;  // 256 ground elements

using Words = std::array<std::uint64_t, kMaxWords>;

struct Scratch {
  std::size_t nwords;
  Words sep_marker;   // low-bit marker of separator lanes
  Words sep_full;     // widened separator mask
  Words pattern;      // required values off the separator
};

std::size_t checked_words(const SignSystem& s) {
  std::size_t nw = packed::word_count(s.ground().size());
  if (nw > kMaxWords)
    throw std::invalid_argument("axiom checks support at most 256 ground elements");
  return nw;
}

void load(Words& dst, std::span<const std::uint64_t> src, std::size_t nw) {
  for (std::size_t i = 0; i < nw; ++i) dst[i] = src[i];
  for (std::size_t i = nw; i < kMaxWords; ++i) dst[i] = 0;
}

// Does z match `pattern` outside the separator mask?
bool matches_off(const Words& z, const Scratch& sc) {
  for (std::size_t i = 0; i < sc.nwords; ++i)
    if ((z[i] ^ sc.pattern[i]) & ~sc.sep_full[i]) return false;
  return true;
}

bool has_zero_in(const Words& z, const Words& marker, std::size_t nw) {
  for (std::size_t i = 0; i < nw; ++i)
    if (~packed::occ_marker(z[i]) & marker[i]) return true;
  return false;
}

}  // namespace

std::string axiom_name(AxiomId a) {
  switch (a) {
    case AxiomId::C: return "C";
    case AxiomId::FS: return "FS";
    case AxiomId::SE: return "SE";
    case AxiomId::SEeq: return "SE=";
    case AxiomId::P: return "P";
    case AxiomId::Pasym: return "P=asym";
    case AxiomId::Zero: return "Zero";
    case AxiomId::Sym: return "Sym";
    case AxiomId::S: return "S";
    case AxiomId::Z: return "Z";
    case AxiomId::I: return "I";
  }
  return "?";
}

AxiomId axiom_from_name(const std::string& name) {
  for (AxiomId a : kAllAxioms)
    if (axiom_name(a) == name) return a;
  throw std::invalid_argument("unknown axiom: " + name);
}

const AxiomReport& Classification::report(AxiomId a) const {
  for (const auto& r : reports)
    if (r.axiom == a) return r;
  throw std::logic_error("classification lacks a report for " + axiom_name(a));
}

std::vector<SignVector> elimination_set(const SignSystem& s, const SignVector& x,
                                        const SignVector& y, std::size_t e,
                                        EliminationVariant variant) {
  require_same_ground(x, y);
  if (!x.ground().same_as(s.ground()))
    throw std::invalid_argument("elimination_set: vectors not on the system's ground set");
  std::size_t nw = checked_words(s);
  Scratch sc;
  sc.nwords = nw;
  Words xw, yw;
  load(xw, x.words(), nw);
  load(yw, y.words(), nw);
  for (std::size_t i = 0; i < nw; ++i) {
    sc.sep_marker[i] = packed::separator_marker(xw[i], yw[i]);
    sc.sep_full[i] = packed::widen(sc.sep_marker[i]);
    std::uint64_t w =
        variant == EliminationVariant::plain ? packed::compose_word(xw[i], yw[i]) : xw[i];
    sc.pattern[i] = w & ~sc.sep_full[i];
  }
  std::vector<SignVector> out;
  for (const auto& z : s) {
    if (z.at(e) != Sign::zero) continue;
    Words zw;
    load(zw, z.words(), nw);
    if (matches_off(zw, sc)) out.push_back(z);
  }
  return out;
}

SignSystem asym(const SignSystem& s) {
  std::vector<SignVector> out;
  for (const auto& x : s)
    if (!s.contains(x.negated())) out.push_back(x);
  return SignSystem(s.ground(), std::move(out));
}

namespace {

// One pass per unordered pair {i,j}: decides emptiness of I(X,-Y), I(-X,Y),
// I(Y,-X) and I(-Y,X) simultaneously (all share the separator S(X,-Y)).
struct PairElimination {
  bool found_xy = false;   // I(X,-Y) != empty
  bool found_nxy = false;  // I(-X,Y) != empty
  bool found_yx = false;   // I(Y,-X) != empty
  bool found_nyx = false;  // I(-Y,X) != empty
};

PairElimination scan_pair(const SignSystem& s, std::size_t i, std::size_t j, std::size_t nw) {
  PairElimination r;
  Words xw, yw, w1, w1n, w2, w2n, sep, sepfull;
  load(xw, s[i].words(), nw);
  load(yw, s[j].words(), nw);
  bool sep_empty = true;
  for (std::size_t k = 0; k < nw; ++k) {
    std::uint64_t ny = packed::negate_word(yw[k]);
    sep[k] = packed::separator_marker(xw[k], ny);
    sepfull[k] = packed::widen(sep[k]);
    if (sep[k]) sep_empty = false;
    w1[k] = packed::compose_word(xw[k], ny) & ~sepfull[k];
    w1n[k] = packed::negate_word(w1[k]);
    w2[k] = packed::compose_word(yw[k], packed::negate_word(xw[k])) & ~sepfull[k];
    w2n[k] = packed::negate_word(w2[k]);
  }
  if (sep_empty) return r;  // all four elimination sets are empty unions
  for (const auto& zv : s) {
    Words zw;
    load(zw, zv.words(), nw);
    if (!has_zero_in(zw, sep, nw)) continue;
    auto match = [&](const Words& p) {
      for (std::size_t k = 0; k < nw; ++k)
        if ((zw[k] ^ p[k]) & ~sepfull[k]) return false;
      return true;
    };
    if (!r.found_xy && match(w1)) r.found_xy = true;
    if (!r.found_nxy && match(w1n)) r.found_nxy = true;
    if (!r.found_yx && match(w2)) r.found_yx = true;
    if (!r.found_nyx && match(w2n)) r.found_nyx = true;
    if (r.found_xy && r.found_nxy && r.found_yx && r.found_nyx) break;
  }
  return r;
}

}  // namespace

SignSystem p_set(const SignSystem& s) {
  std::size_t nw = checked_words(s);
  std::vector<SignVector> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      auto r = scan_pair(s, i, j, nw);
      if (!r.found_xy && !r.found_nxy) out.push_back(oplus(s[i], s[j].negated()));
      if (i != j && !r.found_yx && !r.found_nyx) out.push_back(oplus(s[j], s[i].negated()));
    }
  }
  return SignSystem(s.ground(), std::move(out));
}

SignSystem pasym_set(const SignSystem& s) {
  std::size_t nw = checked_words(s);
  SignSystem as = asym(s);
  std::vector<SignVector> out;
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = 0; j < as.size(); ++j) {
      const SignVector& x = as[i];
      const SignVector& y = as[j];
      // support equality
      bool eq = true;
      auto xw = x.words();
      auto yw = y.words();
      for (std::size_t k = 0; k < xw.size() && eq; ++k)
        if (packed::occ_marker(xw[k]) != packed::occ_marker(yw[k])) eq = false;
      if (!eq) continue;
      SignVector ny = y.negated();
      // I^=(X,-Y) uses the pattern X off the separator; I^=(-X,Y) uses -X.
      Scratch sc;
      sc.nwords = nw;
      bool sep_empty = true;
      Words xw8;
      load(xw8, xw, nw);
      Words nyw;
      load(nyw, ny.words(), nw);
      for (std::size_t k = 0; k < nw; ++k) {
        sc.sep_marker[k] = packed::separator_marker(xw8[k], nyw[k]);
        sc.sep_full[k] = packed::widen(sc.sep_marker[k]);
        if (sc.sep_marker[k]) sep_empty = false;
        sc.pattern[k] = xw8[k] & ~sc.sep_full[k];
      }
      bool found_pos = false, found_neg = false;
      if (!sep_empty) {
        Scratch scn = sc;
        for (std::size_t k = 0; k < nw; ++k)
          scn.pattern[k] = packed::negate_word(sc.pattern[k]);
        for (const auto& zv : s) {
          Words zw;
          load(zw, zv.words(), nw);
          if (!has_zero_in(zw, sc.sep_marker, nw)) continue;
          if (!found_pos && matches_off(zw, sc)) found_pos = true;
          if (!found_neg && matches_off(zw, scn)) found_neg = true;
          if (found_pos && found_neg) break;
        }
      }
      if (!found_pos && !found_neg) out.push_back(oplus(x, ny));
    }
  }
  return SignSystem(s.ground(), std::move(out));
}

namespace {

AxiomReport check_composition_closure(const SignSystem& s, AxiomId id, bool negate_second,
                                      bool fail_fast) {
  AxiomReport rep{id, true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      SignVector c = negate_second ? compose(s[i], s[j].negated()) : compose(s[i], s[j]);
      if (!s.contains(c)) {
        rep.holds = false;
        rep.witness = AxiomWitness{s[i], s[j], std::nullopt, c, "composite not in system"};
        if (fail_fast) return rep;
      }
    }
  }
  return rep;
}

AxiomReport check_strong_elimination(const SignSystem& s, bool equal_variant, bool fail_fast) {
  std::size_t nw = checked_words(s);
  AxiomReport rep{equal_variant ? AxiomId::SEeq : AxiomId::SE, true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      const SignVector& x = s[i];
      const SignVector& y = s[j];
      if (equal_variant) {
        bool eq = true;
        auto xw = x.words();
        auto yw = y.words();
        for (std::size_t k = 0; k < xw.size() && eq; ++k)
          if (packed::occ_marker(xw[k]) != packed::occ_marker(yw[k])) eq = false;
        if (!eq) continue;
      }
      Scratch sc;
      sc.nwords = nw;
      Words xw8, yw8, pending;
      load(xw8, x.words(), nw);
      load(yw8, y.words(), nw);
      bool sep_empty = true;
      for (std::size_t k = 0; k < nw; ++k) {
        sc.sep_marker[k] = packed::separator_marker(xw8[k], yw8[k]);
        sc.sep_full[k] = packed::widen(sc.sep_marker[k]);
        std::uint64_t w = equal_variant ? xw8[k] : packed::compose_word(xw8[k], yw8[k]);
        sc.pattern[k] = w & ~sc.sep_full[k];
        pending[k] = sc.sep_marker[k];
        if (pending[k]) sep_empty = false;
      }
      if (sep_empty) continue;
      for (const auto& zv : s) {
        Words zw;
        load(zw, zv.words(), nw);
        if (!matches_off(zw, sc)) continue;
        bool done = true;
        for (std::size_t k = 0; k < nw; ++k) {
          pending[k] &= packed::occ_marker(zw[k]);
          if (pending[k]) done = false;
        }
        if (done) break;
      }
      for (std::size_t k = 0; k < nw; ++k) {
        if (pending[k]) {
          std::size_t lane = k * packed::kLanes + std::countr_zero(pending[k]) / 2;
          rep.holds = false;
          rep.witness = AxiomWitness{x, y, s.ground().name(lane), std::nullopt,
                                     "empty elimination set at this element"};
          if (fail_fast) return rep;
          break;
        }
      }
      if (!rep.holds && fail_fast) return rep;
    }
  }
  return rep;
}

AxiomReport check_pclosure(const SignSystem& s, AxiomId id, bool fail_fast) {
  AxiomReport rep{id, true, std::nullopt, std::nullopt};
  SignSystem ps = id == AxiomId::P ? p_set(s) : pasym_set(s);
  // When the system is composition-closed, members of P(S) that already lie in
  // S cannot produce new composites.
  bool comp_closed = check_composition_closure(s, AxiomId::C, false, true).holds;
  for (const auto& p : ps) {
    if (comp_closed && s.contains(p)) continue;
    for (const auto& z : s) {
      SignVector c = compose(p, z);
      if (!s.contains(c)) {
        rep.holds = false;
        rep.witness = AxiomWitness{p, z, std::nullopt, c,
                                   id == AxiomId::P ? "P(S) composite not in system"
                                                    : "P=asym(S) composite not in system"};
        if (fail_fast) return rep;
      }
    }
  }
  return rep;
}

}  // namespace

AxiomReport check_axiom(const SignSystem& s, AxiomId a, bool fail_fast) {
  switch (a) {
    case AxiomId::C: return check_composition_closure(s, a, false, fail_fast);
    case AxiomId::FS: return check_composition_closure(s, a, true, fail_fast);
    case AxiomId::SE: return check_strong_elimination(s, false, fail_fast);
    case AxiomId::SEeq: return check_strong_elimination(s, true, fail_fast);
    case AxiomId::P:
    case AxiomId::Pasym: return check_pclosure(s, a, fail_fast);
    case AxiomId::Zero: {
      AxiomReport rep{a, true, std::nullopt, std::nullopt};
      SignVector zero(s.ground());
      if (!s.contains(zero)) {
        rep.holds = false;
        rep.witness = AxiomWitness{std::nullopt, std::nullopt, std::nullopt, zero,
                                   "all-zero covector absent"};
      }
      return rep;
    }
    case AxiomId::Sym: {
      AxiomReport rep{a, true, std::nullopt, std::nullopt};
      for (const auto& x : s) {
        SignVector n = x.negated();
        if (!s.contains(n)) {
          rep.holds = false;
          rep.witness = AxiomWitness{x, std::nullopt, std::nullopt, n, "negation absent"};
          if (fail_fast) return rep;
        }
      }
      return rep;
    }
    case AxiomId::S: {
      // Automatic on finite systems; report the largest separator.
      AxiomReport rep{a, true, std::nullopt, std::size_t(0)};
      std::size_t m = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          m = std::max(m, separator_size(s[i], s[j]));
      rep.metric = m;
      return rep;
    }
    case AxiomId::Z: {
      AxiomReport rep{a, true, std::nullopt, std::size_t(0)};
      std::size_t m = 0;
      for (const auto& x : s) m = std::max(m, x.size() - x.support_size());
      rep.metric = m;
      return rep;
    }
    case AxiomId::I: {
      AxiomReport rep{a, true, std::nullopt, std::size_t(0)};
      std::size_t m = 0;
      for (const auto& x : s) {
        std::size_t c = 0;
        for (const auto& y : s)
          if (natural_leq(y, x)) ++c;
        m = std::max(m, c);
      }
      rep.metric = m;
      return rep;
    }
  }
  throw std::logic_error("unreachable");
}

bool is_aom_quick(const SignSystem& s) {
  return check_axiom(s, AxiomId::FS).holds && check_axiom(s, AxiomId::SE).holds &&
         check_axiom(s, AxiomId::P).holds;
}

Classification classify(const SignSystem& s, bool fail_fast) {
  Classification c;
  for (AxiomId a : kAllAxioms) c.reports.push_back(check_axiom(s, a, fail_fast));
  auto holds = [&](AxiomId a) { return c.report(a).holds; };
  c.is_COM = holds(AxiomId::FS) && holds(AxiomId::SE);
  c.is_OM = holds(AxiomId::Zero) && c.is_COM;
  c.is_AOM_original =
      holds(AxiomId::C) && holds(AxiomId::FS) && holds(AxiomId::SEeq) && holds(AxiomId::Pasym);
  c.is_AOM_simplified = c.is_COM && holds(AxiomId::P);
  return c;
}

}  // namespace omkit
