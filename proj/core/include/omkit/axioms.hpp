#pragma once

#include <array>
#include <optional>
#include <string>

#include "omkit/sign_system.hpp"

namespace omkit {

enum class AxiomId { C, FS, SE, SEeq, P, Pasym, Zero, Sym, S, Z, I };

constexpr std::array<AxiomId, 11> kAllAxioms = {
    AxiomId::C,    AxiomId::FS,   AxiomId::SE, AxiomId::SEeq, AxiomId::P, AxiomId::Pasym,
    AxiomId::Zero, AxiomId::Sym,  AxiomId::S,  AxiomId::Z,    AxiomId::I};

std::string axiom_name(AxiomId a);
AxiomId axiom_from_name(const std::string& name);

// Counterexample record; which fields are set depends on the axiom.
struct AxiomWitness {
  std::optional<SignVector> x;
  std::optional<SignVector> y;
  std::optional<std::string> element;
  std::optional<SignVector> missing;  // vector required by the axiom but absent from the system
  std::string note;
};

struct AxiomReport {
  AxiomId axiom = AxiomId::C;
  bool holds = false;
  std::optional<AxiomWitness> witness;
  // For (S)/(Z)/(I) on finite systems: the computed maximum (separator size,
  // zero set size, lower-interval cardinality).
  std::optional<std::size_t> metric;
};

struct Classification {
  bool is_COM = false;
  bool is_OM = false;
  bool is_AOM_original = false;
  bool is_AOM_simplified = false;
  std::vector<AxiomReport> reports;

  bool is_AOM() const { return is_AOM_simplified; }
  const AxiomReport& report(AxiomId a) const;
};

enum class EliminationVariant { plain, equal };

// I_e(X,Y;S) resp. I^=_e(X,Y;S).
std::vector<SignVector> elimination_set(const SignSystem& s, const SignVector& x,
                                        const SignVector& y, std::size_t e,
                                        EliminationVariant variant = EliminationVariant::plain);

SignSystem asym(const SignSystem& s);
// P(S) and P^=_asym(S): may contain vectors not in S.
SignSystem p_set(const SignSystem& s);
SignSystem pasym_set(const SignSystem& s);

AxiomReport check_axiom(const SignSystem& s, AxiomId a, bool fail_fast = true);
Classification classify(const SignSystem& s, bool fail_fast = true);

// (FS) + (SE) + (P) only; the fast path for pipelines that just need a verdict.
bool is_aom_quick(const SignSystem& s);

}  // namespace omkit
