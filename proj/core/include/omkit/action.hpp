#pragma once

#include "omkit/polynomial.hpp"
#include "omkit/poset.hpp"
#include "omkit/realize.hpp"

namespace omkit {

// A translation lattice acting on a periodic arrangement. The acting lattice
// defaults to the arrangement's own translation lattice.
struct TranslationAction {
  PeriodicArrangement source;
  std::vector<QVector> gamma;  // generators of the acting lattice (columns)

  static TranslationAction full(PeriodicArrangement p) {
    TranslationAction t;
    t.gamma = p.lattice;
    t.source = std::move(p);
    return t;
  }
  void validate() const;  // gamma inside the lattice, full rank
};

struct ActionCertificate {
  bool sliding = false;
  bool free_on_covectors = false;
  bool translative = false;
  std::string detail;
  bool ok() const { return sliding && free_on_covectors && translative; }
};

// Verified on a window covering at least two fundamental domains per axis.
ActionCertificate certify_action(const TranslationAction& t, std::size_t domains = 2);

// Shift constant of a lattice element on an orbit's index line.
Integer k_map(const TranslationAction& t, std::size_t orbit, const QVector& gamma);

// One orbit of the ground set under the acting lattice: an arrangement orbit
// splits into `residues` suborbits when gamma is a proper sublattice.
struct GroundOrbit {
  std::size_t orbit;   // index into source.orbit_reps
  Integer residue;     // 0 <= residue < residues
  Integer residues;    // index of <n, Gamma> inside <n, Lambda>
  std::string label;
};

struct GSemimatroidRow {
  std::vector<std::size_t> orbit_ids;  // subset A of the ground orbits
  Integer m;                            // number of orbit classes of central sets
  int rk = 0;                           // common rank (max per eq. definition)
};

struct GSemimatroidTable {
  std::vector<GroundOrbit> ground;
  std::vector<GSemimatroidRow> rows;  // rows with m = 0 omitted
  int global_rank = 0;
};

GSemimatroidTable gsemimatroid_table(const TranslationAction& t);

BivariatePolynomial tutte_polynomial(const GSemimatroidTable& table);

// Arithmetic Tutte polynomial of an integer character matrix (d rows, one
// column per character); multiplicity = gcd of maximal minors.
BivariatePolynomial arithmetic_tutte_from_matrix(const ZMatrix& n);

struct ToricCensus {
  std::vector<std::size_t> counts_by_rank;  // covector-poset rank: 0 = vertices
  std::size_t chambers = 0;
  std::size_t padding_used = 1;
};

// Face counts of the toric pseudoarrangement, by exact enumeration of a
// padded window and orbit canonicalization of cell barycenters.
ToricCensus toric_face_census(const TranslationAction& t);
std::size_t toric_chamber_count(const TranslationAction& t);

// Quotient of the flats semilattice by the acting lattice.
RankedPoset quotient_flats(const TranslationAction& t);

struct ThmTcReport {
  bool holds = false;
  BivariatePolynomial chi;  // characteristic polynomial of the quotient flats
  BivariatePolynomial rhs;  // (-1)^r T(1-t, 0)
};
ThmTcReport verify_thm_tc(const TranslationAction& t);

}  // namespace omkit
