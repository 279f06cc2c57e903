#pragma once

#include <map>

#include "omkit/poset.hpp"
#include "omkit/sign_system.hpp"

namespace omkit {

// Finite semimatroid on at most 64 elements; central sets as bitmasks.
struct Semimatroid {
  GroundSet ground;
  std::vector<std::uint64_t> facets;       // maximal central sets
  std::map<std::uint64_t, int> rank;       // defined exactly on the central sets

  bool is_central(std::uint64_t a) const {
    for (auto f : facets)
      if ((a & ~f) == 0) return true;
    return false;
  }
  int rank_of(std::uint64_t a) const {
    auto it = rank.find(a);
    if (it == rank.end()) throw std::invalid_argument("rank queried outside the central complex");
    return it->second;
  }
  std::vector<std::uint64_t> central_sets() const;  // sorted ascending
  int global_rank() const;
};

std::uint64_t element_mask(const GroundSet& g, const std::vector<std::string>& names);
std::vector<std::string> mask_names(const GroundSet& g, std::uint64_t mask);

struct SemimatroidAxiomReport {
  std::string axiom;  // R1 R2 R3 CR1 CR2
  bool holds = true;
  std::string witness;
};
std::vector<SemimatroidAxiomReport> check_semimatroid(const Semimatroid& m);
bool semimatroid_ok(const Semimatroid& m);

// { x : X + x central with the same rank }; flats are the fixed points.
std::uint64_t closure(const Semimatroid& m, std::uint64_t x);

// Central sets = subsets of zero sets; rank via the flats poset (the zero map
// is rank-preserving). Requires an AOM.
Semimatroid underlying_semimatroid(const SignSystem& s);

struct GslReport {
  bool chain_finite = true;
  bool meets = true;
  bool gsl1 = true;
  bool gsl2 = true;
  std::string witness;
  bool ok() const { return chain_finite && meets && gsl1 && gsl2; }
};

// Geometric-semilattice axioms on a poset of subsets ordered by inclusion.
GslReport check_geometric_semilattice(const FlatsPoset& l, const GroundSet& ground);

struct Cryptomorphism {
  Semimatroid derived;
  FlatsPoset derived_flats;
  bool round_trip_identity = false;
};

// Geometric semilattice -> semimatroid -> flats poset; checks the round trip
// is the identity up to canonical isomorphism.
Cryptomorphism cryptomorphism_roundtrip(const FlatsPoset& l, const GroundSet& ground);

FlatsPoset flats_of_semimatroid(const Semimatroid& m);

std::vector<std::uint64_t> bases(const Semimatroid& m);

// The unique maximal covector vanishing on a basis of the underlying semimatroid.
SignVector basis_max_covector(const SignSystem& s, const std::vector<std::string>& basis);

}  // namespace omkit
