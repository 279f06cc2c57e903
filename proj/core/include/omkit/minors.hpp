#pragma once

#include <map>

#include "omkit/sign_system.hpp"

namespace omkit {

struct MinorSpec {
  std::vector<std::string> del;       // deleted elements A
  std::vector<std::string> contract;  // contracted elements B, disjoint from A
};

SignSystem delete_elements(const SignSystem& s, const std::vector<std::string>& a);
SignSystem contract_elements(const SignSystem& s, const std::vector<std::string>& a);
// Restriction to A = deletion of the complement.
SignSystem restrict_to(const SignSystem& s, const std::vector<std::string>& a);
SignSystem apply_minor(const SignSystem& s, const MinorSpec& spec);

struct SimplifyResult {
  SignSystem system;
  // Every original element maps to its kept representative, with the sign
  // relating the two columns (+1 equal, -1 negated). Redundant elements map
  // to no representative.
  struct Kept {
    std::string representative;
    int relation;  // +1 or -1
  };
  std::map<std::string, Kept> kept;
  std::vector<std::string> removed_redundant;
};

SimplifyResult simplify(const SignSystem& s);
bool is_simple(const SignSystem& s);

// Coning: the finite OM on E + {g} whose positive g-halfspace is exactly S.
// Brute-forces the g=0 layer for |E| <= brute_force_limit; beyond that, uses
// (+-X)(+)(+-Y) closure seeds. Requires S to pass AOM classification.
SignSystem cone(const SignSystem& s, const std::string& g, std::size_t brute_force_limit = 12);

// The g=0 layer of the cone, restricted to E (i.e. all N with (+-N) o S <= S).
SignSystem cone_zero_layer(const SignSystem& s, std::size_t brute_force_limit = 12);

// Faces of a finite AOM that are bounded in the sense of the coning embedding.
std::vector<SignVector> bounded_faces(const SignSystem& s);

}  // namespace omkit
