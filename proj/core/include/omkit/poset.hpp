#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omkit/polynomial.hpp"
#include "omkit/sign_system.hpp"

namespace omkit {

// Finite poset with verified rank data. The full order relation is kept as
// row bitsets; covers are derived.
class RankedPoset {
 public:
  RankedPoset() = default;

  static RankedPoset from_relation(
      std::vector<std::string> labels,
      const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  bool leq(std::size_t a, std::size_t b) const {
    return (rel_[a][b / 64] >> (b % 64)) & 1u;
  }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  int rank_of(std::size_t i) const { return rank_[i]; }
  const std::vector<int>& ranks() const { return rank_; }
  int length() const { return length_; }
  bool graded() const { return graded_; }
  const std::vector<std::size_t>& minimals() const { return minimals_; }
  const std::vector<std::size_t>& maximals() const { return maximals_; }
  bool bounded_below() const { return minimals_.size() == 1; }

  std::vector<std::size_t> strictly_below(std::size_t i) const;
  std::vector<std::size_t> strictly_above(std::size_t i) const;

  RankedPoset with_top_adjoined(const std::string& label = "TOP") const;
  // Poset minus its unique minimum; identity when there is none.
  RankedPoset proper_part() const;
  // Face poset of the order complex: elements are the nonempty chains.
  RankedPoset chain_poset(std::size_t max_elements = 2000000) const;
  RankedPoset dual() const;

  // Number of chains of each cardinality (index k = chains of k elements).
  std::vector<Integer> chain_counts() const;
  // Reduced Euler characteristic of the order complex.
  Integer reduced_euler_characteristic() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint64_t>> rel_;  // leq bitset rows
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<int> rank_;
  std::vector<std::size_t> minimals_, maximals_;
  int length_ = 0;
  bool graded_ = false;
};

RankedPoset covector_poset(const SignSystem& s);

// Flats (zero sets) ordered by inclusion; labels are comma-joined element names.
struct FlatsPoset {
  RankedPoset poset;
  std::vector<std::vector<std::size_t>> flats;  // element indices, sorted
};
FlatsPoset flats_poset(const SignSystem& s);

// Moebius function of a bounded-below ranked poset.
std::vector<Integer> mobius(const RankedPoset& p);
// chi(t) = sum mu(p) t^(l - rank p), in the first variable.
BivariatePolynomial characteristic_polynomial(const RankedPoset& p);

enum class ThinnessClass { thin, subthin, neither };
struct ThinnessReport {
  ThinnessClass result = ThinnessClass::neither;
  // Witness intervals [x, z] with a 3-element interval off the top (or any
  // count other than 3/4), as label pairs.
  std::vector<std::pair<std::string, std::string>> witnesses;
  bool used_order_complex = false;  // no unique minimum: census ran on the chain poset
};
ThinnessReport thinness(const RankedPoset& p);

struct BoundaryReport {
  // Each boundary generator is a saturated chain (as covector strings) that
  // admits a unique completion to a maximal chain.
  std::vector<std::vector<std::string>> boundary_chains;
  std::size_t max_completions = 0;  // the census maximum |Y|; must be <= 2
};
BoundaryReport boundary_covectors(const SignSystem& s);

RankedPoset tope_poset(const SignSystem& s, const SignVector& base);

// Quotient of a poset by a rank-preserving action, given as the orbit id of
// every element. Fails loudly if the orbit relation is not a partial order.
RankedPoset quotient_poset(const RankedPoset& p, const std::vector<std::size_t>& orbit_of);

std::string poset_to_dot(const RankedPoset& p);

}  // namespace omkit
