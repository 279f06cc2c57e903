#pragma once

#include "omkit/sign_system.hpp"

namespace omkit {

enum class OrderType { finite01, halfline0star, line2star };

std::string order_type_name(OrderType t);

struct ParallelClass {
  std::vector<std::size_t> members;  // totally ordered by the betweenness order
  OrderType order_type = OrderType::finite01;
  bool orientation_normalized = false;
};

// No covector vanishes on both e and f.
bool is_parallel(const SignSystem& s, std::size_t e, std::size_t f);

// Partition of the ground set into parallelism classes, each totally ordered.
// Requires a simple system. Direction of each order is fixed by choosing the
// lexicographically smaller of the two opposite member-name sequences.
std::vector<ParallelClass> parallel_classes(const SignSystem& s);

// The common sign X(e) over all covectors X with X(f) = 0.
Sign sigma(const SignSystem& s, std::size_t f, std::size_t e);

// b lies between a and c (all in one parallelism class).
bool between(const SignSystem& s, std::size_t a, std::size_t b, std::size_t c);

// Tags order types from a periodicity predicate on elements: a class with any
// periodic member has the order type of Z.
void tag_order_types(std::vector<ParallelClass>& classes,
                     const std::function<bool(std::size_t)>& element_is_periodic);

// Reorientation (over the full ground set, identity off the class) that makes
// sigma_y(x) = + exactly when x precedes y in the class order.
std::vector<int> canonical_class_reorientation(const SignSystem& s, const ParallelClass& pi);

struct SeparatingElement {
  // Index into pi.members; == members.size() means every member carries "+"
  // and the separating element lies beyond the window.
  std::size_t position;
  Sign sign_at_delta;               // 0 or -, meaningful when position < size
  std::vector<int> reorientation;   // the canonical reorientation applied
};

// The unique delta with e < delta => X(e) = +, e > delta => X(e) = -, and
// X(delta) in {0,-}, evaluated after the canonical class reorientation.
SeparatingElement separating_element(const SignSystem& s, const SignVector& x,
                                     const ParallelClass& pi);

}  // namespace omkit
