#pragma once

#include "omkit/parallel.hpp"
#include "omkit/poset.hpp"
#include "omkit/realize.hpp"

namespace omkit {

// Coordinates of an index point: one half-integer per basis class, stored
// doubled (even = integer, odd = proper half-integer).
using IndexPoint = std::vector<long long>;

std::string index_point_to_string(const IndexPoint& i);

// One parallelism class of the frame, with its window members in class order
// and the j values anchored at the @0 translate of the class's first orbit.
struct FrameClass {
  std::vector<std::size_t> members;  // indices into the frame ground set
  std::vector<long long> j;          // j_pi per member, consecutive integers
};

// The realized window of a periodic source restricted to the parallelism
// classes of a basis, reoriented canonically.
struct BasisFrame {
  RealizedWindow window;
  SignSystem full_system;        // covectors of the whole window arrangement
  Realization full_realization;
  SignSystem frame_system;       // restriction to the frame, canonical orientation
  std::vector<int> reorientation;  // applied to the restriction, per frame element
  std::vector<FrameClass> classes;
  GroundSet frame_ground;
};

// basis_orbits: one orbit name per intended basis class; each must be periodic
// (order type of Z) and their normals must be linearly independent of rank
// equal to the arrangement's rank.
BasisFrame build_frame(const PeriodicArrangement& p, const Window& w,
                       const std::vector<std::string>& basis_orbits);

SignVector x_of_index(const BasisFrame& f, const IndexPoint& i);
IndexPoint index_of_covector(const BasisFrame& f, const SignVector& x);

// Componentwise order: p <= q iff p = q, or p is an integer adjacent to the
// proper half-integer q.
bool index_leq(const IndexPoint& a, const IndexPoint& b);

struct IndexPosetResult {
  RankedPoset poset;
  std::vector<IndexPoint> points;  // window-interior index points
};
IndexPosetResult index_poset(const BasisFrame& f);

struct FrameIsomorphismReport {
  bool holds = false;
  std::string failure;
  // certificate: index point <-> covector string over the frame ground
  std::vector<std::pair<std::string, std::string>> table;
};
FrameIsomorphismReport check_frame_isomorphism(const BasisFrame& f);

// Whether an index point's cell closure lies inside the window coverage.
bool index_point_interior(const BasisFrame& f, const IndexPoint& i);

struct FiberReport {
  std::vector<SignVector> fiber;  // covectors of the full window system
  int ideal_length = 0;           // length of the lower ideal below the fiber
  int rank_of_y = 0;              // rank of y in the frame covector poset
};
FiberReport frame_fibers(const BasisFrame& f, const SignVector& y);

}  // namespace omkit
