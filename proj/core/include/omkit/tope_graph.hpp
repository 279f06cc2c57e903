#pragma once

#include "omkit/sign_system.hpp"

namespace omkit {

std::vector<SignVector> topes(const SignSystem& s);

// Topes as vertices; edges between topes with a one-element separator.
struct TopeGraph {
  std::vector<SignVector> vertices;
  std::vector<std::vector<std::size_t>> adj;

  std::optional<std::size_t> index_of(const SignVector& t) const;
};

TopeGraph tope_graph(const SignSystem& s);

// BFS distance; SIZE_MAX when disconnected.
std::size_t graph_distance(const TopeGraph& g, std::size_t a, std::size_t b);
std::vector<std::size_t> bfs_distances(const TopeGraph& g, std::size_t from);

// X_B of Remark on convex hulls: 0 on pairwise separators, the common
// composition sign elsewhere.
SignVector convex_hull_vector(const std::vector<SignVector>& b);

// { topes T : T >= X }.
std::vector<std::size_t> convex_set(const TopeGraph& g, const SignVector& x);

// Interval-closure convexity oracle: repeatedly add vertices on shortest
// paths until a fixpoint. Returns sorted vertex indices.
std::vector<std::size_t> convex_hull_by_interval_closure(const TopeGraph& g,
                                                         std::vector<std::size_t> seed);

// C_i = hull of the radius-i ball around base, for i = 0..k.
std::vector<std::vector<std::size_t>> convex_ball_sequence(const TopeGraph& g, std::size_t base,
                                                           std::size_t k);

std::string tope_graph_to_dot(const TopeGraph& g);

}  // namespace omkit
