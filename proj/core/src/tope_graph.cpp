#include "omkit/tope_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "omkit/minors.hpp"

namespace omkit {

std::vector<SignVector> topes(const SignSystem& s) {
  if (!is_simple(s)) throw std::invalid_argument("topes: system is not simple");
  std::vector<SignVector> out;
  for (const auto& v : s)
    if (v.support_size() == v.size()) out.push_back(v);
  return out;
}

std::optional<std::size_t> TopeGraph::index_of(const SignVector& t) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == t) return i;
  return std::nullopt;
}

TopeGraph tope_graph(const SignSystem& s) {
  TopeGraph g;
  g.vertices = topes(s);
  if (g.vertices.empty()) throw std::invalid_argument("tope_graph: system has no topes");
  g.adj.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (separator_size(g.vertices[i], g.vertices[j]) == 1) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
  return g;
}

std::vector<std::size_t> bfs_distances(const TopeGraph& g, std::size_t from) {
  std::vector<std::size_t> dist(g.vertices.size(), SIZE_MAX);
  std::deque<std::size_t> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    for (auto w : g.adj[v])
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

std::size_t graph_distance(const TopeGraph& g, std::size_t a, std::size_t b) {
  return bfs_distances(g, a)[b];
}

SignVector convex_hull_vector(const std::vector<SignVector>& b) {
  if (b.empty()) throw std::invalid_argument("convex_hull_vector: empty tope set");
  SignVector acc = b[0];
  for (const auto& t : b) acc = compose(acc, t);  // common sign where no separator
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      for (auto e : separator(b[i], b[j])) acc.set(e, Sign::zero);
  return acc;
}

std::vector<std::size_t> convex_set(const TopeGraph& g, const SignVector& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (natural_leq(x, g.vertices[i])) out.push_back(i);
  return out;
}

std::vector<std::size_t> convex_hull_by_interval_closure(const TopeGraph& g,
                                                         std::vector<std::size_t> seed) {
  std::set<std::size_t> hull(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> members(hull.begin(), hull.end());
    for (auto a : members) {
      auto da = bfs_distances(g, a);
      for (auto b : members) {
        if (a >= b) continue;
        auto db = bfs_distances(g, b);
        for (std::size_t z = 0; z < g.vertices.size(); ++z) {
          if (hull.count(z)) continue;
          if (da[z] != SIZE_MAX && db[z] != SIZE_MAX && da[z] + db[z] == da[b])
            if (hull.insert(z).second) grew = true;
        }
      }
    }
  }
  return {hull.begin(), hull.end()};
}

std::vector<std::vector<std::size_t>> convex_ball_sequence(const TopeGraph& g, std::size_t base,
                                                           std::size_t k) {
  auto dist = bfs_distances(g, base);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i <= k; ++i) {
    std::vector<SignVector> ball;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      if (dist[v] <= i) ball.push_back(g.vertices[v]);
    out.push_back(convex_set(g, convex_hull_vector(ball)));
  }
  return out;
}

std::string tope_graph_to_dot(const TopeGraph& g) {
  std::ostringstream os;
  os << "graph topes {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << "  n" << i << " [label=\"" << g.vertices[i].to_string() << "\"];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (auto j : g.adj[i])
      if (i < j) os << "  n" << i << " -- n" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace omkit
