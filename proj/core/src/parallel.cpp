#include "omkit/parallel.hpp"

#include <algorithm>

#include "omkit/minors.hpp"

namespace omkit {

std::string order_type_name(OrderType t) {
  switch (t) {
    case OrderType::finite01: return "finite01";
    case OrderType::halfline0star: return "halfline0star";
    case OrderType::line2star: return "line2star";
  }
  return "?";
}

bool is_parallel(const SignSystem& s, std::size_t e, std::size_t f) {
  if (e == f) throw std::invalid_argument("is_parallel: elements must be distinct");
  for (const auto& x : s)
    if (x.at(e) == Sign::zero && x.at(f) == Sign::zero) return false;
  return true;
}

Sign sigma(const SignSystem& s, std::size_t f, std::size_t e) {
  Sign common = Sign::zero;
  bool found = false;
  for (const auto& x : s) {
    if (x.at(f) != Sign::zero) continue;
    Sign v = x.at(e);
    if (v == Sign::zero)
      throw std::invalid_argument("sigma: elements are not parallel (common zero found)");
    if (!found) {
      common = v;
      found = true;
    } else if (v != common) {
      throw std::runtime_error("sigma: inconsistent signs, system violates the AOM axioms");
    }
  }
  if (!found) throw std::invalid_argument("sigma: no covector vanishes on the reference element");
  return common;
}

bool between(const SignSystem& s, std::size_t a, std::size_t b, std::size_t c) {
  if (a == b || b == c || a == c)
    throw std::invalid_argument("between: elements must be pairwise distinct");
  if (!is_parallel(s, a, b) || !is_parallel(s, b, c) || !is_parallel(s, a, c))
    throw std::invalid_argument("between: elements are not in one parallelism class");
  return sigma(s, a, b) == -sigma(s, c, b);
}

std::vector<ParallelClass> parallel_classes(const SignSystem& s) {
  if (!is_simple(s)) throw std::invalid_argument("parallel_classes: system is not simple");
  std::size_t n = s.ground().size();
  std::vector<std::vector<bool>> par(n, std::vector<bool>(n, false));
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = e + 1; f < n; ++f) par[e][f] = par[f][e] = is_parallel(s, e, f);

  // connected components; must be cliques in a genuine AOM
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (std::size_t e = 0; e < n; ++e) {
    if (comp[e] >= 0) continue;
    std::vector<std::size_t> stack{e};
    comp[e] = nc;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (par[v][w] && comp[w] < 0) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<ParallelClass> classes(nc);
  for (std::size_t e = 0; e < n; ++e) classes[comp[e]].members.push_back(e);
  for (auto& cl : classes)
    for (std::size_t i = 0; i < cl.members.size(); ++i)
      for (std::size_t j = i + 1; j < cl.members.size(); ++j)
        if (!par[cl.members[i]][cl.members[j]])
          throw std::runtime_error(
              "parallelism is not transitive here; system violates the AOM axioms");

  for (auto& cl : classes) {
    auto& m = cl.members;
    if (m.size() >= 3) {
      std::size_t a = m[0], r = m[1];
      std::vector<std::size_t> same{r}, opposite;
      for (std::size_t k = 2; k < m.size(); ++k) {
        (between(s, m[k], a, r) ? opposite : same).push_back(m[k]);
      }
      auto dist_from_a = [&](std::size_t x) {
        std::size_t d = 0;
        for (auto y : m)
          if (y != a && y != x && between(s, a, y, x)) ++d;
        return d;
      };
      auto by_dist = [&](std::size_t x, std::size_t y) { return dist_from_a(x) < dist_from_a(y); };
      std::sort(same.begin(), same.end(), by_dist);
      std::sort(opposite.begin(), opposite.end(), by_dist);
      std::vector<std::size_t> ordered(opposite.rbegin(), opposite.rend());
      ordered.push_back(a);
      ordered.insert(ordered.end(), same.begin(), same.end());
      m = std::move(ordered);
    }
    // direction: lexicographically smaller of the two opposite name sequences
    auto names = [&](const std::vector<std::size_t>& v) {
      std::vector<std::string> out;
      for (auto i : v) out.push_back(s.ground().name(i));
      return out;
    };
    std::vector<std::size_t> rev(m.rbegin(), m.rend());
    if (names(rev) < names(m)) m = std::move(rev);

    cl.order_type = OrderType::finite01;
    cl.orientation_normalized = true;
    if (m.size() >= 2) {
      for (std::size_t i = 0; i < m.size() && cl.orientation_normalized; ++i)
        for (std::size_t j = i + 1; j < m.size() && cl.orientation_normalized; ++j) {
          try {
            if (sigma(s, m[j], m[i]) != Sign::plus) cl.orientation_normalized = false;
          } catch (const std::invalid_argument&) {
            cl.orientation_normalized = false;  // sigma undefined inside the window
          }
        }
    }
  }
  std::sort(classes.begin(), classes.end(), [](const ParallelClass& a, const ParallelClass& b) {
    return a.members.front() < b.members.front();
  });
  return classes;
}

void tag_order_types(std::vector<ParallelClass>& classes,
                     const std::function<bool(std::size_t)>& element_is_periodic) {
  for (auto& cl : classes) {
    bool periodic = std::any_of(cl.members.begin(), cl.members.end(), element_is_periodic);
    cl.order_type = periodic ? OrderType::line2star : OrderType::finite01;
  }
}

std::vector<int> canonical_class_reorientation(const SignSystem& s, const ParallelClass& pi) {
  std::size_t n = s.ground().size();
  std::vector<int> tau(n, 1);
  const auto& m = pi.members;
  if (m.size() < 2) return tau;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::optional<int> flip;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j == i) continue;
      Sign observed;
      try {
        observed = sigma(s, m[j], m[i]);
      } catch (const std::invalid_argument&) {
        continue;  // no covector vanishes on m[j] inside this window
      }
      Sign desired = i < j ? Sign::plus : Sign::minus;
      int f = observed == desired ? 1 : -1;
      if (!flip) {
        flip = f;
      } else if (*flip != f) {
        throw std::runtime_error(
            "canonical reorientation is inconsistent; system violates the AOM axioms");
      }
    }
    if (!flip)
      throw std::invalid_argument(
          "canonical reorientation undefined: no covector vanishes on any other class member");
    tau[m[i]] = *flip;
  }
  return tau;
}

SeparatingElement separating_element(const SignSystem& s, const SignVector& x,
                                     const ParallelClass& pi) {
  SeparatingElement out;
  out.reorientation = canonical_class_reorientation(s, pi);
  const auto& m = pi.members;
  std::vector<Sign> pattern;
  pattern.reserve(m.size());
  for (auto e : m) {
    Sign v = x.at(e);
    if (out.reorientation[e] == -1) v = -v;
    pattern.push_back(v);
  }
  std::size_t p = 0;
  while (p < pattern.size() && pattern[p] == Sign::plus) ++p;
  for (std::size_t k = p; k < pattern.size(); ++k) {
    if (k == p && pattern[k] == Sign::zero) continue;
    if (pattern[k] != Sign::minus)
      throw std::runtime_error(
          "separating_element: sign pattern is not monotone along the class (non-AOM input)");
  }
  out.position = p;
  out.sign_at_delta = p < pattern.size() ? pattern[p] : Sign::minus;
  return out;
}

}  // namespace omkit
