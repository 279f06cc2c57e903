#include "omkit/lp.hpp"

#include <algorithm>
#include <map>

namespace omkit {

namespace {

// <coeffs, t> >= rhs, possibly strict.
struct Row {
  QVector c;
  Rational rhs;
  bool strict;
};

void normalize(Row& r) {
  Rational scale = 0;
  for (const auto& v : r.c)
    if (v != 0) {
      scale = v < 0 ? -v : v;
      break;
    }
  if (scale == 0) return;
  for (auto& v : r.c) v /= scale;
  r.rhs /= scale;
}

// Drops duplicate rows, keeping the tighter right-hand side.
void dedupe(std::vector<Row>& rows) {
  std::map<QVector, std::pair<Rational, bool>> best;
  for (auto& r : rows) {
    normalize(r);
    auto it = best.find(r.c);
    if (it == best.end()) {
      best.emplace(r.c, std::make_pair(r.rhs, r.strict));
    } else {
      auto& [rhs, strict] = it->second;
      if (r.rhs > rhs || (r.rhs == rhs && r.strict))
        it->second = {r.rhs, r.strict || (r.rhs == rhs && strict)};
    }
  }
  rows.clear();
  for (auto& [c, v] : best) rows.push_back(Row{c, v.first, v.second});
}

struct Bounds {
  std::optional<Rational> lo, hi;
  bool lo_strict = false, hi_strict = false;
};

// Value strictly inside (or on the closed ends of) the admissible interval.
std::optional<Rational> pick_value(const Bounds& b) {
  if (b.lo && b.hi) {
    if (*b.lo > *b.hi) return std::nullopt;
    if (*b.lo == *b.hi) {
      if (b.lo_strict || b.hi_strict) return std::nullopt;
      return *b.lo;
    }
    return (*b.lo + *b.hi) / 2;
  }
  if (b.lo) return b.lo_strict ? *b.lo + 1 : *b.lo;
  if (b.hi) return b.hi_strict ? *b.hi - 1 : *b.hi;
  return Rational(0);
}

}  // namespace

std::optional<QVector> feasible_point(const std::vector<LinearConstraint>& constraints,
                                      std::size_t dim) {
  // Split off the equality part and parametrize its solution space.
  QMatrix eq;
  QVector eq_rhs;
  std::vector<Row> ineq;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != dim) throw std::invalid_argument("constraint dimension mismatch");
    if (c.kind == LinearConstraint::Kind::eq) {
      eq.push_back(c.coeffs);
      eq_rhs.push_back(c.rhs);
    } else {
      ineq.push_back(Row{c.coeffs, c.rhs, c.kind == LinearConstraint::Kind::gt});
    }
  }

  QVector origin(dim, 0);
  QMatrix dirs;  // columns of the parametrization, as vectors
  if (!eq.empty()) {
    auto x0 = solve(eq, eq_rhs);
    if (!x0) return std::nullopt;
    // solve() does not verify consistency of dependent rows; check.
    for (std::size_t i = 0; i < eq.size(); ++i)
      if (dot(eq[i], *x0) != eq_rhs[i]) return std::nullopt;
    origin = *x0;
    dirs = nullspace(eq);
  } else {
    for (std::size_t i = 0; i < dim; ++i) {
      QVector e(dim, 0);
      e[i] = 1;
      dirs.push_back(std::move(e));
    }
  }
  std::size_t nt = dirs.size();

  // Inequalities in the t parameters.
  std::vector<Row> rows;
  for (const auto& r : ineq) {
    Row nr;
    nr.c.resize(nt);
    for (std::size_t j = 0; j < nt; ++j) nr.c[j] = dot(r.c, dirs[j]);
    nr.rhs = r.rhs - dot(r.c, origin);
    nr.strict = r.strict;
    bool zero = std::all_of(nr.c.begin(), nr.c.end(), [](const Rational& v) { return v == 0; });
    if (zero) {
      if (nr.rhs > 0 || (nr.rhs == 0 && nr.strict)) return std::nullopt;
      continue;
    }
    rows.push_back(std::move(nr));
  }

  // Fourier-Motzkin, last variable first, keeping each level for back-substitution.
  std::vector<std::vector<Row>> levels(nt + 1);
  levels[nt] = std::move(rows);
  for (std::size_t v = nt; v-- > 0;) {
    dedupe(levels[v + 1]);
    std::vector<Row> next;
    const auto& cur = levels[v + 1];
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i].c[v] > 0) pos.push_back(i);
      else if (cur[i].c[v] < 0) neg.push_back(i);
      else next.push_back(cur[i]);
    }
    for (auto ip : pos) {
      for (auto in : neg) {
        // (a_p, t) >= r_p with a_p[v] > 0 gives lower bound; combine with upper.
        const Row& p = cur[ip];
        const Row& n = cur[in];
        Row comb;
        comb.c.assign(v, Rational(0));
        Rational fp = p.c[v], fn = -n.c[v];
        for (std::size_t j = 0; j < v; ++j) comb.c[j] = n.c[j] * fp + p.c[j] * fn;
        comb.rhs = n.rhs * fp + p.rhs * fn;
        comb.strict = p.strict || n.strict;
        bool zero =
            std::all_of(comb.c.begin(), comb.c.end(), [](const Rational& x) { return x == 0; });
        if (zero) {
          if (comb.rhs > 0 || (comb.rhs == 0 && comb.strict)) return std::nullopt;
        } else {
          next.push_back(std::move(comb));
        }
      }
    }
    for (auto& r : next) r.c.resize(v);
    levels[v] = std::move(next);
  }

  // Back-substitute a witness.
  QVector t(nt, 0);
  for (std::size_t v = 0; v < nt; ++v) {
    Bounds b;
    for (const auto& r : levels[v + 1]) {
      if (r.c[v] == 0) continue;
      Rational rest = r.rhs;
      for (std::size_t j = 0; j < v; ++j) rest -= r.c[j] * t[j];
      Rational bound = rest / r.c[v];
      if (r.c[v] > 0) {
        if (!b.lo || bound > *b.lo) {
          b.lo = bound;
          b.lo_strict = r.strict;
        } else if (bound == *b.lo && r.strict) {
          b.lo_strict = true;
        }
      } else {
        if (!b.hi || bound < *b.hi) {
          b.hi = bound;
          b.hi_strict = r.strict;
        } else if (bound == *b.hi && r.strict) {
          b.hi_strict = true;
        }
      }
    }
    auto val = pick_value(b);
    if (!val) return std::nullopt;  // cannot happen if FM concluded feasibility
    t[v] = *val;
  }

  QVector x = origin;
  for (std::size_t j = 0; j < nt; ++j)
    for (std::size_t i = 0; i < dim; ++i) x[i] += dirs[j][i] * t[j];
  return x;
}

}  // namespace omkit
