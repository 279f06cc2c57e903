#include "omkit/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace omkit {

namespace {

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = a[r][c];
    for (auto& v : a[r]) v /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && a[i][c] != 0) {
        Rational f = a[i][c];
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMatrix a) { return rref(a).size(); }

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  if (a.empty()) return QVector{};
  std::size_t cols = a[0].size();
  QMatrix aug = a;
  for (std::size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  QVector x(cols, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == cols) return std::nullopt;  // pivot in augmented column: inconsistent
    x[pivots[k]] = aug[k][cols];
  }
  return x;
}

QMatrix nullspace(const QMatrix& a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  QMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix left_nullspace(const QMatrix& a) {
  if (a.empty()) return {};
  std::size_t rows = a.size(), cols = a[0].size();
  QMatrix t(cols, QVector(rows, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return nullspace(t);
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

Rational rational_gcd(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) l = l / gcd(l, rat_den(v)) * rat_den(v);
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, rat_num(v) * (l / rat_den(v)));
  return Rational(g, l);
}

std::vector<Integer> rational_gcd_bezout(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) l = l / gcd(l, rat_den(v)) * rat_den(v);
  // Scaled integer values; run the incremental extended euclid.
  std::vector<Integer> scaled;
  scaled.reserve(values.size());
  for (const auto& v : values) scaled.push_back(rat_num(v) * (l / rat_den(v)));
  std::vector<Integer> coef(values.size(), 0);
  Integer g = 0;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    if (scaled[i] == 0) continue;
    if (g == 0) {
      g = scaled[i] < 0 ? Integer(-scaled[i]) : scaled[i];
      coef[i] = scaled[i] < 0 ? -1 : 1;
      continue;
    }
    // extended gcd of (g, scaled[i])
    Integer a = g, b = scaled[i];
    Integer x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      Integer q = a / b;
      Integer r = a - q * b;
      a = b;
      b = r;
      Integer nx = x0 - q * x1;
      x0 = x1;
      x1 = nx;
      Integer ny = y0 - q * y1;
      y0 = y1;
      y1 = ny;
    }
    if (a < 0) {
      a = -a;
      x0 = -x0;
      y0 = -y0;
    }
    for (auto& c : coef) c *= x0;
    coef[i] = y0;
    g = a;
  }
  return coef;
}

ZMatrix row_hnf(ZMatrix a) {
  if (a.empty()) return a;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid within column c on rows >= r.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        if (best == rows || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best == rows) break;
      std::swap(a[best], a[r]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Integer q = a[i][c] / a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& v : a[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = a[i][c] / a[r][c];
      if (a[i][c] < 0 && a[i][c] % a[r][c] != 0) q -= 1;  // floor division
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

ZVector canonical_coset_rep(ZVector v, const ZMatrix& hnf) {
  for (const auto& row : hnf) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    Integer q = v[p] / row[p];
    if (v[p] < 0 && v[p] % row[p] != 0) q -= 1;  // floor division
    if (q != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return v;
}

namespace {

// Column HNF with transform: returns (H, U) with H = A * U, U unimodular.
// Columns of H with pivots come first; remaining columns are zero.
struct ColumnHnf {
  ZMatrix h;  // row-major, same shape as a
  ZMatrix u;  // n x n
  std::vector<std::size_t> pivot_rows;
};

ColumnHnf column_hnf(const ZMatrix& a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  ColumnHnf res;
  res.h = a;
  res.u.assign(cols, ZVector(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) res.u[i][i] = 1;
  auto col_at = [&](std::size_t j, std::size_t i) -> Integer& { return res.h[i][j]; };
  auto sub_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) res.h[i][dst] -= q * res.h[i][src];
    for (std::size_t i = 0; i < cols; ++i) res.u[i][dst] -= q * res.u[i][src];
  };
  auto swap_col = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(res.h[i][x], res.h[i][y]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(res.u[i][x], res.u[i][y]);
  };
  auto neg_col = [&](std::size_t x) {
    for (std::size_t i = 0; i < rows; ++i) res.h[i][x] = -res.h[i][x];
    for (std::size_t i = 0; i < cols; ++i) res.u[i][x] = -res.u[i][x];
  };
  std::size_t c = 0;
  for (std::size_t r = 0; r < rows && c < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j) {
        if (col_at(j, r) == 0) continue;
        if (best == cols || abs(col_at(j, r)) < abs(col_at(best, r))) best = j;
      }
      if (best == cols) break;
      swap_col(best, c);
      bool clean = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (col_at(j, r) == 0) continue;
        Integer q = col_at(j, r) / col_at(c, r);
        sub_col(j, c, q);
        if (col_at(j, r) != 0) clean = false;
      }
      if (clean) break;
    }
    if (col_at(c, r) == 0) continue;
    if (col_at(c, r) < 0) neg_col(c);
    res.pivot_rows.push_back(r);
    ++c;
  }
  return res;
}

}  // namespace

std::optional<ZVector> solve_integer(const ZMatrix& a, const ZVector& b) {
  std::size_t rows = a.size();
  if (rows != b.size()) throw std::invalid_argument("solve_integer: dimension mismatch");
  std::size_t cols = rows ? a[0].size() : 0;
  if (cols == 0) {
    for (const auto& v : b)
      if (v != 0) return std::nullopt;
    return ZVector{};
  }
  auto chnf = column_hnf(a);
  ZVector residual = b;
  ZVector y(cols, 0);
  for (std::size_t j = 0; j < chnf.pivot_rows.size(); ++j) {
    std::size_t p = chnf.pivot_rows[j];
    Integer piv = chnf.h[p][j];
    if (residual[p] % piv != 0) return std::nullopt;
    Integer t = residual[p] / piv;
    for (std::size_t i = 0; i < rows; ++i) residual[i] -= t * chnf.h[i][j];
    y[j] = t;
  }
  for (const auto& v : residual)
    if (v != 0) return std::nullopt;
  ZVector x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) x[i] += chnf.u[i][j] * y[j];
  return x;
}

ZMatrix integer_kernel(const ZMatrix& a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  if (cols == 0) return {};
  auto chnf = column_hnf(a);
  ZMatrix basis;
  for (std::size_t j = chnf.pivot_rows.size(); j < cols; ++j) {
    ZVector v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = chnf.u[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Integer> lattice_index(const ZMatrix& m_basis, const ZMatrix& k_basis) {
  if (m_basis.size() != k_basis.size()) return std::nullopt;
  std::size_t s = m_basis.size();
  if (s == 0) return Integer(1);
  std::size_t dim = m_basis[0].size();
  // Express each K vector in M coordinates (rational solve), demand integrality.
  QMatrix mt(dim, QVector(s, 0));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < dim; ++j) mt[j][i] = Rational(m_basis[i][j]);
  QMatrix coords(s, QVector(s, 0));
  for (std::size_t k = 0; k < s; ++k) {
    QVector b(dim);
    for (std::size_t j = 0; j < dim; ++j) b[j] = Rational(k_basis[k][j]);
    auto x = solve(mt, b);
    if (!x) return std::nullopt;
    // verify (solve() ignores extra non-pivot structure mismatches otherwise)
    for (std::size_t j = 0; j < dim; ++j) {
      Rational acc = 0;
      for (std::size_t i = 0; i < s; ++i) acc += mt[j][i] * (*x)[i];
      if (acc != b[j]) return std::nullopt;
    }
    for (std::size_t i = 0; i < s; ++i) {
      if (rat_den((*x)[i]) != 1) return std::nullopt;
      coords[k][i] = (*x)[i];
    }
  }
  // |det(coords)| by fraction-free-ish Gaussian elimination over Q.
  Rational det = 1;
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t p = c;
    while (p < s && coords[p][c] == 0) ++p;
    if (p == s) return Integer(0);  // rank deficient: not finite index
    if (p != c) {
      std::swap(coords[p], coords[c]);
      det = -det;
    }
    det *= coords[c][c];
    for (std::size_t i = c + 1; i < s; ++i) {
      if (coords[i][c] == 0) continue;
      Rational f = coords[i][c] / coords[c][c];
      for (std::size_t j = c; j < s; ++j) coords[i][j] -= f * coords[c][j];
    }
  }
  Integer d = rat_num(det) < 0 ? Integer(-rat_num(det)) : rat_num(det);
  return d;
}

}  // namespace omkit
