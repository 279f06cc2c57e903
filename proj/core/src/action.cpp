#include "omkit/action.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "omkit/linalg.hpp"
#include "omkit/lp.hpp"
#include "omkit/parallel.hpp"

namespace omkit {

namespace {

QMatrix lattice_matrix(const std::vector<QVector>& cols, std::size_t dim) {
  QMatrix m(dim, QVector(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = cols[j][i];
  return m;
}

Rational gamma_step(const TranslationAction& t, std::size_t orbit) {
  std::vector<Rational> vals;
  for (const auto& g : t.gamma) vals.push_back(dot(t.source.orbit_reps[orbit].normal, g));
  return rational_gcd(vals);
}

QMatrix inverse(const QMatrix& a) {
  std::size_t n = a.size();
  QMatrix aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? 1 : 0);
  }
  // Gauss-Jordan
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("matrix not invertible");
    std::swap(aug[p], aug[c]);
    Rational inv = aug[c][c];
    for (auto& v : aug[c]) v /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  QMatrix out(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

Integer rational_floor(const Rational& r) {
  Integer q = rat_num(r) / rat_den(r);
  if (r < 0 && Rational(q) != r) q -= 1;
  return q;
}

}  // namespace

void TranslationAction::validate() const {
  source.validate();
  for (const auto& rep : source.orbit_reps)
    if (!rep.periodic)
      throw std::invalid_argument("orbit " + rep.name +
                                  " is not periodic; a translation action cannot preserve it");
  if (gamma.size() != source.dim)
    throw std::invalid_argument("acting lattice must have dim generators");
  QMatrix lam = lattice_matrix(source.lattice, source.dim);
  for (const auto& g : gamma) {
    if (g.size() != source.dim)
      throw std::invalid_argument("acting lattice generator has wrong dimension");
    auto c = solve(lam, g);
    if (!c) throw std::invalid_argument("acting lattice not inside the translation lattice");
    for (std::size_t i = 0; i < source.dim; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < gamma.size(); ++j) acc += lam[i][j] * (*c)[j];
      if (acc != g[i])
        throw std::invalid_argument("acting lattice not inside the translation lattice");
    }
    for (const auto& v : *c)
      if (rat_den(v) != 1)
        throw std::invalid_argument(
            "acting lattice generator is not an integer combination of the lattice");
  }
  if (rank(lattice_matrix(gamma, source.dim)) != source.dim)
    throw std::invalid_argument("acting lattice is not full rank");
}

Integer k_map(const TranslationAction& t, std::size_t orbit, const QVector& g) {
  if (!t.source.orbit_reps[orbit].periodic)
    throw std::invalid_argument("k_map: orbit is not translation-covered");
  Rational step = orbit_step(t.source, orbit);
  Rational shift = dot(t.source.orbit_reps[orbit].normal, g) / step;
  if (rat_den(shift) != 1) throw std::runtime_error("k_map: non-integer shift");
  return rat_num(shift);
}

ActionCertificate certify_action(const TranslationAction& t, std::size_t domains) {
  t.validate();
  ActionCertificate cert;
  std::size_t d = t.source.dim;

  // bounding box of the gamma-parallelepiped [-1, domains]^d
  Window w;
  w.lo.assign(d, Rational(0));
  w.hi.assign(d, Rational(0));
  for (std::size_t corner = 0; corner < (1u << d); ++corner) {
    QVector x(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
      Rational s = ((corner >> j) & 1u) ? Rational(domains) : Rational(-1);
      for (std::size_t i = 0; i < d; ++i) x[i] += s * t.gamma[j][i];
    }
    for (std::size_t i = 0; i < d; ++i) {
      w.lo[i] = std::min(w.lo[i], x[i]);
      w.hi[i] = std::max(w.hi[i], x[i]);
    }
  }
  auto rw = window_restrict(t.source, w);

  // window must see enough translates of every orbit
  for (std::size_t o = 0; o < t.source.orbit_reps.size(); ++o) {
    Integer maxshift = 0;
    for (const auto& g : t.gamma) {
      Integer k = k_map(t, o, g);
      if (k < 0) k = -k;
      maxshift = std::max(maxshift, k);
    }
    std::size_t present = 0;
    for (const auto& prov : rw.provenance)
      if (prov.orbit == o) ++present;
    if (Integer(present) < 2 * maxshift + 1)
      throw std::invalid_argument("certify_action: window too small for orbit " +
                                  t.source.orbit_reps[o].name);
  }

  auto realization = covectors(rw.arrangement);
  const auto& sys = realization.system;

  // sliding: each generator maps every window element into its parallelism class
  cert.sliding = true;
  std::map<std::pair<std::size_t, Integer>, std::size_t> by_key;
  for (std::size_t h = 0; h < rw.provenance.size(); ++h)
    by_key[{rw.provenance[h].orbit, rw.provenance[h].step}] = h;
  for (std::size_t h = 0; h < rw.provenance.size() && cert.sliding; ++h) {
    for (const auto& g : t.gamma) {
      Integer k2 = rw.provenance[h].step + k_map(t, rw.provenance[h].orbit, g);
      auto it = by_key.find({rw.provenance[h].orbit, k2});
      if (it == by_key.end()) continue;  // translate fell outside the window
      if (it->second == h) continue;
      if (!is_parallel(sys, h, it->second)) {
        cert.sliding = false;
        cert.detail = "translate of " + rw.arrangement.hyperplanes[h].name +
                      " is not parallel to it";
        break;
      }
    }
  }

  // translativity: {e, g(e)} central implies g(e) = e; for translations this is
  // exactly the parallelism just verified
  cert.translative = cert.sliding;

  // freeness on covectors: the orbit normals must span the ambient space,
  // otherwise translation along the common kernel fixes every covector
  QMatrix normals;
  for (const auto& rep : t.source.orbit_reps) normals.push_back(rep.normal);
  if (rank(normals) == d) {
    cert.free_on_covectors = true;
  } else {
    cert.free_on_covectors = false;
    cert.detail = "orbit normals do not span; the action has global stabilizers";
  }
  return cert;
}

GSemimatroidTable gsemimatroid_table(const TranslationAction& t) {
  t.validate();
  GSemimatroidTable table;
  std::size_t norbits = t.source.orbit_reps.size();

  for (std::size_t o = 0; o < norbits; ++o) {
    Rational gl = orbit_step(t.source, o);
    Rational gg = gamma_step(t, o);
    Rational q = gg / gl;
    if (rat_den(q) != 1)
      throw std::runtime_error("gsemimatroid_table: suborbit count is not integral");
    Integer qq = rat_num(q);
    for (Integer r = 0; r < qq; ++r) {
      GroundOrbit go;
      go.orbit = o;
      go.residue = r;
      go.residues = qq;
      go.label = t.source.orbit_reps[o].name + (qq == 1 ? "" : "#" + r.str());
      table.ground.push_back(std::move(go));
    }
  }

  QMatrix all_normals;
  for (const auto& rep : t.source.orbit_reps) all_normals.push_back(rep.normal);
  table.global_rank = static_cast<int>(rank(all_normals));

  std::size_t ng = table.ground.size();
  if (ng > 16) throw std::invalid_argument("gsemimatroid_table limited to 16 ground orbits");
  for (std::uint64_t sel = 0; sel < (1ull << ng); ++sel) {
    GSemimatroidRow row;
    for (std::size_t i = 0; i < ng; ++i)
      if ((sel >> i) & 1u) row.orbit_ids.push_back(i);
    std::size_t k = row.orbit_ids.size();
    if (k == 0) {
      row.m = 1;
      row.rk = 0;
      table.rows.push_back(std::move(row));
      continue;
    }
    QMatrix n;
    std::vector<Rational> gl(k), gg(k), base(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& go = table.ground[row.orbit_ids[i]];
      const auto& rep = t.source.orbit_reps[go.orbit];
      n.push_back(rep.normal);
      gl[i] = orbit_step(t.source, go.orbit);
      gg[i] = gamma_step(t, go.orbit);
      base[i] = rep.offset + Rational(go.residue) * gl[i];
    }
    row.rk = static_cast<int>(rank(n));

    // consistency of the common-intersection system over the suborbit lattices
    QMatrix relations = left_nullspace(n);
    ZMatrix rel_int;
    ZVector rhs_int;
    bool infeasible = false;
    for (const auto& lam : relations) {
      QVector coeffs(k);
      Rational c = 0;
      for (std::size_t i = 0; i < k; ++i) {
        coeffs[i] = lam[i] * gg[i];
        c -= lam[i] * base[i];
      }
      Integer l = 1;
      for (const auto& v : coeffs) l = l / gcd(l, rat_den(v)) * rat_den(v);
      l = l / gcd(l, rat_den(c)) * rat_den(c);
      ZVector zrow(k);
      for (std::size_t i = 0; i < k; ++i) zrow[i] = rat_num(coeffs[i]) * (l / rat_den(coeffs[i]));
      rel_int.push_back(std::move(zrow));
      rhs_int.push_back(rat_num(c) * (l / rat_den(c)));
    }
    if (!rel_int.empty() && !solve_integer(rel_int, rhs_int)) infeasible = true;
    if (infeasible) continue;  // m = 0: row omitted

    ZMatrix m_basis;
    if (rel_int.empty()) {
      for (std::size_t i = 0; i < k; ++i) {
        ZVector e(k, 0);
        e[i] = 1;
        m_basis.push_back(std::move(e));
      }
    } else {
      m_basis = integer_kernel(rel_int);
    }
    ZMatrix k_basis;
    for (const auto& g : t.gamma) {
      ZVector kv(k);
      for (std::size_t i = 0; i < k; ++i) {
        Rational s = dot(n[i], g) / gg[i];
        if (rat_den(s) != 1) throw std::runtime_error("orbit shift is not integral");
        kv[i] = rat_num(s);
      }
      k_basis.push_back(std::move(kv));
    }
    auto idx = lattice_index(row_hnf(m_basis), row_hnf(k_basis));
    if (!idx || *idx == 0)
      throw std::runtime_error("gsemimatroid_table: orbit count is not finite");
    row.m = *idx;
    table.rows.push_back(std::move(row));
  }
  return table;
}

BivariatePolynomial tutte_polynomial(const GSemimatroidTable& table) {
  BivariatePolynomial x1 = BivariatePolynomial::monomial(1, 0) - BivariatePolynomial::constant(1);
  BivariatePolynomial y1 = BivariatePolynomial::monomial(0, 1) - BivariatePolynomial::constant(1);
  BivariatePolynomial acc;
  for (const auto& row : table.rows) {
    BivariatePolynomial term = BivariatePolynomial::constant(row.m);
    term = term * x1.pow(static_cast<unsigned>(table.global_rank - row.rk));
    term = term * y1.pow(static_cast<unsigned>(row.orbit_ids.size() - row.rk));
    acc = acc + term;
  }
  return acc;
}

BivariatePolynomial arithmetic_tutte_from_matrix(const ZMatrix& n) {
  if (n.empty()) return BivariatePolynomial::constant(1);
  std::size_t d = n.size(), k = n[0].size();
  if (k > 16) throw std::invalid_argument("arithmetic Tutte limited to 16 columns");
  auto col_rank = [&](const std::vector<std::size_t>& cols) {
    QMatrix m;
    for (auto c : cols) {
      QVector v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = Rational(n[i][c]);
      m.push_back(std::move(v));
    }
    return rank(m);
  };
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  std::size_t rk_all = col_rank(all);

  // gcd of all r x r minors of the chosen column submatrix
  auto multiplicity = [&](const std::vector<std::size_t>& cols, std::size_t r) -> Integer {
    if (r == 0) return 1;
    Integer g = 0;
    std::vector<std::size_t> rowsel(r), colsel(r);
    std::function<void(std::size_t, std::size_t)> rows_loop = [&](std::size_t start,
                                                                  std::size_t depth) {
      if (depth == r) {
        std::function<void(std::size_t, std::size_t)> cols_loop = [&](std::size_t cstart,
                                                                      std::size_t cdepth) {
          if (cdepth == r) {
            // determinant of the r x r minor, integer Gaussian via rationals
            QMatrix mm(r, QVector(r));
            for (std::size_t i = 0; i < r; ++i)
              for (std::size_t j = 0; j < r; ++j)
                mm[i][j] = Rational(n[rowsel[i]][cols[colsel[j]]]);
            Rational det = 1;
            for (std::size_t c = 0; c < r && det != 0; ++c) {
              std::size_t p = c;
              while (p < r && mm[p][c] == 0) ++p;
              if (p == r) {
                det = 0;
                break;
              }
              if (p != c) {
                std::swap(mm[p], mm[c]);
                det = -det;
              }
              det *= mm[c][c];
              for (std::size_t i = c + 1; i < r; ++i) {
                if (mm[i][c] == 0) continue;
                Rational f = mm[i][c] / mm[c][c];
                for (std::size_t j = c; j < r; ++j) mm[i][j] -= f * mm[c][j];
              }
            }
            Integer dd = rat_num(det);
            if (dd < 0) dd = -dd;
            g = gcd(g, dd);
            return;
          }
          for (std::size_t c = cstart; c < cols.size(); ++c) {
            colsel[cdepth] = c;
            cols_loop(c + 1, cdepth + 1);
          }
        };
        cols_loop(0, 0);
        return;
      }
      for (std::size_t i = start; i < d; ++i) {
        rowsel[depth] = i;
        rows_loop(i + 1, depth + 1);
      }
    };
    rows_loop(0, 0);
    return g;
  };

  BivariatePolynomial x1 = BivariatePolynomial::monomial(1, 0) - BivariatePolynomial::constant(1);
  BivariatePolynomial y1 = BivariatePolynomial::monomial(0, 1) - BivariatePolynomial::constant(1);
  BivariatePolynomial acc;
  for (std::uint64_t sel = 0; sel < (1ull << k); ++sel) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < k; ++i)
      if ((sel >> i) & 1u) cols.push_back(i);
    std::size_t r = col_rank(cols);
    Integer m = multiplicity(cols, r);
    BivariatePolynomial term = BivariatePolynomial::constant(m);
    term = term * x1.pow(static_cast<unsigned>(rk_all - r));
    term = term * y1.pow(static_cast<unsigned>(cols.size() - r));
    acc = acc + term;
  }
  return acc;
}

namespace {

struct TrustedCell {
  std::size_t index;          // into the window realization
  std::size_t dim;            // cell dimension
  QVector barycenter;
  std::vector<std::size_t> zero_elements;
};

struct CensusData {
  RealizedWindow rw;
  Realization realization;
  std::vector<TrustedCell> cells;  // cells meeting the fundamental domain
  std::size_t padding = 1;
};

CensusData census_window(const TranslationAction& t) {
  t.validate();
  std::size_t d = t.source.dim;
  QMatrix gmat = lattice_matrix(t.gamma, d);
  QMatrix ginv = inverse(gmat);

  for (std::size_t pad = 1; pad <= 8; pad *= 2) {
    // bounding box of the gamma-parallelepiped [-pad, 1+pad]^d
    Window w;
    w.lo.assign(d, Rational(0));
    w.hi.assign(d, Rational(0));
    for (std::size_t corner = 0; corner < (1u << d); ++corner) {
      QVector x(d, 0);
      for (std::size_t j = 0; j < d; ++j) {
        Rational s = ((corner >> j) & 1u) ? Rational(1 + static_cast<long>(pad))
                                          : Rational(-static_cast<long>(pad));
        for (std::size_t i = 0; i < d; ++i) x[i] += s * t.gamma[j][i];
      }
      for (std::size_t i = 0; i < d; ++i) {
        w.lo[i] = std::min(w.lo[i], x[i]);
        w.hi[i] = std::max(w.hi[i], x[i]);
      }
    }

    CensusData data;
    data.padding = pad;
    data.rw = window_restrict(t.source, w);
    data.realization = covectors(data.rw.arrangement);
    const auto& sys = data.realization.system;
    const auto& arr = data.rw.arrangement;

    // vertex coordinates, by zero-set rank
    std::vector<std::optional<QVector>> vertex_point(sys.size());
    std::vector<std::size_t> cell_dim(sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i) {
      QMatrix zn;
      QVector zb;
      for (auto e : sys[i].zero_set()) {
        zn.push_back(arr.hyperplanes[e].normal);
        zb.push_back(arr.hyperplanes[e].offset);
      }
      std::size_t zrank = zn.empty() ? 0 : rank(zn);
      cell_dim[i] = d - zrank;
      if (cell_dim[i] == 0) vertex_point[i] = solve(zn, zb);
    }

    bool retry = false;
    for (std::size_t i = 0; i < sys.size() && !retry; ++i) {
      // does the (relatively open) cell meet the closed fundamental domain?
      std::vector<LinearConstraint> cs;
      for (std::size_t e = 0; e < arr.hyperplanes.size(); ++e) {
        const auto& h = arr.hyperplanes[e];
        switch (sys[i].at(e)) {
          case Sign::zero: cs.push_back(LinearConstraint::equal(h.normal, h.offset)); break;
          case Sign::plus: cs.push_back(LinearConstraint::greater(h.normal, h.offset)); break;
          case Sign::minus: {
            QVector neg(d);
            for (std::size_t q = 0; q < d; ++q) neg[q] = -h.normal[q];
            cs.push_back(LinearConstraint::greater(neg, -h.offset));
            break;
          }
        }
      }
      for (std::size_t r = 0; r < d; ++r) {
        // 0 <= (G^-1 x)_r <= 1
        QVector rowp = ginv[r];
        cs.push_back(LinearConstraint::at_least(rowp, 0));
        QVector rown(d);
        for (std::size_t q = 0; q < d; ++q) rown[q] = -ginv[r][q];
        cs.push_back(LinearConstraint::at_least(rown, -1));
      }
      if (!feasible_point(cs, d)) continue;

      // trusted = bounded with every vertex strictly inside the window
      std::vector<LinearConstraint> rec;
      for (std::size_t e = 0; e < arr.hyperplanes.size(); ++e) {
        const auto& h = arr.hyperplanes[e];
        switch (sys[i].at(e)) {
          case Sign::zero: rec.push_back(LinearConstraint::equal(h.normal, 0)); break;
          case Sign::plus: rec.push_back(LinearConstraint::at_least(h.normal, 0)); break;
          case Sign::minus: {
            QVector neg(d);
            for (std::size_t q = 0; q < d; ++q) neg[q] = -h.normal[q];
            rec.push_back(LinearConstraint::at_least(neg, 0));
            break;
          }
        }
      }
      bool unbounded = false;
      for (std::size_t r = 0; r < d && !unbounded; ++r) {
        for (int dir : {1, -1}) {
          auto rc = rec;
          QVector e(d, 0);
          e[r] = Rational(dir);
          rc.push_back(LinearConstraint::greater(e, 0));
          if (feasible_point(rc, d)) {
            unbounded = true;
            break;
          }
        }
      }
      if (unbounded) {
        retry = true;
        break;
      }

      TrustedCell cell;
      cell.index = i;
      cell.dim = cell_dim[i];
      cell.zero_elements = sys[i].zero_set();
      QVector bary(d, 0);
      std::size_t nv = 0;
      for (std::size_t v = 0; v < sys.size(); ++v) {
        if (cell_dim[v] != 0 || !natural_leq(sys[v], sys[i])) continue;
        if (!vertex_point[v]) {
          retry = true;
          break;
        }
        for (std::size_t q = 0; q < d; ++q) bary[q] += (*vertex_point[v])[q];
        ++nv;
        // vertex must be strictly inside the window box
        for (std::size_t q = 0; q < d; ++q)
          if (!((*vertex_point[v])[q] > w.lo[q] && (*vertex_point[v])[q] < w.hi[q])) {
            retry = true;
            break;
          }
        if (retry) break;
      }
      if (retry || nv == 0) {
        retry = true;
        break;
      }
      for (std::size_t q = 0; q < d; ++q) bary[q] /= Rational(nv);
      cell.barycenter = std::move(bary);
      data.cells.push_back(std::move(cell));
    }
    if (!retry) return data;
  }
  throw std::runtime_error("toric census: padding retries exhausted");
}

std::string reduced_point_key(const QMatrix& ginv, const QVector& x) {
  std::string key;
  for (std::size_t r = 0; r < ginv.size(); ++r) {
    Rational s = dot(ginv[r], x);
    s -= Rational(rational_floor(s));
    key += to_string(s) + ";";
  }
  return key;
}

}  // namespace

ToricCensus toric_face_census(const TranslationAction& t) {
  auto data = census_window(t);
  std::size_t d = t.source.dim;
  QMatrix ginv = inverse(lattice_matrix(t.gamma, d));
  ToricCensus census;
  census.padding_used = data.padding;
  census.counts_by_rank.assign(d + 1, 0);
  std::vector<std::set<std::string>> keys(d + 1);
  for (const auto& cell : data.cells)
    keys[cell.dim].insert(reduced_point_key(ginv, cell.barycenter));
  for (std::size_t k = 0; k <= d; ++k) census.counts_by_rank[k] = keys[k].size();
  census.chambers = census.counts_by_rank[d];
  return census;
}

std::size_t toric_chamber_count(const TranslationAction& t) {
  return toric_face_census(t).chambers;
}

RankedPoset quotient_flats(const TranslationAction& t) {
  auto data = census_window(t);
  std::size_t norbits = t.source.orbit_reps.size();

  // K lattice rows: shift of every orbit's step index per generator
  ZMatrix kfull;
  for (const auto& g : t.gamma) {
    ZVector row(norbits);
    for (std::size_t o = 0; o < norbits; ++o) row[o] = k_map(t, o, g);
    kfull.push_back(std::move(row));
  }

  // canonical orbit key of a flat, as (orbit, reduced step) pairs
  struct Flat {
    std::vector<std::pair<std::size_t, Integer>> elems;  // (orbit, step), orbit-sorted
    int rk = 0;
  };
  auto canonicalize = [&](const std::vector<std::size_t>& zero_elements) {
    Flat f;
    for (auto e : zero_elements)
      f.elems.emplace_back(data.rw.provenance[e].orbit, data.rw.provenance[e].step);
    std::sort(f.elems.begin(), f.elems.end());
    // reduce the step vector modulo the K-lattice restricted to these orbits
    ZMatrix krows;
    for (const auto& grow : kfull) {
      ZVector row;
      for (const auto& [o, s] : f.elems) row.push_back(grow[o]);
      krows.push_back(std::move(row));
    }
    ZVector steps;
    for (const auto& [o, s] : f.elems) steps.push_back(s);
    ZVector reduced = canonical_coset_rep(steps, row_hnf(krows));
    for (std::size_t i = 0; i < f.elems.size(); ++i) f.elems[i].second = reduced[i];
    QMatrix n;
    for (const auto& [o, s] : f.elems) n.push_back(t.source.orbit_reps[o].normal);
    f.rk = n.empty() ? 0 : static_cast<int>(rank(n));
    return f;
  };

  std::map<std::vector<std::pair<std::size_t, Integer>>, Flat> flats;
  for (const auto& cell : data.cells) {
    Flat f = canonicalize(cell.zero_elements);
    flats.emplace(f.elems, f);
  }
  std::vector<Flat> flat_list;
  for (auto& [k, f] : flats) flat_list.push_back(f);
  std::sort(flat_list.begin(), flat_list.end(), [](const Flat& a, const Flat& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });

  // GA <= GB iff A is contained in some gamma-shift of B
  auto orbit_leq = [&](const Flat& a, const Flat& b) {
    if (a.elems.size() > b.elems.size()) return false;
    // map each orbit in a to b's entry of the same orbit
    ZMatrix eqs;   // columns: gamma coefficients; rows: per-orbit conditions
    ZVector rhs;
    for (const auto& [o, sa] : a.elems) {
      auto it = std::find_if(b.elems.begin(), b.elems.end(),
                             [&](const auto& pr) { return pr.first == o; });
      if (it == b.elems.end()) return false;
      ZVector row;
      for (const auto& grow : kfull) row.push_back(grow[o]);
      eqs.push_back(std::move(row));
      rhs.push_back(sa - it->second);
    }
    return solve_integer(eqs, rhs).has_value();
  };

  std::vector<std::string> labels;
  for (const auto& f : flat_list) {
    std::string l;
    for (const auto& [o, s] : f.elems) {
      if (!l.empty()) l += ",";
      l += t.source.orbit_reps[o].name + "@" + s.str();
    }
    labels.push_back(l.empty() ? "{}" : l);
  }
  return RankedPoset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    return orbit_leq(flat_list[a], flat_list[b]);
  });
}

ThmTcReport verify_thm_tc(const TranslationAction& t) {
  ThmTcReport rep;
  rep.chi = characteristic_polynomial(quotient_flats(t));
  auto table = gsemimatroid_table(t);
  auto tutte = tutte_polynomial(table);
  BivariatePolynomial one_minus_t =
      BivariatePolynomial::constant(1) - BivariatePolynomial::monomial(1, 0);
  BivariatePolynomial rhs = tutte.substitute(one_minus_t, BivariatePolynomial());
  if (table.global_rank % 2 != 0)
    rhs = BivariatePolynomial::constant(-1) * rhs;
  rep.rhs = rhs;
  rep.holds = rep.chi == rep.rhs;
  return rep;
}

}  // namespace omkit
