#include "omkit/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace omkit {

namespace {

std::vector<std::uint64_t> make_row(std::size_t n) { return std::vector<std::uint64_t>((n + 63) / 64, 0); }
void set_bit(std::vector<std::uint64_t>& row, std::size_t i) { row[i / 64] |= 1ull << (i % 64); }

}  // namespace

RankedPoset RankedPoset::from_relation(
    std::vector<std::string> labels,
    const std::function<bool(std::size_t, std::size_t)>& leq) {
  RankedPoset p;
  p.labels_ = std::move(labels);
  std::size_t n = p.labels_.size();
  p.rel_.assign(n, make_row(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || leq(i, j)) {
        if (i != j && leq(j, i))
          throw std::invalid_argument("relation is not antisymmetric: " + p.labels_[i] + " vs " +
                                      p.labels_[j]);
        set_bit(p.rel_[i], j);
      }
    }
  }
  // transitivity sanity (the callers pass genuine partial orders; quotients verify)
  // covers: j covers i iff i<j and the open interval is empty
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && p.leq(i, k) && p.leq(k, j)) cover = false;
      if (cover) p.covers_.emplace_back(i, j);
    }
  }
  // ranks from minimal elements along cover chains; gradedness verified
  std::vector<std::vector<std::size_t>> up(n), down(n);
  for (auto [a, b] : p.covers_) {
    up[a].push_back(b);
    down[b].push_back(a);
  }
  p.rank_.assign(n, -1);
  p.graded_ = true;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // process in topological order by repeatedly relaxing (n small; simple loop)
  for (std::size_t i = 0; i < n; ++i)
    if (down[i].empty()) {
      p.rank_[i] = 0;
      p.minimals_.push_back(i);
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : p.covers_) {
      if (p.rank_[a] >= 0) {
        int r = p.rank_[a] + 1;
        if (p.rank_[b] < 0) {
          p.rank_[b] = r;
          changed = true;
        } else if (p.rank_[b] != r) {
          p.graded_ = false;
          if (r > p.rank_[b]) {
            p.rank_[b] = r;  // fall back to longest-chain rank
            changed = true;
          }
        }
      }
    }
  }
  p.length_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i].empty()) p.maximals_.push_back(i);
    p.length_ = std::max(p.length_, p.rank_[i]);
  }
  // gradedness additionally requires all maximal elements at top rank
  for (auto m : p.maximals_)
    if (p.rank_[m] != p.length_) p.graded_ = false;
  return p;
}

std::vector<std::size_t> RankedPoset::strictly_below(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (j != i && leq(j, i)) out.push_back(j);
  return out;
}

std::vector<std::size_t> RankedPoset::strictly_above(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (j != i && leq(i, j)) out.push_back(j);
  return out;
}

RankedPoset RankedPoset::with_top_adjoined(const std::string& label) const {
  std::vector<std::string> labels = labels_;
  labels.push_back(label);
  std::size_t n = size();
  return from_relation(std::move(labels), [&, n](std::size_t a, std::size_t b) {
    if (b == n) return true;
    if (a == n) return false;
    return leq(a, b);
  });
}

RankedPoset RankedPoset::proper_part() const {
  if (minimals_.size() != 1) return *this;
  std::size_t drop = minimals_[0];
  std::vector<std::string> labels;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (i != drop) {
      labels.push_back(labels_[i]);
      keep.push_back(i);
    }
  return from_relation(std::move(labels), [this, keep](std::size_t a, std::size_t b) {
    return leq(keep[a], keep[b]);
  });
}

RankedPoset RankedPoset::chain_poset(std::size_t max_elements) const {
  // enumerate all nonempty chains by DFS over increasing element index
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> grow = [&](std::size_t last) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (j == last || !leq(last, j)) continue;
      cur.push_back(j);
      chains.push_back(cur);
      if (chains.size() > max_elements) throw std::runtime_error("chain poset too large");
      grow(j);
      cur.pop_back();
    }
  };
  for (std::size_t i = 0; i < size(); ++i) {
    cur = {i};
    chains.push_back(cur);
    grow(i);
  }
  std::vector<std::string> labels;
  labels.reserve(chains.size());
  std::vector<std::vector<std::size_t>> sorted_chains = chains;
  for (auto& ch : sorted_chains) std::sort(ch.begin(), ch.end());
  for (const auto& ch : chains) {
    std::string l;
    for (std::size_t k = 0; k < ch.size(); ++k) {
      if (k) l += "<";
      l += labels_[ch[k]];
    }
    labels.push_back(std::move(l));
  }
  return from_relation(std::move(labels), [&sorted_chains](std::size_t a, std::size_t b) {
    return std::includes(sorted_chains[b].begin(), sorted_chains[b].end(),
                         sorted_chains[a].begin(), sorted_chains[a].end());
  });
}

RankedPoset RankedPoset::dual() const {
  return from_relation(labels_, [this](std::size_t a, std::size_t b) { return leq(b, a); });
}

std::vector<Integer> RankedPoset::chain_counts() const {
  std::size_t n = size();
  std::vector<Integer> counts;
  std::vector<Integer> ending(n, 1);  // chains of current size ending at i
  // order by rank so that strictly-smaller elements come first
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [this](std::size_t a, std::size_t b) { return rank_[a] < rank_[b]; });
  while (true) {
    Integer total = 0;
    for (const auto& v : ending) total += v;
    if (total == 0) break;
    counts.push_back(total);
    std::vector<Integer> next(n, 0);
    for (auto j : order)
      for (auto i : order)
        if (i != j && leq(i, j)) next[j] += ending[i];
    ending = std::move(next);
  }
  return counts;
}

Integer RankedPoset::reduced_euler_characteristic() const {
  auto counts = chain_counts();
  Integer chi = -1;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k % 2 == 0)
      chi += counts[k];
    else
      chi -= counts[k];
  }
  return chi;
}

RankedPoset covector_poset(const SignSystem& s) {
  std::vector<std::string> labels;
  labels.reserve(s.size());
  for (const auto& v : s) labels.push_back(v.to_string());
  return RankedPoset::from_relation(std::move(labels), [&s](std::size_t a, std::size_t b) {
    return natural_leq(s[a], s[b]);
  });
}

FlatsPoset flats_poset(const SignSystem& s) {
  std::set<std::vector<std::size_t>> seen;
  for (const auto& v : s) seen.insert(v.zero_set());
  FlatsPoset fp;
  fp.flats.assign(seen.begin(), seen.end());
  std::sort(fp.flats.begin(), fp.flats.end(),
            [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<std::string> labels;
  for (const auto& f : fp.flats) {
    std::string l;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k) l += ",";
      l += s.ground().name(f[k]);
    }
    if (l.empty()) l = "{}";
    labels.push_back(std::move(l));
  }
  const auto& flats = fp.flats;
  fp.poset = RankedPoset::from_relation(std::move(labels), [&flats](std::size_t a, std::size_t b) {
    return std::includes(flats[b].begin(), flats[b].end(), flats[a].begin(), flats[a].end());
  });
  return fp;
}

std::vector<Integer> mobius(const RankedPoset& p) {
  if (!p.bounded_below()) throw std::invalid_argument("mobius: poset is not bounded below");
  std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&p](std::size_t a, std::size_t b) { return p.rank_of(a) < p.rank_of(b); });
  std::vector<Integer> mu(n, 0);
  for (auto i : order) {
    Integer acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && p.leq(j, i)) acc += mu[j];
    mu[i] = (i == p.minimals()[0]) ? Integer(1) : -acc;
  }
  return mu;
}

BivariatePolynomial characteristic_polynomial(const RankedPoset& p) {
  auto mu = mobius(p);
  BivariatePolynomial chi;
  for (std::size_t i = 0; i < p.size(); ++i)
    chi.add_term(p.length() - p.rank_of(i), 0, mu[i]);
  return chi;
}

namespace {

ThinnessReport interval_census(const RankedPoset& phat, std::size_t top_index) {
  ThinnessReport rep;
  if (!phat.graded()) throw std::invalid_argument("thinness: poset is not graded");
  bool any_three = false;
  bool all_ok = true;
  for (std::size_t x = 0; x < phat.size(); ++x) {
    for (std::size_t z = 0; z < phat.size(); ++z) {
      if (x == z || !phat.leq(x, z)) continue;
      if (phat.rank_of(z) - phat.rank_of(x) != 2) continue;
      std::size_t middles = 0;
      for (std::size_t y = 0; y < phat.size(); ++y)
        if (y != x && y != z && phat.leq(x, y) && phat.leq(y, z)) ++middles;
      std::size_t count = middles + 2;
      if (count == 4) continue;
      if (count == 3 && z == top_index) {
        any_three = true;
        continue;
      }
      all_ok = false;
      rep.witnesses.emplace_back(phat.label(x), phat.label(z));
    }
  }
  if (!all_ok)
    rep.result = ThinnessClass::neither;
  else
    rep.result = any_three ? ThinnessClass::subthin : ThinnessClass::thin;
  return rep;
}

}  // namespace

ThinnessReport thinness(const RankedPoset& p) {
  if (p.bounded_below()) {
    RankedPoset phat = p.with_top_adjoined();
    return interval_census(phat, phat.size() - 1);
  }
  // Without a bottom the poset cannot be read as the cell poset of a sphere
  // or ball directly; the census runs on the face poset of its order complex,
  // whose geometric realization the ball statements are about.
  RankedPoset chains = p.chain_poset();
  RankedPoset phat = chains.with_top_adjoined();
  // adjoin a bottom
  std::vector<std::string> labels = phat.labels();
  labels.push_back("BOT");
  std::size_t n = phat.size();
  RankedPoset full =
      RankedPoset::from_relation(std::move(labels), [&phat, n](std::size_t a, std::size_t b) {
        if (a == n) return true;
        if (b == n) return false;
        return phat.leq(a, b);
      });
  ThinnessReport rep = interval_census(full, n - 1);  // top kept its index
  rep.used_order_complex = true;
  return rep;
}

BoundaryReport boundary_covectors(const SignSystem& s) {
  RankedPoset p = covector_poset(s).proper_part();
  BoundaryReport rep;
  std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> up(n);
  for (auto [a, b] : p.covers()) up[a].push_back(b);
  // maximal chains by DFS from minimal elements
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    cur.push_back(v);
    if (up[v].empty())
      chains.push_back(cur);
    else
      for (auto w : up[v]) dfs(w);
    cur.pop_back();
  };
  for (auto m : p.minimals()) dfs(m);

  std::set<std::vector<std::size_t>> boundary;
  for (const auto& om : chains) {
    for (std::size_t drop = 0; drop < om.size(); ++drop) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < om.size(); ++k)
        if (k != drop) rest.push_back(om[k]);
      std::size_t count = 0;
      for (std::size_t y = 0; y < n; ++y) {
        bool chain = true;
        for (auto r : rest) {
          if (r == y) { chain = false; break; }
          if (!p.leq(r, y) && !p.leq(y, r)) { chain = false; break; }
        }
        if (chain) ++count;
      }
      rep.max_completions = std::max(rep.max_completions, count);
      if (count > 2)
        throw std::runtime_error(
            "boundary census found a chain with more than two completions; input is not an AOM");
      if (count == 1) boundary.insert(rest);
    }
  }
  for (const auto& ch : boundary) {
    std::vector<std::string> labels;
    for (auto i : ch) labels.push_back(p.label(i));
    rep.boundary_chains.push_back(std::move(labels));
  }
  return rep;
}

RankedPoset tope_poset(const SignSystem& s, const SignVector& base) {
  if (base.support_size() != base.size() || !s.contains(base))
    throw std::invalid_argument("tope_poset: base is not a tope of the system");
  std::vector<const SignVector*> topes;
  for (const auto& v : s)
    if (v.support_size() == v.size()) topes.push_back(&v);
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> seps;
  for (auto* t : topes) {
    labels.push_back(t->to_string());
    seps.push_back(separator(base, *t));
  }
  return RankedPoset::from_relation(std::move(labels), [&seps](std::size_t a, std::size_t b) {
    return std::includes(seps[b].begin(), seps[b].end(), seps[a].begin(), seps[a].end());
  });
}

RankedPoset quotient_poset(const RankedPoset& p, const std::vector<std::size_t>& orbit_of) {
  if (orbit_of.size() != p.size())
    throw std::invalid_argument("quotient_poset: orbit map is not total");
  std::size_t norb = 0;
  for (auto o : orbit_of) norb = std::max(norb, o + 1);
  // rank-preserving check
  std::vector<int> orb_rank(norb, -1);
  std::vector<std::size_t> rep(norb, p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto o = orbit_of[i];
    if (orb_rank[o] == -1) {
      orb_rank[o] = p.rank_of(i);
      rep[o] = i;
    } else if (orb_rank[o] != p.rank_of(i)) {
      throw std::invalid_argument("quotient_poset: orbits mix ranks (action not rank-preserving)");
    }
  }
  std::vector<std::vector<bool>> rel(norb, std::vector<bool>(norb, false));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i == j || p.leq(i, j)) rel[orbit_of[i]][orbit_of[j]] = true;
  // verify partial order: antisymmetry and transitivity
  for (std::size_t a = 0; a < norb; ++a)
    for (std::size_t b = 0; b < norb; ++b) {
      if (a != b && rel[a][b] && rel[b][a])
        throw std::runtime_error("quotient relation is not antisymmetric");
      if (rel[a][b])
        for (std::size_t c = 0; c < norb; ++c)
          if (rel[b][c] && !rel[a][c])
            throw std::runtime_error("quotient relation is not transitive");
    }
  std::vector<std::string> labels(norb);
  for (std::size_t o = 0; o < norb; ++o) labels[o] = "[" + p.label(rep[o]) + "]";
  return RankedPoset::from_relation(std::move(labels), [&rel](std::size_t a, std::size_t b) {
    return rel[a][b];
  });
}

std::string poset_to_dot(const RankedPoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string BivariatePolynomial::to_string(const std::string& xname,
                                           const std::string& yname) const {
  if (terms_.empty()) return "0";
  // highest total degree first, then higher x-degree
  std::vector<std::pair<Key, Integer>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : items) {
    Integer abs_c = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    auto power = [](const std::string& v, int e) {
      if (e == 0) return std::string();
      if (e == 1) return v;
      return v + "^" + std::to_string(e);
    };
    vars = power(xname, k.first);
    std::string ypart = power(yname, k.second);
    if (!vars.empty() && !ypart.empty()) vars += "*";
    vars += ypart;
    if (vars.empty())
      os << abs_c.str();
    else if (abs_c == 1)
      os << vars;
    else
      os << abs_c.str() << vars;
  }
  return os.str();
}

}  // namespace omkit
