#include "omkit/minors.hpp"

#include <algorithm>
#include <set>

#include "omkit/axioms.hpp"

namespace omkit {

namespace {

std::vector<std::size_t> indices_of(const SignSystem& s, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(s.ground().index(n));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("repeated element in minor specification");
  return out;
}

// Ground set and index map after removing `drop` (sorted indices).
std::pair<GroundSet, std::vector<std::size_t>> drop_ground(const GroundSet& g,
                                                           const std::vector<std::size_t>& drop) {
  std::vector<std::string> names;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!std::binary_search(drop.begin(), drop.end(), i)) {
      names.push_back(g.name(i));
      keep.push_back(i);
    }
  }
  return {GroundSet(std::move(names)), std::move(keep)};
}

SignVector project(const SignVector& v, const GroundSet& g, const std::vector<std::size_t>& keep) {
  SignVector r(g);
  for (std::size_t i = 0; i < keep.size(); ++i) r.set(i, v.at(keep[i]));
  return r;
}

}  // namespace

SignSystem delete_elements(const SignSystem& s, const std::vector<std::string>& a) {
  auto drop = indices_of(s, a);
  auto [g, keep] = drop_ground(s.ground(), drop);
  std::vector<SignVector> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(project(v, g, keep));
  return SignSystem(g, std::move(out));
}

SignSystem contract_elements(const SignSystem& s, const std::vector<std::string>& a) {
  auto drop = indices_of(s, a);
  auto [g, keep] = drop_ground(s.ground(), drop);
  std::vector<SignVector> out;
  for (const auto& v : s) {
    bool vanishes = true;
    for (auto i : drop)
      if (v.at(i) != Sign::zero) {
        vanishes = false;
        break;
      }
    if (vanishes) out.push_back(project(v, g, keep));
  }
  return SignSystem(g, std::move(out));
}

SignSystem restrict_to(const SignSystem& s, const std::vector<std::string>& a) {
  std::set<std::string> keep(a.begin(), a.end());
  std::vector<std::string> complement;
  for (const auto& n : s.ground().names())
    if (!keep.count(n)) complement.push_back(n);
  return delete_elements(s, complement);
}

SignSystem apply_minor(const SignSystem& s, const MinorSpec& spec) {
  for (const auto& d : spec.del)
    for (const auto& c : spec.contract)
      if (d == c) throw std::invalid_argument("minor: delete and contract sets intersect at " + d);
  return contract_elements(delete_elements(s, spec.del), spec.contract);
}

SimplifyResult simplify(const SignSystem& s) {
  std::size_t n = s.ground().size();
  // Column of signs per element, as a string key.
  std::vector<std::string> col(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string c(s.size(), '0');
    for (std::size_t k = 0; k < s.size(); ++k) c[k] = sign_char(s[k].at(i));
    col[i] = std::move(c);
  }
  auto negated = [](const std::string& c) {
    std::string r = c;
    for (auto& ch : r) ch = (ch == '+') ? '-' : (ch == '-' ? '+' : '0');
    return r;
  };

  SimplifyResult res;
  std::vector<std::string> kept_names;
  std::vector<std::size_t> kept_idx;
  std::map<std::string, std::pair<std::size_t, int>> seen;  // column -> (kept index, relation)
  for (std::size_t i = 0; i < n; ++i) {
    bool constant = col[i].find_first_not_of(col[i].empty() ? '0' : col[i][0]) == std::string::npos;
    if (s.size() == 0) constant = true;
    if (constant) {
      res.removed_redundant.push_back(s.ground().name(i));
      continue;
    }
    auto it = seen.find(col[i]);
    int rel = 1;
    if (it == seen.end()) {
      auto it2 = seen.find(negated(col[i]));
      if (it2 != seen.end()) {
        it = it2;
        rel = -1;
      }
    }
    if (it != seen.end()) {
      res.kept[s.ground().name(i)] = {s.ground().name(it->second.first), rel * it->second.second};
    } else {
      seen[col[i]] = {i, 1};
      kept_names.push_back(s.ground().name(i));
      kept_idx.push_back(i);
      res.kept[s.ground().name(i)] = {s.ground().name(i), 1};
    }
  }
  GroundSet g(kept_names);
  std::vector<SignVector> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(project(v, g, kept_idx));
  res.system = SignSystem(g, std::move(out));
  return res;
}

bool is_simple(const SignSystem& s) {
  auto r = simplify(s);
  return r.system.ground().size() == s.ground().size();
}

namespace {

// All N on E with (+-N) o S <= S, found by exhaustive enumeration.
std::vector<SignVector> zero_layer_brute(const SignSystem& s) {
  std::size_t n = s.ground().size();
  std::vector<SignVector> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    SignVector nvec(s.ground());
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      int d = c % 3;
      c /= 3;
      nvec.set(i, d == 0 ? Sign::zero : (d == 1 ? Sign::plus : Sign::minus));
    }
    SignVector neg = nvec.negated();
    bool ok = true;
    for (const auto& x : s) {
      if (!s.contains(compose(nvec, x)) || !s.contains(compose(neg, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(nvec);
  }
  return out;
}

std::vector<SignVector> zero_layer_seeded(const SignSystem& s) {
  std::set<std::string> seen;
  std::vector<SignVector> candidates;
  auto push = [&](const SignVector& v) {
    if (seen.insert(v.to_string()).second) candidates.push_back(v);
  };
  for (const auto& x : s) {
    SignVector nx = x.negated();
    for (const auto& y : s) {
      SignVector ny = y.negated();
      push(oplus(x, ny));
      push(oplus(nx, y));
      push(oplus(x, y));
      push(oplus(nx, ny));
    }
  }
  std::vector<SignVector> out;
  for (const auto& nvec : candidates) {
    SignVector neg = nvec.negated();
    bool ok = true;
    for (const auto& x : s) {
      if (!s.contains(compose(nvec, x)) || !s.contains(compose(neg, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(nvec);
  }
  return out;
}

}  // namespace

SignSystem cone_zero_layer(const SignSystem& s, std::size_t brute_force_limit) {
  std::vector<SignVector> layer = s.ground().size() <= brute_force_limit
                                      ? zero_layer_brute(s)
                                      : zero_layer_seeded(s);
  return SignSystem(s.ground(), std::move(layer));
}

SignSystem cone(const SignSystem& s, const std::string& g, std::size_t brute_force_limit) {
  if (s.ground().try_index(g))
    throw std::invalid_argument("cone: element " + g + " already in the ground set");
  if (!is_aom_quick(s)) throw std::invalid_argument("cone: input fails AOM classification");

  std::vector<std::string> names = s.ground().names();
  names.push_back(g);
  GroundSet eg(names);
  std::size_t n = s.ground().size();
  auto lift = [&](const SignVector& v, Sign gs) {
    SignVector r(eg);
    for (std::size_t i = 0; i < n; ++i) r.set(i, v.at(i));
    r.set(n, gs);
    return r;
  };

  std::vector<SignVector> out;
  for (const auto& x : s) {
    out.push_back(lift(x, Sign::plus));
    out.push_back(lift(x.negated(), Sign::minus));
  }
  for (const auto& nvec : cone_zero_layer(s, brute_force_limit))
    out.push_back(lift(nvec, Sign::zero));
  return SignSystem(eg, std::move(out));
}

std::vector<SignVector> bounded_faces(const SignSystem& s) {
  // X is bounded iff no nonzero N with (+-N) o S <= S lies below X.
  if (!is_aom_quick(s))
    throw std::invalid_argument("bounded_faces: input fails AOM classification");
  SignSystem layer = cone_zero_layer(s);
  std::vector<SignVector> out;
  for (const auto& x : s) {
    bool bounded = true;
    for (const auto& nvec : layer) {
      if (nvec.is_zero()) continue;
      if (natural_leq(nvec, x)) {
        bounded = false;
        break;
      }
    }
    if (bounded) out.push_back(x);
  }
  return out;
}

}  // namespace omkit
