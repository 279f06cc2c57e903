#include "omkit/frames.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "omkit/linalg.hpp"
#include "omkit/minors.hpp"

namespace omkit {

std::string index_point_to_string(const IndexPoint& i) {
  std::string s = "(";
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (k) s += ",";
    long long v = i[k];
    if (v % 2 == 0) {
      s += std::to_string(v / 2);
    } else {
      long long num = v;
      s += std::to_string(num) + "/2";
    }
  }
  return s + ")";
}

BasisFrame build_frame(const PeriodicArrangement& p, const Window& w,
                       const std::vector<std::string>& basis_orbits) {
  BasisFrame f;
  f.window = window_restrict(p, w);
  f.full_realization = covectors(f.window.arrangement);
  f.full_system = f.full_realization.system;

  // orbit name -> index
  std::map<std::string, std::size_t> orbit_index;
  for (std::size_t i = 0; i < p.orbit_reps.size(); ++i) orbit_index[p.orbit_reps[i].name] = i;

  // direction key: normalized normal, so proportional orbits merge into one class
  auto direction_of = [&](std::size_t orbit) {
    QVector n = p.orbit_reps[orbit].normal;
    Rational lead = 0;
    for (const auto& v : n)
      if (v != 0) {
        lead = v;
        break;
      }
    for (auto& v : n) v /= lead;
    return n;
  };

  QMatrix basis_normals;
  std::vector<QVector> class_dirs;
  for (const auto& name : basis_orbits) {
    auto it = orbit_index.find(name);
    if (it == orbit_index.end()) throw std::invalid_argument("unknown basis orbit " + name);
    if (!p.orbit_reps[it->second].periodic)
      throw std::invalid_argument("basis orbit " + name + " is not periodic (not in E**)");
    basis_normals.push_back(p.orbit_reps[it->second].normal);
    class_dirs.push_back(direction_of(it->second));
  }
  for (std::size_t a = 0; a < class_dirs.size(); ++a)
    for (std::size_t b = a + 1; b < class_dirs.size(); ++b)
      if (class_dirs[a] == class_dirs[b])
        throw std::invalid_argument("basis orbits " + basis_orbits[a] + " and " +
                                    basis_orbits[b] + " are parallel");
  if (rank(basis_normals) != basis_orbits.size())
    throw std::invalid_argument("basis orbit normals are dependent");

  // frame elements: every window hyperplane whose direction matches a class
  std::size_t nclasses = basis_orbits.size();
  std::vector<std::vector<std::size_t>> members_window(nclasses);  // window indices
  for (std::size_t h = 0; h < f.window.arrangement.hyperplanes.size(); ++h) {
    auto dir = direction_of(f.window.provenance[h].orbit);
    for (std::size_t c = 0; c < nclasses; ++c)
      if (dir == class_dirs[c]) {
        members_window[c].push_back(h);
        break;
      }
  }

  // order each class by geometric position along its direction
  std::vector<std::string> frame_names;
  std::vector<std::vector<std::pair<Rational, std::size_t>>> ordered(nclasses);
  for (std::size_t c = 0; c < nclasses; ++c) {
    for (auto h : members_window[c]) {
      const auto& hp = f.window.arrangement.hyperplanes[h];
      // position = offset / (proportionality factor to the class direction)
      Rational factor = 0;
      for (std::size_t k = 0; k < p.dim; ++k)
        if (class_dirs[c][k] != 0) {
          factor = hp.normal[k] / class_dirs[c][k];
          break;
        }
      ordered[c].emplace_back(hp.offset / factor, h);
    }
    std::sort(ordered[c].begin(), ordered[c].end());
    if (ordered[c].size() < 2)
      throw std::invalid_argument("window too small: class " + basis_orbits[c] +
                                  " has fewer than two members");
  }
  for (std::size_t c = 0; c < nclasses; ++c)
    for (const auto& [pos, h] : ordered[c])
      frame_names.push_back(f.window.arrangement.hyperplanes[h].name);

  f.frame_system = restrict_to(f.full_system, frame_names);
  f.frame_ground = f.frame_system.ground();

  // class structure over the frame ground set, j anchored at the basis
  // orbit's step-0 translate
  for (std::size_t c = 0; c < nclasses; ++c) {
    FrameClass fc;
    long long anchor = 0;
    bool anchor_found = false;
    for (std::size_t pos = 0; pos < ordered[c].size(); ++pos) {
      auto h = ordered[c][pos].second;
      fc.members.push_back(
          f.frame_ground.index(f.window.arrangement.hyperplanes[h].name));
      const auto& prov = f.window.provenance[h];
      if (p.orbit_reps[prov.orbit].name == basis_orbits[c] && prov.step == 0) {
        anchor = static_cast<long long>(pos);
        anchor_found = true;
      }
    }
    for (std::size_t pos = 0; pos < ordered[c].size(); ++pos)
      fc.j.push_back(static_cast<long long>(pos) - (anchor_found ? anchor : 0));
    f.classes.push_back(std::move(fc));
  }

  // canonical reorientation per class (identity for positively oriented inputs)
  f.reorientation.assign(f.frame_ground.size(), 1);
  for (const auto& fc : f.classes) {
    ParallelClass pc;
    pc.members = fc.members;
    auto tau = canonical_class_reorientation(f.frame_system, pc);
    for (auto m : fc.members) f.reorientation[m] = tau[m];
  }
  f.frame_system = reorient(f.frame_system, f.reorientation);
  return f;
}

SignVector x_of_index(const BasisFrame& f, const IndexPoint& i) {
  if (i.size() != f.classes.size())
    throw std::invalid_argument("index point has wrong number of coordinates");
  SignVector x(f.frame_ground);
  for (std::size_t c = 0; c < f.classes.size(); ++c) {
    const auto& fc = f.classes[c];
    for (std::size_t k = 0; k < fc.members.size(); ++k) {
      long long jj = 2 * fc.j[k];
      if (i[c] > jj)
        x.set(fc.members[k], Sign::plus);
      else if (i[c] < jj)
        x.set(fc.members[k], Sign::minus);
      else
        x.set(fc.members[k], Sign::zero);
    }
  }
  return x;
}

IndexPoint index_of_covector(const BasisFrame& f, const SignVector& x) {
  if (!x.ground().same_as(f.frame_ground))
    throw std::invalid_argument("covector not on the frame ground set");
  IndexPoint out(f.classes.size(), 0);
  for (std::size_t c = 0; c < f.classes.size(); ++c) {
    const auto& fc = f.classes[c];
    // delta = first member not carrying +; pattern must be monotone
    std::size_t pos = 0;
    while (pos < fc.members.size() && x.at(fc.members[pos]) == Sign::plus) ++pos;
    for (std::size_t k = pos; k < fc.members.size(); ++k) {
      if (k == pos && x.at(fc.members[k]) == Sign::zero) continue;
      if (x.at(fc.members[k]) != Sign::minus)
        throw std::invalid_argument("not a frame covector: class pattern not monotone");
    }
    if (pos == fc.members.size()) {
      // every member positive: the separating element lies beyond the window
      out[c] = 2 * fc.j.back() + 1;
    } else if (x.at(fc.members[pos]) == Sign::zero) {
      out[c] = 2 * fc.j[pos];
    } else {
      out[c] = 2 * fc.j[pos] - 1;
    }
  }
  return out;
}

bool index_leq(const IndexPoint& a, const IndexPoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("index points of different frames");
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] == b[c]) continue;
    bool a_int = (a[c] % 2 == 0);
    bool b_half = (b[c] % 2 != 0);
    if (a_int && b_half && (a[c] == b[c] - 1 || a[c] == b[c] + 1)) continue;
    return false;
  }
  return true;
}

bool index_point_interior(const BasisFrame& f, const IndexPoint& i) {
  for (std::size_t c = 0; c < f.classes.size(); ++c) {
    long long lo = 2 * f.classes[c].j.front(), hi = 2 * f.classes[c].j.back();
    if (i[c] < lo || i[c] > hi) return false;
  }
  return true;
}

IndexPosetResult index_poset(const BasisFrame& f) {
  IndexPosetResult out;
  std::vector<IndexPoint> pts{{}};
  for (std::size_t c = 0; c < f.classes.size(); ++c) {
    std::vector<IndexPoint> next;
    for (const auto& base : pts)
      for (long long v = 2 * f.classes[c].j.front(); v <= 2 * f.classes[c].j.back(); ++v) {
        IndexPoint p = base;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    pts = std::move(next);
  }
  out.points = std::move(pts);
  std::vector<std::string> labels;
  for (const auto& p : out.points) labels.push_back(index_point_to_string(p));
  const auto& points = out.points;
  out.poset = RankedPoset::from_relation(std::move(labels), [&points](std::size_t a, std::size_t b) {
    return index_leq(points[a], points[b]);
  });
  return out;
}

FrameIsomorphismReport check_frame_isomorphism(const BasisFrame& f) {
  FrameIsomorphismReport rep;
  auto ip = index_poset(f);

  // interior covectors of the frame restriction
  std::vector<const SignVector*> interior;
  std::set<std::string> interior_strings;
  for (const auto& x : f.frame_system) {
    IndexPoint i = index_of_covector(f, x);
    if (index_point_interior(f, i)) {
      interior.push_back(&x);
      interior_strings.insert(x.to_string());
    }
  }
  if (interior.size() != ip.points.size()) {
    rep.failure = "index points and interior covectors differ in number (" +
                  std::to_string(ip.points.size()) + " vs " + std::to_string(interior.size()) +
                  ")";
    return rep;
  }

  for (const auto& i : ip.points) {
    SignVector x = x_of_index(f, i);
    if (!interior_strings.count(x.to_string())) {
      rep.failure = "X_i not an interior frame covector at i = " + index_point_to_string(i);
      return rep;
    }
    IndexPoint back = index_of_covector(f, x);
    if (back != i) {
      rep.failure = "round trip i -> X_i -> i failed at " + index_point_to_string(i);
      return rep;
    }
    rep.table.emplace_back(index_point_to_string(i), x.to_string());
  }
  for (const auto* x : interior) {
    IndexPoint i = index_of_covector(f, *x);
    if (!(x_of_index(f, i) == *x)) {
      rep.failure = "round trip X -> i_X -> X failed at " + x->to_string();
      return rep;
    }
  }
  // order isomorphism, both directions
  for (const auto& i1 : ip.points)
    for (const auto& i2 : ip.points) {
      bool li = index_leq(i1, i2);
      bool lx = natural_leq(x_of_index(f, i1), x_of_index(f, i2));
      if (li != lx) {
        rep.failure = "order mismatch between " + index_point_to_string(i1) + " and " +
                      index_point_to_string(i2);
        return rep;
      }
    }
  rep.holds = true;
  return rep;
}

FiberReport frame_fibers(const BasisFrame& f, const SignVector& y) {
  FiberReport rep;
  if (!f.frame_system.contains(y))
    throw std::invalid_argument("frame_fibers: y is not a frame covector");
  // phi(X) = canonical reorientation of the frame restriction of X
  std::vector<std::string> frame_names = f.frame_ground.names();
  for (const auto& x : f.full_system) {
    SignVector restr(f.frame_ground);
    for (std::size_t k = 0; k < frame_names.size(); ++k) {
      Sign v = x.at(frame_names[k]);
      if (f.reorientation[k] == -1) v = -v;
      restr.set(k, v);
    }
    if (restr == y) rep.fiber.push_back(x);
  }
  // lower ideal below the fiber in the full covector poset
  std::set<std::string> fiber_strings;
  for (const auto& x : rep.fiber) fiber_strings.insert(x.to_string());
  std::vector<const SignVector*> ideal;
  for (const auto& z : f.full_system) {
    for (const auto& x : rep.fiber)
      if (natural_leq(z, x)) {
        ideal.push_back(&z);
        break;
      }
  }
  // longest chain length within the ideal
  std::size_t n = ideal.size();
  std::vector<int> depth(n, 0);
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ideal[a]->support_size() < ideal[b]->support_size();  // low rank first
  });
  int best = 0;
  for (auto a : order) {
    for (auto b : order) {
      if (a == b) continue;
      if (natural_leq(*ideal[b], *ideal[a]) && !(*ideal[b] == *ideal[a]))
        depth[a] = std::max(depth[a], depth[b] + 1);
    }
    best = std::max(best, depth[a]);
  }
  rep.ideal_length = best;
  RankedPoset fp = covector_poset(f.frame_system);
  rep.rank_of_y = fp.rank_of(*f.frame_system.index_of(y));
  return rep;
}

}  // namespace omkit
