#include "omkit/io.hpp"

#include <sstream>

namespace omkit {

Json sign_system_to_json(const SignSystem& s) {
  Json j;
  j["ground"] = s.ground().names();
  std::vector<std::string> covs;
  covs.reserve(s.size());
  for (const auto& v : s) covs.push_back(v.to_string());
  j["covectors"] = covs;
  return j;
}

SignSystem sign_system_from_json(const Json& j) {
  if (!j.contains("ground") || !j.contains("covectors"))
    throw std::invalid_argument("sign system JSON needs \"ground\" and \"covectors\"");
  GroundSet g(j.at("ground").get<std::vector<std::string>>());
  std::vector<SignVector> vecs;
  for (const auto& item : j.at("covectors")) {
    vecs.emplace_back(g, item.get<std::string>());
  }
  return SignSystem(g, std::move(vecs));
}

namespace {

Json hyperplane_to_json(const RationalHyperplane& h) {
  Json jh;
  jh["name"] = h.name;
  std::vector<std::string> normal;
  for (const auto& v : h.normal) normal.push_back(to_string(v));
  jh["normal"] = normal;
  jh["offset"] = to_string(h.offset);
  if (!h.periodic) jh["periodic"] = false;
  return jh;
}

RationalHyperplane hyperplane_from_json(const Json& jh) {
  RationalHyperplane h;
  h.name = jh.at("name").get<std::string>();
  for (const auto& v : jh.at("normal")) h.normal.push_back(parse_rational(v.get<std::string>()));
  h.offset = parse_rational(jh.at("offset").get<std::string>());
  if (jh.contains("periodic")) h.periodic = jh.at("periodic").get<bool>();
  return h;
}

}  // namespace

Json arrangement_to_json(const FiniteArrangement& a) {
  Json j;
  j["dim"] = a.dim;
  Json hs = Json::array();
  for (const auto& h : a.hyperplanes) hs.push_back(hyperplane_to_json(h));
  j["hyperplanes"] = hs;
  return j;
}

Json arrangement_to_json(const PeriodicArrangement& p) {
  Json j;
  j["dim"] = p.dim;
  Json hs = Json::array();
  for (const auto& h : p.orbit_reps) hs.push_back(hyperplane_to_json(h));
  j["hyperplanes"] = hs;
  Json lat = Json::array();
  for (const auto& col : p.lattice) {
    std::vector<std::string> c;
    for (const auto& v : col) c.push_back(to_string(v));
    lat.push_back(c);
  }
  j["lattice"] = lat;
  return j;
}

bool json_is_periodic_arrangement(const Json& j) { return j.contains("lattice"); }

FiniteArrangement finite_arrangement_from_json(const Json& j) {
  FiniteArrangement a;
  a.dim = j.at("dim").get<std::size_t>();
  for (const auto& jh : j.at("hyperplanes")) a.hyperplanes.push_back(hyperplane_from_json(jh));
  a.validate();
  return a;
}

PeriodicArrangement periodic_arrangement_from_json(const Json& j) {
  PeriodicArrangement p;
  p.dim = j.at("dim").get<std::size_t>();
  for (const auto& jh : j.at("hyperplanes")) p.orbit_reps.push_back(hyperplane_from_json(jh));
  for (const auto& jc : j.at("lattice")) {
    QVector col;
    for (const auto& v : jc) col.push_back(parse_rational(v.get<std::string>()));
    p.lattice.push_back(std::move(col));
  }
  p.validate();
  return p;
}

Window window_from_string(const std::string& spec) {
  Window w;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    auto comma = part.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("window: each coordinate needs \"lo,hi\"");
    w.lo.push_back(parse_rational(part.substr(0, comma)));
    w.hi.push_back(parse_rational(part.substr(comma + 1)));
  }
  w.validate();
  return w;
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json j;
  j["axiom"] = axiom_name(r.axiom);
  j["holds"] = r.holds;
  if (r.metric) j["metric"] = *r.metric;
  if (r.witness) {
    Json w;
    if (r.witness->x) w["x"] = r.witness->x->to_string();
    if (r.witness->y) w["y"] = r.witness->y->to_string();
    if (r.witness->element) w["element"] = *r.witness->element;
    if (r.witness->missing) w["missing"] = r.witness->missing->to_string();
    if (!r.witness->note.empty()) w["note"] = r.witness->note;
    j["witness"] = w;
  }
  return j;
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["is_COM"] = c.is_COM;
  j["is_OM"] = c.is_OM;
  j["is_AOM_original"] = c.is_AOM_original;
  j["is_AOM_simplified"] = c.is_AOM_simplified;
  Json reps = Json::array();
  for (const auto& r : c.reports) reps.push_back(axiom_report_to_json(r));
  j["axioms"] = reps;
  return j;
}

Json poset_to_json(const RankedPoset& p) {
  Json j;
  j["elements"] = p.labels();
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back(Json::array({a, b}));
  j["covers"] = covers;
  j["rank"] = p.ranks();
  j["graded"] = p.graded();
  return j;
}

Json parallel_class_to_json(const SignSystem& s, const ParallelClass& c) {
  Json j;
  std::vector<std::string> names;
  for (auto i : c.members) names.push_back(s.ground().name(i));
  j["members"] = names;
  j["order_type"] = order_type_name(c.order_type);
  j["orientation_normalized"] = c.orientation_normalized;
  return j;
}

Json semimatroid_to_json(const Semimatroid& m) {
  Json j;
  j["ground"] = m.ground.names();
  Json facets = Json::array();
  for (auto f : m.facets) facets.push_back(mask_names(m.ground, f));
  j["facets"] = facets;
  Json rank;
  for (auto a : m.central_sets()) {
    auto names = mask_names(m.ground, a);
    std::string key;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) key += ",";
      key += names[i];
    }
    rank[key] = m.rank_of(a);
  }
  j["rank"] = rank;
  return j;
}

Semimatroid semimatroid_from_json(const Json& j) {
  Semimatroid m;
  m.ground = GroundSet(j.at("ground").get<std::vector<std::string>>());
  for (const auto& f : j.at("facets"))
    m.facets.push_back(element_mask(m.ground, f.get<std::vector<std::string>>()));
  std::sort(m.facets.begin(), m.facets.end());
  for (const auto& [key, val] : j.at("rank").items()) {
    std::vector<std::string> names;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) names.push_back(item);
    m.rank[element_mask(m.ground, names)] = val.get<int>();
  }
  if (!m.rank.count(0)) m.rank[0] = 0;
  return m;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace omkit
