#pragma once

#include <json.hpp>

#include "omkit/axioms.hpp"
#include "omkit/parallel.hpp"
#include "omkit/poset.hpp"
#include "omkit/realize.hpp"
#include "omkit/semimatroid.hpp"
#include "omkit/sign_system.hpp"

namespace omkit {

using Json = nlohmann::ordered_json;

// { "ground": [names...], "covectors": ["+0-+", ...] }; serialization is
// canonical: covectors sorted by the (-,0,+) lexicographic key.
Json sign_system_to_json(const SignSystem& s);
SignSystem sign_system_from_json(const Json& j);

// { "dim": d, "hyperplanes": [{"name","normal","offset"[,"periodic"]}...]
//   [, "lattice": [[...],...]] }  -- lattice present means periodic; rationals
// are strings "p/q".
Json arrangement_to_json(const FiniteArrangement& a);
Json arrangement_to_json(const PeriodicArrangement& p);
bool json_is_periodic_arrangement(const Json& j);
FiniteArrangement finite_arrangement_from_json(const Json& j);
PeriodicArrangement periodic_arrangement_from_json(const Json& j);

// "lo,hi;lo,hi" per coordinate.
Window window_from_string(const std::string& spec);

Json axiom_report_to_json(const AxiomReport& r);
Json classification_to_json(const Classification& c);

Json poset_to_json(const RankedPoset& p);
Json parallel_class_to_json(const SignSystem& s, const ParallelClass& c);
Json semimatroid_to_json(const Semimatroid& m);
Semimatroid semimatroid_from_json(const Json& j);

std::string canonical_dump(const Json& j);

}  // namespace omkit
