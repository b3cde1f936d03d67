#pragma once

#include <json.hpp>

#include "affine.hpp"
#include "cone.hpp"
#include "core.hpp"
#include "embedding.hpp"
#include "freudenthal.hpp"
#include "quadform.hpp"
#include "root_datum.hpp"
#include "voronoi.hpp"

// JSON views of the core types. Rationals serialize as integers when the
// denominator is 1 and as "p/q" strings otherwise; list orderings are the
// canonical (lexicographic) ones maintained by the types themselves.

namespace weyl {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const QVec& v);
Json to_json(const IVec& v);
Json to_json(const IMat& m);
Json to_json(const FiniteAbelianGroup& g);
Json to_json(const Cone& c);
Json to_json(const Fan& f);
Json to_json(const RootDatum& rd);
Json to_json(const WeightMultiplicityTable& t);
Json to_json(const AffineRootDatum& ard);
Json to_json(const Alcove& al);
Json to_json(const AffineDynkinDiagram& d);
Json to_json(const StackyFan& sf);
Json to_json(const CDeltaResult& r);
Json to_json(const OrbitPoset& p);
Json to_json(const VoronoiCell& c);
Json to_json(const DelaunayCell& c);
Json to_json(const LTFan& f);

// Parse helpers for configs (throw config_error on malformed data).
Rat rat_from_json(const Json& j);
IVec ivec_from_json(const Json& j);
IMat imat_from_json(const Json& j);

}  // namespace weyl
