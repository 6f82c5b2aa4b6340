#ifndef ORDTOP_JSON_IO_HPP
#define ORDTOP_JSON_IO_HPP

#include <json.hpp>

#include "ordtop/bigmaps.hpp"
#include "ordtop/embedding.hpp"
#include "ordtop/finspace.hpp"
#include "ordtop/lexint.hpp"
#include "ordtop/orders.hpp"
#include "ordtop/quotient.hpp"

// Interchange formats.  Rationals travel as "p/q" strings everywhere; no
// floating point appears in any document.
namespace ordtop::io {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

// {"labels":["a","b","c"]} — order of the listing is the order
json to_json(const FinOrder& order);
FinOrder fin_order_from_json(const json& j);

// {"graph":[["a","x"],["b","y"]],"extension":"sup"}; the self-contained
// variant adds "domain" and "codomain"
json to_json(const MonotoneMap& m, bool embed_orders = true);
MonotoneMap monotone_map_from_json(const json& j, const FinOrder& domain,
                                   const FinOrder& codomain);
MonotoneMap monotone_map_from_json(const json& j);

// ["1/2","3/4"]
json to_json(const LexPoint& p);
LexPoint lex_point_from_json(const json& j);
json to_json(const std::vector<LexPoint>& points);
std::vector<LexPoint> lex_points_from_json(const json& j);

// {"atom":2} or {"segment":1,"pos":"1/5"}
json to_json(const MixedPoint& p);
MixedPoint mixed_point_from_json(const json& j);

// {"points":["a","b"],"min_nbhd":{"a":["a","b"],"b":["b"]}}
// or {"points":[...],"opens":[[...],...]}
json to_json(const FinSpace& space);
FinSpace fin_space_from_json(const json& j);

// {"source":{...},"target":{...},"assignment":{"x":"y"}}
json to_json(const SpaceMap& m);
SpaceMap space_map_from_json(const json& j);
SpaceMap space_map_from_json(const json& j, const FinSpace& source, const FinSpace& target);

// {"chain":[{space map}...],"tags":["up",...]}
json to_json(const HomotopyCertificate& cert);
HomotopyCertificate certificate_from_json(const json& j);

json to_json(const EmbeddingTrace& trace);
EmbeddingTrace trace_from_json(const json& j);

// {"ambient_dims":1,"atoms":[["0"],["1/4"],["1"]],"cspace":{...},
//  "target":{...},"values":{"atom:0|u":"x0","gap:0|u":"x1",...}}
// Mixed-interval maps carry "mixed_atoms":m instead of geometry.
json to_json(const CellMap& map);
CellMap cell_map_from_json(const json& j);

json to_json(const BreakpointSet& breaks);
BreakpointSet breakpoints_from_json(const json& j);

} // namespace ordtop::io

#endif
