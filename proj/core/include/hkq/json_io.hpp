#ifndef HKQ_JSON_IO_HPP
#define HKQ_JSON_IO_HPP

#include "hkq/arrangement.hpp"
#include "hkq/polygon.hpp"
#include "hkq/polyhedron.hpp"

#include <json.hpp>

#include <string>

namespace hkq {

using Json = nlohmann::ordered_json;

// {"d":2, "normals":[[1,1],[1,0]], "offsets":["1","0"]}
Arrangement arrangement_from_json(const Json& j);
Json arrangement_to_json(const Arrangement& arr);

// {"d":2, "constraints":[{"normal":[1,0], "offset":"1/2", "sense":">="}]}
Polyhedron polyhedron_from_json(const Json& j);
Json polyhedron_to_json(const Polyhedron& P);

// {"alphas":["1","1","3","3","3"]}
PolygonSpec polygon_from_json(const Json& j);
Json polygon_to_json(const PolygonSpec& spec);

// {field, variables, generators:[canonical strings]}
Json ideal_to_json(const Ideal<Rational>& I);
Json ideal_to_json(const Ideal<GF2>& I);
Ideal<Rational> ideal_from_json_q(const Json& j);
Ideal<GF2> ideal_from_json_f2(const Json& j);

Json presented_ring_to_json(const PresentedRing<Rational>& R);
Json presented_ring_to_json(const PresentedRing<GF2>& R);

Json load_json_file(const std::string& path);

}  // namespace hkq

#endif
