#pragma once

#include <json.hpp>

#include "nh/gkm.hpp"
#include "nh/parabolic.hpp"
#include "nh/reineke.hpp"

namespace nh {

// All machine output goes through ordered_json with fields emitted in a fixed
// order, so identical configurations produce byte-identical reports.
using Json = nlohmann::ordered_json;

Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

// Group specification: a named string ("A3", "B2", ...) or inline JSON with
// an explicit Cartan matrix: either a bare matrix [[2,-1],[-2,2]] or
// {"cartan": [[...]], "name": "..."}.
CartanDatum datum_from_spec(const std::string& spec);

Json nh_to_json(const NHElement& h);

Json gkm_class_to_json(const WeylGroup& group, const GKMClass& c);
GKMClass gkm_class_from_json(const WeylGroup& group, const Json& j);

Json fixed_point_vector_to_json(const FixedPointVector& v);
FixedPointVector fixed_point_vector_from_json(const WeylGroup& group,
                                              const Json& j);

Json freeness_to_json(const FreenessReport& r);
Json relation_to_json(const RelationReport& r);
Json corner_presentation_to_json(const CornerPresentationReport& r);

}  // namespace nh
