#pragma once

#include <string>

#include "lamina/dtcoord.hpp"
#include "lamina/rigidity.hpp"

#include "json.hpp"

namespace lamina {

// Canonical JSON forms. All numbers are exact: integers stay JSON integers,
// proper fractions become "p/q" strings. Outputs are byte-stable for a fixed
// input: ordered_json preserves the documented key order.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

// {"g": g, "r": r, "weights": [...], "twists": [...]}
Json vector_to_json(const DTVector& v);
DTVector vector_from_json(const Json& j);
DTVector vector_from_string(const std::string& text);

Json surface_info_json(const SurfaceKind& s);
Json multicurve_class_json(const MulticurveClass& mc);
Json lemma2_json(const struct Lemma2Result& res, const DTVector& alpha, const DTVector& beta,
                 long long bound);

// Compact class label used in CSV table headers: "m0:t0;m1:t1;...".
std::string vector_label(const DTVector& v);

}  // namespace lamina
