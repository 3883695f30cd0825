#include "lamina/json_io.hpp"

#include "lamina/errors.hpp"

namespace lamina {

Json rat_to_json(const Rat& r) {
  if (r.is_integer()) return Json(r.num());
  return Json(r.str());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
  throw IOFailure("expected an integer or \"p/q\" string, got " + j.dump());
}

Json vector_to_json(const DTVector& v) {
  Json j;
  j["g"] = v.surface.genus;
  j["r"] = v.surface.boundary_count;
  j["weights"] = Json::array();
  j["twists"] = Json::array();
  for (const Rat& w : v.weights) j["weights"].push_back(rat_to_json(w));
  for (const Rat& t : v.twists) j["twists"].push_back(rat_to_json(t));
  return j;
}

DTVector vector_from_json(const Json& j) {
  if (!j.contains("g") || !j.contains("r") || !j.contains("weights") || !j.contains("twists"))
    throw IOFailure("vector JSON needs g, r, weights, twists");
  SurfaceKind s = make_surface(j["g"].get<int>(), j["r"].get<int>());
  std::vector<Rat> w, t;
  for (const Json& x : j["weights"]) w.push_back(rat_from_json(x));
  for (const Json& x : j["twists"]) t.push_back(rat_from_json(x));
  return make_vector(s, std::move(w), std::move(t));
}

DTVector vector_from_string(const std::string& text) {
  Json j = Json::parse(text);
  return vector_from_json(j);
}

Json surface_info_json(const SurfaceKind& s) {
  Json j;
  j["schema_version"] = 1;
  j["chi"] = s.euler_characteristic();
  j["dim"] = s.ml_dimension();
  j["pants_curves"] = s.pants_curve_count();
  j["pants"] = s.pants_count();
  if (s.pants_curve_count() >= 1) {
    PantsDecomposition pd = standard_pants_decomposition(s);
    Json gluing = Json::array();
    for (int i = 0; i < pd.curve_count(); ++i) {
      Json e;
      e["curve"] = i;
      e["ends"] = {{pd.curve_ends[i].first.pants, pd.curve_ends[i].first.slot},
                   {pd.curve_ends[i].second.pants, pd.curve_ends[i].second.slot}};
      gluing.push_back(e);
    }
    j["gluing"] = gluing;
    Json outer = Json::array();
    for (const SlotRef& o : pd.outer) outer.push_back({o.pants, o.slot});
    j["boundary"] = outer;
  }
  return j;
}

Json multicurve_class_json(const MulticurveClass& mc) {
  Json comps = Json::array();
  for (const auto& [cls, mult] : mc.components) {
    Json c;
    c["class"] = vector_to_json(cls);
    c["multiplicity"] = mult;
    comps.push_back(c);
  }
  Json j;
  j["schema_version"] = 1;
  j["components"] = comps;
  return j;
}

Json lemma2_json(const Lemma2Result& res, const DTVector& alpha, const DTVector& beta,
                 long long bound) {
  Json j;
  j["schema_version"] = 1;
  j["alpha"] = vector_to_json(alpha);
  j["beta"] = vector_to_json(beta);
  j["bound"] = bound;
  j["disjoint"] = res.disjoint;
  j["rank"] = res.rank;
  j["expected"] = res.expected;
  j["verdict"] = res.verdict == Lemma2Result::Disjoint
                     ? "disjoint"
                     : (res.verdict == Lemma2Result::Intersecting ? "intersecting" : "anomaly");
  if (!res.note.empty()) j["note"] = res.note;
  return j;
}

std::string vector_label(const DTVector& v) {
  std::string s;
  for (int i = 0; i < v.curve_count(); ++i) {
    if (i) s += ";";
    s += v.weights[i].str() + ":" + v.twists[i].str();
  }
  return s;
}

}  // namespace lamina
