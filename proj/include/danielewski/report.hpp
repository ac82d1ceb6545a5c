#pragma once

// JSON rendering of library results. Needs nlohmann/json on the include path.

#include <string>

#include <json.hpp>

#include "danielewski/classify.hpp"
#include "danielewski/format.hpp"
#include "danielewski/reduce.hpp"
#include "danielewski/surface.hpp"
#include "danielewski/transform.hpp"

namespace danielewski::report {

using Json = nlohmann::ordered_json;

inline Json field_json(const NumberField& f) {
  if (f.is_rational()) return nullptr;
  return Json{{"generator", f.generator()}, {"minimal_polynomial", format_qpoly(f.minimal_polynomial(), f.generator())}};
}

inline Json surface_json(const DanielewskiSurface& X) {
  return Json{{"equation", format_surface(X)}, {"n", X.n()}, {"Q", format_poly(X.Q())}, {"d", X.d()},
              {"field", field_json(X.field())}};
}

inline Json components_json(const MapComponents& m) {
  return Json::array({format_poly(m[0]), format_poly(m[1]), format_poly(m[2])});
}

// Field of whatever the witness is written over.
inline NumberField witness_field(const IsoWitness& w) {
  NumberField f = common_field(w.source.field(), w.target.field());
  if (f.is_rational() && !w.mu.is_rational()) f = w.mu.field();
  for (const auto& c : w.map.components()) {
    if (f.is_rational()) f = c.field();
  }
  return f;
}

inline Json witness_json(const IsoWitness& w) {
  const Verification v = verify_surface_isomorphism(w);
  Json j{{"source", format_surface(w.source)},
         {"target", format_surface(w.target)},
         {"scope", to_string(w.scope)},
         {"mu", w.mu.to_string()},
         {"map", components_json(w.map.components())},
         {"inverse", w.map.has_inverse() ? components_json(w.map.inverse().components()) : Json(nullptr)},
         {"field", field_json(witness_field(w))},
         {"verified", v.ok}};
  if (!v.ok) j["diagnostic"] = v.diagnostic;
  return j;
}

inline Json standardness_json(const StandardnessReport& s) {
  Json j{{"standard", s.is_standard}, {"reduced_standard", s.is_reduced_standard}};
  if (!s.failing.empty()) j["failing"] = s.failing;
  return j;
}

inline Json solution_json(const MatchSolution& s) {
  return Json{{"a", s.a.to_string()},         {"alpha", s.alpha.to_string()},  {"beta", s.beta.to_string()},
              {"mu", s.mu.to_string()},       {"a_free", s.a_free},            {"alpha_free", s.alpha_free},
              {"field", field_json(s.field)}};
}

inline Json normal_form_json(const NormalForm& nf) {
  static const VariableNames<2> xt{{"x", "t"}, {kZ, kX}};
  Json q = Json::object();
  for (const auto& [i, qi] : nf.q) q[std::to_string(i)] = format_poly(qi, xt);
  return Json{{"n", nf.n}, {"p", format_upoly(nf.p)}, {"q", std::move(q)}, {"surface", surface_json(nf.surface)}};
}

inline Json classification_json(const ClassificationResult& r, bool with_witness) {
  Json j{{"verdict", to_string(r.verdict)}};
  if (!r.obstruction.empty()) j["obstruction"] = r.obstruction;
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(solution_json(s));
  j["solutions"] = std::move(sols);
  if (with_witness && r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

}  // namespace danielewski::report
