#pragma once

#include <json.hpp>

#include "qhom/complexity.hpp"
#include "qhom/cotilting.hpp"
#include "qhom/orthogonal.hpp"

namespace qhom {

using Json = nlohmann::ordered_json;

inline Json to_json(const DimValue& d) {
  Json j;
  j["value"] = d.value;
  j["finite"] = d.finite;
  return j;
}

inline Json to_json(const Rep& m) {
  Json j;
  Json dims = Json::array();
  for (int d : m.dims) dims.push_back(d);
  j["dims"] = dims;
  j["total_dim"] = m.total_dim();
  return j;
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["outcome"] = Verdict::outcome_name(v.outcome);
  if (!v.note.empty()) j["note"] = v.note;
  if (v.undecided) j["undecided"] = true;
  Json ev = Json::array();
  for (const auto& [claim, value] : v.evidence) {
    Json e;
    e["claim"] = claim;
    e["value"] = value;
    ev.push_back(e);
  }
  j["evidence"] = ev;
  Json ws = Json::array();
  for (const auto& [name, rep] : v.witnesses) {
    Json w;
    w["name"] = name;
    w["module"] = to_json(rep);
    ws.push_back(w);
  }
  j["witnesses"] = ws;
  return j;
}

inline Json to_json(const CotiltingReport& r) {
  Json j;
  j["verdict"] = CotiltingReport::status_name(r.status);
  j["id_T"] = to_json(r.id_t);
  j["self_orthogonal"] = r.self_orthogonal;
  if (!r.self_orthogonal) j["first_failing_degree"] = r.first_failing_degree;
  j["cogenerates"] = r.cogenerates;
  j["resolution_depth"] = r.resolution_depth;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const OrbitReport& r) {
  Json j;
  j["start"] = to_json(r.start);
  Json steps = Json::array();
  for (const Rep& s : r.steps) steps.push_back(to_json(s));
  j["steps"] = steps;
  if (r.period)
    j["period"] = *r.period;
  else
    j["period"] = nullptr;
  j["budget"] = r.budget;
  j["degenerate"] = r.degenerate;
  return j;
}

inline Json to_json(const DimSequence& d) {
  Json j;
  Json vals = Json::array();
  for (long long v : d.values) vals.push_back(v);
  j["values"] = vals;
  if (!d.source.empty()) j["source"] = d.source;
  j["minimal"] = d.minimal;
  return j;
}

inline Json to_json(const ComplexityEstimate& e) {
  Json j;
  j["kind"] = ComplexityEstimate::kind_name(e.kind);
  if (e.cx_value)
    j["cx"] = *e.cx_value;
  else
    j["cx"] = nullptr;
  j["window"] = Json::array({e.window_begin, e.window_end});
  if (e.kind == ComplexityEstimate::Kind::PolynomialGrowth)
    j["fit_slope"] = e.fit_slope;
  return j;
}

/// Flat text rendering of a structured report; every numeric value in the
/// text comes straight from the tree.
inline void render_text(const Json& j, std::ostream& os,
                        const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        os << prefix << k << ":\n";
        render_text(v, os, prefix + "  ");
      } else {
        os << prefix << k << ": " << (v.is_string() ? v.get<std::string>()
                                                    : v.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << prefix << "- [" << i << "]\n";
        render_text(v, os, prefix + "  ");
      } else {
        os << prefix << "- "
           << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
      ++i;
    }
  } else {
    os << prefix << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace qhom
