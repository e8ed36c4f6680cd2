#pragma once

// nlohmann::json bindings for the domain types.
//
//   BaselineSpec  {"family": "exponential", "params": {"rate": 1}}
//   TLGParams     {"alpha": a, "theta": t, "baseline": {...}}
//   SystemSpec    {"topology": "series"|"parallel", "components": [...]}
//   OrderVerdict  {"order", "holds", "witness", "min_margin", "monotone_class", ...}

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tlg/baseline.hpp"
#include "tlg/grid.hpp"
#include "tlg/order_checks.hpp"
#include "tlg/system.hpp"
#include "tlg/topp_leone.hpp"

namespace tlg {

using nlohmann::json;

inline void to_json(json& j, const BaselineSpec& g) {
  j = json{{"family", std::string(to_string(g.family()))}, {"params", g.params()}};
}

inline void from_json(const json& j, BaselineSpec& g) {
  auto params = j.contains("params") ? j.at("params").get<std::map<std::string, double>>()
                                     : std::map<std::string, double>{};
  g = BaselineSpec(baseline_family_from_string(j.at("family").get<std::string>()),
                   std::move(params));
}

inline void to_json(json& j, const TLGParams& p) {
  j = json{{"alpha", p.alpha}, {"theta", p.theta}, {"baseline", p.baseline}};
}

inline void from_json(const json& j, TLGParams& p) {
  p = TLGParams(j.at("alpha").get<double>(), j.at("theta").get<double>(),
                j.at("baseline").get<BaselineSpec>());
}

inline void to_json(json& j, const SystemSpec& s) {
  j = json{{"topology", std::string(to_string(s.topology))}, {"components", s.components}};
}

inline void from_json(const json& j, SystemSpec& s) {
  s = SystemSpec(j.at("components").get<std::vector<TLGParams>>(),
                 topology_from_string(j.at("topology").get<std::string>()));
}

inline void to_json(json& j, const GridOptions& o) {
  j = json{{"q_lo", o.q_lo},
           {"q_hi", o.q_hi},
           {"count", o.count},
           {"spacing", std::string(to_string(o.spacing))}};
}

inline void from_json(const json& j, GridOptions& o) {
  GridOptions d;
  o.q_lo = j.value("q_lo", d.q_lo);
  o.q_hi = j.value("q_hi", d.q_hi);
  o.count = j.value("count", d.count);
  o.spacing = grid_spacing_from_string(j.value("spacing", std::string(to_string(d.spacing))));
}

inline void to_json(json& j, const Witness& w) {
  j = json{{"x", w.x}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

inline void from_json(const json& j, Witness& w) {
  w.x = j.at("x").get<double>();
  w.lhs = j.at("lhs").get<double>();
  w.rhs = j.at("rhs").get<double>();
}

inline void to_json(json& j, const OrderVerdict& v) {
  j = json{{"order", std::string(to_string(v.order))},
           {"holds", v.holds},
           {"witness", v.witness ? json(*v.witness) : json(nullptr)},
           {"min_margin", v.min_margin},
           {"monotone_class",
            v.monotone_class ? json(std::string(to_string(*v.monotone_class))) : json(nullptr)}};
  if (!v.turning_points.empty()) {
    json tps = json::array();
    for (const auto& t : v.turning_points) {
      tps.push_back({{"x", t.x}, {"kind", t.peak ? "peak" : "trough"}});
    }
    j["turning_points"] = std::move(tps);
  }
  if (v.flagged_points > 0) j["flagged_points"] = v.flagged_points;
  if (v.tail_adverse) j["tail_adverse"] = true;
}

}  // namespace tlg
