#include "brauer/report_json.hpp"

namespace brauer {

using nlohmann::json;

json invariants_to_json(const CMFieldInvariants& inv) {
  return json{{"deg_E", inv.deg_E},
              {"h_E", inv.h_E},
              {"h_F", inv.h_F},
              {"unit_index", inv.unit_index},
              {"omega_dEF", inv.omega_dEF},
              {"omega_dEF2", inv.omega_dEF2},
              {"norm_dEF2", inv.norm_dEF2},
              {"norm_rad_dEF", inv.norm_rad_dEF}};
}

CMFieldInvariants invariants_from_json(const json& j) {
  return parse_invariants_json(j.dump());
}

json enclosure_to_json(const Enclosure& e) {
  return json{{"exact", e.exact},
              {"lower", to_string(e.lower)},
              {"upper", to_string(e.upper)},
              {"upper_ceil", ceil_rational(e.upper).get_str()},
              {"upper_double", as_double_upper(e.upper)}};
}

json bound_report_to_json(const BoundReport& r) {
  json j{{"k_degree", r.k_degree},
         {"invariants", invariants_to_json(r.invariants)},
         {"me_squared", to_string(r.me2)},
         {"me_upper", me_upper(r.invariants)},
         {"sharp_bound", to_string(r.sharp)},
         {"sharp_bound_ceil", r.sharp_ceil.get_str()},
         {"psi_value", to_string(r.psi_value)},
         {"crude_bound", enclosure_to_json(r.crude)},
         {"precision_bits", r.precision_bits}};
  if (r.phi_inv_n) {
    j["phi_inv_n"] = *r.phi_inv_n;
  } else {
    j["phi_inv_n"] = nullptr;
  }
  json entries = json::array();
  for (const DeltaBoundEntry& e : r.delta_bounds) {
    json je = enclosure_to_json(e.value);
    je["delta"] = to_string(e.delta);
    je["L_delta"] = e.L;
    je["psi_L"] = to_string(e.psi_L);
    entries.push_back(std::move(je));
  }
  j["delta_bounds"] = std::move(entries);
  return j;
}

json search_result_to_json(const SearchResult& r) {
  json j{{"feasible", r.feasible}, {"norm", r.norm.get_str()}};
  json witness = json::array();
  if (r.feasible) {
    for (const PrimeLocalChoice& c : r.witness.choices) {
      witness.push_back(json{{"p", c.p},
                             {"type", to_string(c.stype)},
                             {"a", c.a},
                             {"ratio", totient_ratio(c.stype, c.p, c.a).get_str()},
                             {"norm", local_norm(c.stype, c.p, c.a).get_str()}});
    }
    j["ratio"] = r.witness.ratio.get_str();
  }
  j["witness"] = std::move(witness);
  return j;
}

}  // namespace brauer
