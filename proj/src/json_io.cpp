#include "posbasis/json_io.hpp"

#include "posbasis/errors.hpp"

namespace posbasis {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  throw DomainError("expected a rational as \"p/q\" string");
}

json polynomial_to_json(const Polynomial& p) {
  json arr = json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(rational_to_json(c));
  return arr;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected a coefficient array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

json set_to_json(const CompactSet& omega) {
  json pieces = json::array();
  for (const Interval& iv : omega.pieces())
    pieces.push_back(json::array({rational_to_json(iv.lo), rational_to_json(iv.hi)}));
  return json{{"pieces", pieces}};
}

CompactSet set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pieces"))
    throw DomainError("expected {\"pieces\": [[lo,hi],...]}");
  std::vector<Interval> pieces;
  for (const auto& p : j.at("pieces")) {
    if (!p.is_array() || p.size() != 2) throw DomainError("piece must be a [lo, hi] pair");
    pieces.push_back(Interval{rational_from_json(p[0]), rational_from_json(p[1])});
  }
  return CompactSet::canonicalize(std::move(pieces));
}

json nodes_to_json(const NodeSystem& t) {
  json arr = json::array();
  for (const Rational& x : t.values()) arr.push_back(rational_to_json(x));
  return arr;
}

NodeSystem nodes_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected a node array");
  std::vector<Rational> nodes;
  for (const auto& x : j) nodes.push_back(rational_from_json(x));
  return NodeSystem(std::move(nodes));
}

json profile_to_json(const TopoProfile& tp) {
  json holes = json::array();
  for (const Hole& h : tp.holes)
    holes.push_back(json::array({rational_to_json(h.alpha), rational_to_json(h.beta)}));
  json ecc_l = json::array(), ecc_r = json::array();
  for (const Rational& x : tp.eccentric_left) ecc_l.push_back(rational_to_json(x));
  for (const Rational& x : tp.eccentric_right) ecc_r.push_back(rational_to_json(x));
  json out{{"holes", holes},
           {"lambda", tp.lambda},
           {"is_infinite", tp.is_infinite},
           {"eccentric_left", ecc_l},
           {"eccentric_right", ecc_r}};
  if (tp.is_infinite) {
    out["limit_point_hull"] = json::array({rational_to_json(tp.limit_point_hull->lo),
                                           rational_to_json(tp.limit_point_hull->hi)});
    out["theta_left"] = tp.theta_left;
    out["theta_right"] = tp.theta_right;
  } else {
    out["limit_point_hull"] = nullptr;
    out["cardinality"] = *tp.cardinality;
  }
  return out;
}

json basis_family_to_json(const BasisFamily& fam) {
  json basis = json::array();
  for (const FactoredPoly& f : fam.polys) {
    json factors = json::array();
    for (const auto& [root, mult] : f.factors())
      factors.push_back(json::array({rational_to_json(root), mult}));
    basis.push_back(json{{"sign", f.sign()},
                         {"factors", factors},
                         {"coeffs", polynomial_to_json(f.expand())},
                         {"degree", f.degree()}});
  }
  return json{{"omega_set", set_to_json(fam.omega_set)},
              {"nodes", nodes_to_json(fam.nodes)},
              {"basis", basis},
              {"max_degree", fam.max_degree},
              {"sigma", fam.sigma}};
}

std::vector<Polynomial> polys_from_basis_json(const json& j) {
  std::vector<Polynomial> polys;
  if (j.is_array()) {
    for (const auto& e : j) polys.push_back(polynomial_from_json(e));
    return polys;
  }
  if (j.is_object() && j.contains("basis")) {
    for (const auto& e : j.at("basis")) {
      if (e.is_object() && e.contains("coeffs"))
        polys.push_back(polynomial_from_json(e.at("coeffs")));
      else
        polys.push_back(polynomial_from_json(e));
    }
    return polys;
  }
  throw DomainError("expected a basis document or an array of coefficient arrays");
}

json root_loc_to_json(const RootLoc& r) {
  if (r.exact) return rational_to_json(r.value);
  return json::array({rational_to_json(r.lo), rational_to_json(r.hi)});
}

json verify_report_to_json(const VerifyReport& rep) {
  json polys = json::array();
  for (const PolyCheck& c : rep.polys) {
    json e{{"nonneg", c.nonneg}};
    e["negativity_witness"] =
        c.negativity_witness ? rational_to_json(*c.negativity_witness) : json(nullptr);
    e["node"] = c.node ? root_loc_to_json(*c.node) : json(nullptr);
    polys.push_back(std::move(e));
  }
  return json{{"verdict", rep.accept ? "ACCEPT" : "REJECT"},
              {"reason", to_string(rep.reason)},
              {"independent", rep.independent},
              {"polys", polys}};
}

}  // namespace posbasis
