#ifndef POSBASIS_JSON_IO_HPP
#define POSBASIS_JSON_IO_HPP

#include <json.hpp>

#include "posbasis/compact_set.hpp"
#include "posbasis/construct.hpp"
#include "posbasis/node_system.hpp"
#include "posbasis/verify.hpp"

namespace posbasis {

using json = nlohmann::json;

// Rationals serialize as "p/q" (or "p" when q = 1); polynomials as coefficient
// arrays lowest degree first; sets as {"pieces": [[lo, hi], ...]}.

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json set_to_json(const CompactSet& omega);
CompactSet set_from_json(const json& j);

json nodes_to_json(const NodeSystem& t);
NodeSystem nodes_from_json(const json& j);

json profile_to_json(const TopoProfile& tp);

json basis_family_to_json(const BasisFamily& fam);
// Extracts the expanded polynomials of a basis document: either a full
// BasisFamily object (reads "coeffs" of each member) or a bare array of
// coefficient arrays.
std::vector<Polynomial> polys_from_basis_json(const json& j);

json verify_report_to_json(const VerifyReport& rep);

json root_loc_to_json(const RootLoc& r);

}  // namespace posbasis

#endif
