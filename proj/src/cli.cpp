#include "posbasis/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "posbasis/bernstein.hpp"
#include "posbasis/construct.hpp"
#include "posbasis/errors.hpp"
#include "posbasis/json_io.hpp"
#include "posbasis/oracle.hpp"
#include "posbasis/verify.hpp"

namespace posbasis {

namespace {

Polynomial poly_from_args(const std::vector<std::string>& coeffs) {
  std::vector<Rational> cs;
  cs.reserve(coeffs.size());
  for (const std::string& c : coeffs) cs.push_back(Rational::from_string(c));
  return Polynomial(std::move(cs));
}

std::string dn_tag_name(DnTag tag) {
  switch (tag) {
    case DnTag::SMALL_N: return "SMALL_N";
    case DnTag::FINITE: return "FINITE";
    case DnTag::INTERVAL: return "INTERVAL";
    case DnTag::LAMBDA_SMALL: return "LAMBDA_SMALL";
    case DnTag::LAMBDA_HALF_ODD: return "LAMBDA_HALF_ODD";
    case DnTag::LAMBDA_HALF_EVEN: return "LAMBDA_HALF_EVEN";
    case DnTag::LAMBDA_LARGE: return "LAMBDA_LARGE";
  }
  return "?";
}

int default_lorentz_cap() {
  if (const char* env = std::getenv("POSBASIS_LORENTZ_CAP")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return kDefaultLorentzCap;
}

struct Mismatch {};  // oracle subcommands bail out with exit code 3

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"exact positive bases of polynomial spaces on compact subsets of the real line"};
  app.name("posbasis");
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");

  std::string set_expr, omega_digits, basis_path;
  std::string a_str, b_str;
  int n = 0, m = 0;
  int cap = default_lorentz_cap();
  std::vector<std::string> coeff_args;
  IntervalVariant variant = IntervalVariant::STANDARD;
  const std::map<std::string, IntervalVariant> variant_names{
      {"standard", IntervalVariant::STANDARD},
      {"left-anchored", IntervalVariant::LEFT_ANCHORED},
      {"right-anchored", IntervalVariant::RIGHT_ANCHORED},
      {"unanchored", IntervalVariant::UNANCHORED}};

  auto* c_profile = app.add_subcommand("profile", "holes, lambda, thetas, eccentric points");
  c_profile->add_option("SET", set_expr)->required();
  c_profile->callback([&] {
    CompactSet omega = parse_set_expr(set_expr);
    TopoProfile tp = profile(omega);
    if (as_json) {
      out << profile_to_json(tp).dump(2) << "\n";
      return;
    }
    out << "set: " << to_set_expr(omega) << "\n";
    out << "holes:";
    for (const Hole& h : tp.holes) out << " (" << h.alpha << "," << h.beta << ")";
    out << "\nlambda: " << tp.lambda << "\n";
    if (tp.is_infinite) {
      out << "limit point hull: [" << tp.limit_point_hull->lo << ","
          << tp.limit_point_hull->hi << "]\n";
      out << "eccentric left:";
      for (const Rational& x : tp.eccentric_left) out << " " << x;
      out << "\neccentric right:";
      for (const Rational& x : tp.eccentric_right) out << " " << x;
      out << "\ntheta_left: " << tp.theta_left << "\ntheta_right: " << tp.theta_right << "\n";
    } else {
      out << "finite, cardinality: " << *tp.cardinality << "\n";
    }
  });

  auto* c_dn = app.add_subcommand("dn", "least degree admitting an n-dimensional positive basis");
  c_dn->add_option("SET", set_expr)->required();
  c_dn->add_option("N", n)->required();
  c_dn->callback([&] {
    DnBranch r = dn(parse_set_expr(set_expr), n);
    if (as_json)
      out << json{{"n", n}, {"dn", r.degree}, {"branch", dn_tag_name(r.tag)}}.dump(2) << "\n";
    else
      out << r.degree << "\n";
  });

  auto* c_maxdim = app.add_subcommand("maxdim", "largest dimension with a positive basis");
  c_maxdim->add_option("SET", set_expr)->required();
  c_maxdim->add_option("M", m)->required();
  c_maxdim->callback([&] {
    int dim = max_dim(parse_set_expr(set_expr), m);
    if (as_json)
      out << json{{"m", m}, {"max_dim", dim}}.dump(2) << "\n";
    else
      out << dim << "\n";
  });

  auto* c_tau = app.add_subcommand("tau", "minimal extremal degree of a 0-1 type");
  c_tau->add_option("OMEGA", omega_digits)->required();
  c_tau->callback([&] {
    OmegaSeq w = OmegaSeq::from_string(omega_digits);
    if (as_json)
      out << json{{"omega", w.str()}, {"tau", tau(w)}}.dump(2) << "\n";
    else
      out << tau(w) << "\n";
  });

  auto* c_sigma = app.add_subcommand("sigma", "least maximal basis degree of a 0-1 type");
  c_sigma->add_option("OMEGA", omega_digits)->required();
  c_sigma->callback([&] {
    OmegaSeq w = OmegaSeq::from_string(omega_digits);
    if (as_json)
      out << json{{"omega", w.str()}, {"sigma", sigma(w)}}.dump(2) << "\n";
    else
      out << sigma(w) << "\n";
  });

  auto* c_nodes = app.add_subcommand("nodes", "optimal node placement");
  c_nodes->add_option("SET", set_expr)->required();
  c_nodes->add_option("N", n)->required();
  c_nodes->callback([&] {
    NodeSystem t = optimal_nodes(parse_set_expr(set_expr), n);
    if (as_json) {
      out << nodes_to_json(t).dump(2) << "\n";
      return;
    }
    bool first = true;
    for (const Rational& x : t.values()) {
      if (!first) out << " ";
      out << x;
      first = false;
    }
    out << "\n";
  });

  auto* c_basis = app.add_subcommand("basis", "optimal nodes and their minimal-degree basis");
  c_basis->add_option("SET", set_expr)->required();
  c_basis->add_option("N", n)->required();
  c_basis->callback([&] {
    CompactSet omega = parse_set_expr(set_expr);
    BasisFamily fam = basis_for_nodes(omega, optimal_nodes(omega, n));
    out << basis_family_to_json(fam).dump(2) << "\n";
  });

  auto* c_iv = app.add_subcommand("interval-basis", "maximal-dimension family on [a,b]");
  c_iv->add_option("A", a_str)->required();
  c_iv->add_option("B", b_str)->required();
  c_iv->add_option("M", m)->required();
  c_iv->add_option("--variant", variant, "family shape")
      ->transform(CLI::CheckedTransformer(variant_names, CLI::ignore_case));
  c_iv->callback([&] {
    BasisFamily fam =
        interval_basis(Rational::from_string(a_str), Rational::from_string(b_str), m, variant);
    out << basis_family_to_json(fam).dump(2) << "\n";
  });

  auto* c_lorentz = app.add_subcommand("lorentz", "least degree with nonnegative coefficients");
  c_lorentz->add_option("COEFFS", coeff_args, "rational coefficients, lowest degree first")
      ->required()
      ->expected(-1);
  c_lorentz->add_option("--cap", cap, "scan bound");
  c_lorentz->callback([&] {
    LorentzScan r = lorentz_degree(poly_from_args(coeff_args), cap);
    if (as_json) {
      json j{{"cap_exceeded", r.capped}};
      if (r.capped)
        j["cap"] = r.degree;
      else
        j["lorentz_degree"] = r.degree;
      out << j.dump(2) << "\n";
    } else if (r.capped) {
      out << "cap-exceeded " << r.degree << "\n";
    } else {
      out << r.degree << "\n";
    }
  });

  auto* c_verify = app.add_subcommand("verify", "check a family for the positive-basis criterion");
  c_verify->add_option("SET", set_expr)->required();
  c_verify->add_option("BASIS_JSON", basis_path, "path to a basis document, or - for stdin")
      ->required();
  bool rejected = false;
  c_verify->callback([&] {
    CompactSet omega = parse_set_expr(set_expr);
    json doc;
    if (basis_path == "-") {
      doc = json::parse(in);
    } else {
      std::ifstream f(basis_path);
      if (!f) throw DomainError("cannot open " + basis_path);
      doc = json::parse(f);
    }
    VerifyReport rep = verify_positive_basis(omega, polys_from_basis_json(doc));
    if (as_json)
      out << verify_report_to_json(rep).dump(2) << "\n";
    else if (rep.accept)
      out << "ACCEPT\n";
    else
      out << "REJECT " << to_string(rep.reason) << "\n";
    rejected = !rep.accept;
  });

  auto* c_oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  c_oracle->require_subcommand(1);
  auto* c_otau = c_oracle->add_subcommand("tau", "LP feasibility search vs the closed form");
  c_otau->add_option("OMEGA", omega_digits)->required();
  c_otau->callback([&] {
    OmegaSeq w = OmegaSeq::from_string(omega_digits);
    if (w.nodes() < 1) throw DomainError("need at least one node");
    if (w.nodes() > 10) throw TooLargeError("oracle tau is desk scale: at most 10 nodes");
    std::vector<Rational> ts;
    for (int i = 1; i <= w.nodes(); ++i) ts.emplace_back(i);
    NodeSystem t(std::move(ts));
    int formula = tau(w);
    int oracle = tau_oracle(w, t, canonical_abstract_witnesses(w, t));
    bool match = formula == oracle;
    if (as_json)
      out << json{{"omega", w.str()},
                  {"tau_formula", formula},
                  {"tau_oracle", oracle},
                  {"match", match}}
                 .dump(2)
          << "\n";
    else
      out << "formula=" << formula << " oracle=" << oracle << (match ? " MATCH" : " MISMATCH")
          << "\n";
    if (!match) throw Mismatch{};
  });
  auto* c_odn = c_oracle->add_subcommand("dn", "node-pattern enumeration vs the closed form");
  c_odn->add_option("SET", set_expr)->required();
  c_odn->add_option("N", n)->required();
  c_odn->callback([&] {
    CompactSet omega = parse_set_expr(set_expr);
    int formula = dn(omega, n).degree;
    int oracle = dn_oracle(omega, n);
    bool match = formula == oracle;
    if (as_json)
      out << json{{"n", n}, {"dn_formula", formula}, {"dn_oracle", oracle}, {"match", match}}
                 .dump(2)
          << "\n";
    else
      out << "formula=" << formula << " oracle=" << oracle << (match ? " MATCH" : " MISMATCH")
          << "\n";
    if (!match) throw Mismatch{};
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Mismatch&) {
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return 2;
  }
  return rejected ? 1 : 0;
}

}  // namespace posbasis
