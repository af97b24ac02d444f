#include "qch/geometry.hpp"
#include "qch/json_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

using namespace qch;
using qch::io::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

/// Built-in aliases: R<n> dihedral, A<m>u<u> Alexander, T<q> trivial;
/// anything else is a file path.
QuandleTable parse_quandle(const std::string& spec) {
  std::smatch m;
  if (std::regex_match(spec, m, std::regex("R([0-9]+)")))
    return make_dihedral(std::stoi(m[1]));
  if (std::regex_match(spec, m, std::regex("A([0-9]+)u([0-9]+)")))
    return make_alexander(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(spec, m, std::regex("T([0-9]+)")))
    return make_trivial(std::stoi(m[1]));
  return io::quandle_from_json(load_json(spec));
}

/// Z<d> for Z/d untwisted, Z<d>t<u> for Z/d with T = u; otherwise a file path.
CoefficientModule parse_coefficient(const std::string& spec) {
  std::smatch m;
  if (std::regex_match(spec, m, std::regex("Z([0-9]+)")))
    return CoefficientModule(Int(std::stoi(m[1])), Int(1));
  if (std::regex_match(spec, m, std::regex("Z([0-9]+)t(-?[0-9]+)")))
    return CoefficientModule(Int(std::stoi(m[1])), Int(std::stoi(m[2])));
  return io::coefficient_from_json(load_json(spec));
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

QVec qvec_or_zero(const json& params, const std::string& key, std::size_t n) {
  if (!params.contains(key)) return QVec(n, Rat(0));
  return io::qvec_from_json(params.at(key));
}

int run(int argc, char** argv) {
  CLI::App app{"finite quandle cohomology toolkit"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  auto* verify_cmd = app.add_subcommand("verify", "check the quandle axioms of a table");
  std::string verify_input;
  verify_cmd->add_option("input", verify_input, "quandle JSON file or alias")->required();

  auto* coh_cmd = app.add_subcommand("cohomology", "cohomology group of a finite quandle");
  std::string coh_quandle, coh_coeff, coh_module;
  int coh_degree = 2;
  coh_cmd->add_option("--quandle", coh_quandle)->required();
  coh_cmd->add_option("--coeff", coh_coeff)->required();
  coh_cmd->add_option("--degree", coh_degree)->check(CLI::Range(1, 6));
  coh_cmd->add_option("--module", coh_module, "quandle-module JSON replacing the constant module");

  auto* ext_cmd = app.add_subcommand("extend", "build the extension by a 2-cocycle");
  std::string ext_quandle, ext_coeff, ext_cocycle;
  ext_cmd->add_option("--quandle", ext_quandle)->required();
  ext_cmd->add_option("--coeff", ext_coeff)->required();
  ext_cmd->add_option("--cocycle", ext_cocycle)->required();

  auto* eq_cmd = app.add_subcommand("equiv", "decide equivalence of two 2-cocycles");
  std::string eq_quandle, eq_coeff, eq_psi, eq_phi;
  eq_cmd->add_option("--quandle", eq_quandle)->required();
  eq_cmd->add_option("--coeff", eq_coeff)->required();
  eq_cmd->add_option("--psi", eq_psi)->required();
  eq_cmd->add_option("--phi", eq_phi)->required();

  auto* pr_cmd = app.add_subcommand("principal", "extract the 2-cocycle of a principal extension");
  std::string pr_data, pr_coeff;
  pr_cmd->add_option("--data", pr_data)->required();
  pr_cmd->add_option("--coeff", pr_coeff)->required();

  auto* sp_cmd = app.add_subcommand("sphere", "sample the projective-plane cocycle");
  int sp_samples = 100;
  unsigned sp_seed = 12345;
  double sp_tol = 1e-9;
  sp_cmd->add_option("--samples", sp_samples)->check(CLI::PositiveNumber);
  sp_cmd->add_option("--seed", sp_seed);
  sp_cmd->add_option("--tol", sp_tol);

  auto* cert_cmd = app.add_subcommand("certify", "non-triviality certificates");
  cert_cmd->require_subcommand(1);
  auto* cert_lin = cert_cmd->add_subcommand("linear", "degree-2 certificate for linear quandles");
  auto* cert_app = cert_cmd->add_subcommand("appendix", "alternating-sum certificate");
  auto* cert_mod = cert_cmd->add_subcommand("module", "conjugation-module certificate");
  std::string cert_params;
  for (auto* c : {cert_lin, cert_app, cert_mod})
    c->add_option("--params", cert_params, "parameter JSON file")->required();

  auto* tw_cmd = app.add_subcommand("tower", "tower cohomology and truncated colimits");
  tw_cmd->require_subcommand(1);
  auto* tw_d = tw_cmd->add_subcommand("dihedral", "dihedral p-power tower");
  auto* tw_a = tw_cmd->add_subcommand("alexander", "Alexander p-power tower");
  auto* tw_f = tw_cmd->add_subcommand("file", "tower from JSON");
  int tw_p = 3, tw_u = 2, tw_depth = 2, tw_degree = 1;
  std::string tw_coeff = "", tw_file;
  for (auto* c : {tw_d, tw_a}) {
    c->add_option("--p", tw_p)->required();
    c->add_option("--depth", tw_depth)->check(CLI::Range(1, 6));
  }
  tw_a->add_option("--u", tw_u)->required();
  tw_d->add_option("--coeff", tw_coeff, "coefficients (default Z/p untwisted)");
  tw_f->add_option("--file", tw_file)->required();
  for (auto* c : {tw_d, tw_a, tw_f}) c->add_option("--degree", tw_degree)->check(CLI::Range(1, 6));

  CLI11_PARSE(app, argc, argv);

  if (*verify_cmd) {
    QuandleTable t = parse_quandle(verify_input);
    ValidationReport rep = verify_quandle(t);
    json out;
    out["ok"] = rep.ok();
    json viols = json::array();
    for (const auto& v : rep.violations) viols.push_back(v.describe());
    out["violations"] = std::move(viols);
    emit(out, format);
    return rep.ok() ? 0 : 1;
  }

  if (*coh_cmd) {
    QuandleTable x = parse_quandle(coh_quandle);
    CoefficientModule a = parse_coefficient(coh_coeff);
    CohomologyResult res =
        coh_module.empty()
            ? cohomology_group(x, a, coh_degree)
            : cohomology_group(
                  x, io::module_from_json(load_json(coh_module), a.factors(), x.size()),
                  coh_degree);
    emit(io::presentation_to_json(res.presentation()), format);
    return 0;
  }

  if (*ext_cmd) {
    QuandleTable x = parse_quandle(ext_quandle);
    CoefficientModule a = parse_coefficient(ext_coeff);
    CochainBasis b2(x, 2);
    CochainVec psi = io::cochain_from_json(b2, a.rank(), load_json(ext_cocycle));
    ExtensionTable e = extend(x, a, psi);
    emit(io::quandle_to_json(e.total), format);
    return 0;
  }

  if (*eq_cmd) {
    QuandleTable x = parse_quandle(eq_quandle);
    CoefficientModule a = parse_coefficient(eq_coeff);
    CochainBasis b2(x, 2);
    CochainVec psi = io::cochain_from_json(b2, a.rank(), load_json(eq_psi));
    CochainVec phi = io::cochain_from_json(b2, a.rank(), load_json(eq_phi));
    auto witness = equivalent(x, a, psi, phi);
    json out;
    out["equivalent"] = witness.has_value();
    if (witness)
      out["witness"] = io::cochain_to_json(CochainBasis(x, 1), a.rank(), *witness);
    else
      out["witness"] = nullptr;
    emit(out, format);
    return 0;
  }

  if (*pr_cmd) {
    PrincipalData d = io::principal_from_json(load_json(pr_data));
    CoefficientModule a = parse_coefficient(pr_coeff);
    CochainVec phi = extract_principal_cocycle(d, a);
    json out;
    out["cocycle"] = io::cochain_to_json(CochainBasis(d.base, 2), a.rank(), phi);
    out["vanishes"] = discrete_fiber_vanishing_check(d, a, phi);
    emit(out, format);
    return 0;
  }

  if (*sp_cmd) {
    std::mt19937 rng(sp_seed);
    std::printf("x1,y1,z1,x2,y2,z2,value,boundary\n");
    for (int i = 0; i < sp_samples; ++i) {
      auto v1 = random_unit_vector(rng, 3);
      auto v2 = random_unit_vector(rng, 3);
      auto p1 = project(v1, sp_tol);
      auto p2 = project(v2, sp_tol);
      std::optional<int> val;
      if (p1 && p2) {
        switch (classify_halfspace(sphere_op(p1->rep, p2->rep), sp_tol)) {
          case Region::Positive: val = 0; break;
          case Region::Negative: val = 1; break;
          case Region::Boundary: break;
        }
      }
      std::printf("%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s,%d\n", v1[0], v1[1], v1[2], v2[0],
                  v2[1], v2[2], val ? std::to_string(*val).c_str() : "", val ? 0 : 1);
    }
    return 0;
  }

  if (*cert_cmd) {
    json params = load_json(cert_params);
    Certificate cert;
    if (*cert_lin) {
      QMat s = io::qmat_from_json(params.at("S"));
      QMat t = io::qmat_from_json(params.at("T"));
      QMat c = io::qmat_from_json(params.at("C"));
      std::string mode = params.value("mode", "i");
      if (mode != "i" && mode != "ii") throw std::runtime_error("mode must be \"i\" or \"ii\"");
      cert = certify_linear(s, t, c,
                            mode == "i" ? LinearMode::SpectralIdentity
                                        : LinearMode::NegativeIdentityT,
                            qvec_or_zero(params, "u0", s.rows()),
                            qvec_or_zero(params, "v0", s.rows()));
    } else if (*cert_app) {
      QMat s = io::qmat_from_json(params.at("S"));
      QMat t = io::qmat_from_json(params.at("T"));
      QMat c = io::qmat_from_json(params.at("C"));
      cert = certify_appendix(s, t, c, params.at("k").get<int>(),
                              qvec_or_zero(params, "u0", s.rows()),
                              qvec_or_zero(params, "v0", s.rows()));
    } else {
      cert = certify_module_example(io::qmat_from_json(params.at("C1")),
                                    io::qvec_from_json(params.at("x")));
    }
    emit(io::certificate_to_json(cert, params), format);
    return 0;
  }

  if (*tw_cmd) {
    TowerSystem sys;
    if (*tw_d) {
      CoefficientModule coeff = tw_coeff.empty() ? CoefficientModule(Int(tw_p), Int(1))
                                                 : parse_coefficient(tw_coeff);
      sys = make_dihedral_tower(tw_p, tw_depth, coeff);
    } else if (*tw_a) {
      sys = make_alexander_tower(tw_p, tw_u, tw_depth);
    } else {
      sys = io::tower_from_json(load_json(tw_file));
    }
    emit(io::colimit_to_json(tower_cohomology(sys, tw_degree)), format);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::domain_error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
}
