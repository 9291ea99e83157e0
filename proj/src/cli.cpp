#include "sweedler/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "sweedler/dmodule.hpp"
#include "sweedler/graded_comodule.hpp"
#include "sweedler/json_io.hpp"
#include "sweedler/loop.hpp"
#include "sweedler/presentation.hpp"
#include "sweedler/qcalc.hpp"
#include "sweedler/vandermonde.hpp"

namespace sweedler {

namespace {

int env_bound(int fallback) {
  const char* e = std::getenv("SWEEDLER_BOUND");
  if (!e || !*e) return fallback;
  try {
    size_t pos = 0;
    int b = std::stoi(e, &pos);
    if (pos != std::string(e).size() || b < 1)
      throw std::invalid_argument("range");
    return b;
  } catch (const std::exception&) {
    throw InputError("SWEEDLER_BOUND must be a positive integer, got '" +
                     std::string(e) + "'");
  }
}

std::vector<size_t> csv_indices(const std::string& text, size_t n,
                                const std::string& what) {
  std::vector<size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size() || v < 1 || static_cast<size_t>(v) > n)
        throw std::invalid_argument("range");
      out.push_back(static_cast<size_t>(v - 1));
    } catch (const std::exception&) {
      throw InputError(what + " entries are 1-indexed positions between 1 and " +
                       std::to_string(n) + ", got '" + tok + "'");
    }
  }
  if (out.size() != n)
    throw InputError(what + " needs exactly " + std::to_string(n) +
                     " comma-separated entries");
  return out;
}

std::vector<Scalar> csv_scalars(const FieldPtr& f, const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(Scalar::from_string(f, tok));
  return out;
}

Json size_array(const std::vector<size_t>& v) {
  Json a = Json::array();
  for (size_t x : v) a.push_back(x);
  return a;
}

Json string_array(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const std::string& s : v) a.push_back(s);
  return a;
}

Json central_mat_json(const RMat<CentralPoly>& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::string extension_violation_text(const ExtensionViolation& v,
                                     const FinAlgebra& a) {
  if (v.unit_case)
    return "sigma(1) differs from 1 (x) 1: got " + v.actual;
  return "sigma is not multiplicative at (" + a.labels[v.i] + ", " +
         a.labels[v.j] + "): product of images " + v.claimed +
         ", image of product " + v.actual;
}

std::string measuring_violation_text(const MeasuringViolation& v,
                                     const MeasuringData& m) {
  if (v.unit_case)
    return "rho(" + m.H.labels[v.h] + ")(1) differs from eps * 1: got " +
           v.actual;
  return "the measuring law fails at (" + m.H.labels[v.h] + ", " +
         m.A.labels[v.p] + ", " + m.A.labels[v.q] + "): spread gives " +
         v.claimed + ", rho of the product gives " + v.actual;
}

// Shared state each subcommand handler fills in.
struct Job {
  std::string command;
  std::vector<std::string> warnings, violations;
  Json artifacts = Json::object();
};

struct PresentationArgs {
  std::string a = "quotient_poly(x^2+1)";
  std::string b = "same";
  int bound = 0;
  bool permuted = false;
};

SweedlerPresentation built(const PresentationArgs& p) {
  FieldPtr f = field_rationals();
  FinAlgebra A = parse_algebra_spec(f, p.a);
  FinAlgebra B = p.b == "same" ? A : parse_algebra_spec(f, p.b);
  return build_F(A, B, p.bound, p.permuted);
}

void add_presentation_options(CLI::App* cmd, PresentationArgs* p, int dflt) {
  cmd->add_option("--A", p->a, "left algebra (catalog spec, JSON, or @file)");
  cmd->add_option("--B", p->b, "right algebra, or 'same'");
  p->bound = dflt;
  cmd->add_option("--bound", p->bound, "completion degree bound");
  cmd->add_flag("--permuted", p->permuted,
                "resolve completion ambiguities in a permuted order");
}

struct ModuleArgs {
  PresentationArgs pres;
  std::string m = "regular";
  std::string n = "regular";
};

ModulePresentation built_module(const ModuleArgs& a) {
  SweedlerPresentation F = built(a.pres);
  FinModule M = parse_module_spec(F.A, a.m);
  FinModule N = parse_module_spec(F.B, a.n);
  return build_D(M, N, F, a.pres.bound, a.pres.permuted);
}

void add_module_options(CLI::App* cmd, ModuleArgs* a, int dflt) {
  add_presentation_options(cmd, &a->pres, dflt);
  cmd->add_option("--M", a->m, "module over A (regular, free(n), zero, JSON, @file)");
  cmd->add_option("--N", a->n, "module over B (same grammar)");
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult out;
  int eb8 = 8, eb6 = 6, eb3 = 3;
  try {
    eb8 = env_bound(8);
    eb6 = env_bound(6);
    eb3 = env_bound(3);
  } catch (const InputError& e) {
    Json report;
    report["command"] = "";
    report["status"] = "error";
    report["error"] = e.what();
    out.json = report.dump(2) + "\n";
    out.summary = std::string("input error: ") + e.what() + "\n";
    out.exit_code = 2;
    return out;
  }

  CLI::App app{"universal measuring algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough(true);
  std::string out_path;
  app.add_option("--out", out_path, "also write the JSON report to this path");

  Job job;
  std::function<void()> runner;
  auto arm = [&](CLI::App* cmd, std::function<void()> fn) {
    cmd->callback([&job, &runner, cmd, fn]() {
      job.command = cmd->get_name();
      runner = fn;
    });
  };

  // --- presentation family ----------------------------------------------
  auto pres_a = std::make_shared<PresentationArgs>();
  {
    CLI::App* c = app.add_subcommand("present", "build F(A,B) and its rules");
    add_presentation_options(c, pres_a.get(), eb8);
    arm(c, [&, pres_a]() {
      SweedlerPresentation F = built(*pres_a);
      job.artifacts["generators"] = string_array(F.system.labels);
      std::vector<std::string> rel;
      for (const NcPoly& r : F.relations) rel.push_back(r.to_string(F.system.labels));
      job.artifacts["relations"] = string_array(rel);
      job.artifacts["rules"] = string_array(rule_strings(F.system));
      job.artifacts["dimension_sequence"] =
          size_array(dimension_sequence(F.system, F.bound));
      if (F.square) {
        Json delta = Json::object();
        Json eps = Json::object();
        for (size_t g = 0; g < F.system.labels.size(); ++g) {
          delta[F.system.labels[g]] =
              F.delta[g].to_string(F.system.labels, F.system.labels);
          eps[F.system.labels[g]] = F.epsilon[g].to_string();
        }
        job.artifacts["delta"] = delta;
        job.artifacts["epsilon"] = eps;
      }
      if (auto note = square_zero_presentation_note(F)) job.warnings.push_back(*note);
    });
  }
  auto comul_a = std::make_shared<PresentationArgs>();
  {
    CLI::App* c = app.add_subcommand("comul", "comultiplication table of F(A,A)");
    add_presentation_options(c, comul_a.get(), eb8);
    arm(c, [&, comul_a]() {
      SweedlerPresentation F = built(*comul_a);
      if (!F.square)
        throw InputError("the comultiplication needs A == B with the unit in "
                         "basis slot 0");
      Json delta = Json::object();
      for (size_t g = 0; g < F.system.labels.size(); ++g)
        delta[F.system.labels[g]] =
            F.delta[g].to_string(F.system.labels, F.system.labels);
      job.artifacts["delta"] = delta;
    });
  }
  auto counit_a = std::make_shared<PresentationArgs>();
  {
    CLI::App* c = app.add_subcommand("counit", "counit table of F(A,A)");
    add_presentation_options(c, counit_a.get(), eb8);
    arm(c, [&, counit_a]() {
      SweedlerPresentation F = built(*counit_a);
      if (!F.square)
        throw InputError("the counit needs A == B with the unit in basis slot 0");
      Json eps = Json::object();
      for (size_t g = 0; g < F.system.labels.size(); ++g)
        eps[F.system.labels[g]] = F.epsilon[g].to_string();
      job.artifacts["epsilon"] = eps;
    });
  }
  auto hilbert_a = std::make_shared<PresentationArgs>();
  auto hilbert_dmax = std::make_shared<int>(-1);
  {
    CLI::App* c = app.add_subcommand("hilbert", "dimension sequence of F(A,B)");
    add_presentation_options(c, hilbert_a.get(), eb8);
    c->add_option("--dmax", *hilbert_dmax, "largest degree to count (default: bound)");
    arm(c, [&, hilbert_a, hilbert_dmax]() {
      SweedlerPresentation F = built(*hilbert_a);
      int dmax = *hilbert_dmax < 0 ? F.bound : *hilbert_dmax;
      job.artifacts["dimension_sequence"] =
          size_array(dimension_sequence(F.system, dmax));
    });
  }
  auto mapext_a = std::make_shared<PresentationArgs>();
  auto mapext_spec = std::make_shared<std::string>();
  {
    CLI::App* c = app.add_subcommand(
        "map-extension", "generator images of F(sigma) for an extension");
    add_presentation_options(c, mapext_a.get(), eb8);
    c->add_option("--extension", *mapext_spec,
                  "extension JSON: {\"S\": ..., \"sigma\": [[[...]]]}")
        ->required();
    arm(c, [&, mapext_a, mapext_spec]() {
      SweedlerPresentation F = built(*mapext_a);
      ExtensionMap e = extension_from_json(field_rationals(), F.A, F.B,
                                           load_json_argument(*mapext_spec));
      for (const ExtensionViolation& v : verify_extension(e))
        job.violations.push_back(extension_violation_text(v, e.A));
      if (!job.violations.empty()) return;
      ExtensionImageReport rep = F_of_extension(F, e);
      Json images = Json::object();
      for (size_t g = 0; g < F.system.labels.size(); ++g)
        images[F.system.labels[g]] = vec_json(rep.images[g]);
      job.artifacts["images"] = images;
      for (const std::string& s : rep.relation_failures) job.violations.push_back(s);
      for (const std::string& s : rep.compatibility_failures)
        job.violations.push_back(s);
    });
  }

  // --- quotient-polynomial comparisons ------------------------------------
  auto qcalc_p = std::make_shared<std::string>("x^2+1");
  auto qcalc_bound = std::make_shared<int>(eb8);
  {
    CLI::App* c = app.add_subcommand(
        "qcalc", "dual-basis presentation of F(k[x]/p, k[x]/p)");
    c->add_option("--p", *qcalc_p, "monic modulus in x");
    c->add_option("--bound", *qcalc_bound, "completion degree bound");
    arm(c, [&, qcalc_p, qcalc_bound]() {
      QcalcPresentation q = qcalc_presentation(
          field_rationals(), polq_from_string(*qcalc_p, "x"), *qcalc_bound);
      job.artifacts["generators"] = string_array(q.system.labels);
      std::vector<std::string> rel;
      for (const NcPoly& r : q.relations) rel.push_back(r.to_string(q.system.labels));
      job.artifacts["relations"] = string_array(rel);
      job.artifacts["rules"] = string_array(rule_strings(q.system));
      job.artifacts["dimension_sequence"] =
          size_array(dimension_sequence(q.system, q.bound));
    });
  }
  auto vq_p = std::make_shared<std::string>("x^2+1");
  auto vq_bound = std::make_shared<int>(eb8);
  {
    CLI::App* c = app.add_subcommand(
        "verify-qcalc", "cross-check the dual-basis and matrix presentations");
    c->add_option("--p", *vq_p, "monic modulus in x");
    c->add_option("--bound", *vq_bound, "completion degree bound");
    arm(c, [&, vq_p, vq_bound]() {
      QcalcEquivalence q = verify_qcalc_equivalence(
          field_rationals(), polq_from_string(*vq_p, "x"), *vq_bound);
      job.artifacts["relations_ok"] = q.relations_ok;
      job.artifacts["dims_ok"] = q.dims_ok;
      job.artifacts["dims_dual_basis"] = size_array(q.dims_qcalc);
      job.artifacts["dims_matrix"] = size_array(q.dims_matrix);
      for (const std::string& s : q.failures) job.violations.push_back(s);
      if (!q.dims_ok) job.violations.push_back("dimension sequences differ");
    });
  }
  auto par_bound = std::make_shared<int>(eb6);
  {
    CLI::App* c = app.add_subcommand(
        "pareigis", "compare F(k[d]/d^2, same) with the x, 1/y model");
    c->add_option("--bound", *par_bound, "comparison degree bound");
    arm(c, [&, par_bound]() {
      PareigisReport rep = pareigis_check(field_rationals(), *par_bound);
      job.artifacts["checks"] = string_array(rep.checks);
      if (!rep.warning.empty()) job.warnings.push_back(rep.warning);
      for (const std::string& s : rep.failures) job.violations.push_back(s);
    });
  }

  // --- comodules -----------------------------------------------------------
  auto chain_spec = std::make_shared<std::string>();
  auto chain_bound = std::make_shared<int>(eb8);
  auto chain_offset = std::make_shared<int>(-1);
  {
    CLI::App* c = app.add_subcommand(
        "chain-comodule", "coaction of a chain complex over F(k[d]/d^2, same)");
    c->add_option("--complex", *chain_spec,
                  "chain complex JSON: {\"dims\": [...], \"d\": [matrix...]}")
        ->required();
    c->add_option("--bound", *chain_bound, "presentation degree bound");
    c->add_option("--offset", *chain_offset,
                  "word-length offset of the differential leg (default -1; "
                  "+1 is the raised variant kept for comparison)");
    arm(c, [&, chain_spec, chain_bound, chain_offset]() {
      ChainComplex cc =
          complex_from_json(field_rationals(), load_json_argument(*chain_spec));
      GradedComodule g =
          chain_to_comodule_with_offset(cc, *chain_bound, *chain_offset);
      Json coact = Json::object();
      for (size_t n = 0; n < g.basis_labels.size(); ++n)
        coact[g.basis_labels[n]] =
            g.coaction[n].to_string(g.F.system.labels, g.basis_labels);
      job.artifacts["basis"] = string_array(g.basis_labels);
      job.artifacts["coaction"] = coact;
      if (*chain_offset != -1) job.warnings.push_back(raised_exponent_note());
      for (const std::string& s : check_graded_comodule(g))
        job.violations.push_back(s);
    });
  }

  // --- representations and field examples ----------------------------------
  auto rep_a = std::make_shared<PresentationArgs>();
  auto rep_images = std::make_shared<std::string>();
  {
    CLI::App* c = app.add_subcommand(
        "rep-measure", "measuring coalgebra from a representation of F(A,A)");
    add_presentation_options(c, rep_a.get(), eb8);
    c->add_option("--images", *rep_images,
                  "JSON list with one square matrix per generator")
        ->required();
    arm(c, [&, rep_a, rep_images]() {
      SweedlerPresentation F = built(*rep_a);
      Json list = load_json_argument(*rep_images);
      if (!list.is_array() || list.empty())
        throw InputError("--images needs a JSON array of matrices");
      std::vector<Mat> images;
      for (const Json& m : list)
        images.push_back(mat_from_json(field_rationals(), m));
      size_t vdim = images.front().rows();
      RepMeasuringReport rep = representation_to_measuring_coalgebra(F, images, vdim);
      job.artifacts["vdim"] = vdim;
      for (const std::string& s : rep.relation_failures) job.violations.push_back(s);
      if (!rep.ok()) return;
      job.artifacts["coalgebra"] = coalgebra_json(rep.measuring->H);
      Json sig = Json::array();
      for (const auto& row : rep.extension->sigma) {
        Json per = Json::array();
        for (const Vec& v : row) per.push_back(vec_json(v));
        sig.push_back(per);
      }
      job.artifacts["sigma"] = sig;
    });
  }

  struct RootArgs {
    std::string p = "x^2+1";
    std::string modulus;
    std::string roots;
    std::string sigma;
    int bound = 3;
  };
  auto make_vd = [](const RootArgs& ra) {
    FieldPtr f = ra.modulus.empty()
                     ? field_rationals()
                     : field_number(polq_from_string(ra.modulus, "t"));
    VandermondeData vd;
    vd.field = f;
    vd.p = polq_from_string(ra.p, "x");
    vd.roots = csv_scalars(f, ra.roots);
    vd.sigma = csv_indices(ra.sigma, vd.roots.size(), "--sigma");
    validate_vandermonde(vd);
    return vd;
  };
  auto add_root_options = [](CLI::App* c, RootArgs* ra) {
    c->add_option("--p", ra->p, "monic modulus in x");
    c->add_option("--modulus", ra->modulus,
                  "number-field modulus in t (omit for rationals)");
    c->add_option("--roots", ra->roots, "comma-separated roots of p")->required();
    c->add_option("--sigma", ra->sigma, "1-indexed root repositioning, e.g. 2,1")
        ->required();
  };
  auto galois_args = std::make_shared<RootArgs>();
  {
    CLI::App* c = app.add_subcommand(
        "galois", "root-repositioning extension and its field-map check");
    add_root_options(c, galois_args.get());
    galois_args->bound = eb3;
    c->add_option("--bound", galois_args->bound, "presentation bound for the relation check");
    arm(c, [&, galois_args]() {
      VandermondeData vd = make_vd(*galois_args);
      VandermondeExtension ve = vandermonde_extension(vd, galois_args->bound);
      job.artifacts["w"] = vec_json(ve.w);
      Json sig = Json::array();
      for (size_t s : vd.sigma) sig.push_back(s + 1);
      job.artifacts["sigma"] = sig;
      for (const std::string& s : ve.images.relation_failures)
        job.violations.push_back(s);
      for (const std::string& s : ve.images.compatibility_failures)
        job.violations.push_back(s);
      GaloisReport gr = galois_check(vd);
      job.artifacts["root_lines"] = string_array(gr.root_lines);
      job.artifacts["galois"] = gr.galois;
      for (const std::string& s : gr.failures) job.violations.push_back(s);
    });
  }
  auto monoid_args = std::make_shared<RootArgs>();
  auto monoid_tau = std::make_shared<std::string>();
  {
    CLI::App* c = app.add_subcommand(
        "monoid", "composition law of two root repositionings");
    add_root_options(c, monoid_args.get());
    c->add_option("--tau", *monoid_tau, "second repositioning, 1-indexed")
        ->required();
    arm(c, [&, monoid_args, monoid_tau]() {
      VandermondeData vd = make_vd(*monoid_args);
      std::vector<size_t> tau = csv_indices(*monoid_tau, vd.roots.size(), "--tau");
      MonoidReport mr = monoid_check(vd, tau);
      job.artifacts["law"] = mr.law;
      for (const std::string& s : mr.failures) job.violations.push_back(s);
    });
  }
  auto loop_p = std::make_shared<std::string>("x^2+1");
  auto loop_z = std::make_shared<std::string>();
  auto loop_bound = std::make_shared<int>(eb3);
  {
    CLI::App* c = app.add_subcommand(
        "loop", "one-parameter family from a nilpotent adjoint direction");
    c->add_option("--p", *loop_p, "monic modulus in x");
    c->add_option("--Z", *loop_z, "nilpotent matrix (JSON or @file)")->required();
    c->add_option("--bound", *loop_bound, "presentation bound for the relation check");
    arm(c, [&, loop_p, loop_z, loop_bound]() {
      FieldPtr f = field_rationals();
      LoopData ld;
      ld.field = f;
      ld.p = polq_from_string(*loop_p, "x");
      ld.Z = mat_from_json(f, load_json_argument(*loop_z));
      validate_loop(ld);
      SweedlerPresentation F =
          build_F(quotient_poly(f, ld.p), quotient_poly(f, ld.p), *loop_bound);
      LoopExtension le = loop_extension(ld, F);
      Json coeff = Json::array();
      for (const auto& m : le.coeff) coeff.push_back(central_mat_json(m));
      job.artifacts["coefficients"] = coeff;
      Json images = Json::object();
      for (size_t g = 0; g < F.system.labels.size(); ++g)
        images[F.system.labels[g]] = central_mat_json(le.images[g]);
      job.artifacts["images"] = images;
      for (const std::string& s : le.relation_failures) job.violations.push_back(s);
    });
  }

  // --- plain structure commands ---------------------------------------------
  auto dual_a = std::make_shared<std::string>("quotient_poly(x^2+1)");
  {
    CLI::App* c = app.add_subcommand("dual", "dual coalgebra of an algebra");
    c->add_option("--A", *dual_a, "algebra to dualize");
    arm(c, [&, dual_a]() {
      FinAlgebra a = parse_algebra_spec(field_rationals(), *dual_a);
      FinCoalgebra h = dual_coalgebra(a);
      job.artifacts["coalgebra"] = coalgebra_json(h);
      if (!algebra_eq(dual_algebra(h), a))
        job.violations.push_back("dualizing twice failed to return the input");
    });
  }
  auto conv_h = std::make_shared<std::string>("derivation_pair");
  auto conv_b = std::make_shared<std::string>("quotient_poly(x^2+1)");
  {
    CLI::App* c = app.add_subcommand(
        "convolution", "convolution algebra [H,B] on Hom(H,B)");
    c->add_option("--H", *conv_h, "coalgebra (catalog spec, JSON, or @file)");
    c->add_option("--B", *conv_b, "algebra");
    arm(c, [&, conv_h, conv_b]() {
      FieldPtr f = field_rationals();
      FinAlgebra conv = convolution_algebra(parse_coalgebra_spec(f, *conv_h),
                                            parse_algebra_spec(f, *conv_b));
      job.artifacts["algebra"] = algebra_json(conv);
    });
  }
  auto vm_spec = std::make_shared<std::string>();
  {
    CLI::App* c = app.add_subcommand(
        "verify-measuring", "check the measuring law on supplied data");
    c->add_option("--measuring", *vm_spec,
                  "measuring JSON: {\"H\":..., \"A\":..., \"B\":..., \"rho\":...}")
        ->required();
    arm(c, [&, vm_spec]() {
      MeasuringData m =
          measuring_from_json(field_rationals(), load_json_argument(*vm_spec));
      job.artifacts["H_dim"] = m.H.dim;
      job.artifacts["A_dim"] = m.A.dim;
      job.artifacts["B_dim"] = m.B.dim;
      for (const MeasuringViolation& v : verify_measuring(m))
        job.violations.push_back(measuring_violation_text(v, m));
    });
  }

  // --- module family ----------------------------------------------------------
  auto dmod_args = std::make_shared<ModuleArgs>();
  {
    CLI::App* c = app.add_subcommand(
        "dmodule", "universal measuring module D(M,N) over F(A,B)");
    add_module_options(c, dmod_args.get(), eb8);
    arm(c, [&, dmod_args]() {
      ModulePresentation d = built_module(*dmod_args);
      job.artifacts["generators"] = string_array(d.gen_labels);
      job.artifacts["module_rules"] = string_array(module_rule_strings(d.system));
      job.artifacts["dimension_sequence"] =
          size_array(module_dimension_sequence(d.system, d.bound));
    });
  }
  auto tau_args = std::make_shared<ModuleArgs>();
  {
    CLI::App* c = app.add_subcommand(
        "tau", "the universal module map M -> D(M,N) (x) N");
    add_module_options(c, tau_args.get(), eb8);
    arm(c, [&, tau_args]() {
      ModulePresentation d = built_module(*tau_args);
      TauReport rep = tau_map(d);
      Json table = Json::array();
      for (size_t p = 0; p < rep.tau.size(); ++p) {
        Json row = Json::array();
        for (const ModPoly& t : rep.tau[p])
          row.push_back(t.to_string(d.F.system.labels, d.gen_labels));
        table.push_back(row);
      }
      job.artifacts["tau"] = table;
      for (const std::string& s : rep.failures) job.violations.push_back(s);
    });
  }
  auto dext_args = std::make_shared<ModuleArgs>();
  auto dext_ext = std::make_shared<std::string>();
  auto dext_w = std::make_shared<std::string>("regular");
  auto dext_rho = std::make_shared<std::string>();
  {
    CLI::App* c = app.add_subcommand(
        "d-extension", "factor a module extension through D(M,N)");
    add_module_options(c, dext_args.get(), eb8);
    c->add_option("--extension", *dext_ext,
                  "algebra extension JSON: {\"S\": ..., \"sigma\": [[[...]]]}")
        ->required();
    c->add_option("--W", *dext_w, "module over S (regular, free(n), JSON, @file)");
    c->add_option("--rho", *dext_rho,
                  "JSON list: per M-basis element a (dim W) x (dim N) matrix")
        ->required();
    arm(c, [&, dext_args, dext_ext, dext_w, dext_rho]() {
      FieldPtr f = field_rationals();
      ModulePresentation d = built_module(*dext_args);
      ExtensionMap sigma =
          extension_from_json(f, d.F.A, d.F.B, load_json_argument(*dext_ext));
      FinModule w = parse_module_spec(sigma.S, *dext_w);
      Json list = load_json_argument(*dext_rho);
      if (!list.is_array())
        throw InputError("--rho needs a JSON array of matrices");
      std::vector<Mat> rho;
      for (const Json& m : list) rho.push_back(mat_from_json(f, m));
      DExtensionReport rep = D_of_extension(d, sigma, w, rho);
      Json images = Json::object();
      for (size_t g = 0; g < d.gen_labels.size(); ++g)
        images[d.gen_labels[g]] = vec_json(rep.images[g]);
      job.artifacts["images"] = images;
      for (const std::string& s : rep.module_map_failures) job.violations.push_back(s);
      for (const std::string& s : rep.relation_failures) job.violations.push_back(s);
      for (const std::string& s : rep.factorization_failures)
        job.violations.push_back(s);
    });
  }

  auto finish = [&](const std::string& status) {
    Json report;
    report["command"] = job.command;
    report["status"] = status;
    report["warnings"] = string_array(job.warnings);
    report["violations"] = string_array(job.violations);
    for (auto& [k, v] : job.artifacts.items()) report[k] = v;
    out.json = report.dump(2) + "\n";
    std::string sum = job.command + ": " + status + "\n";
    for (const std::string& w : job.warnings) sum += "  warn: " + w + "\n";
    for (const std::string& v : job.violations) sum += "  violation: " + v + "\n";
    out.summary = sum;
    if (!out_path.empty()) {
      std::ofstream dst(out_path, std::ios::binary);
      if (!dst) throw InputError("cannot write '" + out_path + "'");
      dst << out.json;
    }
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    runner();
    finish(job.violations.empty() ? (job.warnings.empty() ? "ok" : "warn")
                                  : "violations");
    out.exit_code = job.violations.empty() ? 0 : 1;
    return out;
  } catch (const CLI::Success&) {
    out.json = "";
    out.summary = app.help();
    out.exit_code = 0;
    return out;
  } catch (const CLI::ParseError& e) {
    out.json = "";
    out.summary = std::string("argument error: ") + e.what() + "\n";
    out.exit_code = 2;
    return out;
  } catch (const InputError& e) {
    Json report;
    report["command"] = job.command;
    report["status"] = "error";
    report["error"] = e.what();
    out.json = report.dump(2) + "\n";
    out.summary = std::string("input error: ") + e.what() + "\n";
    out.exit_code = 2;
    return out;
  } catch (const ComputeError& e) {
    Json report;
    report["command"] = job.command;
    report["status"] = "violations";
    report["warnings"] = Json::array();
    report["violations"] = Json::array({std::string(e.what())});
    out.json = report.dump(2) + "\n";
    out.summary = std::string("violation: ") + e.what() + "\n";
    out.exit_code = 1;
    return out;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliResult r = run_cli(args);
  if (!r.json.empty()) std::cout << r.json;
  if (!r.summary.empty()) std::cerr << r.summary;
  return r.exit_code;
}

}  // namespace sweedler
