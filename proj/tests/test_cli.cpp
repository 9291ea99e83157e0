#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "sweedler/cli.hpp"
#include "sweedler/json_io.hpp"

using namespace sweedler;

namespace {

Json report(const CliResult& r) { return Json::parse(r.json); }

CliResult run(std::initializer_list<std::string> args) {
  return run_cli(std::vector<std::string>(args));
}

}  // namespace

TEST_CASE("present: gauss rules, relations and bialgebra tables") {
  CliResult r = run({"present", "--A", "quotient_poly(x^2+1)", "--bound", "4"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["status"] == "ok");
  CHECK(j["rules"] == Json::array({"f0.f0 -> f1.f1 - 1", "f1.f0 -> -f0.f1"}));
  CHECK(j["dimension_sequence"] == Json::array({1, 2, 2, 2, 2}));
  CHECK(j["delta"]["f0"] == "f0(x)1 + f1(x)f0");
  CHECK(j["delta"]["f1"] == "f1(x)f1");
  CHECK(j["epsilon"]["f0"] == "0");
  CHECK(j["epsilon"]["f1"] == "1");
  // field order is pinned so identical jobs give identical bytes
  auto keys = std::vector<std::string>{};
  for (auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys[0] == "command");
  CHECK(keys[1] == "status");
  CHECK(keys[2] == "warnings");
  CHECK(keys[3] == "violations");
}

TEST_CASE("present: reports are byte-identical across runs and schedules") {
  CliResult a = run({"present", "--A", "conjugation_algebra", "--bound", "5"});
  CliResult b = run({"present", "--A", "conjugation_algebra", "--bound", "5"});
  CliResult c = run({"present", "--A", "conjugation_algebra", "--bound", "5",
                     "--permuted"});
  CHECK(a.json == b.json);
  CHECK(a.json == c.json);
  CHECK(!a.json.empty());
  CHECK(a.json.back() == '\n');
}

TEST_CASE("present: dual numbers carry the square-zero warning, exit 0") {
  CliResult r = run({"present", "--A", "dual_numbers", "--bound", "4"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["status"] == "warn");
  REQUIRE(j["warnings"].size() == 1);
  std::string w = j["warnings"][0];
  CHECK(w.find("f0.f1 = f1.f0 = 0") != std::string::npos);
}

TEST_CASE("hilbert: sequence artifact with dmax") {
  CliResult r = run({"hilbert", "--A", "quotient_poly(x^2+1)", "--bound", "5",
                     "--dmax", "4"});
  Json j = report(r);
  CHECK(j["dimension_sequence"] == Json::array({1, 2, 2, 2, 2}));
}

TEST_CASE("input errors: exit 2 with a named complaint") {
  CliResult bad = run({"present", "--A", "nonsense_algebra"});
  CHECK(bad.exit_code == 2);
  Json j = report(bad);
  CHECK(j["status"] == "error");
  std::string e = j["error"];
  CHECK(e.find("quotient_poly(p)") != std::string::npos);
  CHECK(e.find("dual_numbers") != std::string::npos);

  CliResult mal = run({"present", "--A", "quotient_poly(x^+1)"});
  CHECK(mal.exit_code == 2);
  std::string m = report(mal)["error"];
  CHECK(m.find("offset 2") != std::string::npos);

  CliResult cmd = run({"no-such-command"});
  CHECK(cmd.exit_code == 2);

  CliResult mix = run({"comul", "--A", "matrix_algebra(2)", "--B", "base_field"});
  CHECK(mix.exit_code == 2);
  CHECK(report(mix)["status"] == "error");
}

TEST_CASE("qcalc: dual-basis dimension sequence for a cubic modulus") {
  CliResult r = run({"qcalc", "--p", "x^3-2", "--bound", "5"});
  CHECK(r.exit_code == 0);
  CHECK(report(r)["dimension_sequence"] ==
        Json::array({1, 3, 9, 24, 66, 180}));
}

TEST_CASE("verify-qcalc: presentations agree for x^3-2") {
  CliResult r = run({"verify-qcalc", "--p", "x^3-2", "--bound", "4"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["relations_ok"] == true);
  CHECK(j["dims_ok"] == true);
  CHECK(j["dims_dual_basis"] == j["dims_matrix"]);
}

TEST_CASE("pareigis: checks pass, square-zero warning, exit 0") {
  CliResult r = run({"pareigis", "--bound", "5"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["status"] == "warn");
  CHECK(j["violations"].empty());
  CHECK(j["checks"].size() > 0);
}

TEST_CASE("galois: swapping conjugate roots is a field map") {
  CliResult r = run({"galois", "--p", "x^2+1", "--modulus", "t^2+1", "--roots",
                     "t,-t", "--sigma", "2,1"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["status"] == "ok");
  CHECK(j["w"] == Json::array({"0", "-1"}));
  CHECK(j["galois"] == true);
}

TEST_CASE("galois: the constant repositioning is not, exit 1") {
  CliResult r = run({"galois", "--p", "x^2-2", "--modulus", "t^2-2", "--roots",
                     "t,-t", "--sigma", "1,1"});
  CHECK(r.exit_code == 1);
  Json j = report(r);
  CHECK(j["status"] == "violations");
  CHECK(j["w"] == Json::array({"t", "0"}));
  CHECK(j["galois"] == false);
  REQUIRE(j["violations"].size() == 1);
}

TEST_CASE("galois: sigma entries are validated as 1-indexed positions") {
  CliResult r = run({"galois", "--p", "x^2+1", "--modulus", "t^2+1", "--roots",
                     "t,-t", "--sigma", "0,1"});
  CHECK(r.exit_code == 2);
  std::string e = report(r)["error"];
  CHECK(e.find("1-indexed") != std::string::npos);
}

TEST_CASE("monoid: composition law artifact") {
  CliResult r = run({"monoid", "--p", "x^2+1", "--modulus", "t^2+1", "--roots",
                     "t,-t", "--sigma", "2,1", "--tau", "1,1"});
  CHECK(r.exit_code == 0);
  CHECK(report(r)["law"] == "W(sigma).W(tau) = W(tau o sigma)");
}

TEST_CASE("loop: strict upper triangular direction, pinned coefficients") {
  CliResult r = run({"loop", "--p", "x^2+1", "--Z",
                     R"([["0","1"],["0","0"]])"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  Json c0 = Json::array({Json::array({"0", "L^2 - 1"}), Json::array({"1", "0"})});
  Json c1 = Json::array({Json::array({"L", "0"}), Json::array({"0", "-L"})});
  CHECK(j["coefficients"] == Json::array({c0, c1}));
}

TEST_CASE("loop: Z = 0 collapses to the companion matrix") {
  CliResult r = run({"loop", "--p", "x^2+1", "--Z",
                     R"([["0","0"],["0","0"]])"});
  Json j = report(r);
  CHECK(j["coefficients"][0] ==
        Json::array({Json::array({"0", "-1"}), Json::array({"1", "0"})}));
  CHECK(j["coefficients"][1] ==
        Json::array({Json::array({"0", "0"}), Json::array({"0", "0"})}));
}

TEST_CASE("chain-comodule: two-term complex passes at the default offset") {
  CliResult r = run({"chain-comodule", "--complex",
                     R"({"dims":[1,1],"d":[[["1"]]]})"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["status"] == "ok");
  CHECK(j["basis"] == Json::array({"m0_0", "m1_0"}));
}

TEST_CASE("chain-comodule: the raised offset fails coassociativity") {
  CliResult r = run({"chain-comodule", "--complex",
                     R"({"dims":[1,1],"d":[[["1"]]]})", "--offset", "1"});
  CHECK(r.exit_code == 1);
  Json j = report(r);
  CHECK(j["status"] == "violations");
  CHECK(j["warnings"].size() == 1);
  CHECK(j["violations"].size() > 0);
}

TEST_CASE("rep-measure: a relation-respecting representation dualizes") {
  CliResult r = run({"rep-measure", "--A", "quotient_poly(x^2+1)", "--bound",
                     "4", "--images",
                     R"([[["0","1"],["3","0"]],[["2","0"],["0","-2"]]])"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["vdim"] == 2);
  CHECK(j["coalgebra"]["dim"] == 4);
}

TEST_CASE("rep-measure: relation failures are located, exit 1") {
  CliResult r = run({"rep-measure", "--A", "quotient_poly(x^2+1)", "--bound",
                     "4", "--images",
                     R"([[["0","-1"],["1","0"]],[["0","1"],["1","0"]]])"});
  CHECK(r.exit_code == 1);
  Json j = report(r);
  REQUIRE(j["violations"].size() > 0);
  std::string v = j["violations"][0];
  CHECK(v.find("f0.f0 - f1.f1 + 1") != std::string::npos);
}

TEST_CASE("dual: dualizes and round-trips") {
  CliResult r = run({"dual", "--A", "conjugation_algebra"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["coalgebra"]["dim"] == 4);
  FinCoalgebra h = coalgebra_from_json(field_rationals(), j["coalgebra"]);
  CHECK(algebra_eq(dual_algebra(h), conjugation_algebra(field_rationals())));
}

TEST_CASE("convolution: [H,B] artifact has dim H * dim B") {
  CliResult r = run({"convolution", "--H", "derivation_pair", "--B",
                     "quotient_poly(x^2+1)"});
  Json j = report(r);
  CHECK(j["algebra"]["dim"] == 4);
  FinAlgebra conv = algebra_from_json(field_rationals(), j["algebra"]);
  CHECK(conv.dim == 4);
}

TEST_CASE("verify-measuring: an algebra map under grouplike passes") {
  const char* good =
      R"x({"H":"grouplike","A":"quotient_poly(x^2+1)",)x"
      R"x("B":"quotient_poly(x^2+1)","rho":[[["1","0"],["0","1"]]]})x";
  CliResult r = run({"verify-measuring", "--measuring", good});
  CHECK(r.exit_code == 0);
  CHECK(report(r)["status"] == "ok");
}

TEST_CASE("verify-measuring: a perturbed entry is caught and located") {
  const char* bad =
      R"x({"H":"grouplike","A":"quotient_poly(x^2+1)",)x"
      R"x("B":"quotient_poly(x^2+1)","rho":[[["1","0"],["1","1"]]]})x";
  CliResult r = run({"verify-measuring", "--measuring", bad});
  CHECK(r.exit_code == 1);
  Json j = report(r);
  REQUIRE(j["violations"].size() > 0);
  std::string v = j["violations"][0];
  CHECK(v.find("measuring law fails") != std::string::npos);
}

TEST_CASE("dmodule: regular modules over gauss give the frozen rules") {
  CliResult r = run({"dmodule", "--A", "quotient_poly(x^2+1)", "--bound", "4"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["module_rules"] ==
        Json::array({"G(1,1) -> f0.G(0,1) + f1.G(0,0)",
                     "G(1,0) -> -f1.G(0,1) + f0.G(0,0)"}));
  CHECK(j["dimension_sequence"] == Json::array({2, 4, 4, 4, 4}));
}

TEST_CASE("tau: the universal map table, law checked") {
  CliResult r = run({"tau", "--A", "quotient_poly(x^2+1)", "--bound", "4"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["tau"][0] == Json::array({"G(0,0)", "G(0,1)"}));
  CHECK(j["tau"][1] == Json::array({"-f1.G(0,1) + f0.G(0,0)",
                                    "f0.G(0,1) + f1.G(0,0)"}));
}

TEST_CASE("d-extension: conjugation factors through D") {
  CliResult r = run({"d-extension", "--A", "quotient_poly(x^2+1)", "--bound",
                     "4", "--extension",
                     R"({"S":"base_field","sigma":[[["1","0"]],[["0","-1"]]]})",
                     "--W", "regular", "--rho",
                     R"([[["1","0"]],[["0","-1"]]])"});
  CHECK(r.exit_code == 0);
  Json j = report(r);
  CHECK(j["status"] == "ok");
  CHECK(j["images"]["G(1,1)"] == Json::array({"-1"}));
}

TEST_CASE("map-extension: generator images and a broken map") {
  CliResult ok = run({"map-extension", "--A", "quotient_poly(x^2+1)", "--bound",
                      "4", "--extension",
                      R"({"S":"base_field","sigma":[[["1","0"]],[["0","-1"]]]})"});
  CHECK(ok.exit_code == 0);
  Json j = report(ok);
  CHECK(j["images"]["f0"] == Json::array({"0"}));
  CHECK(j["images"]["f1"] == Json::array({"-1"}));

  CliResult bad = run({"map-extension", "--A", "quotient_poly(x^2+1)",
                       "--bound", "4", "--extension",
                       R"({"S":"base_field","sigma":[[["1","0"]],[["1","-1"]]]})"});
  CHECK(bad.exit_code == 1);
  Json b = report(bad);
  CHECK(b["status"] == "violations");
  std::string v = b["violations"][0];
  CHECK(v.find("not multiplicative") != std::string::npos);
}

TEST_CASE("--out: writes the same bytes as stdout, anywhere on the line") {
  std::string path = "cli_out_check.json";
  CliResult r = run({"present", "--A", "quotient_poly(x^2+1)", "--bound", "3",
                     "--out", path});
  CHECK(r.exit_code == 0);
  std::ifstream in(path, std::ios::binary);
  std::string written((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(written == r.json);
  std::remove(path.c_str());
}

TEST_CASE("json round trips: algebra, coalgebra, module") {
  FieldPtr f = field_rationals();
  FinAlgebra a = conjugation_algebra(f);
  CHECK(algebra_eq(algebra_from_json(f, algebra_json(a)), a));
  FinCoalgebra h = dual_coalgebra(matrix_algebra(f, 2));
  CHECK(coalgebra_eq(coalgebra_from_json(f, coalgebra_json(h)), h));
  FinModule m = regular_module(a);
  CHECK(module_eq(module_from_json(a, module_json(m)), m));
}

TEST_CASE("module specs: free(n) stacks the regular module") {
  FieldPtr f = field_rationals();
  FinAlgebra a = quotient_poly(f, polq_from_string("x^2+1", "x"));
  FinModule m = parse_module_spec(a, "free(3)");
  CHECK(m.dim == 6);
  FinModule z = parse_module_spec(a, "zero");
  CHECK(z.dim == 0);
}

TEST_CASE("summaries carry the status line") {
  CliResult r = run({"present", "--A", "dual_numbers", "--bound", "3"});
  CHECK(r.summary.rfind("present: warn", 0) == 0);
  CliResult v = run({"galois", "--p", "x^2-2", "--modulus", "t^2-2", "--roots",
                     "t,-t", "--sigma", "1,1"});
  CHECK(v.summary.rfind("galois: violations", 0) == 0);
}
