#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sweedler/qcalc.hpp"

using namespace sweedler;

namespace {
FieldPtr Q() { return field_rationals(); }
}  // namespace

TEST_CASE("dual-basis relations for x^2 + 1") {
  QcalcPresentation qc =
      qcalc_presentation(Q(), polq_from_string("x^2+1", "x"), 6);
  REQUIRE(qc.relations.size() == 2);
  CHECK(qc.relations[0].to_string(qc.system.labels) == "a0.a0 - a1.a1 + 1");
  CHECK(qc.relations[1].to_string(qc.system.labels) == "a1.a0 + a0.a1");
  CHECK(dimension_sequence(qc.system, 6) ==
        std::vector<size_t>{1, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("dual-basis relations for x^2") {
  QcalcPresentation qc = qcalc_presentation(Q(), polq_from_string("x^2", "x"), 6);
  REQUIRE(qc.relations.size() == 2);
  CHECK(qc.relations[0].to_string(qc.system.labels) == "a0.a0");
  CHECK(qc.relations[1].to_string(qc.system.labels) == "a1.a0 + a0.a1");
}

TEST_CASE("degree-one modulus collapses to the base field") {
  QcalcPresentation qc =
      qcalc_presentation(Q(), polq_from_string("x-1", "x"), 4);
  CHECK(dimension_sequence(qc.system, 4) ==
        std::vector<size_t>{1, 0, 0, 0, 0});
}

TEST_CASE("the two presentations agree") {
  for (const char* ps : {"x^2", "x^2+1", "x^2-2", "x^3-2"}) {
    QcalcEquivalence eq =
        verify_qcalc_equivalence(Q(), polq_from_string(ps, "x"), 5);
    INFO(ps << ": " << (eq.failures.empty() ? "" : eq.failures.front()));
    CHECK(eq.relations_ok);
    CHECK(eq.dims_ok);
    CHECK(eq.dims_qcalc == eq.dims_matrix);
  }

  // Frozen sequences: the quadratic cases all share the 1, 2, 2, ...
  // pattern of the defining example, while the cubic grows.
  QcalcEquivalence cubic =
      verify_qcalc_equivalence(Q(), polq_from_string("x^3-2", "x"), 5);
  CHECK(cubic.dims_qcalc ==
        std::vector<size_t>({1, 3, 9, 24, 66, 180}));
  QcalcEquivalence quad =
      verify_qcalc_equivalence(Q(), polq_from_string("x^2+1", "x"), 5);
  CHECK(quad.dims_qcalc == std::vector<size_t>({1, 2, 2, 2, 2, 2}));
}

TEST_CASE("square-zero comparison") {
  PareigisReport rep = pareigis_check(Q(), 6);
  INFO((rep.failures.empty() ? std::string() : rep.failures.front()));
  CHECK(rep.ok());
  CHECK(rep.checks.size() == 4);
  CHECK_FALSE(rep.warning.empty());
  CHECK(rep.warning.find("anticommutator") != std::string::npos);
}
