#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sweedler/presentation.hpp"

using namespace sweedler;

namespace {

FieldPtr Q() { return field_rationals(); }

FinAlgebra gauss() { return quotient_poly(Q(), polq_from_string("x^2+1", "x")); }

// Two presentations generate the same ideal when each one's relations
// reduce to zero in the other's completed system.
bool same_ideal(const RewritingSystem& sys, const std::vector<NcPoly>& rels,
                const RewritingSystem& other_sys,
                const std::vector<NcPoly>& other_rels) {
  for (const NcPoly& r : rels)
    if (!reduces_to_zero(other_sys, r)) return false;
  for (const NcPoly& r : other_rels)
    if (!reduces_to_zero(sys, r)) return false;
  return true;
}

}  // namespace

TEST_CASE("presentation over the Gaussian numbers") {
  SweedlerPresentation F = build_F(gauss(), gauss(), 6);
  CHECK(F.system.labels == std::vector<std::string>{"f0", "f1"});
  CHECK(F.square);
  CHECK(F.unit_row_eliminated);

  // The completed system is exactly the frozen pair of rules.
  CHECK(rule_strings(F.system) ==
        std::vector<std::string>{"f0.f0 -> f1.f1 - 1", "f1.f0 -> -f0.f1"});
  CHECK(dimension_sequence(F.system, 6) ==
        std::vector<size_t>{1, 2, 2, 2, 2, 2, 2});

  // Ideal equality both ways against the two named relations.
  std::vector<NcPoly> named = {
      ncpoly_from_string(Q(), F.system.labels, "f0.f0 - f1.f1 + 1"),
      ncpoly_from_string(Q(), F.system.labels, "f0.f1 + f1.f0")};
  RewritingSystem named_sys = complete(Q(), F.system.labels, named,
                                       {.degree_bound = 6});
  CHECK(same_ideal(F.system, F.relations, named_sys, named));

  // Comultiplication and counit tables.
  REQUIRE(F.delta.size() == 2);
  TensorPoly df0(Q()), df1(Q());
  df0.add_term({0}, {}, Scalar::one(Q()));   // f0 (x) 1
  df0.add_term({1}, {0}, Scalar::one(Q()));  // f1 (x) f0
  df1.add_term({1}, {1}, Scalar::one(Q()));  // f1 (x) f1
  CHECK(F.delta[0] == df0);
  CHECK(F.delta[1] == df1);
  CHECK(F.epsilon[0].is_zero());
  CHECK(F.epsilon[1].is_one());

  CHECK(check_eta_multiplicative(F).empty());
  CHECK(check_delta_multiplicative(F).empty());
  CHECK(check_counit_laws(F).empty());
  CHECK(check_coassociativity(F).empty());
  CHECK_FALSE(square_zero_presentation_note(F).has_value());
}

TEST_CASE("presentation over the dual numbers") {
  SweedlerPresentation F = build_F(dual_numbers(Q()), dual_numbers(Q()), 6);
  std::vector<NcPoly> named = {
      ncpoly_from_string(Q(), F.system.labels, "f0.f0"),
      ncpoly_from_string(Q(), F.system.labels, "f0.f1 + f1.f0")};
  RewritingSystem named_sys = complete(Q(), F.system.labels, named,
                                       {.degree_bound = 6});
  CHECK(same_ideal(F.system, F.relations, named_sys, named));
  CHECK(dimension_sequence(F.system, 6) ==
        std::vector<size_t>{1, 2, 2, 2, 2, 2, 2});

  // Delta f0 = f0 (x) 1 + f1 (x) f0, Delta f1 = f1 (x) f1.
  TensorPoly df0(Q()), df1(Q());
  df0.add_term({0}, {}, Scalar::one(Q()));
  df0.add_term({1}, {0}, Scalar::one(Q()));
  df1.add_term({1}, {1}, Scalar::one(Q()));
  CHECK(F.delta[0] == df0);
  CHECK(F.delta[1] == df1);
  CHECK(F.epsilon[0].is_zero());
  CHECK(F.epsilon[1].is_one());

  auto note = square_zero_presentation_note(F);
  REQUIRE(note.has_value());
  CHECK(note->find("anticommutator") != std::string::npos);
  CHECK(note->find("do not follow") != std::string::npos);
}

TEST_CASE("bialgebra laws hold for the catalog squares") {
  for (const FinAlgebra& a :
       {gauss(), dual_numbers(Q()), conjugation_algebra(Q())}) {
    SweedlerPresentation F = build_F(a, a, 5);  // build verifies the laws
    CHECK(F.square);
    CHECK(check_coassociativity(F).empty());
  }
}

TEST_CASE("factorization through an intermediate algebra") {
  SweedlerPresentation FAA = build_F(gauss(), gauss(), 5);
  FactorizationResult self = comultiplication_through(FAA, FAA, FAA);
  REQUIRE(self.images.size() == 2);
  CHECK(self.images[0] == FAA.delta[0]);
  CHECK(self.images[1] == FAA.delta[1]);
  CHECK(self.failures.empty());

  FinAlgebra conj = conjugation_algebra(Q());
  SweedlerPresentation FAB = build_F(gauss(), conj, 5);
  SweedlerPresentation FBC = build_F(conj, gauss(), 5);
  FactorizationResult through =
      comultiplication_through(FAA, FAB, FBC);
  CHECK(through.failures.empty());

  SweedlerPresentation FCC = build_F(conj, conj, 5);
  SweedlerPresentation FDB = build_F(dual_numbers(Q()), conj, 5);
  SweedlerPresentation FBD = build_F(conj, dual_numbers(Q()), 5);
  SweedlerPresentation FDD = build_F(dual_numbers(Q()), dual_numbers(Q()), 5);
  CHECK(comultiplication_through(FDD, FDB, FBD).failures.empty());
  CHECK(comultiplication_through(FCC, FCC, FCC).failures.empty());
}

TEST_CASE("F(A, base field) recovers A across the catalog") {
  FinAlgebra k = base_field_algebra(Q());
  for (const FinAlgebra& a :
       {gauss(), quotient_poly(Q(), polq_from_string("x^3-2", "x")),
        quotient_poly(Q(), polq_from_string("x^2", "x")), dual_numbers(Q()),
        conjugation_algebra(Q()), matrix_algebra(Q(), 2),
        base_field_algebra(Q())}) {
    SweedlerPresentation F = build_F(a, k, 5);
    AlgebraComparison cmp = compare_F_to_A(F);
    INFO(a.labels.size() << "-dim algebra: "
                         << (cmp.notes.empty() ? "" : cmp.notes.front()));
    CHECK(cmp.ok());
  }
}

TEST_CASE("F(base field, A) is trivial") {
  FinAlgebra k = base_field_algebra(Q());
  for (const FinAlgebra& a :
       {gauss(), dual_numbers(Q()), conjugation_algebra(Q()),
        matrix_algebra(Q(), 2)}) {
    SweedlerPresentation F = build_F(k, a, 5);
    CHECK(F.system.ngens() == 0);
    auto dims = dimension_sequence(F.system, 5);
    CHECK(dims == std::vector<size_t>{1, 0, 0, 0, 0, 0});
  }
}

TEST_CASE("the induced map of a conjugation extension") {
  FinAlgebra a = gauss(), s = base_field_algebra(Q());
  SweedlerPresentation F = build_F(a, a, 5);
  // sigma(x) = 1 (x) (-x): a valid extension A -> Q (x) A.
  ExtensionMap e{a, s, a,
                 std::vector<std::vector<Vec>>(
                     2, std::vector<Vec>(1, Vec(2, Scalar::zero(Q()))))};
  e.sigma[0][0][0] = Scalar::one(Q());
  e.sigma[1][0][1] = Scalar::of_int(Q(), -1);
  CHECK(verify_extension(e).empty());
  ExtensionImageReport rep = F_of_extension(F, e);
  CHECK(rep.ok());
  REQUIRE(rep.images.size() == 2);
  CHECK(rep.images[0][0].is_zero());                    // f0 -> 0
  CHECK(rep.images[1][0] == Scalar::of_int(Q(), -1));   // f1 -> -1

  // Breaking sigma must surface as a relation failure.
  e.sigma[1][0][1] = Scalar::of_int(Q(), 2);
  ExtensionImageReport bad = F_of_extension(F, e);
  CHECK_FALSE(bad.relation_failures.empty());
}

TEST_CASE("the induced map of the regular representation") {
  FinAlgebra a = gauss();
  SweedlerPresentation F = build_F(a, a, 5);
  std::vector<Mat> theta = {left_mult_matrix(a, 0), left_mult_matrix(a, 1)};
  MatrixImageReport rep = F_of_representation(F, theta);
  CHECK(rep.ok());
  CHECK(rep.images[0] == theta[1]);  // f0 = f_{x,0} -> multiplication by x
  CHECK(mat_is_zero(rep.images[1]));

  // A non-representation fails.
  std::vector<Mat> bogus = {mat_identity(Q(), 2), mat_identity(Q(), 2)};
  CHECK_FALSE(F_of_representation(F, bogus).ok());
}

TEST_CASE("general unit rows add linear relations") {
  FinAlgebra m2 = matrix_algebra(Q(), 2), k = base_field_algebra(Q());
  SweedlerPresentation F = build_F(m2, k, 5);
  CHECK_FALSE(F.unit_row_eliminated);
  CHECK(F.system.ngens() == 4);
  CHECK(F.system.labels[0] == "fE11_0");
  CHECK(compare_F_to_A(F).ok());
}

TEST_CASE("relation images in matrices over central polynomials") {
  SweedlerPresentation F = build_F(gauss(), gauss(), 5);
  // f0 -> [[0, L^2-1],[1, 0]], f1 -> diag(L, -L) satisfies both relations.
  FieldPtr q = Q();
  RMat<CentralPoly> m0(2, 2, CentralPoly::zero(q)), m1(2, 2,
                                                       CentralPoly::zero(q));
  CentralPoly L = CentralPoly::lambda(q);
  m0.at(0, 1) = L * L - CentralPoly::one(q);
  m0.at(1, 0) = CentralPoly::one(q);
  m1.at(0, 0) = L;
  m1.at(1, 1) = CentralPoly::zero(q) - L;
  CHECK(relations_vanish_in_central_matrices(F, {m0, m1}, 2).empty());
  // Drop the off-diagonal entry and the first relation survives.
  m0.at(1, 0) = CentralPoly::zero(q);
  CHECK_FALSE(relations_vanish_in_central_matrices(F, {m0, m1}, 2).empty());
}

TEST_CASE("a two-dimensional representation induces a measuring") {
  SweedlerPresentation F = build_F(gauss(), gauss(), 5);
  FieldPtr q = Q();
  // f0 -> [[0,1],[3,0]], f1 -> diag(2,-2): f0^2 = 3 = f1^2 - 1.
  Mat m0 = mat_zero(q, 2, 2), m1 = mat_zero(q, 2, 2);
  m0.at(0, 1) = Scalar::one(q);
  m0.at(1, 0) = Scalar::of_int(q, 3);
  m1.at(0, 0) = Scalar::of_int(q, 2);
  m1.at(1, 1) = Scalar::of_int(q, -2);
  RepMeasuringReport rep = representation_to_measuring_coalgebra(F, {m0, m1}, 2);
  REQUIRE(rep.ok());
  REQUIRE(rep.measuring.has_value());
  CHECK(rep.measuring->H.dim == 4);
  CHECK(coalgebra_eq(rep.measuring->H, matrix_coalgebra(q, 2)));
  CHECK(verify_measuring(*rep.measuring).empty());

  // sigma(x) = theta(f0) (x) 1 + theta(f1) (x) x over the E_uv basis.
  const ExtensionMap& e = *rep.extension;
  CHECK(e.sigma[1][1][0] == Scalar::one(q));
  CHECK(e.sigma[1][2][0] == Scalar::of_int(q, 3));
  CHECK(e.sigma[1][0][1] == Scalar::of_int(q, 2));
  CHECK(e.sigma[1][3][1] == Scalar::of_int(q, -2));
}

TEST_CASE("the rotation representation induces a measuring") {
  SweedlerPresentation F = build_F(gauss(), gauss(), 5);
  FieldPtr q = Q();
  // f1 -> 0 kills the x-leg: theta . eta is x |-> rotation (x) 1.
  Mat m0 = mat_zero(q, 2, 2), m1 = mat_zero(q, 2, 2);
  m0.at(0, 1) = Scalar::one(q);
  m0.at(1, 0) = Scalar::of_int(q, -1);
  RepMeasuringReport rep = representation_to_measuring_coalgebra(F, {m0, m1}, 2);
  REQUIRE(rep.ok());
  CHECK(verify_measuring(*rep.measuring).empty());
}

TEST_CASE("a relation-breaking representation is reported") {
  SweedlerPresentation F = build_F(gauss(), gauss(), 5);
  FieldPtr q = Q();
  // f0^2 = I but f1^2 - 1 = 3I: the first relation fails.
  Mat m0 = mat_zero(q, 2, 2), m1 = mat_zero(q, 2, 2);
  m0.at(0, 1) = Scalar::one(q);
  m0.at(1, 0) = Scalar::one(q);
  m1.at(0, 0) = Scalar::of_int(q, 2);
  m1.at(1, 1) = Scalar::of_int(q, -2);
  RepMeasuringReport rep = representation_to_measuring_coalgebra(F, {m0, m1}, 2);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.measuring.has_value());
  CHECK_THROWS_AS(
      representation_to_measuring_coalgebra(F, {m0, m1}, 3), InputError);
}

TEST_CASE("parameterized diagonal images satisfy the relations") {
  SweedlerPresentation F = build_F(gauss(), gauss(), 5);
  FieldPtr q = Q();
  // f0 -> [[0, L+1],[L-1, 0]], f1 -> diag(L, -L): (L+1)(L-1) = L^2 - 1.
  RMat<CentralPoly> m0(2, 2, CentralPoly::zero(q)), m1(2, 2,
                                                       CentralPoly::zero(q));
  CentralPoly L = CentralPoly::lambda(q);
  m0.at(0, 1) = L + CentralPoly::one(q);
  m0.at(1, 0) = L - CentralPoly::one(q);
  m1.at(0, 0) = L;
  m1.at(1, 1) = CentralPoly::zero(q) - L;
  CHECK(relations_vanish_in_central_matrices(F, {m0, m1}, 2).empty());
}
