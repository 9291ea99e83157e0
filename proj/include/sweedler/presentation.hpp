#pragma once
// The universal measuring algebra F(A,B) as a finite presentation.
//
// F(A,B) is generated by symbols f_ir (one per pair of an A-basis row and
// a B-basis column) subject to the relations that make
//
//   eta: A -> F(A,B) (x) B,   eta(a_i) = sum_r f_ir (x) b_r
//
// an algebra map.  Concretely, writing B_r for left multiplication by b_r
// on B, the relations are all matrix entries of
//
//   (sum_r f_ir B_r)(sum_s f_js B_s) - sum_{k,r} c_ij^k f_kr B_r
//
// taking care not to assume the f's commute.  When the unit of A is the
// basis vector a_0 the unit row is eliminated up front by substituting
// f_0r := (unit of B)_r; otherwise every row is kept and the linear
// relations sum_i unit_i f_ir = (unit of B)_r are added.
//
// When A == B (same table, unit = basis 0) the presentation carries a
// comultiplication Delta f_is = delta_{s0} f_i0 (x) 1 + sum_{r>=1} f_ir (x) f_rs
// and counit eps(f_ir) = delta_ir making it a bialgebra; the checks for
// those laws reduce everything inside the completed system.

#include <optional>
#include <string>
#include <vector>

#include "sweedler/algebra.hpp"
#include "sweedler/coalgebra.hpp"
#include "sweedler/ncpoly.hpp"
#include "sweedler/rewriting.hpp"

namespace sweedler {

struct SweedlerPresentation {
  FinAlgebra A, B;
  // (row in A, column in B) of each generator, parallel to system.labels.
  std::vector<std::pair<size_t, size_t>> gen_index;
  std::vector<NcPoly> relations;  // defining relations (nonzero ones)
  RewritingSystem system;
  int bound = 0;
  bool unit_row_eliminated = false;
  bool square = false;  // A == B with unit basis 0: Delta/eps defined
  // eta[i][r] = F-coordinate of eta(a_i) at b_r (monomial f_ir, or the
  // unit-row constant).
  std::vector<std::vector<NcPoly>> eta;
  // Square case only; indexed like system.labels.
  std::vector<TensorPoly> delta;
  std::vector<Scalar> epsilon;

  // Generator index of f_ir; throws for the eliminated unit row.
  size_t gen_of(size_t i, size_t r) const;
};

// Builds and completes the presentation, then verifies the type
// invariants (relations reduce to zero, eta is multiplicative, and in the
// square case the bialgebra laws).  Throws ComputeError if completion
// hits the bound/cap or an invariant fails.
SweedlerPresentation build_F(const FinAlgebra& A, const FinAlgebra& B,
                             int bound, bool permuted_schedule = false);

// --- invariant checks (empty result = pass); exposed for reports ------

// eta(a_i) eta(a_j) = eta(a_i a_j) coordinatewise in F (x) B.
std::vector<std::string> check_eta_multiplicative(
    const SweedlerPresentation& F);
// Delta applied generator-wise to every relation reduces to 0 in F (x) F.
std::vector<std::string> check_delta_multiplicative(
    const SweedlerPresentation& F);
// (eps(x)1)Delta f = f = (1(x)eps)Delta f, and eps kills every relation.
std::vector<std::string> check_counit_laws(const SweedlerPresentation& F);
// (Delta(x)1)Delta f = (1(x)Delta)Delta f on every generator.
std::vector<std::string> check_coassociativity(const SweedlerPresentation& F);

// For presentations over the dual-numbers shape (A == B, dim 2, d^2 = 0)
// the defining ideal is spanned by f0^2 and the anticommutator
// f0.f1 + f1.f0; the stronger identities f0.f1 = f1.f0 = 0 occasionally
// quoted for this algebra do not follow from eta-multiplicativity.  This
// returns the warning text when the shape applies.
std::optional<std::string> square_zero_presentation_note(
    const SweedlerPresentation& F);

// --- factorization through an intermediate algebra ---------------------

// Delta_B: F(A,C) -> F(A,B) (x) F(B,C) on generators:
//   f^AC_iu  |->  sum_{r>=1} f^AB_ir (x) f^BC_ru + delta_{u0} f^AB_i0 (x) 1.
// Verifies every F(A,C) relation dies after componentwise reduction; when
// A = B = C it must reproduce the stored delta table.
struct FactorizationResult {
  std::vector<TensorPoly> images;  // per F(A,C) generator
  std::vector<std::string> failures;
};
FactorizationResult comultiplication_through(const SweedlerPresentation& FAC,
                                             const SweedlerPresentation& FAB,
                                             const SweedlerPresentation& FBC);

// --- the induced map F(sigma) ------------------------------------------

// For an extension sigma: A -> S (x) B, the generators map by
// f_ir |-> (coefficient of b_r in sigma(a_i)) in S.  Verifies all
// relations vanish and that (F(sigma) (x) 1) . eta = sigma.
struct ExtensionImageReport {
  std::vector<Vec> images;  // S-coordinates per generator
  std::vector<std::string> relation_failures;
  std::vector<std::string> compatibility_failures;
  bool ok() const {
    return relation_failures.empty() && compatibility_failures.empty();
  }
};
ExtensionImageReport F_of_extension(const SweedlerPresentation& F,
                                    const ExtensionMap& e);

// A representation theta: A -> End(W) is the extension a |-> theta(a)(x)1;
// generator images are matrices (zero for columns r >= 1).
struct MatrixImageReport {
  std::vector<Mat> images;
  std::vector<std::string> relation_failures;
  bool ok() const { return relation_failures.empty(); }
};
MatrixImageReport F_of_representation(const SweedlerPresentation& F,
                                      const std::vector<Mat>& theta);

// Substitute arbitrary matrix images for the generators and evaluate all
// relations; used by the loop-extension and Vandermonde checks.
std::vector<std::string> relations_vanish_in_matrices(
    const SweedlerPresentation& F, const std::vector<Mat>& images);
std::vector<std::string> relations_vanish_in_central_matrices(
    const SweedlerPresentation& F, const std::vector<RMat<CentralPoly>>& images,
    size_t wdim);

// Turns a vdim-dimensional representation of F(A,A) -- one matrix per
// presentation generator, satisfying every relation -- into a measuring
// of A by the matrix coalgebra of size vdim: composing the
// representation with eta gives an extension A -> End(V) (x) A, whose
// dual coaction measures A.  A relation failure is reported; a measuring
// violation after a clean relation check cannot happen and throws.
struct RepMeasuringReport {
  std::vector<std::string> relation_failures;
  std::optional<ExtensionMap> extension;
  std::optional<MeasuringData> measuring;
  bool ok() const { return relation_failures.empty(); }
};
RepMeasuringReport representation_to_measuring_coalgebra(
    const SweedlerPresentation& F, const std::vector<Mat>& images,
    size_t vdim);

// --- recognizing A inside F(A, k) ---------------------------------------

// For B the base field, F(A,k) must BE A: the total dimension across
// degrees equals dim A (zero beyond), the map a_i -> NF(eta_i0) is
// multiplicative against the structure constants, and the images are
// linearly independent.
struct AlgebraComparison {
  bool dims_ok = false, mult_ok = false, rank_ok = false;
  std::vector<size_t> dims;
  std::vector<std::string> notes;
  bool ok() const { return dims_ok && mult_ok && rank_ok; }
};
AlgebraComparison compare_F_to_A(const SweedlerPresentation& F);

}  // namespace sweedler
