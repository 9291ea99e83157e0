#pragma once
// Extensions from root reorderings.
//
// When the monic modulus p splits over the field k with distinct roots
// mu_0..mu_(n-1), the evaluation matrix U (row j lists the powers of
// mu_j) diagonalises the companion matrix: U C U^-1 = diag(mu).  Any
// index function sigma pulls diagonals back by repositioning entries;
// carrying diag(mu_sigma(j)) to the power basis yields the
// multiplication operator of an element of k (x) A that again satisfies
// p, hence an extension
//
//   W_sigma: A -> k (x) A,   x |-> sum_i w_i (x) x^i,
//
// with w the first column of that operator.  The pullback operators
// compose contravariantly -- monoid_check pins the composition law
// empirically -- and galois_check asks whether the root assignment
// mu_j -> mu_sigma(j) extends to a field endomorphism of k.

#include <string>
#include <vector>

#include "sweedler/presentation.hpp"

namespace sweedler {

struct VandermondeData {
  FieldPtr field;             // contains every root
  PolyQ p;                    // monic, rational coefficients
  std::vector<Scalar> roots;  // pairwise distinct, p(root) = 0
  std::vector<size_t> sigma;  // 0-indexed index function
};

// Throws InputError on a non-root, a repeated root, or a bad sigma.
void validate_vandermonde(const VandermondeData& vd);

struct VandermondeExtension {
  Mat V;  // V[i][j] = mu_j^i
  Mat U;  // V transposed; row j evaluates polynomials at mu_j
  Mat W;  // multiplication operator of the image of x, power basis
  Vec w;  // its first column: the coefficients of x |-> sum w_i (x) x^i
  ExtensionMap extension;       // S = k as the one-dimensional algebra
  ExtensionImageReport images;  // generator images w_i, relations checked
};
VandermondeExtension vandermonde_extension(const VandermondeData& vd,
                                           int bound);

struct MonoidReport {
  std::string law;  // the composition identity that held, e.g.
                    // "W(sigma).W(tau) = W(tau o sigma)"
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
MonoidReport monoid_check(const VandermondeData& vd,
                          const std::vector<size_t>& tau);

struct GaloisReport {
  std::vector<std::string> root_lines;  // one verdict per root
  std::vector<std::string> failures;
  bool galois = false;  // assignment extends to a field endomorphism
  bool ok() const { return galois; }
};
GaloisReport galois_check(const VandermondeData& vd);

}  // namespace sweedler
