#pragma once
// Finite-dimensional associative unital algebras given by structure
// constants over an exact field, with a small catalog of stock examples.

#include <string>
#include <vector>

#include "sweedler/linalg.hpp"
#include "sweedler/scalar.hpp"

namespace sweedler {

// c[i][j] holds the coordinates of a_i * a_j on the basis, so the product
// of x = sum x_i a_i and y = sum y_j a_j is sum x_i y_j c[i][j].
struct FinAlgebra {
  FieldPtr field;
  size_t dim = 0;
  std::vector<std::string> labels;
  Vec unit;  // coordinates of the two-sided unit
  std::vector<std::vector<Vec>> c;

  bool unit_is_basis0() const;
};

// Checks table shapes, the associativity law on all basis triples and the
// two-sided unit law; errors carry a counterexample triple.
void validate_algebra(const FinAlgebra& a);

bool algebra_eq(const FinAlgebra& a, const FinAlgebra& b);

Vec alg_mul(const FinAlgebra& a, const Vec& x, const Vec& y);
Vec alg_basis_vec(const FinAlgebra& a, size_t i);

// Left regular representation: matrix of left multiplication by a_r.
Mat left_mult_matrix(const FinAlgebra& a, size_t r);
// Matrix of left multiplication by an arbitrary element.
Mat left_mult_matrix(const FinAlgebra& a, const Vec& x);

// Element wrapper carrying its algebra, so generic ring code can multiply.
struct AlgElem {
  const FinAlgebra* alg = nullptr;
  Vec v;

  AlgElem operator-() const;
  friend AlgElem operator+(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator-(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator*(const AlgElem& x, const AlgElem& y);
  friend bool operator==(const AlgElem& x, const AlgElem& y);
  bool is_zero() const;
};
AlgElem alg_elem(const FinAlgebra& a, Vec coords);
AlgElem alg_zero(const FinAlgebra& a);
AlgElem alg_one(const FinAlgebra& a);

// Catalog.
FinAlgebra quotient_poly(const FieldPtr& f, const PolyQ& p);  // k[x]/(p), monic
FinAlgebra matrix_algebra(const FieldPtr& f, size_t n);       // matrix units
FinAlgebra dual_numbers(const FieldPtr& f);                   // k[d]/(d^2)
FinAlgebra conjugation_algebra(const FieldPtr& f);  // x^2=-1, J^2=1, Jx=-xJ
FinAlgebra base_field_algebra(const FieldPtr& f);

std::string element_to_string(const FinAlgebra& a, const Vec& x);

}  // namespace sweedler
