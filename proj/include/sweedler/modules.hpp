#pragma once
// Finite-dimensional left modules over a FinAlgebra and comodules over a
// FinCoalgebra, the duality sending a module over B to a comodule over
// the dual coalgebra of B, and the measuring law for coalgebra-indexed
// families of maps Hom(M,N).

#include <string>
#include <vector>

#include "sweedler/algebra.hpp"
#include "sweedler/coalgebra.hpp"

namespace sweedler {

// action[i] is the matrix of a_i acting on the left, columns are images
// of basis vectors: a_i . m_q = sum_p action[i](p,q) m_p.
struct FinModule {
  FinAlgebra algebra;
  size_t dim = 0;
  std::vector<Mat> action;
};

// Shapes, the composition law action(a_i)action(a_j) = sum_k c_ij^k
// action(a_k) on all pairs, and the unit acting as the identity; errors
// carry a counterexample pair.
void validate_module(const FinModule& m);

bool module_eq(const FinModule& a, const FinModule& b);

// Matrix of an arbitrary algebra element acting on the module.
Mat module_action(const FinModule& m, const Vec& x);

// Catalog.
FinModule regular_module(const FinAlgebra& a);  // A acting on itself
FinModule base_field_module(const FieldPtr& f, size_t dim);
FinModule direct_sum_modules(const FinModule& a, const FinModule& b);

// coact[u][r][v] = coefficient of h_r (x) x_v in the coaction of x_u;
// the coalgebra leg is written first.
struct FinComodule {
  FinCoalgebra coalgebra;
  size_t dim = 0;
  std::vector<std::vector<Vec>> coact;
};

// Coassociativity (comultiplication on the coalgebra leg against a second
// coaction on the comodule leg) and the counit law, componentwise.
void validate_comodule(const FinComodule& x);

// The dual basis of a module over B is a comodule over dual_coalgebra(B):
// the coaction of nu_u is pinned down by <nu_u, b.n> = sum of the pairing
// of the coalgebra leg with b times the pairing of the comodule leg with
// n, so coact[u][r][v] = action[r](u,v).
FinComodule dual_comodule(const FinModule& n);

// gamma[u] is the matrix of the map M -> N attached to the basis vector
// x_u of X.  The family measures when
//
//   gamma(x_u)(a.m) = sum_{r,v} coact[u][r][v] rho(h_r)(a) . gamma(x_v)(m)
//
// for every basis triple (x_u, a, m), where rho is the measuring of
// (H,A,B) and the product on the right is the B-action on N.  Returned
// strings locate the failing triples; empty means the law holds.
std::vector<std::string> verify_measuring_comodule(const std::vector<Mat>& gamma,
                                                   const MeasuringData& meas,
                                                   const FinComodule& X,
                                                   const FinModule& M,
                                                   const FinModule& N);

}  // namespace sweedler
