#pragma once
// Finite-dimensional coalgebras, duality with algebras, convolution
// algebras, measuring data and extension maps, and the translations
// between the two presentations of the same linear data.
//
// Comultiplication convention used across the whole project: the FIRST
// tensor slot is the leg that acts on the FIRST factor of a product.
// In coordinates d[i][j][k] means  Delta h_i = sum_{j,k} d[i][j][k] h_j (x) h_k
// and a map rho measures when
//   rho(h_i)(a b) = sum_{j,k} d[i][j][k] rho(h_j)(a) rho(h_k)(b).

#include <string>
#include <vector>

#include "sweedler/algebra.hpp"

namespace sweedler {

struct FinCoalgebra {
  FieldPtr field;
  size_t dim = 0;
  std::vector<std::string> labels;
  Vec counit;
  std::vector<std::vector<Vec>> d;  // d[i][j][k] as above
};

// Coassociativity + both counit laws on basis elements; errors carry a
// counterexample index.
void validate_coalgebra(const FinCoalgebra& h);

bool coalgebra_eq(const FinCoalgebra& a, const FinCoalgebra& b);

// Catalog.
FinCoalgebra grouplike_coalgebra(const FieldPtr& f);       // one grouplike g
FinCoalgebra derivation_pair_coalgebra(const FieldPtr& f); // g grouplike, gamma primitive over g
FinCoalgebra matrix_coalgebra(const FieldPtr& f, size_t n);

// Dual coalgebra of a finite algebra and dual algebra of a finite
// coalgebra; round trips are coordinatewise identities.
FinCoalgebra dual_coalgebra(const FinAlgebra& a);
FinAlgebra dual_algebra(const FinCoalgebra& h);

// Convolution algebra structure on Hom(H,B): basis h_i^* b_r at flat
// index i*dimB + r, product (phi psi)(h) = sum phi(h_(2)) psi(h_(1)).
FinAlgebra convolution_algebra(const FinCoalgebra& h, const FinAlgebra& b);

// rho[i][j] = coordinates in B of rho(h_i)(a_j).
struct MeasuringData {
  FinCoalgebra H;
  FinAlgebra A;
  FinAlgebra B;
  std::vector<std::vector<Vec>> rho;
};

void validate_measuring_shape(const MeasuringData& m);

struct MeasuringViolation {
  size_t h = 0;               // coalgebra basis index
  bool unit_case = false;     // law on 1_A rather than a product
  size_t p = 0, q = 0;        // algebra basis pair for the product case
  std::string claimed, actual;
};

// Checks the measuring law on every (h_i, a_p, a_q) triple and the unit
// law on every h_i; empty result means the data measures.
std::vector<MeasuringViolation> verify_measuring(const MeasuringData& m);

// sigma[i][s][k] = coefficient of s_s (x) b_k in sigma(a_i).
struct ExtensionMap {
  FinAlgebra A;
  FinAlgebra S;
  FinAlgebra B;
  std::vector<std::vector<Vec>> sigma;
};

void validate_extension_shape(const ExtensionMap& e);

struct ExtensionViolation {
  bool unit_case = false;
  size_t i = 0, j = 0;
  std::string claimed, actual;
};

// Checks sigma(a_i a_j) = sigma(a_i) sigma(a_j) in S (x) B and
// sigma(1) = 1 (x) 1.
std::vector<ExtensionViolation> verify_extension(const ExtensionMap& e);

// Transposes measuring data into an extension A -> H^* (x) B and back.
// Round trips are coordinatewise identities on the stored tensors.
ExtensionMap to_extension(const MeasuringData& m);
MeasuringData to_measuring(const ExtensionMap& e);

}  // namespace sweedler
