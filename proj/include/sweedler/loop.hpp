#pragma once
// Nilpotent loop representations.
//
// For the companion matrix C of a monic p and a nilpotent Z, conjugation
// exp(uZ) C exp(-uZ) satisfies p for any u; substituting u = lambda x
// and expanding the adjoint exponential gives
//
//   sigma_Z(x) = sum_m (lambda^m / m!) (ad Z)^m(C) (x) x^m,
//
// a finite sum because ad Z is nilpotent.  Reducing the x-powers mod p
// leaves an A-coordinate vector of matrices over Q[lambda]: an extension
// of A into M_n(Q[lambda]) (x) A whose generator images represent the
// presentation in parameterized matrices.

#include <string>
#include <vector>

#include "sweedler/presentation.hpp"

namespace sweedler {

struct LoopData {
  FieldPtr field;
  PolyQ p;  // monic, degree >= 1
  Mat Z;    // n x n, nilpotent
};

// Throws InputError for a non-monic modulus, a badly shaped Z, or a
// non-nilpotent Z (the adjoint series would not terminate).
void validate_loop(const LoopData& ld);

struct LoopExtension {
  // coeff[r]: the matrix multiplying x^r in sigma_Z(x).
  std::vector<RMat<CentralPoly>> coeff;
  // One image per presentation generator, the x^r-coefficient of the
  // matching power of sigma_Z(x).
  std::vector<RMat<CentralPoly>> images;
  std::vector<std::string> relation_failures;
  bool ok() const { return relation_failures.empty(); }
};
LoopExtension loop_extension(const LoopData& ld,
                             const SweedlerPresentation& F);

}  // namespace sweedler
