#pragma once
// Graded comodules from chain complexes.
//
// A chain complex M = M_0 + ... + M_N with differentials d_i: M_i ->
// M_{i-1}, d d = 0, is a comodule over the square-zero presentation
// F(k[d]/d^2, k[d]/d^2).  Writing the presentation's generators f0
// (square-zero, counit 0) and f1 (grouplike, counit 1), the coaction is
//
//   rho(m) = f1^i (x) m + f0 f1^{i-1} (x) dm   for m in M_i, i >= 1,
//   rho(m) = 1 (x) m                           on M_0.
//
// The exponent on the f0-leg is forced: Delta f0 = f0 (x) 1 + f1 (x) f0
// closes the coassociativity square only with i-1, and the raised
// variant i+1 that is sometimes quoted for this construction fails the
// law already on a two-term complex.  chain_to_comodule_with_offset
// keeps the variant constructible so reports can demonstrate that.

#include <string>
#include <vector>

#include "sweedler/linalg.hpp"
#include "sweedler/module_rewriting.hpp"
#include "sweedler/presentation.hpp"

namespace sweedler {

struct ChainComplex {
  FieldPtr field;
  std::vector<size_t> dims;  // dims[i] = dim M_i
  // d[i]: M_i -> M_{i-1} for i >= 1, shaped dims[i-1] x dims[i].  d[0]
  // is the empty map out of M_0 and stays 0 x dims[0].
  std::vector<Mat> d;
};

// Throws InputError naming the offending degree when a differential has
// the wrong shape or d_i d_{i+1} != 0.
void validate_chain_complex(const ChainComplex& c);

struct GradedComodule {
  SweedlerPresentation F;  // square-zero presentation, generators f0 f1
  ChainComplex complex;
  std::vector<std::string> basis_labels;  // flattened basis, "m<degree>_<p>"
  std::vector<size_t> degree_of;          // flattened index -> degree
  // coaction[g] lies in F (x) M: the ModPoly key (n, w) encodes the
  // tensor w (x) m_n with w a word in the presentation generators.
  std::vector<ModPoly> coaction;
};

// offset -1 is the comodule; offset +1 is the raised-exponent variant
// kept only to demonstrate its coassociativity failure.  The bound must
// cover the longest coaction word, top degree + 1 + max(offset, 0).
GradedComodule chain_to_comodule(const ChainComplex& c, int bound);
GradedComodule chain_to_comodule_with_offset(const ChainComplex& c, int bound,
                                             int offset);

// Counit law and coassociativity, every F-leg reduced to normal form
// before comparison; an empty list means both hold.
std::vector<std::string> check_graded_comodule(const GradedComodule& g);

// Warning text for reports that surface the raised-exponent variant.
std::string raised_exponent_note();

}  // namespace sweedler
