#pragma once
// The alternative presentation of F(k[x]/p, k[x]/p) on the dual basis of
// the quotient algebra: generators a_0..a_{n-1} dual to the power basis,
// one relation per generator obtained by pushing p through the iterated
// coproduct,
//
//   p0 eps(a_j) 1 + p1 a_j + sum_{i=2..n} p_i (word sum of Delta^{i-1} a_j),
//
// where each tensor term of the iterated coproduct contributes the
// concatenation of its legs as a word.  The equivalence with the matrix
// presentation (a_r |-> f_{x,r}) and the square-zero comparison against
// the x, 1/y anticommutation algebra live here too.

#include <string>
#include <vector>

#include "sweedler/coalgebra.hpp"
#include "sweedler/presentation.hpp"
#include "sweedler/rewriting.hpp"

namespace sweedler {

struct QcalcPresentation {
  PolyQ p;
  FinCoalgebra H;  // dual coalgebra of k[x]/p
  std::vector<NcPoly> relations;
  RewritingSystem system;
  int bound = 0;
};

QcalcPresentation qcalc_presentation(const FieldPtr& f, const PolyQ& p,
                                     int bound, bool permuted = false);

// Cross-checks the dual-basis presentation against the matrix method.
// The all-rows presentation carries a generator per (row, column) pair,
// so for deg p >= 3 its word-length filtration weights the x^i rows
// differently and raw dimension sequences are not comparable.  The
// comparison therefore also builds the x-row presentation -- generators
// are the coordinates of eta(x) alone, relations the matrix entries of
// p(eta(x)) -- which presents the same algebra on the same number of
// generators as the dual-basis one.  Checks performed:
//   * every dual-basis relation dies in both matrix-method systems
//     under a_r |-> coordinate of eta(x) at basis r;
//   * the x-row and all-rows relation ideals agree in both directions
//     under f_{x^i, r} <-> coordinate of eta(x)^i at basis r;
//   * dimension sequences of the dual-basis and x-row systems agree
//     degree by degree.
struct QcalcEquivalence {
  bool relations_ok = false;
  bool dims_ok = false;
  std::vector<size_t> dims_qcalc, dims_matrix;
  std::vector<std::string> failures;
  bool ok() const { return relations_ok && dims_ok; }
};
QcalcEquivalence verify_qcalc_equivalence(const FieldPtr& f, const PolyQ& p,
                                          int bound);

// Compares F(k[d]/d^2, k[d]/d^2) with the subalgebra generated by x and
// the inverse of y inside k[x, y, 1/y]/(xy + yx, x^2): generators map
// g0 -> xh, g1 -> wh; relation ideals, dimension sequences and the
// comultiplication tables must agree.  The report carries the square-zero
// warning about the anticommutator-only ideal.
struct PareigisReport {
  std::vector<std::string> checks;
  std::vector<std::string> failures;
  std::string warning;
  bool ok() const { return failures.empty(); }
};
PareigisReport pareigis_check(const FieldPtr& f, int bound);

}  // namespace sweedler
