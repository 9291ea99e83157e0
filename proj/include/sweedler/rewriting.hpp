#pragma once
// Degree-bounded completion of noncommutative polynomial rewriting
// systems over an exact field (Buchberger / Knuth-Bendix style).
//
// A rule is an oriented polynomial relation lhs -> rhs where lhs is a
// single word strictly larger than every word of rhs in the monomial
// order.  Reducing a word means locating a rule lhs as a contiguous
// factor, w == A.lhs.B, and replacing the term by A.rhs.B.  Completion
// resolves every overlap ambiguity between rule leading words
//
//   lhs1 == A.B   and   lhs2 == B.C   with B nonempty,
//
// by reducing both rewrites of the ambiguity word A.B.C to normal form
// and turning any nonzero difference into a new rule, until all
// ambiguity words of degree <= the bound resolve to zero.  The final
// system is inter-reduced (no leading word contains another as a factor,
// right-hand sides fully reduced) and sorted canonically, which makes
// the completed system independent of the ambiguity processing
// schedule.

#include <string>
#include <vector>

#include "sweedler/ncpoly.hpp"

namespace sweedler {

struct Rule {
  Word lhs;
  NcPoly rhs;
};

struct CompletionOptions {
  int degree_bound = 8;
  size_t max_rules = 10000;
  // Processes ambiguities in the reversed canonical order.  The final
  // system must not depend on this; the determinism tests compare runs.
  bool permuted_schedule = false;
};

struct RewritingSystem {
  FieldPtr field;
  std::vector<std::string> labels;  // declaration order fixes the order
  std::vector<Rule> rules;          // inter-reduced, descending leading words
  int complete_up_to = -1;          // all ambiguities resolved up to here

  size_t ngens() const { return labels.size(); }
};

// Completes the two-sided ideal generated by `relations` up to the
// degree bound.  Input relations of degree beyond the bound, or a run
// that needs more than max_rules rules, raise ComputeError.
RewritingSystem complete(const FieldPtr& field,
                         const std::vector<std::string>& labels,
                         const std::vector<NcPoly>& relations,
                         const CompletionOptions& opts = {});

// Normal form; raises ComputeError("bound exceeded ...") when the input
// degree is beyond complete_up_to.
NcPoly normal_form(const RewritingSystem& sys, const NcPoly& p);
bool reduces_to_zero(const RewritingSystem& sys, const NcPoly& p);
bool word_is_normal(const RewritingSystem& sys, const Word& w);

// All normal words of the exact degree, in descending monomial order.
std::vector<Word> monomial_basis(const RewritingSystem& sys, int degree);
// Count of normal words per degree 0..dmax.
std::vector<size_t> dimension_sequence(const RewritingSystem& sys, int dmax);

std::vector<std::string> rule_strings(const RewritingSystem& sys);

}  // namespace sweedler
