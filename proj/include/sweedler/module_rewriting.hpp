#pragma once
// Rewriting in free left modules over a completed algebra presentation.
//
// A module monomial is w.[G]: an algebra word w applied to a free module
// generator [G].  The monomial order is position-over-term: generators
// are compared first (higher index larger), the algebra word second.
// This order is multiplicative and well-founded but NOT degree
// compatible: eliminating a high generator can lengthen the word, which
// is why normal forms here carry an explicit bound error.
//
// A module rule has lead u.[G] and matches w.[G] exactly when u is a
// SUFFIX of w (module elements are left-multiplied by the algebra, so
// the generator end of the monomial is where the rule anchors).  Module
// completion runs after algebra completion: algebra leads are fixed, and
// the critical pairs are the overlaps
//
//   algebra lhs == A.B,  module lead == (B.C).[G]  with B nonempty,
//
// giving the ambiguity monomial (A.B.C).[G]; suffix containments among
// module leads are removed by inter-reduction.

#include <map>
#include <string>
#include <vector>

#include "sweedler/rewriting.hpp"

namespace sweedler {

// (generator index, algebra word)
using ModKey = std::pair<int, Word>;

int modkey_cmp(const ModKey& a, const ModKey& b);

struct ModKeyGreater {
  bool operator()(const ModKey& a, const ModKey& b) const {
    return modkey_cmp(a, b) > 0;
  }
};

class ModPoly {
 public:
  using TermMap = std::map<ModKey, Scalar, ModKeyGreater>;

  ModPoly() = default;
  explicit ModPoly(FieldPtr f) : fld_(std::move(f)) {}
  static ModPoly generator(const FieldPtr& f, int gen);
  static ModPoly monomial(const FieldPtr& f, int gen, Word w, Scalar c);

  const FieldPtr& field() const { return fld_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModKey& leading_key() const;
  const Scalar& leading_coeff() const;
  // Largest algebra-word length among the terms; -1 when zero.
  int degree() const;

  void add_term(int gen, const Word& w, const Scalar& c);

  ModPoly operator-() const;
  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  ModPoly& operator+=(const ModPoly& b);
  friend bool operator==(const ModPoly& a, const ModPoly& b);
  friend bool operator!=(const ModPoly& a, const ModPoly& b) {
    return !(a == b);
  }
  ModPoly scaled(const Scalar& s) const;
  // Left multiplication by an algebra word: w.[G] -> (prefix.w).[G].
  ModPoly framed_left(const Word& prefix) const;

  std::string to_string(const std::vector<std::string>& alg_labels,
                        const std::vector<std::string>& gen_labels) const;

 private:
  FieldPtr fld_;
  TermMap terms_;
};

// Left action of an algebra polynomial on a module element.
ModPoly left_mul(const NcPoly& a, const ModPoly& m);

struct ModRule {
  Word word;  // algebra-normal lead word
  int gen;
  ModPoly rhs;
};

struct ModuleSystem {
  RewritingSystem algebra;  // completed algebra presentation (copied)
  std::vector<std::string> gen_labels;
  std::vector<ModRule> rules;  // inter-reduced, descending leads
  int complete_up_to = -1;

  size_t ngens() const { return gen_labels.size(); }
};

struct ModuleCompletionOptions {
  size_t max_rules = 10000;
  bool permuted_schedule = false;
};

// Completes the submodule generated by `relations` against the algebra
// system; ambiguity monomials are bounded by the algebra's completed
// degree.
ModuleSystem module_complete(const RewritingSystem& algebra,
                             const std::vector<std::string>& gen_labels,
                             const std::vector<ModPoly>& relations,
                             const ModuleCompletionOptions& opts = {});

// Full reduction.  Raises ComputeError("bound exceeded ...") if any
// intermediate algebra word grows beyond the algebra's completed degree
// (possible: the module order is not degree compatible).
ModPoly module_normal_form(const ModuleSystem& sys, ModPoly p);

// Normal module monomials of exact word degree, descending; and counts.
std::vector<ModKey> module_monomial_basis(const ModuleSystem& sys, int degree);
std::vector<size_t> module_dimension_sequence(const ModuleSystem& sys,
                                              int dmax);

std::vector<std::string> module_rule_strings(const ModuleSystem& sys);

}  // namespace sweedler
