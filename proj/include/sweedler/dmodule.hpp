#pragma once
// The universal measuring module D(M,N), presented as a left module over
// F(A,B) for M a module over A and N a finite-dimensional module over B.
//
// Generators are the symbols [m_p (x) nu_u] with nu the dual basis of N.
// Writing eta(a_i) = sum_r eta_i^r (x) b_r for the universal extension of
// the algebra presentation, there is one relation per (a_i, p, u):
//
//   [(a_i.m_p) (x) nu_u]  =  sum_{r,v} N-action[r](u,v) eta_i^r . [m_p (x) nu_v]
//
// i.e. pulling the algebra inside the bracket equals routing the F-leg of
// eta(a_i) onto the module and its B-leg onto the dual-basis pairing.
// Unit rows need no special casing: the stored eta table already carries
// the substituted constants, so their relations reduce to zero.
//
// The point of the construction is the map tau(m_p) = sum_v [m_p (x) nu_v]
// (x) n_v, a module map M -> D (x) N relative to eta, through which every
// module extension rho: M -> W (x) N over an algebra extension
// sigma: A -> S (x) B factors as (D(rho) (x) 1) . tau.

#include <string>
#include <vector>

#include "sweedler/module_rewriting.hpp"
#include "sweedler/modules.hpp"
#include "sweedler/presentation.hpp"

namespace sweedler {

struct ModulePresentation {
  SweedlerPresentation F;
  FinModule M, N;
  std::vector<std::string> gen_labels;  // "G(p,u)" for [m_p (x) nu_u]
  std::vector<ModPoly> relations;       // nonzero defining relations
  std::vector<std::string> relation_labels;  // their (a_i, m_p, nu_u) triples
  ModuleSystem system;
  int bound = 0;

  size_t gen_of(size_t p, size_t u) const { return p * N.dim + u; }
};

// Builds the relations from the action tables and the eta table of F,
// then completes the module system against F's completed algebra system.
// The reporting bound must not exceed the bound F was completed to.
ModulePresentation build_D(const FinModule& M, const FinModule& N,
                           const SweedlerPresentation& F, int bound,
                           bool permuted_schedule = false);

// tau[p][v] is the D-component of tau(m_p) on the column n_v, in module
// normal form.  The failures list records every basis pair where
// tau(a_i.m_p) and eta(a_i).tau(m_p) disagree after reduction; nonempty
// means the module system was completed too shallowly.
struct TauReport {
  std::vector<std::vector<ModPoly>> tau;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
TauReport tau_map(const ModulePresentation& D);

// For a module extension rho: M -> W (x) N over sigma: A -> S (x) B
// (rho[p](c,v) = coefficient of w_c (x) n_v), the induced map sends
// [m_p (x) nu_u] to the nu_u-contraction of rho(m_p), an element of W.
// Verified three ways: rho is a module map over sigma, every defining
// relation of D lands on zero in W under the F(sigma)-action on words,
// and the factorization (D(rho) (x) 1) . tau = rho holds coordinatewise.
struct DExtensionReport {
  std::vector<Vec> images;  // W-coordinates per module generator
  std::vector<std::string> module_map_failures;
  std::vector<std::string> relation_failures;
  std::vector<std::string> factorization_failures;
  bool ok() const {
    return module_map_failures.empty() && relation_failures.empty() &&
           factorization_failures.empty();
  }
};
DExtensionReport D_of_extension(const ModulePresentation& D,
                                const ExtensionMap& sigma, const FinModule& W,
                                const std::vector<Mat>& rho);

}  // namespace sweedler
