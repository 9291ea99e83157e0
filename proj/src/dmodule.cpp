#include "sweedler/dmodule.hpp"

#include <string>
#include <vector>

namespace sweedler {

namespace {

std::string gen_label(size_t p, size_t u) {
  return "G(" + std::to_string(p) + "," + std::to_string(u) + ")";
}

bool vec_is_zero(const Vec& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace

ModulePresentation build_D(const FinModule& M, const FinModule& N,
                           const SweedlerPresentation& F, int bound,
                           bool permuted_schedule) {
  validate_module(M);
  validate_module(N);
  if (!algebra_eq(M.algebra, F.A))
    throw InputError("build_D needs M over the source algebra of the presentation");
  if (!algebra_eq(N.algebra, F.B))
    throw InputError("build_D needs N over the target algebra of the presentation");
  if (bound < 0 || bound > F.bound)
    throw InputError("module bound must lie within the presentation bound");

  ModulePresentation out;
  out.F = F;
  out.M = M;
  out.N = N;
  out.bound = bound;
  const FieldPtr& f = F.system.field;

  for (size_t p = 0; p < M.dim; ++p)
    for (size_t u = 0; u < N.dim; ++u) out.gen_labels.push_back(gen_label(p, u));

  for (size_t i = 0; i < F.A.dim; ++i) {
    for (size_t p = 0; p < M.dim; ++p) {
      for (size_t u = 0; u < N.dim; ++u) {
        ModPoly rel(f);
        for (size_t q = 0; q < M.dim; ++q) {
          const Scalar& c = M.action[i].at(q, p);
          if (!c.is_zero()) rel.add_term(static_cast<int>(out.gen_of(q, u)), Word{}, c);
        }
        for (size_t r = 0; r < F.B.dim; ++r) {
          for (size_t v = 0; v < N.dim; ++v) {
            const Scalar& c = N.action[r].at(u, v);
            if (c.is_zero()) continue;
            ModPoly g = ModPoly::generator(f, static_cast<int>(out.gen_of(p, v)));
            rel += left_mul(F.eta[i][r], g).scaled(-c);
          }
        }
        if (rel.is_zero()) continue;
        out.relations.push_back(rel);
        out.relation_labels.push_back("(" + F.A.labels[i] + ", m" +
                                      std::to_string(p) + ", nu" +
                                      std::to_string(u) + ")");
      }
    }
  }

  ModuleCompletionOptions opts;
  opts.permuted_schedule = permuted_schedule;
  out.system = module_complete(F.system, out.gen_labels, out.relations, opts);
  return out;
}

TauReport tau_map(const ModulePresentation& D) {
  const FieldPtr& f = D.F.system.field;
  TauReport rep;
  rep.tau.assign(D.M.dim, std::vector<ModPoly>(D.N.dim, ModPoly(f)));
  for (size_t p = 0; p < D.M.dim; ++p)
    for (size_t v = 0; v < D.N.dim; ++v)
      rep.tau[p][v] = module_normal_form(
          D.system, ModPoly::generator(f, static_cast<int>(D.gen_of(p, v))));

  for (size_t i = 0; i < D.F.A.dim; ++i) {
    for (size_t p = 0; p < D.M.dim; ++p) {
      for (size_t w = 0; w < D.N.dim; ++w) {
        ModPoly lhs(f);
        for (size_t q = 0; q < D.M.dim; ++q) {
          const Scalar& c = D.M.action[i].at(q, p);
          if (!c.is_zero()) lhs += rep.tau[q][w].scaled(c);
        }
        ModPoly rhs(f);
        for (size_t r = 0; r < D.F.B.dim; ++r) {
          for (size_t v = 0; v < D.N.dim; ++v) {
            const Scalar& c = D.N.action[r].at(w, v);
            if (c.is_zero()) continue;
            rhs += module_normal_form(D.system,
                                      left_mul(D.F.eta[i][r], rep.tau[p][v]))
                       .scaled(c);
          }
        }
        if (module_normal_form(D.system, lhs) != module_normal_form(D.system, rhs))
          rep.failures.push_back("tau fails the module law at (" +
                                 D.F.A.labels[i] + ", m" + std::to_string(p) +
                                 ") on column n" + std::to_string(w));
      }
    }
  }
  return rep;
}

DExtensionReport D_of_extension(const ModulePresentation& D,
                                const ExtensionMap& sigma, const FinModule& W,
                                const std::vector<Mat>& rho) {
  validate_extension_shape(sigma);
  validate_module(W);
  if (!algebra_eq(sigma.A, D.M.algebra) || !algebra_eq(sigma.B, D.N.algebra))
    throw InputError("the extension must run between the presented algebras");
  if (!algebra_eq(W.algebra, sigma.S))
    throw InputError("W must be a module over the middle algebra of sigma");
  if (!verify_extension(sigma).empty())
    throw InputError("sigma is not an algebra extension");
  if (rho.size() != D.M.dim)
    throw InputError("need one tensor rho(m_p) per module basis element");
  for (const Mat& t : rho)
    if (t.rows() != W.dim || t.cols() != D.N.dim)
      throw InputError("each rho(m_p) must be a " + std::to_string(W.dim) +
                       "x" + std::to_string(D.N.dim) + " matrix");

  const FieldPtr& f = D.F.system.field;
  DExtensionReport rep;

  // rho(a_i . m_p) = sigma(a_i) . rho(m_p) in W (x) N, entrywise.
  for (size_t i = 0; i < sigma.A.dim; ++i) {
    for (size_t p = 0; p < D.M.dim; ++p) {
      Mat lhs = mat_zero(f, W.dim, D.N.dim);
      for (size_t q = 0; q < D.M.dim; ++q) {
        const Scalar& c = D.M.action[i].at(q, p);
        if (!c.is_zero()) lhs = lhs + mat_scale(rho[q], c);
      }
      Mat rhs = mat_zero(f, W.dim, D.N.dim);
      for (size_t s = 0; s < sigma.S.dim; ++s) {
        for (size_t k = 0; k < sigma.B.dim; ++k) {
          const Scalar& c = sigma.sigma[i][s][k];
          if (c.is_zero()) continue;
          Mat mid = W.action[s] * rho[p];  // acts on the W leg
          Mat moved = mat_zero(f, W.dim, D.N.dim);
          for (size_t cc = 0; cc < W.dim; ++cc)
            for (size_t vv = 0; vv < D.N.dim; ++vv)
              for (size_t v = 0; v < D.N.dim; ++v)
                moved.at(cc, vv) =
                    moved.at(cc, vv) + mid.at(cc, v) * D.N.action[k].at(vv, v);
          rhs = rhs + mat_scale(moved, c);
        }
      }
      if (lhs != rhs)
        rep.module_map_failures.push_back("rho is not a module map over sigma at (" +
                                          sigma.A.labels[i] + ", m" +
                                          std::to_string(p) + ")");
    }
  }

  ExtensionImageReport fs = F_of_extension(D.F, sigma);
  for (const std::string& s : fs.relation_failures) rep.relation_failures.push_back(s);
  for (const std::string& s : fs.compatibility_failures)
    rep.relation_failures.push_back(s);

  rep.images.assign(D.gen_labels.size(), Vec(W.dim, Scalar::zero(f)));
  for (size_t p = 0; p < D.M.dim; ++p)
    for (size_t u = 0; u < D.N.dim; ++u)
      for (size_t c = 0; c < W.dim; ++c) rep.images[D.gen_of(p, u)][c] = rho[p].at(c, u);

  if (!rep.ok()) return rep;

  // Letter-by-letter action of F-words on W through the F(sigma) images.
  std::vector<Mat> letter;
  letter.reserve(fs.images.size());
  for (const Vec& img : fs.images) letter.push_back(module_action(W, img));
  auto evaluate = [&](const ModPoly& m) {
    Vec acc(W.dim, Scalar::zero(f));
    for (const auto& [key, c] : m.terms()) {
      Vec t = rep.images[static_cast<size_t>(key.first)];
      const Word& w = key.second;
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        t = mat_apply(letter[static_cast<size_t>(*it)], t);
      for (size_t e = 0; e < W.dim; ++e) acc[e] = acc[e] + c * t[e];
    }
    return acc;
  };

  for (size_t idx = 0; idx < D.relations.size(); ++idx) {
    if (vec_is_zero(evaluate(D.relations[idx]))) continue;
    rep.relation_failures.push_back("the defining relation at " +
                                    D.relation_labels[idx] +
                                    " does not vanish in W");
  }

  for (size_t p = 0; p < D.M.dim; ++p) {
    for (size_t v = 0; v < D.N.dim; ++v) {
      ModPoly t = module_normal_form(
          D.system, ModPoly::generator(f, static_cast<int>(D.gen_of(p, v))));
      Vec got = evaluate(t);
      bool bad = false;
      for (size_t c = 0; c < W.dim && !bad; ++c) bad = got[c] != rho[p].at(c, v);
      if (bad)
        rep.factorization_failures.push_back(
            "the factorization through tau misses rho at (m" + std::to_string(p) +
            ", n" + std::to_string(v) + ")");
    }
  }
  return rep;
}

}  // namespace sweedler
