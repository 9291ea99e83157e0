#include "sweedler/modules.hpp"

#include <string>

namespace sweedler {

void validate_module(const FinModule& m) {
  validate_algebra(m.algebra);
  const FinAlgebra& a = m.algebra;
  const FieldPtr& f = a.field;
  if (m.action.size() != a.dim)
    throw InputError("module needs one action matrix per algebra basis element");
  for (size_t i = 0; i < a.dim; ++i) {
    if (m.action[i].rows() != m.dim || m.action[i].cols() != m.dim)
      throw InputError("action matrix for " + a.labels[i] + " is not " +
                       std::to_string(m.dim) + "x" + std::to_string(m.dim));
  }
  if (module_action(m, a.unit) != mat_identity(f, m.dim))
    throw InputError("the unit does not act as the identity");
  if (m.dim == 0) return;  // no entries to multiply
  for (size_t i = 0; i < a.dim; ++i) {
    for (size_t j = 0; j < a.dim; ++j) {
      Mat rhs = mat_zero(f, m.dim, m.dim);
      for (size_t k = 0; k < a.dim; ++k) {
        const Scalar& c = a.c[i][j][k];
        if (c.is_zero()) continue;
        rhs = rhs + mat_scale(m.action[k], c);
      }
      if (m.action[i] * m.action[j] != rhs)
        throw InputError("the action law fails at (" + a.labels[i] + ", " +
                         a.labels[j] + ")");
    }
  }
}

bool module_eq(const FinModule& a, const FinModule& b) {
  if (!algebra_eq(a.algebra, b.algebra) || a.dim != b.dim) return false;
  for (size_t i = 0; i < a.action.size(); ++i)
    if (a.action[i] != b.action[i]) return false;
  return true;
}

Mat module_action(const FinModule& m, const Vec& x) {
  Mat out = mat_zero(m.algebra.field, m.dim, m.dim);
  for (size_t i = 0; i < m.algebra.dim; ++i) {
    if (x[i].is_zero()) continue;
    out = out + mat_scale(m.action[i], x[i]);
  }
  return out;
}

FinModule regular_module(const FinAlgebra& a) {
  FinModule m;
  m.algebra = a;
  m.dim = a.dim;
  m.action.reserve(a.dim);
  for (size_t i = 0; i < a.dim; ++i) m.action.push_back(left_mult_matrix(a, i));
  return m;
}

FinModule base_field_module(const FieldPtr& f, size_t dim) {
  FinModule m;
  m.algebra = base_field_algebra(f);
  m.dim = dim;
  m.action.push_back(mat_identity(f, dim));
  return m;
}

FinModule direct_sum_modules(const FinModule& a, const FinModule& b) {
  if (!algebra_eq(a.algebra, b.algebra))
    throw InputError("direct sum needs modules over the same algebra");
  FinModule m;
  m.algebra = a.algebra;
  m.dim = a.dim + b.dim;
  const FieldPtr& f = a.algebra.field;
  for (size_t i = 0; i < a.algebra.dim; ++i) {
    Mat blk = mat_zero(f, m.dim, m.dim);
    for (size_t p = 0; p < a.dim; ++p)
      for (size_t q = 0; q < a.dim; ++q) blk.at(p, q) = a.action[i].at(p, q);
    for (size_t p = 0; p < b.dim; ++p)
      for (size_t q = 0; q < b.dim; ++q)
        blk.at(a.dim + p, a.dim + q) = b.action[i].at(p, q);
    m.action.push_back(blk);
  }
  return m;
}

void validate_comodule(const FinComodule& x) {
  validate_coalgebra(x.coalgebra);
  const FinCoalgebra& h = x.coalgebra;
  const FieldPtr& f = h.field;
  if (x.coact.size() != x.dim)
    throw InputError("comodule needs one coaction row per basis element");
  for (size_t u = 0; u < x.dim; ++u) {
    if (x.coact[u].size() != h.dim)
      throw InputError("coaction of basis element " + std::to_string(u) +
                       " has the wrong coalgebra spread");
    for (size_t r = 0; r < h.dim; ++r)
      if (x.coact[u][r].size() != x.dim)
        throw InputError("coaction of basis element " + std::to_string(u) +
                         " has the wrong comodule spread");
  }
  // Counit law: applying the counit to the coalgebra leg returns x_u.
  for (size_t u = 0; u < x.dim; ++u) {
    for (size_t v = 0; v < x.dim; ++v) {
      Scalar s = Scalar::zero(f);
      for (size_t r = 0; r < h.dim; ++r)
        s = s + h.counit[r] * x.coact[u][r][v];
      Scalar want = u == v ? Scalar::one(f) : Scalar::zero(f);
      if (s != want)
        throw InputError("comodule counit law fails at basis element " +
                         std::to_string(u));
    }
  }
  // Coassociativity: comultiplying the coalgebra leg agrees with coacting
  // again on the comodule leg, as tensors in H (x) H (x) X.
  for (size_t u = 0; u < x.dim; ++u) {
    for (size_t j = 0; j < h.dim; ++j) {
      for (size_t k = 0; k < h.dim; ++k) {
        for (size_t v = 0; v < x.dim; ++v) {
          Scalar lhs = Scalar::zero(f);
          for (size_t r = 0; r < h.dim; ++r)
            lhs = lhs + x.coact[u][r][v] * h.d[r][j][k];
          Scalar rhs = Scalar::zero(f);
          for (size_t w = 0; w < x.dim; ++w)
            rhs = rhs + x.coact[u][j][w] * x.coact[w][k][v];
          if (lhs != rhs)
            throw InputError("comodule coassociativity fails at basis element " +
                             std::to_string(u));
        }
      }
    }
  }
}

FinComodule dual_comodule(const FinModule& n) {
  validate_module(n);
  FinComodule x;
  x.coalgebra = dual_coalgebra(n.algebra);
  x.dim = n.dim;
  const FieldPtr& f = n.algebra.field;
  x.coact.assign(n.dim, std::vector<Vec>(n.algebra.dim,
                                         Vec(n.dim, Scalar::zero(f))));
  for (size_t u = 0; u < n.dim; ++u)
    for (size_t r = 0; r < n.algebra.dim; ++r)
      for (size_t v = 0; v < n.dim; ++v) x.coact[u][r][v] = n.action[r].at(u, v);
  validate_comodule(x);
  return x;
}

std::vector<std::string> verify_measuring_comodule(const std::vector<Mat>& gamma,
                                                   const MeasuringData& meas,
                                                   const FinComodule& X,
                                                   const FinModule& M,
                                                   const FinModule& N) {
  validate_measuring_shape(meas);
  validate_comodule(X);
  validate_module(M);
  validate_module(N);
  if (!coalgebra_eq(X.coalgebra, meas.H))
    throw InputError("the comodule must live over the measuring coalgebra");
  if (!algebra_eq(M.algebra, meas.A) || !algebra_eq(N.algebra, meas.B))
    throw InputError("the modules must live over the measured algebras");
  if (gamma.size() != X.dim)
    throw InputError("need one map M -> N per comodule basis element");
  for (const Mat& g : gamma)
    if (g.rows() != N.dim || g.cols() != M.dim)
      throw InputError("each map must be a " + std::to_string(N.dim) + "x" +
                       std::to_string(M.dim) + " matrix");

  const FieldPtr& f = meas.H.field;
  std::vector<std::string> failures;
  for (size_t u = 0; u < X.dim; ++u) {
    for (size_t i = 0; i < meas.A.dim; ++i) {
      // gamma(x_u) composed with the action of a_i on M...
      Mat lhs = gamma[u] * M.action[i];
      // ...against the coaction-spread action of rho(h_r)(a_i) on N.
      Mat rhs = mat_zero(f, N.dim, M.dim);
      for (size_t r = 0; r < meas.H.dim; ++r) {
        Mat act = module_action(N, meas.rho[r][i]);
        for (size_t v = 0; v < X.dim; ++v) {
          const Scalar& c = X.coact[u][r][v];
          if (c.is_zero()) continue;
          rhs = rhs + mat_scale(act * gamma[v], c);
        }
      }
      if (lhs == rhs) continue;
      for (size_t p = 0; p < M.dim; ++p) {
        bool bad = false;
        for (size_t q = 0; q < N.dim && !bad; ++q)
          bad = lhs.at(q, p) != rhs.at(q, p);
        if (bad)
          failures.push_back("measuring law fails at (x" + std::to_string(u) +
                             ", " + meas.A.labels[i] + ", m" +
                             std::to_string(p) + ")");
      }
    }
  }
  return failures;
}

}  // namespace sweedler
