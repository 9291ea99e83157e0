#include "sweedler/coalgebra.hpp"

namespace sweedler {

void validate_coalgebra(const FinCoalgebra& h) {
  if (!h.field) throw InputError("coalgebra has no field");
  if (h.dim == 0) throw InputError("coalgebra dimension must be >= 1");
  if (h.labels.size() != h.dim) throw InputError("coalgebra label count != dim");
  if (h.counit.size() != h.dim) throw InputError("counit vector size != dim");
  if (h.d.size() != h.dim) throw InputError("coproduct tensor first index != dim");
  for (const auto& row : h.d) {
    if (row.size() != h.dim)
      throw InputError("coproduct tensor second index != dim");
    for (const auto& v : row)
      if (v.size() != h.dim)
        throw InputError("coproduct tensor third index != dim");
  }
  const Scalar zero = Scalar::zero(h.field);
  // Coassociativity componentwise on h_a (x) h_b (x) h_c:
  //   sum_j d[i][j][c] d[j][a][b]  ==  sum_k d[i][a][k] d[k][b][c].
  for (size_t i = 0; i < h.dim; ++i)
    for (size_t a = 0; a < h.dim; ++a)
      for (size_t b = 0; b < h.dim; ++b)
        for (size_t c = 0; c < h.dim; ++c) {
          Scalar lhs = zero, rhs = zero;
          for (size_t j = 0; j < h.dim; ++j) lhs += h.d[i][j][c] * h.d[j][a][b];
          for (size_t k = 0; k < h.dim; ++k) rhs += h.d[i][a][k] * h.d[k][b][c];
          if (lhs != rhs)
            throw InputError("coassociativity fails at (i,a,b,c)=(" +
                             std::to_string(i) + "," + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
        }
  // Counit laws: applying the counit to either leg returns the element.
  for (size_t i = 0; i < h.dim; ++i)
    for (size_t j = 0; j < h.dim; ++j) {
      Scalar left = zero, right = zero;
      for (size_t k = 0; k < h.dim; ++k) {
        left += h.d[i][k][j] * h.counit[k];   // counit on the (2) leg
        right += h.d[i][j][k] * h.counit[k];  // counit on the (1) leg
      }
      Scalar want = (i == j) ? Scalar::one(h.field) : zero;
      if (left != want || right != want)
        throw InputError("counit law fails at (i,j)=(" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
    }
}

bool coalgebra_eq(const FinCoalgebra& a, const FinCoalgebra& b) {
  return field_eq(a.field, b.field) && a.dim == b.dim && a.counit == b.counit &&
         a.d == b.d;
}

namespace {

FinCoalgebra blank_co(const FieldPtr& f, size_t dim) {
  FinCoalgebra h;
  h.field = f;
  h.dim = dim;
  h.counit = Vec(dim, Scalar::zero(f));
  h.d.assign(dim, std::vector<Vec>(dim, Vec(dim, Scalar::zero(f))));
  return h;
}

}  // namespace

FinCoalgebra grouplike_coalgebra(const FieldPtr& f) {
  FinCoalgebra h = blank_co(f, 1);
  h.labels = {"g"};
  h.d[0][0][0] = Scalar::one(f);
  h.counit[0] = Scalar::one(f);
  validate_coalgebra(h);
  return h;
}

FinCoalgebra derivation_pair_coalgebra(const FieldPtr& f) {
  FinCoalgebra h = blank_co(f, 2);
  h.labels = {"g", "gamma"};
  h.d[0][0][0] = Scalar::one(f);
  h.d[1][1][0] = Scalar::one(f);  // Delta gamma = gamma (x) g + g (x) gamma
  h.d[1][0][1] = Scalar::one(f);
  h.counit[0] = Scalar::one(f);
  validate_coalgebra(h);
  return h;
}

FinCoalgebra matrix_coalgebra(const FieldPtr& f, size_t n) {
  if (n == 0) throw InputError("matrix_coalgebra needs n >= 1");
  FinCoalgebra h = blank_co(f, n * n);
  auto idx = [n](size_t p, size_t q) { return p * n + q; };
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      h.labels.push_back("E" + std::to_string(p + 1) + std::to_string(q + 1) +
                         "*");
  // Delta xi_pq = sum_k xi_pk (x) xi_kq; counit xi_pq = delta_pq.
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      for (size_t k = 0; k < n; ++k)
        h.d[idx(p, q)][idx(p, k)][idx(k, q)] = Scalar::one(f);
      if (p == q) h.counit[idx(p, q)] = Scalar::one(f);
    }
  validate_coalgebra(h);
  return h;
}

FinCoalgebra dual_coalgebra(const FinAlgebra& a) {
  FinCoalgebra h = blank_co(a.field, a.dim);
  for (const auto& l : a.labels) h.labels.push_back(l + "*");
  for (size_t m = 0; m < a.dim; ++m) {
    h.counit[m] = a.unit[m];
    for (size_t p = 0; p < a.dim; ++p)
      for (size_t q = 0; q < a.dim; ++q) h.d[m][p][q] = a.c[p][q][m];
  }
  validate_coalgebra(h);
  return h;
}

FinAlgebra dual_algebra(const FinCoalgebra& h) {
  FinAlgebra a;
  a.field = h.field;
  a.dim = h.dim;
  for (const auto& l : h.labels) a.labels.push_back(l + "*");
  a.unit = h.counit;
  a.c.assign(h.dim, std::vector<Vec>(h.dim, Vec(h.dim, Scalar::zero(h.field))));
  for (size_t p = 0; p < h.dim; ++p)
    for (size_t q = 0; q < h.dim; ++q)
      for (size_t m = 0; m < h.dim; ++m) a.c[p][q][m] = h.d[m][p][q];
  validate_algebra(a);
  return a;
}

FinAlgebra convolution_algebra(const FinCoalgebra& h, const FinAlgebra& b) {
  if (!field_eq(h.field, b.field))
    throw InputError("convolution: coalgebra and algebra fields differ");
  const size_t nh = h.dim, nb = b.dim;
  FinAlgebra conv;
  conv.field = h.field;
  conv.dim = nh * nb;
  conv.unit = Vec(conv.dim, Scalar::zero(h.field));
  conv.c.assign(conv.dim,
                std::vector<Vec>(conv.dim, Vec(conv.dim, Scalar::zero(h.field))));
  auto idx = [nb](size_t i, size_t r) { return i * nb + r; };
  for (size_t i = 0; i < nh; ++i)
    for (size_t r = 0; r < nb; ++r) {
      conv.labels.push_back("<" + h.labels[i] + "|" + b.labels[r] + ">");
      conv.unit[idx(i, r)] = h.counit[i] * b.unit[r];
    }
  for (size_t i = 0; i < nh; ++i)
    for (size_t r = 0; r < nb; ++r)
      for (size_t j = 0; j < nh; ++j)
        for (size_t s = 0; s < nb; ++s)
          for (size_t m = 0; m < nh; ++m) {
            if (h.d[m][i][j].is_zero()) continue;
            for (size_t w = 0; w < nb; ++w) {
              if (b.c[r][s][w].is_zero()) continue;
              conv.c[idx(i, r)][idx(j, s)][idx(m, w)] +=
                  h.d[m][i][j] * b.c[r][s][w];
            }
          }
  validate_algebra(conv);
  return conv;
}

void validate_measuring_shape(const MeasuringData& m) {
  validate_coalgebra(m.H);
  validate_algebra(m.A);
  validate_algebra(m.B);
  if (!field_eq(m.H.field, m.A.field) || !field_eq(m.A.field, m.B.field))
    throw InputError("measuring data mixes fields");
  if (m.rho.size() != m.H.dim)
    throw InputError("rho first index != coalgebra dim");
  for (const auto& row : m.rho) {
    if (row.size() != m.A.dim) throw InputError("rho second index != dim A");
    for (const auto& v : row)
      if (v.size() != m.B.dim) throw InputError("rho third index != dim B");
  }
}

std::vector<MeasuringViolation> verify_measuring(const MeasuringData& m) {
  validate_measuring_shape(m);
  std::vector<MeasuringViolation> out;
  const FieldPtr f = m.H.field;
  const size_t nh = m.H.dim, na = m.A.dim, nb = m.B.dim;
  // Unit law: rho(h_i)(1_A) = counit(h_i) 1_B.
  for (size_t i = 0; i < nh; ++i) {
    Vec got(nb, Scalar::zero(f));
    for (size_t j = 0; j < na; ++j)
      for (size_t k = 0; k < nb; ++k) got[k] += m.A.unit[j] * m.rho[i][j][k];
    Vec want(nb, Scalar::zero(f));
    for (size_t k = 0; k < nb; ++k) want[k] = m.H.counit[i] * m.B.unit[k];
    if (got != want) {
      MeasuringViolation v;
      v.h = i;
      v.unit_case = true;
      v.claimed = element_to_string(m.B, want);
      v.actual = element_to_string(m.B, got);
      out.push_back(std::move(v));
    }
  }
  // Product law on every basis pair.
  for (size_t i = 0; i < nh; ++i)
    for (size_t p = 0; p < na; ++p)
      for (size_t q = 0; q < na; ++q) {
        Vec lhs(nb, Scalar::zero(f));
        for (size_t k = 0; k < na; ++k) {
          if (m.A.c[p][q][k].is_zero()) continue;
          for (size_t w = 0; w < nb; ++w)
            lhs[w] += m.A.c[p][q][k] * m.rho[i][k][w];
        }
        Vec rhs(nb, Scalar::zero(f));
        for (size_t j = 0; j < nh; ++j)
          for (size_t k = 0; k < nh; ++k) {
            if (m.H.d[i][j][k].is_zero()) continue;
            Vec prod = alg_mul(m.B, m.rho[j][p], m.rho[k][q]);
            for (size_t w = 0; w < nb; ++w) rhs[w] += m.H.d[i][j][k] * prod[w];
          }
        if (lhs != rhs) {
          MeasuringViolation v;
          v.h = i;
          v.p = p;
          v.q = q;
          v.claimed = element_to_string(m.B, lhs);
          v.actual = element_to_string(m.B, rhs);
          out.push_back(std::move(v));
        }
      }
  return out;
}

void validate_extension_shape(const ExtensionMap& e) {
  validate_algebra(e.A);
  validate_algebra(e.S);
  validate_algebra(e.B);
  if (!field_eq(e.A.field, e.S.field) || !field_eq(e.A.field, e.B.field))
    throw InputError("extension map mixes fields");
  if (e.sigma.size() != e.A.dim)
    throw InputError("sigma first index != dim A");
  for (const auto& row : e.sigma) {
    if (row.size() != e.S.dim) throw InputError("sigma second index != dim S");
    for (const auto& v : row)
      if (v.size() != e.B.dim) throw InputError("sigma third index != dim B");
  }
}

namespace {

using Grid = std::vector<Vec>;  // [s index][b index]

Grid grid_zero(const FieldPtr& f, size_t ns, size_t nb) {
  return Grid(ns, Vec(nb, Scalar::zero(f)));
}

Grid grid_mul(const FinAlgebra& s, const FinAlgebra& b, const Grid& x,
              const Grid& y) {
  Grid out = grid_zero(s.field, s.dim, b.dim);
  for (size_t u = 0; u < s.dim; ++u)
    for (size_t r = 0; r < b.dim; ++r) {
      if (x[u][r].is_zero()) continue;
      for (size_t v = 0; v < s.dim; ++v)
        for (size_t w = 0; w < b.dim; ++w) {
          if (y[v][w].is_zero()) continue;
          Scalar coef = x[u][r] * y[v][w];
          for (size_t us = 0; us < s.dim; ++us) {
            if (s.c[u][v][us].is_zero()) continue;
            for (size_t wb = 0; wb < b.dim; ++wb) {
              if (b.c[r][w][wb].is_zero()) continue;
              out[us][wb] += coef * s.c[u][v][us] * b.c[r][w][wb];
            }
          }
        }
    }
  return out;
}

std::string grid_to_string(const FinAlgebra& s, const FinAlgebra& b,
                           const Grid& g) {
  std::string out;
  for (size_t u = 0; u < s.dim; ++u)
    for (size_t r = 0; r < b.dim; ++r) {
      if (g[u][r].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + g[u][r].to_string() + ")*" + s.labels[u] + "(x)" +
             b.labels[r];
    }
  return out.empty() ? "0" : out;
}

}  // namespace

std::vector<ExtensionViolation> verify_extension(const ExtensionMap& e) {
  validate_extension_shape(e);
  std::vector<ExtensionViolation> out;
  const FieldPtr f = e.A.field;
  // Unit: sigma(1_A) = 1_S (x) 1_B.
  Grid unit_got = grid_zero(f, e.S.dim, e.B.dim);
  for (size_t i = 0; i < e.A.dim; ++i) {
    if (e.A.unit[i].is_zero()) continue;
    for (size_t u = 0; u < e.S.dim; ++u)
      for (size_t r = 0; r < e.B.dim; ++r)
        unit_got[u][r] += e.A.unit[i] * e.sigma[i][u][r];
  }
  Grid unit_want = grid_zero(f, e.S.dim, e.B.dim);
  for (size_t u = 0; u < e.S.dim; ++u)
    for (size_t r = 0; r < e.B.dim; ++r)
      unit_want[u][r] = e.S.unit[u] * e.B.unit[r];
  if (unit_got != unit_want) {
    ExtensionViolation v;
    v.unit_case = true;
    v.claimed = grid_to_string(e.S, e.B, unit_want);
    v.actual = grid_to_string(e.S, e.B, unit_got);
    out.push_back(std::move(v));
  }
  // Multiplicativity on basis pairs.
  for (size_t i = 0; i < e.A.dim; ++i)
    for (size_t j = 0; j < e.A.dim; ++j) {
      Grid lhs = grid_zero(f, e.S.dim, e.B.dim);
      for (size_t k = 0; k < e.A.dim; ++k) {
        if (e.A.c[i][j][k].is_zero()) continue;
        for (size_t u = 0; u < e.S.dim; ++u)
          for (size_t r = 0; r < e.B.dim; ++r)
            lhs[u][r] += e.A.c[i][j][k] * e.sigma[k][u][r];
      }
      Grid rhs = grid_mul(e.S, e.B, e.sigma[i], e.sigma[j]);
      if (lhs != rhs) {
        ExtensionViolation v;
        v.i = i;
        v.j = j;
        v.claimed = grid_to_string(e.S, e.B, lhs);
        v.actual = grid_to_string(e.S, e.B, rhs);
        out.push_back(std::move(v));
      }
    }
  return out;
}

ExtensionMap to_extension(const MeasuringData& m) {
  validate_measuring_shape(m);
  ExtensionMap e;
  e.A = m.A;
  e.S = dual_algebra(m.H);
  e.B = m.B;
  e.sigma.assign(m.A.dim,
                 std::vector<Vec>(m.H.dim, Vec(m.B.dim, Scalar::zero(m.A.field))));
  for (size_t i = 0; i < m.H.dim; ++i)
    for (size_t j = 0; j < m.A.dim; ++j)
      for (size_t k = 0; k < m.B.dim; ++k) e.sigma[j][i][k] = m.rho[i][j][k];
  return e;
}

MeasuringData to_measuring(const ExtensionMap& e) {
  validate_extension_shape(e);
  MeasuringData m;
  m.H = dual_coalgebra(e.S);
  m.A = e.A;
  m.B = e.B;
  m.rho.assign(e.S.dim,
               std::vector<Vec>(e.A.dim, Vec(e.B.dim, Scalar::zero(e.A.field))));
  for (size_t j = 0; j < e.A.dim; ++j)
    for (size_t i = 0; i < e.S.dim; ++i)
      for (size_t k = 0; k < e.B.dim; ++k) m.rho[i][j][k] = e.sigma[j][i][k];
  return m;
}

}  // namespace sweedler
