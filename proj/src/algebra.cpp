#include "sweedler/algebra.hpp"

namespace sweedler {

bool FinAlgebra::unit_is_basis0() const {
  if (unit.empty() || !unit[0].is_one()) return false;
  for (size_t i = 1; i < unit.size(); ++i)
    if (!unit[i].is_zero()) return false;
  return true;
}

void validate_algebra(const FinAlgebra& a) {
  if (!a.field) throw InputError("algebra has no field");
  if (a.dim == 0) throw InputError("algebra dimension must be >= 1");
  if (a.labels.size() != a.dim) throw InputError("algebra label count != dim");
  if (a.unit.size() != a.dim) throw InputError("algebra unit vector size != dim");
  if (a.c.size() != a.dim) throw InputError("structure tensor first index != dim");
  for (const auto& row : a.c) {
    if (row.size() != a.dim)
      throw InputError("structure tensor second index != dim");
    for (const auto& v : row)
      if (v.size() != a.dim)
        throw InputError("structure tensor third index != dim");
  }
  // Associativity on basis triples: (a_i a_j) a_k == a_i (a_j a_k).
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      for (size_t k = 0; k < a.dim; ++k) {
        Vec lhs = alg_mul(a, a.c[i][j], alg_basis_vec(a, k));
        Vec rhs = alg_mul(a, alg_basis_vec(a, i), a.c[j][k]);
        if (lhs != rhs)
          throw InputError("associativity fails at basis triple (" +
                           std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ")");
      }
  // Two-sided unit law.
  for (size_t k = 0; k < a.dim; ++k) {
    Vec ek = alg_basis_vec(a, k);
    if (alg_mul(a, a.unit, ek) != ek || alg_mul(a, ek, a.unit) != ek)
      throw InputError("unit law fails at basis element " + std::to_string(k));
  }
}

bool algebra_eq(const FinAlgebra& a, const FinAlgebra& b) {
  return field_eq(a.field, b.field) && a.dim == b.dim && a.unit == b.unit &&
         a.c == b.c;
}

Vec alg_mul(const FinAlgebra& a, const Vec& x, const Vec& y) {
  Vec out(a.dim, Scalar::zero(a.field));
  for (size_t i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < a.dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (size_t k = 0; k < a.dim; ++k) {
        if (a.c[i][j][k].is_zero()) continue;
        out[k] += xy * a.c[i][j][k];
      }
    }
  }
  return out;
}

Vec alg_basis_vec(const FinAlgebra& a, size_t i) {
  Vec v(a.dim, Scalar::zero(a.field));
  v[i] = Scalar::one(a.field);
  return v;
}

Mat left_mult_matrix(const FinAlgebra& a, size_t r) {
  Mat m = mat_zero(a.field, a.dim, a.dim);
  for (size_t s = 0; s < a.dim; ++s)
    for (size_t w = 0; w < a.dim; ++w) m.at(w, s) = a.c[r][s][w];
  return m;
}

Mat left_mult_matrix(const FinAlgebra& a, const Vec& x) {
  Mat m = mat_zero(a.field, a.dim, a.dim);
  for (size_t r = 0; r < a.dim; ++r) {
    if (x[r].is_zero()) continue;
    Mat br = left_mult_matrix(a, r);
    for (size_t i = 0; i < a.dim; ++i)
      for (size_t j = 0; j < a.dim; ++j)
        m.at(i, j) += x[r] * br.at(i, j);
  }
  return m;
}

AlgElem AlgElem::operator-() const {
  AlgElem r = *this;
  for (auto& s : r.v) s = -s;
  return r;
}

AlgElem operator+(const AlgElem& x, const AlgElem& y) {
  AlgElem r = x;
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += y.v[i];
  return r;
}

AlgElem operator-(const AlgElem& x, const AlgElem& y) {
  AlgElem r = x;
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] -= y.v[i];
  return r;
}

AlgElem operator*(const AlgElem& x, const AlgElem& y) {
  return AlgElem{x.alg, alg_mul(*x.alg, x.v, y.v)};
}

bool operator==(const AlgElem& x, const AlgElem& y) { return x.v == y.v; }

bool AlgElem::is_zero() const {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

AlgElem alg_elem(const FinAlgebra& a, Vec coords) {
  return AlgElem{&a, std::move(coords)};
}

AlgElem alg_zero(const FinAlgebra& a) {
  return AlgElem{&a, Vec(a.dim, Scalar::zero(a.field))};
}

AlgElem alg_one(const FinAlgebra& a) { return AlgElem{&a, a.unit}; }

namespace {

FinAlgebra blank(const FieldPtr& f, size_t dim) {
  FinAlgebra a;
  a.field = f;
  a.dim = dim;
  a.unit = Vec(dim, Scalar::zero(f));
  a.c.assign(dim, std::vector<Vec>(dim, Vec(dim, Scalar::zero(f))));
  return a;
}

}  // namespace

FinAlgebra quotient_poly(const FieldPtr& f, const PolyQ& p) {
  const int n = polq_deg(p);
  if (n < 1) throw InputError("quotient_poly needs degree >= 1");
  if (p.back() != 1) throw InputError("quotient_poly modulus must be monic");
  FinAlgebra a = blank(f, static_cast<size_t>(n));
  a.unit[0] = Scalar::one(f);
  for (int k = 0; k < n; ++k)
    a.labels.push_back(k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)));
  // Powers of x reduced mod p: x^i * x^j = x^(i+j) mod p.
  std::vector<PolyQ> reduced(2 * n - 1);
  for (int e = 0; e <= 2 * (n - 1); ++e) {
    PolyQ xe(e + 1, Rational(0));
    xe[e] = 1;
    reduced[e] = polq_divmod(xe, p).second;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (size_t k = 0; k < reduced[i + j].size(); ++k)
        a.c[i][j][k] = Scalar::of(f, reduced[i + j][k]);
  validate_algebra(a);
  return a;
}

FinAlgebra matrix_algebra(const FieldPtr& f, size_t n) {
  if (n == 0) throw InputError("matrix_algebra needs n >= 1");
  FinAlgebra a = blank(f, n * n);
  auto idx = [n](size_t p, size_t q) { return p * n + q; };
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      a.labels.push_back("E" + std::to_string(p + 1) + std::to_string(q + 1));
  for (size_t p = 0; p < n; ++p) a.unit[idx(p, p)] = Scalar::one(f);
  // E_pq E_rs = delta_qr E_ps.
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s)
          if (q == r) a.c[idx(p, q)][idx(r, s)][idx(p, s)] = Scalar::one(f);
  validate_algebra(a);
  return a;
}

FinAlgebra dual_numbers(const FieldPtr& f) {
  FinAlgebra a = blank(f, 2);
  a.labels = {"1", "d"};
  a.unit[0] = Scalar::one(f);
  a.c[0][0][0] = Scalar::one(f);
  a.c[0][1][1] = Scalar::one(f);
  a.c[1][0][1] = Scalar::one(f);
  // d*d = 0.
  validate_algebra(a);
  return a;
}

FinAlgebra conjugation_algebra(const FieldPtr& f) {
  FinAlgebra a = blank(f, 4);
  a.labels = {"1", "x", "J", "xJ"};
  a.unit[0] = Scalar::one(f);
  const Scalar one = Scalar::one(f);
  auto set = [&](size_t i, size_t j, size_t k, long v) {
    a.c[i][j][k] = Scalar::of_int(f, v);
  };
  for (size_t j = 0; j < 4; ++j) {
    a.c[0][j][j] = one;
    a.c[j][0][j] = one;
  }
  set(1, 1, 0, -1);  // x x = -1
  set(1, 2, 3, 1);   // x J = xJ
  set(1, 3, 2, -1);  // x xJ = -J
  set(2, 1, 3, -1);  // J x = -xJ
  set(2, 2, 0, 1);   // J J = 1
  set(2, 3, 1, -1);  // J xJ = -x
  set(3, 1, 2, 1);   // xJ x = J
  set(3, 2, 1, 1);   // xJ J = x
  set(3, 3, 0, 1);   // xJ xJ = 1
  validate_algebra(a);
  return a;
}

FinAlgebra base_field_algebra(const FieldPtr& f) {
  FinAlgebra a = blank(f, 1);
  a.labels = {"1"};
  a.unit[0] = Scalar::one(f);
  a.c[0][0][0] = Scalar::one(f);
  return a;
}

std::string element_to_string(const FinAlgebra& a, const Vec& x) {
  std::string out;
  bool first = true;
  for (size_t i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    std::string cs = x[i].to_string();
    bool neg = false;
    if (x[i].is_rational() && cs.size() > 0 && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    std::string body;
    if (a.labels[i] == "1")
      body = x[i].is_rational() ? cs : "(" + cs + ")";
    else if (cs == "1")
      body = a.labels[i];
    else
      body = (x[i].is_rational() ? cs : "(" + cs + ")") + "*" + a.labels[i];
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return first ? "0" : out;
}

}  // namespace sweedler
