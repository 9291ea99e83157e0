#include "sweedler/loop.hpp"

namespace sweedler {

namespace {

using CMat = RMat<CentralPoly>;

CMat cmat_zero(const FieldPtr& f, size_t n) {
  return CMat(n, n, CentralPoly::zero(f));
}

CMat cmat_identity(const FieldPtr& f, size_t n) {
  CMat m = cmat_zero(f, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = CentralPoly::one(f);
  return m;
}

CMat cmat_scale(const CMat& m, const Scalar& s) {
  CMat out = m;
  const CentralPoly c{s};
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = c * m.at(i, j);
  return out;
}

bool cmat_is_zero(const CMat& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

// Elements of M_n(Q[lambda]) (x) A as A-coordinate vectors of matrices.
using TensorElem = std::vector<CMat>;

TensorElem tensor_mul(const FinAlgebra& a, const TensorElem& u,
                      const TensorElem& v) {
  const size_t n = u.front().rows();
  TensorElem out(a.dim, cmat_zero(a.field, n));
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      if (cmat_is_zero(u[i]) || cmat_is_zero(v[j])) continue;
      const CMat prod = u[i] * v[j];
      for (size_t k = 0; k < a.dim; ++k) {
        const Scalar& c = a.c[i][j][k];
        if (!c.is_zero()) out[k] = out[k] + cmat_scale(prod, c);
      }
    }
  return out;
}

}  // namespace

void validate_loop(const LoopData& ld) {
  if (!ld.field) throw InputError("loop data needs a field");
  const int n = polq_deg(ld.p);
  if (n < 1 || ld.p.back() != 1)
    throw InputError("the modulus must be monic of degree at least 1");
  if (ld.Z.rows() != static_cast<size_t>(n) ||
      ld.Z.cols() != static_cast<size_t>(n))
    throw InputError("Z must match the degree of the modulus");
  Mat power = ld.Z;
  for (int i = 1; i < n; ++i) power = power * ld.Z;
  if (!mat_is_zero(power))
    throw InputError("Z is not nilpotent; the adjoint series never stops");
}

LoopExtension loop_extension(const LoopData& ld,
                             const SweedlerPresentation& F) {
  validate_loop(ld);
  const FieldPtr& f = ld.field;
  const FinAlgebra A = quotient_poly(f, ld.p);
  if (!algebra_eq(F.A, A) || !algebra_eq(F.B, A))
    throw InputError("the presentation must be built on the same modulus");
  const size_t n = A.dim;

  LoopExtension out;
  out.coeff.assign(n, cmat_zero(f, n));

  // Adjoint series: term_m = (ad Z)^m(C), folded into the coordinate of
  // x^m mod p with coefficient lambda^m / m!.
  PolyQ xcoords = polq_divmod(polq_from_string("x", "x"), ld.p).second;
  Vec xv(n, Scalar::zero(f));
  for (size_t i = 0; i < xcoords.size(); ++i) xv[i] = Scalar::of(f, xcoords[i]);
  const Mat C = left_mult_matrix(A, xv);
  Mat term = C;
  Rational factorial = 1;
  for (int m = 0; !mat_is_zero(term); ++m) {
    if (m > 0) {
      term = ld.Z * term - term * ld.Z;
      factorial *= m;
      if (mat_is_zero(term)) break;
    }
    PolyQ xm(static_cast<size_t>(m) + 1, Rational(0));
    xm[static_cast<size_t>(m)] = 1;
    const PolyQ rem = polq_divmod(xm, ld.p).second;
    for (size_t r = 0; r < rem.size(); ++r) {
      if (rem[r] == 0) continue;
      const Scalar s = Scalar::of(f, rem[r] / factorial);
      for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v)
          if (!term.at(u, v).is_zero())
            out.coeff[r].at(u, v) +=
                CentralPoly::monomial(term.at(u, v) * s, m);
    }
  }

  // p(sigma_Z(x)) must vanish coordinatewise in M_n(Q[lambda]) (x) A.
  TensorElem unit(n, cmat_zero(f, n));
  for (size_t r = 0; r < n; ++r)
    unit[r] = cmat_scale(cmat_identity(f, n), A.unit[r]);
  std::vector<TensorElem> powers = {unit, out.coeff};
  for (size_t i = 2; i < ld.p.size(); ++i)
    powers.push_back(tensor_mul(A, powers.back(), out.coeff));
  TensorElem pofs(n, cmat_zero(f, n));
  for (size_t i = 0; i < ld.p.size(); ++i) {
    if (ld.p[i] == 0) continue;
    const Scalar s = Scalar::of(f, ld.p[i]);
    for (size_t r = 0; r < n; ++r)
      pofs[r] = pofs[r] + cmat_scale(powers[i][r], s);
  }
  for (size_t r = 0; r < n; ++r)
    if (!cmat_is_zero(pofs[r]))
      out.relation_failures.push_back(
          "p at the image of x has a nonzero coordinate on power " +
          std::to_string(r));

  // Generator images: coefficient matrices of the matching eta powers.
  for (const auto& [row, col] : F.gen_index)
    out.images.push_back(powers[row][col]);
  auto fails = relations_vanish_in_central_matrices(F, out.images, n);
  out.relation_failures.insert(out.relation_failures.end(), fails.begin(),
                               fails.end());
  return out;
}

}  // namespace sweedler
