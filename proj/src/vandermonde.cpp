#include "sweedler/vandermonde.hpp"

namespace sweedler {

namespace {

Scalar eval_at(const FieldPtr& f, const PolyQ& p, const Scalar& mu) {
  Scalar acc = Scalar::zero(f);
  Scalar power = Scalar::one(f);
  for (size_t i = 0; i < p.size(); ++i) {
    acc += Scalar::of(f, p[i]) * power;
    power *= mu;
  }
  return acc;
}

// Permutation-style matrix of the diagonal repositioning: row j picks
// entry sigma(j).
Mat pullback_matrix(const FieldPtr& f, const std::vector<size_t>& sigma) {
  Mat p = mat_zero(f, sigma.size(), sigma.size());
  for (size_t j = 0; j < sigma.size(); ++j)
    p.at(j, sigma[j]) = Scalar::one(f);
  return p;
}

Mat evaluation_matrix(const VandermondeData& vd) {
  const size_t n = vd.roots.size();
  Mat u = mat_zero(vd.field, n, n);
  for (size_t j = 0; j < n; ++j) {
    Scalar power = Scalar::one(vd.field);
    for (size_t i = 0; i < n; ++i) {
      u.at(j, i) = power;
      power *= vd.roots[j];
    }
  }
  return u;
}

}  // namespace

void validate_vandermonde(const VandermondeData& vd) {
  if (!vd.field) throw InputError("vandermonde data needs a field");
  const size_t n = polq_deg(vd.p) < 0 ? 0 : static_cast<size_t>(polq_deg(vd.p));
  if (n < 1 || vd.p.back() != 1)
    throw InputError("the modulus must be monic of degree at least 1");
  if (vd.roots.size() != n)
    throw InputError("need exactly one root per degree of the modulus");
  for (size_t j = 0; j < n; ++j) {
    if (!eval_at(vd.field, vd.p, vd.roots[j]).is_zero())
      throw InputError("entry " + std::to_string(j + 1) +
                       " is not a root of the modulus");
    for (size_t k = 0; k < j; ++k)
      if (vd.roots[j] == vd.roots[k])
        throw InputError("roots " + std::to_string(k + 1) + " and " +
                         std::to_string(j + 1) + " coincide");
  }
  if (vd.sigma.size() != n)
    throw InputError("sigma must assign an index to every root");
  for (size_t v : vd.sigma)
    if (v >= n) throw InputError("sigma image out of range");
}

VandermondeExtension vandermonde_extension(const VandermondeData& vd,
                                           int bound) {
  validate_vandermonde(vd);
  const FieldPtr& f = vd.field;
  const size_t n = vd.roots.size();
  VandermondeExtension out;

  out.U = evaluation_matrix(vd);
  out.V = mat_zero(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.V.at(i, j) = out.U.at(j, i);

  FinAlgebra A = quotient_poly(f, vd.p);
  PolyQ xr = polq_divmod(polq_from_string("x", "x"), vd.p).second;
  Vec xcoords(n, Scalar::zero(f));
  for (size_t i = 0; i < xr.size(); ++i) xcoords[i] = Scalar::of(f, xr[i]);
  const Mat C = left_mult_matrix(A, xcoords);
  const Mat Uinv = mat_inv(out.U);

  Mat diag = mat_zero(f, n, n);
  for (size_t j = 0; j < n; ++j) diag.at(j, j) = vd.roots[j];
  if (out.U * C != diag * out.U)
    throw ComputeError("evaluation matrix fails to diagonalise the modulus");

  Mat repositioned = mat_zero(f, n, n);
  for (size_t j = 0; j < n; ++j)
    repositioned.at(j, j) = vd.roots[vd.sigma[j]];
  out.W = Uinv * repositioned * out.U;
  out.w.assign(n, Scalar::zero(f));
  for (size_t i = 0; i < n; ++i) out.w[i] = out.W.at(i, 0);

  // sigma(x^i) = sigma(x)^i: powers of w computed inside A.
  ExtensionMap e;
  e.A = A;
  e.S = base_field_algebra(f);
  e.B = A;
  e.sigma.assign(n, std::vector<Vec>(1, Vec(n, Scalar::zero(f))));
  AlgElem power = alg_one(A);
  for (size_t i = 0; i < n; ++i) {
    e.sigma[i][0] = power.v;
    if (i + 1 < n) power = power * alg_elem(A, out.w);
  }
  if (!verify_extension(e).empty())
    throw ComputeError("root repositioning produced a non-multiplicative map");
  out.extension = e;

  SweedlerPresentation F = build_F(A, A, bound);
  out.images = F_of_extension(F, e);
  if (!out.images.ok())
    throw ComputeError("extension images fail the presentation relations");
  return out;
}

MonoidReport monoid_check(const VandermondeData& vd,
                          const std::vector<size_t>& tau) {
  validate_vandermonde(vd);
  VandermondeData vt = vd;
  vt.sigma = tau;
  validate_vandermonde(vt);
  const FieldPtr& f = vd.field;
  const size_t n = vd.roots.size();

  const Mat U = evaluation_matrix(vd);
  const Mat Uinv = mat_inv(U);
  auto op = [&](const std::vector<size_t>& s) {
    return Uinv * pullback_matrix(f, s) * U;
  };

  std::vector<size_t> tau_o_sigma(n), sigma_o_tau(n);
  for (size_t j = 0; j < n; ++j) {
    tau_o_sigma[j] = tau[vd.sigma[j]];
    sigma_o_tau[j] = vd.sigma[tau[j]];
  }

  MonoidReport out;
  const Mat prod = op(vd.sigma) * op(tau);
  if (prod == op(tau_o_sigma))
    out.law = "W(sigma).W(tau) = W(tau o sigma)";
  else if (prod == op(sigma_o_tau))
    out.law = "W(sigma).W(tau) = W(sigma o tau)";
  else
    out.failures.push_back(
        "product is the pullback of neither composite of sigma and tau");
  return out;
}

GaloisReport galois_check(const VandermondeData& vd) {
  validate_vandermonde(vd);
  const FieldPtr& f = vd.field;
  const size_t n = vd.roots.size();
  const size_t d =
      f->kind == FieldSpec::Kind::rationals
          ? 1
          : static_cast<size_t>(polq_deg(f->modulus));
  const FieldPtr q = field_rationals();

  // Pairs (value, forced image) of the candidate endomorphism, kept with
  // linearly independent values; flat() stacks both coordinate vectors
  // so a rank jump on a value-dependent pair flags an inconsistency.
  std::vector<std::pair<Scalar, Scalar>> basis;
  auto flat = [&](const Scalar& v, const Scalar& w) {
    Vec row(2 * d, Scalar::zero(q));
    const auto& vc = v.coords();
    const auto& wc = w.coords();
    for (size_t i = 0; i < vc.size(); ++i) row[i] = Scalar::of(q, vc[i]);
    for (size_t i = 0; i < wc.size(); ++i) row[d + i] = Scalar::of(q, wc[i]);
    return row;
  };
  auto rank_with = [&](const std::pair<Scalar, Scalar>* extra,
                       bool values_only) {
    const size_t rows = basis.size() + (extra ? 1 : 0);
    const size_t cols = values_only ? d : 2 * d;
    Mat m = mat_zero(q, rows, cols);
    for (size_t r = 0; r < basis.size(); ++r) {
      Vec row = flat(basis[r].first, basis[r].second);
      for (size_t cidx = 0; cidx < cols; ++cidx) m.at(r, cidx) = row[cidx];
    }
    if (extra) {
      Vec row = flat(extra->first, extra->second);
      for (size_t cidx = 0; cidx < cols; ++cidx)
        m.at(basis.size(), cidx) = row[cidx];
    }
    return mat_rank(m);
  };
  // Returns true when the pair is consistent; independent pairs are
  // added and the span is closed under products.
  auto absorb = [&](const Scalar& v, const Scalar& w) {
    std::pair<Scalar, Scalar> cand{v, w};
    if (rank_with(&cand, true) > rank_with(nullptr, true)) {
      basis.push_back(cand);
      return true;
    }
    return rank_with(&cand, false) == rank_with(nullptr, false);
  };

  GaloisReport out;
  basis.emplace_back(Scalar::one(f), Scalar::one(f));
  for (size_t j = 0; j < n; ++j) {
    bool ok = absorb(vd.roots[j], vd.roots[vd.sigma[j]]);
    // Close under multiplication so later dependencies carry the full
    // multiplicative constraints of the elements accepted so far.
    for (bool grew = ok; grew && ok;) {
      grew = false;
      const size_t count = basis.size();
      for (size_t a = 0; a < count && ok; ++a)
        for (size_t b = a; b < count && ok; ++b) {
          const Scalar pv = basis[a].first * basis[b].first;
          const Scalar pw = basis[a].second * basis[b].second;
          const size_t before = basis.size();
          ok = absorb(pv, pw);
          grew = grew || basis.size() > before;
        }
    }
    if (ok) {
      out.root_lines.push_back("root " + std::to_string(j + 1) + " -> root " +
                               std::to_string(vd.sigma[j] + 1) +
                               ": consistent");
    } else {
      out.root_lines.push_back("root " + std::to_string(j + 1) + " -> root " +
                               std::to_string(vd.sigma[j] + 1) +
                               ": no field endomorphism does this");
      out.failures.push_back(out.root_lines.back());
    }
  }
  out.galois = out.failures.empty();
  return out;
}

}  // namespace sweedler
