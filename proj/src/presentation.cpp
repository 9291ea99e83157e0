#include "sweedler/presentation.hpp"

#include <array>
#include <map>
#include <sstream>

namespace sweedler {

namespace {

NcPoly gen_monomial(const FieldPtr& f, size_t g) {
  return NcPoly::monomial(f, {static_cast<Gen>(g)}, Scalar::one(f));
}

// Substitution of generator images into words and polynomials, generic
// over the target ring.
template <class R>
R eval_word(const Word& w, const std::vector<R>& images, const R& one) {
  R acc = one;
  for (Gen g : w) acc = acc * images[static_cast<size_t>(g)];
  return acc;
}

template <class R, class ScaleFn>
R eval_poly(const NcPoly& p, const std::vector<R>& images, const R& one,
            const R& zero, ScaleFn scale) {
  R acc = zero;
  for (const auto& [w, c] : p.terms()) acc = acc + scale(eval_word(w, images, one), c);
  return acc;
}

AlgElem scale_elem(const AlgElem& x, const Scalar& c) {
  AlgElem r = x;
  for (auto& s : r.v) s *= c;
  return r;
}

// Reduce both legs of a tensor element in their own systems.
TensorPoly reduce_tensor(const RewritingSystem& left,
                         const RewritingSystem& right, const TensorPoly& t) {
  TensorPoly out(t.field());
  for (const auto& [key, c] : t.terms()) {
    NcPoly nl = normal_form(
        left, NcPoly::monomial(t.field(), key.first, Scalar::one(t.field())));
    NcPoly nr = normal_form(
        right,
        NcPoly::monomial(t.field(), key.second, Scalar::one(t.field())));
    out += TensorPoly::tensor(nl, nr).scaled(c);
  }
  return out;
}

// Extend a generator-image table multiplicatively over tensor squares.
TensorPoly apply_table_word(const std::vector<TensorPoly>& table,
                            const FieldPtr& f, const Word& w) {
  TensorPoly acc =
      TensorPoly::tensor(NcPoly::constant(Scalar::one(f)),
                         NcPoly::constant(Scalar::one(f)));
  for (Gen g : w) acc = acc * table[static_cast<size_t>(g)];
  return acc;
}

TensorPoly apply_table_poly(const std::vector<TensorPoly>& table,
                            const FieldPtr& f, const NcPoly& p) {
  TensorPoly acc(f);
  for (const auto& [w, c] : p.terms())
    acc += apply_table_word(table, f, w).scaled(c);
  return acc;
}

}  // namespace

size_t SweedlerPresentation::gen_of(size_t i, size_t r) const {
  if (unit_row_eliminated) {
    if (i == 0) throw ComputeError("the unit row carries no generator");
    return (i - 1) * B.dim + r;
  }
  return i * B.dim + r;
}

SweedlerPresentation build_F(const FinAlgebra& A, const FinAlgebra& B,
                             int bound, bool permuted_schedule) {
  validate_algebra(A);
  validate_algebra(B);
  if (!field_eq(A.field, B.field))
    throw InputError("the two algebras must share a field");
  const FieldPtr& f = A.field;
  const size_t nA = A.dim, nB = B.dim;
  const Scalar one = Scalar::one(f);

  SweedlerPresentation F;
  F.A = A;
  F.B = B;
  F.bound = bound;
  F.unit_row_eliminated = A.unit_is_basis0();
  F.square = F.unit_row_eliminated && algebra_eq(A, B);

  std::vector<std::string> labels;
  const size_t first_row = F.unit_row_eliminated ? 1 : 0;
  for (size_t i = first_row; i < nA; ++i)
    for (size_t r = 0; r < nB; ++r) {
      if (F.unit_row_eliminated && nA == 2)
        labels.push_back("f" + std::to_string(r));
      else
        labels.push_back("f" + A.labels[i] + "_" + std::to_string(r));
      F.gen_index.emplace_back(i, r);
    }

  F.eta.assign(nA, std::vector<NcPoly>(nB, NcPoly(f)));
  for (size_t i = 0; i < nA; ++i)
    for (size_t r = 0; r < nB; ++r)
      F.eta[i][r] = (F.unit_row_eliminated && i == 0)
                        ? NcPoly::constant(B.unit[r])
                        : gen_monomial(f, F.gen_of(i, r));

  // P_i = sum_r eta_ir B_r as a matrix of polynomials over the f's.
  std::vector<Mat> breg;
  breg.reserve(nB);
  for (size_t r = 0; r < nB; ++r) breg.push_back(left_mult_matrix(B, r));
  auto pmat = [&](size_t i) {
    std::vector<std::vector<NcPoly>> m(nB, std::vector<NcPoly>(nB, NcPoly(f)));
    for (size_t r = 0; r < nB; ++r)
      for (size_t u = 0; u < nB; ++u)
        for (size_t v = 0; v < nB; ++v)
          if (!breg[r].at(u, v).is_zero())
            m[u][v] += F.eta[i][r].scaled(breg[r].at(u, v));
    return m;
  };
  std::vector<std::vector<std::vector<NcPoly>>> P;
  P.reserve(nA);
  for (size_t i = 0; i < nA; ++i) P.push_back(pmat(i));

  for (size_t i = 0; i < nA; ++i)
    for (size_t j = 0; j < nA; ++j)
      for (size_t u = 0; u < nB; ++u)
        for (size_t v = 0; v < nB; ++v) {
          NcPoly rel(f);
          for (size_t w = 0; w < nB; ++w) rel += P[i][u][w] * P[j][w][v];
          for (size_t k = 0; k < nA; ++k)
            if (!A.c[i][j][k].is_zero())
              rel -= P[k][u][v].scaled(A.c[i][j][k]);
          if (!rel.is_zero()) F.relations.push_back(rel);
        }
  if (!F.unit_row_eliminated)
    for (size_t r = 0; r < nB; ++r) {
      NcPoly rel(f);
      for (size_t i = 0; i < nA; ++i)
        if (!A.unit[i].is_zero())
          rel += gen_monomial(f, F.gen_of(i, r)).scaled(A.unit[i]);
      rel -= NcPoly::constant(B.unit[r]);
      if (!rel.is_zero()) F.relations.push_back(rel);
    }

  CompletionOptions opts;
  opts.degree_bound = bound;
  opts.permuted_schedule = permuted_schedule;
  F.system = complete(f, labels, F.relations, opts);

  if (F.square) {
    // Delta f_is = delta_{s0} f_i0 (x) 1 + sum_{r>=1} f_ir (x) f_rs,
    // eps(f_ir) = delta_ir.
    for (size_t g = 0; g < labels.size(); ++g) {
      const auto [i, s] = F.gen_index[g];
      TensorPoly t(f);
      if (s == 0) t.add_term({static_cast<Gen>(g)}, {}, one);
      for (size_t r = 1; r < nA; ++r)
        t.add_term({static_cast<Gen>(F.gen_of(i, r))},
                   {static_cast<Gen>(F.gen_of(r, s))}, one);
      F.delta.push_back(t);
      F.epsilon.push_back(i == s ? one : Scalar::zero(f));
    }
  }

  auto must_pass = [](const std::vector<std::string>& fails,
                      const char* what) {
    if (!fails.empty())
      throw ComputeError(std::string(what) + ": " + fails.front());
  };
  for (const NcPoly& r : F.relations)
    if (!reduces_to_zero(F.system, r))
      throw ComputeError("relation does not reduce to zero: " +
                         r.to_string(labels));
  must_pass(check_eta_multiplicative(F), "eta fails multiplicativity");
  if (F.square) {
    must_pass(check_delta_multiplicative(F),
              "comultiplication fails on a relation");
    must_pass(check_counit_laws(F), "counit law fails");
    must_pass(check_coassociativity(F), "coassociativity fails");
  }
  return F;
}

std::vector<std::string> check_eta_multiplicative(
    const SweedlerPresentation& F) {
  std::vector<std::string> fails;
  const FieldPtr& f = F.A.field;
  const size_t nA = F.A.dim, nB = F.B.dim;
  for (size_t i = 0; i < nA; ++i)
    for (size_t j = 0; j < nA; ++j)
      for (size_t w = 0; w < nB; ++w) {
        NcPoly lhs(f);
        for (size_t r = 0; r < nB; ++r)
          for (size_t s = 0; s < nB; ++s)
            if (!F.B.c[r][s][w].is_zero())
              lhs += (F.eta[i][r] * F.eta[j][s]).scaled(F.B.c[r][s][w]);
        for (size_t k = 0; k < nA; ++k)
          if (!F.A.c[i][j][k].is_zero())
            lhs -= F.eta[k][w].scaled(F.A.c[i][j][k]);
        if (!reduces_to_zero(F.system, lhs)) {
          std::ostringstream os;
          os << "eta(" << F.A.labels[i] << ")eta(" << F.A.labels[j]
             << ") - eta(product) nonzero at coordinate " << F.B.labels[w]
             << ": " << normal_form(F.system, lhs).to_string(F.system.labels);
          fails.push_back(os.str());
        }
      }
  return fails;
}

std::vector<std::string> check_delta_multiplicative(
    const SweedlerPresentation& F) {
  std::vector<std::string> fails;
  if (!F.square) return fails;
  const FieldPtr& f = F.A.field;
  for (const NcPoly& rel : F.relations) {
    TensorPoly img = apply_table_poly(F.delta, f, rel);
    TensorPoly red = reduce_tensor(F.system, F.system, img);
    if (!red.is_zero())
      fails.push_back("Delta(" + rel.to_string(F.system.labels) +
                      ") = " + red.to_string(F.system.labels, F.system.labels));
  }
  return fails;
}

std::vector<std::string> check_counit_laws(const SweedlerPresentation& F) {
  std::vector<std::string> fails;
  if (!F.square) return fails;
  const FieldPtr& f = F.A.field;
  auto eps_word = [&](const Word& w) {
    Scalar c = Scalar::one(f);
    for (Gen g : w) c *= F.epsilon[static_cast<size_t>(g)];
    return c;
  };
  for (size_t g = 0; g < F.system.ngens(); ++g) {
    NcPoly left(f), right(f);
    for (const auto& [key, c] : F.delta[g].terms()) {
      left += NcPoly::monomial(f, key.second, c * eps_word(key.first));
      right += NcPoly::monomial(f, key.first, c * eps_word(key.second));
    }
    NcPoly self = gen_monomial(f, g);
    if (normal_form(F.system, left) != normal_form(F.system, self))
      fails.push_back("(eps(x)1)Delta " + F.system.labels[g] + " = " +
                      left.to_string(F.system.labels));
    if (normal_form(F.system, right) != normal_form(F.system, self))
      fails.push_back("(1(x)eps)Delta " + F.system.labels[g] + " = " +
                      right.to_string(F.system.labels));
  }
  for (const NcPoly& rel : F.relations) {
    Scalar v = Scalar::zero(f);
    for (const auto& [w, c] : rel.terms()) v += c * eps_word(w);
    if (!v.is_zero())
      fails.push_back("eps(" + rel.to_string(F.system.labels) +
                      ") = " + v.to_string());
  }
  return fails;
}

std::vector<std::string> check_coassociativity(
    const SweedlerPresentation& F) {
  std::vector<std::string> fails;
  if (!F.square) return fails;
  const FieldPtr& f = F.A.field;
  using Key3 = std::array<Word, 3>;
  for (size_t g = 0; g < F.system.ngens(); ++g) {
    std::map<Key3, Scalar> diff;
    auto acc = [&](const Key3& k, const Scalar& c) {
      auto it = diff.find(k);
      if (it == diff.end())
        diff.emplace(k, c);
      else {
        it->second += c;
        if (it->second.is_zero()) diff.erase(it);
      }
    };
    for (const auto& [key, c] : F.delta[g].terms()) {
      const TensorPoly left = apply_table_word(F.delta, f, key.first);
      for (const auto& [k2, c2] : left.terms())
        acc({k2.first, k2.second, key.second}, c * c2);
      const TensorPoly right = apply_table_word(F.delta, f, key.second);
      for (const auto& [k2, c2] : right.terms())
        acc({key.first, k2.first, k2.second}, -(c * c2));
    }
    // Reduce each leg and re-accumulate.
    std::map<Key3, Scalar> reduced;
    for (const auto& [k, c] : diff) {
      NcPoly n0 = normal_form(F.system, NcPoly::monomial(f, k[0], c));
      NcPoly n1 = normal_form(F.system, NcPoly::monomial(f, k[1], Scalar::one(f)));
      NcPoly n2 = normal_form(F.system, NcPoly::monomial(f, k[2], Scalar::one(f)));
      for (const auto& [w0, c0] : n0.terms())
        for (const auto& [w1, c1] : n1.terms())
          for (const auto& [w2, c2] : n2.terms()) {
            Key3 kk{w0, w1, w2};
            auto it = reduced.find(kk);
            Scalar add = c0 * c1 * c2;
            if (it == reduced.end())
              reduced.emplace(kk, add);
            else {
              it->second += add;
              if (it->second.is_zero()) reduced.erase(it);
            }
          }
    }
    if (!reduced.empty())
      fails.push_back("(Delta(x)1)Delta != (1(x)Delta)Delta on " +
                      F.system.labels[g]);
  }
  return fails;
}

std::optional<std::string> square_zero_presentation_note(
    const SweedlerPresentation& F) {
  if (!F.square || F.A.dim != 2) return std::nullopt;
  for (size_t k = 0; k < 2; ++k)
    if (!F.A.c[1][1][k].is_zero()) return std::nullopt;
  const std::string a = F.system.labels[0], b = F.system.labels[1];
  return "square-zero case: the defining ideal is generated by " + a + "." +
         a + " and the anticommutator " + a + "." + b + " + " + b + "." + a +
         "; the stronger identities " + a + "." + b + " = " + b + "." + a +
         " = 0 sometimes quoted here do not follow from multiplicativity of "
         "eta";
}

FactorizationResult comultiplication_through(const SweedlerPresentation& FAC,
                                             const SweedlerPresentation& FAB,
                                             const SweedlerPresentation& FBC) {
  if (!algebra_eq(FAB.A, FAC.A) || !algebra_eq(FBC.B, FAC.B) ||
      !algebra_eq(FAB.B, FBC.A))
    throw InputError("factorization needs presentations of F(A,B), F(B,C) "
                     "matching F(A,C)");
  if (!FBC.unit_row_eliminated)
    throw InputError("the intermediate algebra must have its unit at basis 0");
  const FieldPtr& f = FAC.A.field;
  const size_t nB = FAB.B.dim;
  FactorizationResult out;
  for (size_t g = 0; g < FAC.system.ngens(); ++g) {
    const auto [i, u] = FAC.gen_index[g];
    TensorPoly t(f);
    if (u == 0)
      t.add_term({static_cast<Gen>(FAB.gen_of(i, 0))}, {}, Scalar::one(f));
    for (size_t r = 1; r < nB; ++r)
      t.add_term({static_cast<Gen>(FAB.gen_of(i, r))},
                 {static_cast<Gen>(FBC.gen_of(r, u))}, Scalar::one(f));
    out.images.push_back(t);
  }
  for (const NcPoly& rel : FAC.relations) {
    TensorPoly img = apply_table_poly(out.images, f, rel);
    TensorPoly red = reduce_tensor(FAB.system, FBC.system, img);
    if (!red.is_zero())
      out.failures.push_back(
          "image of relation " + rel.to_string(FAC.system.labels) +
          " reduces to " +
          red.to_string(FAB.system.labels, FBC.system.labels));
  }
  return out;
}

ExtensionImageReport F_of_extension(const SweedlerPresentation& F,
                                    const ExtensionMap& e) {
  validate_extension_shape(e);
  if (!algebra_eq(e.A, F.A) || !algebra_eq(e.B, F.B))
    throw InputError("extension endpoints do not match the presentation");
  const FieldPtr& f = F.A.field;
  const size_t nS = e.S.dim;
  ExtensionImageReport out;
  std::vector<AlgElem> images;
  for (size_t g = 0; g < F.system.ngens(); ++g) {
    const auto [i, r] = F.gen_index[g];
    Vec v(nS, Scalar::zero(f));
    for (size_t s = 0; s < nS; ++s) v[s] = e.sigma[i][s][r];
    out.images.push_back(v);
    images.push_back(alg_elem(e.S, v));
  }
  const AlgElem one = alg_one(e.S), zero = alg_zero(e.S);
  for (const NcPoly& rel : F.relations) {
    AlgElem img = eval_poly(rel, images, one, zero, scale_elem);
    if (!img.is_zero())
      out.relation_failures.push_back(
          "relation " + rel.to_string(F.system.labels) + " maps to " +
          element_to_string(e.S, img.v));
  }
  for (size_t i = 0; i < F.A.dim; ++i)
    for (size_t r = 0; r < F.B.dim; ++r) {
      AlgElem lhs = eval_poly(F.eta[i][r], images, one, zero, scale_elem);
      Vec rhs(nS, Scalar::zero(f));
      for (size_t s = 0; s < nS; ++s) rhs[s] = e.sigma[i][s][r];
      if (!(lhs == alg_elem(e.S, rhs)))
        out.compatibility_failures.push_back(
            "(F(sigma)(x)1)eta differs from sigma at (" + F.A.labels[i] +
            ", " + F.B.labels[r] + ")");
    }
  return out;
}

MatrixImageReport F_of_representation(const SweedlerPresentation& F,
                                      const std::vector<Mat>& theta) {
  if (theta.size() != F.A.dim)
    throw InputError("need one matrix per basis element of A");
  if (!F.B.unit_is_basis0())
    throw InputError("representation images require the unit of B at basis 0");
  const FieldPtr& f = F.A.field;
  const size_t n = theta.front().rows();
  MatrixImageReport out;
  for (size_t g = 0; g < F.system.ngens(); ++g) {
    const auto [i, r] = F.gen_index[g];
    out.images.push_back(r == 0 ? theta[i] : mat_zero(f, n, n));
  }
  out.relation_failures = relations_vanish_in_matrices(F, out.images);
  return out;
}

std::vector<std::string> relations_vanish_in_matrices(
    const SweedlerPresentation& F, const std::vector<Mat>& images) {
  const FieldPtr& f = F.A.field;
  std::vector<std::string> fails;
  if (images.size() != F.system.ngens())
    throw InputError("need one matrix image per generator");
  const size_t n = images.empty() ? 1 : images.front().rows();
  const Mat one = mat_identity(f, n), zero = mat_zero(f, n, n);
  for (const NcPoly& rel : F.relations) {
    Mat img = eval_poly(rel, images, one, zero,
                        [](const Mat& m, const Scalar& c) {
                          return mat_scale(m, c);
                        });
    if (!mat_is_zero(img))
      fails.push_back("relation " + rel.to_string(F.system.labels) +
                      " has a nonzero matrix image");
  }
  return fails;
}

std::vector<std::string> relations_vanish_in_central_matrices(
    const SweedlerPresentation& F, const std::vector<RMat<CentralPoly>>& images,
    size_t wdim) {
  const FieldPtr& f = F.A.field;
  std::vector<std::string> fails;
  if (images.size() != F.system.ngens())
    throw InputError("need one matrix image per generator");
  RMat<CentralPoly> one(wdim, wdim, CentralPoly::zero(f));
  for (size_t i = 0; i < wdim; ++i) one.at(i, i) = CentralPoly::one(f);
  RMat<CentralPoly> zero(wdim, wdim, CentralPoly::zero(f));
  auto scale = [](const RMat<CentralPoly>& m, const Scalar& c) {
    RMat<CentralPoly> r = m;
    for (size_t i = 0; i < r.rows(); ++i)
      for (size_t j = 0; j < r.cols(); ++j)
        r.at(i, j) = r.at(i, j) * CentralPoly(c);
    return r;
  };
  for (const NcPoly& rel : F.relations) {
    RMat<CentralPoly> img = eval_poly(rel, images, one, zero, scale);
    bool zero_img = true;
    for (size_t i = 0; i < wdim && zero_img; ++i)
      for (size_t j = 0; j < wdim && zero_img; ++j)
        if (!img.at(i, j).is_zero()) zero_img = false;
    if (!zero_img)
      fails.push_back("relation " + rel.to_string(F.system.labels) +
                      " has a nonzero matrix image");
  }
  return fails;
}

AlgebraComparison compare_F_to_A(const SweedlerPresentation& F) {
  AlgebraComparison out;
  const FieldPtr& f = F.A.field;
  if (F.B.dim != 1)
    throw InputError("comparison to A is defined for B = base field");
  out.dims = dimension_sequence(F.system, F.bound);
  size_t total = 0;
  for (size_t d : out.dims) total += d;
  out.dims_ok = (total == F.A.dim) && out.dims.back() == 0;
  if (!out.dims_ok) {
    std::ostringstream os;
    os << "total normal-word count " << total << " vs dim A = " << F.A.dim;
    out.notes.push_back(os.str());
  }

  std::vector<NcPoly> img;
  img.reserve(F.A.dim);
  for (size_t i = 0; i < F.A.dim; ++i)
    img.push_back(normal_form(F.system, F.eta[i][0]));

  out.mult_ok = true;
  for (size_t i = 0; i < F.A.dim; ++i)
    for (size_t j = 0; j < F.A.dim; ++j) {
      NcPoly want(f);
      for (size_t k = 0; k < F.A.dim; ++k)
        if (!F.A.c[i][j][k].is_zero()) want += img[k].scaled(F.A.c[i][j][k]);
      if (normal_form(F.system, img[i] * img[j]) != want) {
        out.mult_ok = false;
        out.notes.push_back("structure constants disagree at (" +
                            F.A.labels[i] + ", " + F.A.labels[j] + ")");
      }
    }

  // Linear independence of the images over the normal words they touch.
  std::map<Word, size_t, WordGreater> cols;
  for (const NcPoly& p : img)
    for (const auto& [w, c] : p.terms())
      cols.emplace(w, cols.size());
  Mat coords = mat_zero(f, F.A.dim, cols.empty() ? 1 : cols.size());
  for (size_t i = 0; i < img.size(); ++i)
    for (const auto& [w, c] : img[i].terms())
      coords.at(i, cols.at(w)) = c;
  out.rank_ok = mat_rank(coords) == F.A.dim;
  if (!out.rank_ok) out.notes.push_back("eta images are linearly dependent");
  return out;
}

RepMeasuringReport representation_to_measuring_coalgebra(
    const SweedlerPresentation& F, const std::vector<Mat>& images,
    size_t vdim) {
  const FieldPtr& f = F.A.field;
  if (!algebra_eq(F.A, F.B))
    throw InputError("measuring extraction needs a square presentation");
  for (const Mat& m : images)
    if (m.rows() != vdim || m.cols() != vdim)
      throw InputError("generator images must be square of the given size");
  RepMeasuringReport out;
  out.relation_failures = relations_vanish_in_matrices(F, images);
  if (!out.relation_failures.empty()) return out;

  // Compose with eta: a_i |-> sum_r theta(eta_ir) (x) a_r, the matrix
  // side written over the matrix-unit basis E_uv at index u*vdim + v.
  const Mat one = mat_identity(f, vdim), zero = mat_zero(f, vdim, vdim);
  ExtensionMap e;
  e.A = F.A;
  e.S = matrix_algebra(f, vdim);
  e.B = F.B;
  e.sigma.assign(F.A.dim,
                 std::vector<Vec>(e.S.dim, Vec(F.B.dim, Scalar::zero(f))));
  for (size_t i = 0; i < F.A.dim; ++i)
    for (size_t r = 0; r < F.B.dim; ++r) {
      const Mat si = eval_poly(F.eta[i][r], images, one, zero,
                               [](const Mat& m, const Scalar& c) {
                                 return mat_scale(m, c);
                               });
      for (size_t u = 0; u < vdim; ++u)
        for (size_t v = 0; v < vdim; ++v)
          e.sigma[i][u * vdim + v][r] = si.at(u, v);
    }
  if (!verify_extension(e).empty())
    throw ComputeError(
        "extension composed from a relation-clean representation fails "
        "multiplicativity");
  MeasuringData m = to_measuring(e);
  if (!verify_measuring(m).empty())
    throw ComputeError("dualized representation fails the measuring law");
  out.extension = std::move(e);
  out.measuring = std::move(m);
  return out;
}

}  // namespace sweedler
