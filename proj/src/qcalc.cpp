#include "sweedler/qcalc.hpp"

#include <map>

namespace sweedler {

namespace {

// Tuples of coalgebra indices with coefficients: the working form of an
// iterated coproduct.  Expanding always splits the leftmost leg, so after
// m steps a tuple lists the legs of Delta^m left to right.
using Tuples = std::map<std::vector<int>, Scalar>;

Tuples expand_leftmost(const FinCoalgebra& h, const Tuples& in) {
  Tuples out;
  for (const auto& [tup, c] : in) {
    const int i = tup.front();
    for (size_t j = 0; j < h.dim; ++j)
      for (size_t k = 0; k < h.dim; ++k) {
        const Scalar& d = h.d[i][j][k];
        if (d.is_zero()) continue;
        std::vector<int> next;
        next.reserve(tup.size() + 1);
        next.push_back(static_cast<int>(j));
        next.push_back(static_cast<int>(k));
        next.insert(next.end(), tup.begin() + 1, tup.end());
        auto it = out.find(next);
        Scalar add = c * d;
        if (it == out.end())
          out.emplace(std::move(next), add);
        else {
          it->second += add;
          if (it->second.is_zero()) out.erase(it);
        }
      }
  }
  return out;
}

NcPoly tuples_to_poly(const FieldPtr& f, const Tuples& t) {
  NcPoly p(f);
  for (const auto& [tup, c] : t) {
    Word w(tup.begin(), tup.end());
    p.add_term(w, c);
  }
  return p;
}

NcPoly substitute(const FieldPtr& f, const NcPoly& poly,
                  const std::vector<NcPoly>& images) {
  NcPoly out(f);
  for (const auto& [w, c] : poly.terms()) {
    NcPoly term = NcPoly::constant(Scalar::one(f));
    for (Gen g : w) term = term * images[static_cast<size_t>(g)];
    out += term.scaled(c);
  }
  return out;
}

// The x-row presentation of F(k[x]/p, k[x]/p): generators f_0..f_{n-1}
// are the coordinates of eta(x) alone, and the relations are the matrix
// entries of p(X) where X = sum_r f_r B_r.  It presents the same algebra
// as the all-rows construction (the discarded rows are the coordinates
// of eta(x)^i, recovered here as the first column of X^i), but word
// length in the f_r matches word length in the dual-basis presentation,
// which makes the dimension sequences directly comparable.
struct XRowSystem {
  std::vector<std::string> labels;
  std::vector<NcPoly> relations;
  RewritingSystem system;
  // xpow[i][r]: coordinate of eta(x)^i at basis r, a polynomial in the f's.
  std::vector<std::vector<NcPoly>> xpow;
};

XRowSystem build_xrow(const FieldPtr& f, const FinAlgebra& a, const PolyQ& p,
                      int bound) {
  const size_t n = a.dim;
  XRowSystem out;
  for (size_t r = 0; r < n; ++r) out.labels.push_back("f" + std::to_string(r));

  using PolyMat = std::vector<std::vector<NcPoly>>;
  PolyMat X(n, std::vector<NcPoly>(n, NcPoly(f)));
  for (size_t r = 0; r < n; ++r) {
    const Mat br = left_mult_matrix(a, r);
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v)
        if (!br.at(u, v).is_zero())
          X[u][v] += NcPoly::monomial(f, {static_cast<Gen>(r)}, br.at(u, v));
  }

  // Powers of X; the first column of X^i lists the eta(x)^i coordinates.
  std::vector<PolyMat> pow;
  PolyMat id(n, std::vector<NcPoly>(n, NcPoly(f)));
  for (size_t u = 0; u < n; ++u) id[u][u] = NcPoly::constant(Scalar::one(f));
  pow.push_back(id);
  for (size_t i = 1; i <= n; ++i) {
    PolyMat next(n, std::vector<NcPoly>(n, NcPoly(f)));
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v)
        for (size_t w = 0; w < n; ++w) next[u][v] += pow[i - 1][u][w] * X[w][v];
    pow.push_back(std::move(next));
  }
  for (size_t i = 0; i < n; ++i) {
    out.xpow.emplace_back();
    for (size_t r = 0; r < n; ++r) out.xpow[i].push_back(pow[i][r][0]);
  }

  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v) {
      NcPoly rel(f);
      for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) rel += pow[i][u][v].scaled(Scalar::of(f, p[i]));
      if (!rel.is_zero()) out.relations.push_back(rel);
    }

  CompletionOptions opts;
  opts.degree_bound = bound;
  out.system = complete(f, out.labels, out.relations, opts);
  return out;
}

}  // namespace

QcalcPresentation qcalc_presentation(const FieldPtr& f, const PolyQ& p,
                                     int bound, bool permuted) {
  const int n = polq_deg(p);
  if (n < 1 || p.back() != 1)
    throw InputError("the modulus must be monic of degree at least 1");
  QcalcPresentation out;
  out.p = p;
  out.bound = bound;
  FinAlgebra a = quotient_poly(f, p);
  out.H = dual_coalgebra(a);

  std::vector<std::string> labels;
  for (int j = 0; j < n; ++j) labels.push_back("a" + std::to_string(j));

  for (int j = 0; j < n; ++j) {
    NcPoly rel = NcPoly::constant(Scalar::of(f, p[0]) * out.H.counit[j]);
    Tuples t;
    t.emplace(std::vector<int>{j}, Scalar::one(f));
    for (int i = 1; i <= n; ++i) {
      // t currently holds Delta^{i-1} a_j.
      if (p[i] != 0) rel += tuples_to_poly(f, t).scaled(Scalar::of(f, p[i]));
      if (i < n) t = expand_leftmost(out.H, t);
    }
    if (!rel.is_zero()) out.relations.push_back(rel);
  }

  CompletionOptions opts;
  opts.degree_bound = bound;
  opts.permuted_schedule = permuted;
  out.system = complete(f, labels, out.relations, opts);
  return out;
}

QcalcEquivalence verify_qcalc_equivalence(const FieldPtr& f, const PolyQ& p,
                                          int bound) {
  QcalcEquivalence out;
  QcalcPresentation qc = qcalc_presentation(f, p, bound);
  FinAlgebra a = quotient_poly(f, p);
  SweedlerPresentation fm = build_F(a, a, bound);
  XRowSystem xr = build_xrow(f, a, p, bound);

  // a_r |-> coordinate of eta(x) at basis r.  In the all-rows system that
  // is read off the eta table (x may be a unit multiple when deg p = 1);
  // in the x-row system it is the generator f_r itself.
  PolyQ xp = polq_divmod(polq_from_string("x", "x"), p).second;
  Vec xcoords(a.dim, Scalar::zero(f));
  for (size_t i = 0; i < xp.size(); ++i) xcoords[i] = Scalar::of(f, xp[i]);
  std::vector<NcPoly> into_full;
  for (size_t r = 0; r < a.dim; ++r) {
    NcPoly img(f);
    for (size_t i = 0; i < a.dim; ++i)
      if (!xcoords[i].is_zero()) img += fm.eta[i][r].scaled(xcoords[i]);
    into_full.push_back(img);
  }
  std::vector<NcPoly> into_xrow;
  for (size_t r = 0; r < a.dim; ++r)
    into_xrow.push_back(
        NcPoly::monomial(f, {static_cast<Gen>(r)}, Scalar::one(f)));

  out.relations_ok = true;
  auto expect_zero = [&](const NcPoly& img, const RewritingSystem& target,
                         const std::string& what) {
    if (!reduces_to_zero(target, img)) {
      out.relations_ok = false;
      out.failures.push_back(
          what + " reduces to " +
          normal_form(target, img).to_string(target.labels));
    }
  };
  for (const NcPoly& rel : qc.relations) {
    const std::string name = rel.to_string(qc.system.labels);
    expect_zero(substitute(f, rel, into_full), fm.system,
                "all-rows image of " + name);
    expect_zero(substitute(f, rel, into_xrow), xr.system,
                "x-row image of " + name);
  }

  // Mutual containment of the two matrix-method relation ideals under
  // f_{x^i, r} <-> coordinate of eta(x)^i at basis r.
  std::vector<NcPoly> full_to_xrow;
  for (const auto& [row, col] : fm.gen_index)
    full_to_xrow.push_back(xr.xpow[row][col]);
  for (const NcPoly& rel : fm.relations)
    expect_zero(substitute(f, rel, full_to_xrow), xr.system,
                "x-row image of an all-rows relation");
  for (const NcPoly& rel : xr.relations)
    expect_zero(substitute(f, rel, into_full), fm.system,
                "all-rows image of an x-row relation");

  out.dims_qcalc = dimension_sequence(qc.system, bound);
  out.dims_matrix = dimension_sequence(xr.system, bound);
  out.dims_ok = out.dims_qcalc == out.dims_matrix;
  if (!out.dims_ok) out.failures.push_back("dimension sequences differ");
  return out;
}

PareigisReport pareigis_check(const FieldPtr& f, int bound) {
  PareigisReport out;
  SweedlerPresentation F = build_F(dual_numbers(f), dual_numbers(f), bound);
  auto note = square_zero_presentation_note(F);
  out.warning = note ? *note : "";

  // The x, 1/y subalgebra: xh^2 = 0 and (conjugating xy = -yx by the
  // inverse of y) xh.wh + wh.xh = 0.
  std::vector<std::string> hl = {"xh", "wh"};
  std::vector<NcPoly> hrels = {
      ncpoly_from_string(f, hl, "xh.xh"),
      ncpoly_from_string(f, hl, "xh.wh + wh.xh")};
  RewritingSystem hsys;
  {
    CompletionOptions opts;
    opts.degree_bound = bound;
    hsys = complete(f, hl, hrels, opts);
  }

  // Generator map g0 -> xh, g1 -> wh is the identity on indices, so
  // relations can be shipped across verbatim.
  auto cross = [&](const std::vector<NcPoly>& rels,
                   const RewritingSystem& target, const char* dir) {
    for (const NcPoly& r : rels) {
      NcPoly copy(f);
      for (const auto& [w, c] : r.terms()) copy.add_term(w, c);
      if (!reduces_to_zero(target, copy))
        out.failures.push_back(std::string("relation fails to die ") + dir +
                               ": " + r.to_string(hl));
    }
  };
  cross(F.relations, hsys, "forward");
  cross(hrels, F.system, "backward");
  if (out.failures.empty())
    out.checks.push_back("relation ideals agree in both directions");

  auto da = dimension_sequence(F.system, bound);
  auto db = dimension_sequence(hsys, bound);
  if (da == db)
    out.checks.push_back("dimension sequences agree through degree " +
                         std::to_string(bound));
  else
    out.failures.push_back("dimension sequences differ");

  // Comultiplication tables: Delta xh = xh (x) 1 + wh (x) xh and
  // Delta wh = wh (x) wh, against the stored tables.
  TensorPoly dxh(f), dwh(f);
  dxh.add_term({0}, {}, Scalar::one(f));
  dxh.add_term({1}, {0}, Scalar::one(f));
  dwh.add_term({1}, {1}, Scalar::one(f));
  if (F.delta[0] == dxh && F.delta[1] == dwh)
    out.checks.push_back("comultiplication tables agree");
  else
    out.failures.push_back("comultiplication tables differ");
  if (F.epsilon[0].is_zero() && F.epsilon[1].is_one())
    out.checks.push_back("counits agree");
  else
    out.failures.push_back("counits differ");
  return out;
}

}  // namespace sweedler
