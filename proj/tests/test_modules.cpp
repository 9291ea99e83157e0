#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "sweedler/dmodule.hpp"
#include "sweedler/modules.hpp"
#include "sweedler/presentation.hpp"

using namespace sweedler;

namespace {

FieldPtr Q() { return field_rationals(); }

FinAlgebra gauss() { return quotient_poly(Q(), polq_from_string("x^2+1", "x")); }

Mat mat2(int a, int b, int c, int d) {
  Mat m = mat_zero(Q(), 2, 2);
  m.at(0, 0) = Scalar::of_int(Q(), a);
  m.at(0, 1) = Scalar::of_int(Q(), b);
  m.at(1, 0) = Scalar::of_int(Q(), c);
  m.at(1, 1) = Scalar::of_int(Q(), d);
  return m;
}

// The module structure on A twisted through conjugation: x acts as -x.
FinModule twisted_gauss_module() {
  FinModule m = regular_module(gauss());
  m.action[1] = mat_scale(m.action[1], Scalar::of_int(Q(), -1));
  return m;
}

FinModule zero_module(const FinAlgebra& a) {
  FinModule m;
  m.algebra = a;
  m.dim = 0;
  m.action.assign(a.dim, mat_zero(a.field, 0, 0));
  return m;
}

// Columns of the matrix algebra acting on themselves: E_uv sends e_v to e_u.
FinModule column_module(const FinAlgebra& s, size_t n) {
  FinModule m;
  m.algebra = s;
  m.dim = n;
  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v) {
      Mat e = mat_zero(s.field, n, n);
      e.at(u, v) = Scalar::one(s.field);
      m.action.push_back(e);
    }
  return m;
}

// theta(a_p) = sigma(a_p) . (v_0 (x) 1), always a module map over sigma.
std::vector<Mat> extension_applied_to_v0(const ExtensionMap& sigma,
                                         const FinModule& v) {
  const FieldPtr& f = sigma.A.field;
  std::vector<Mat> theta;
  for (size_t p = 0; p < sigma.A.dim; ++p) {
    Mat t = mat_zero(f, v.dim, sigma.B.dim);
    for (size_t s = 0; s < sigma.S.dim; ++s)
      for (size_t k = 0; k < sigma.B.dim; ++k) {
        const Scalar& c = sigma.sigma[p][s][k];
        if (c.is_zero()) continue;
        for (size_t row = 0; row < v.dim; ++row)
          t.at(row, k) = t.at(row, k) + c * v.action[s].at(row, 0);
      }
    theta.push_back(t);
  }
  return theta;
}

std::vector<size_t> scaled_by(const std::vector<size_t>& v, size_t k) {
  std::vector<size_t> out;
  for (size_t d : v) out.push_back(k * d);
  return out;
}

std::vector<size_t> summed(const std::vector<size_t>& a,
                           const std::vector<size_t>& b) {
  std::vector<size_t> out;
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

// D(phi) on a normal form: G(p,u) -> sum_q phi(q,p) G(q,u), then reduce.
ModPoly push_through(const ModPoly& t, const Mat& phi,
                     const ModulePresentation& src,
                     const ModulePresentation& dst) {
  ModPoly out(dst.F.system.field);
  for (const auto& [key, c] : t.terms()) {
    size_t p = static_cast<size_t>(key.first) / src.N.dim;
    size_t u = static_cast<size_t>(key.first) % src.N.dim;
    for (size_t q = 0; q < dst.M.dim; ++q) {
      if (phi.at(q, p).is_zero()) continue;
      ModPoly g = ModPoly::monomial(dst.F.system.field,
                                    static_cast<int>(dst.gen_of(q, u)),
                                    key.second, c * phi.at(q, p));
      out += g;
    }
  }
  return module_normal_form(dst.system, out);
}

}  // namespace

TEST_CASE("regular modules validate over the catalog") {
  for (const FinAlgebra& a : {gauss(), dual_numbers(Q()), conjugation_algebra(Q()),
                              matrix_algebra(Q(), 2), base_field_algebra(Q())}) {
    FinModule m = regular_module(a);
    CHECK_NOTHROW(validate_module(m));
    CHECK(module_eq(m, m));
  }
  CHECK_NOTHROW(validate_module(twisted_gauss_module()));
  CHECK_NOTHROW(validate_module(zero_module(gauss())));
  CHECK_NOTHROW(validate_module(column_module(matrix_algebra(Q(), 2), 2)));
  CHECK_NOTHROW(validate_module(
      direct_sum_modules(regular_module(gauss()), twisted_gauss_module())));
}

TEST_CASE("module validation reports counterexamples") {
  FinModule m = regular_module(dual_numbers(Q()));
  m.action[1].at(0, 1) = Scalar::one(Q());  // d no longer squares to zero
  CHECK_THROWS_WITH_AS(validate_module(m), "the action law fails at (d, d)",
                       InputError);

  FinModule u = regular_module(gauss());
  u.action[0] = mat_scale(u.action[0], Scalar::of_int(Q(), 2));
  CHECK_THROWS_WITH_AS(validate_module(u), "the unit does not act as the identity",
                       InputError);

  FinModule s = regular_module(gauss());
  s.action.pop_back();
  CHECK_THROWS_AS(validate_module(s), InputError);

  CHECK_THROWS_AS(
      direct_sum_modules(regular_module(gauss()), regular_module(dual_numbers(Q()))),
      InputError);
}

TEST_CASE("dual comodule of the regular dual-numbers module") {
  FinModule n = regular_module(dual_numbers(Q()));
  FinComodule x = dual_comodule(n);
  CHECK(x.dim == 2);
  CHECK(coalgebra_eq(x.coalgebra, dual_coalgebra(dual_numbers(Q()))));
  // nu_0 |-> h_0 (x) nu_0 and nu_1 |-> h_0 (x) nu_1 + h_1 (x) nu_0.
  Scalar one = Scalar::one(Q()), zero = Scalar::zero(Q());
  CHECK(x.coact[0][0] == Vec{one, zero});
  CHECK(x.coact[0][1] == Vec{zero, zero});
  CHECK(x.coact[1][0] == Vec{zero, one});
  CHECK(x.coact[1][1] == Vec{one, zero});
  CHECK_NOTHROW(validate_comodule(x));
}

TEST_CASE("dual comodule over the base field is the unit coaction") {
  FinComodule x = dual_comodule(base_field_module(Q(), 3));
  for (size_t u = 0; u < 3; ++u)
    for (size_t v = 0; v < 3; ++v)
      CHECK(x.coact[u][0][v] ==
            (u == v ? Scalar::one(Q()) : Scalar::zero(Q())));
}

TEST_CASE("comodule validation catches broken coactions") {
  FinComodule x = dual_comodule(regular_module(gauss()));
  FinComodule bad = x;
  bad.coact[0][0][0] = Scalar::of_int(Q(), 2);
  CHECK_THROWS_WITH_AS(validate_comodule(bad),
                       "comodule counit law fails at basis element 0", InputError);
  FinComodule skew = x;
  // Keep the counit leg intact but break the second coaction layer.
  skew.coact[1][1][0] = Scalar::of_int(Q(), 2);
  CHECK_THROWS_AS(validate_comodule(skew), InputError);
}

TEST_CASE("a module map over a homomorphism measures through one grouplike") {
  FinAlgebra a = gauss();
  MeasuringData meas;
  meas.H = grouplike_coalgebra(Q());
  meas.A = a;
  meas.B = a;
  // rho(g) = conjugation, an algebra endomorphism.
  meas.rho = {{Vec{Scalar::one(Q()), Scalar::zero(Q())},
               Vec{Scalar::zero(Q()), Scalar::of_int(Q(), -1)}}};
  REQUIRE(verify_measuring(meas).empty());

  FinComodule x;
  x.coalgebra = meas.H;
  x.dim = 1;
  x.coact = {{Vec{Scalar::one(Q())}}};
  FinModule m = regular_module(a);

  std::vector<Mat> gamma = {mat2(1, 0, 0, -1)};
  CHECK(verify_measuring_comodule(gamma, meas, x, m, m).empty());

  gamma[0].at(0, 1) = Scalar::one(Q());
  std::vector<std::string> bad = verify_measuring_comodule(gamma, meas, x, m, m);
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().find("x0") != std::string::npos);
}

TEST_CASE("a dualized module extension measures") {
  FinAlgebra a = gauss();
  SweedlerPresentation F = build_F(a, a, 3);
  std::vector<Mat> imgs = {mat2(0, 1, 3, 0), mat2(2, 0, 0, -2)};
  RepMeasuringReport rep = representation_to_measuring_coalgebra(F, imgs, 2);
  REQUIRE(rep.ok());
  ExtensionMap sigma = *rep.extension;

  FinModule v = column_module(sigma.S, 2);
  std::vector<Mat> theta = extension_applied_to_v0(sigma, v);

  // gamma(nu_u)(m_p) reads off the v_u-row of theta(m_p).
  std::vector<Mat> gamma;
  for (size_t u = 0; u < v.dim; ++u) {
    Mat g = mat_zero(Q(), a.dim, a.dim);
    for (size_t p = 0; p < a.dim; ++p)
      for (size_t w = 0; w < a.dim; ++w) g.at(w, p) = theta[p].at(u, w);
    gamma.push_back(g);
  }

  FinComodule x = dual_comodule(v);
  MeasuringData meas = to_measuring(sigma);
  FinModule m = regular_module(a);
  CHECK(verify_measuring_comodule(gamma, meas, x, m, m).empty());

  gamma[1].at(0, 0) = gamma[1].at(0, 0) + Scalar::one(Q());
  CHECK_FALSE(verify_measuring_comodule(gamma, meas, x, m, m).empty());
}

TEST_CASE("base-field D is the tensor square with no positive degrees") {
  FinAlgebra k = base_field_algebra(Q());
  SweedlerPresentation F = build_F(k, k, 4);
  ModulePresentation d =
      build_D(base_field_module(Q(), 2), base_field_module(Q(), 3), F, 4);
  CHECK(d.gen_labels.size() == 6);
  CHECK(d.system.rules.empty());
  CHECK(module_dimension_sequence(d.system, 4) ==
        std::vector<size_t>({6, 0, 0, 0, 0}));

  TauReport tau = tau_map(d);
  CHECK(tau.ok());
}

TEST_CASE("D of the regular pair matches the frozen rules and free rank") {
  FinAlgebra a = gauss();
  SweedlerPresentation F = build_F(a, a, 4);
  FinModule m = regular_module(a);
  ModulePresentation d = build_D(m, m, F, 4);

  CHECK(module_rule_strings(d.system) ==
        std::vector<std::string>({"G(1,1) -> f0.G(0,1) + f1.G(0,0)",
                                  "G(1,0) -> -f1.G(0,1) + f0.G(0,0)"}));
  CHECK(module_dimension_sequence(d.system, 4) ==
        std::vector<size_t>({2, 4, 4, 4, 4}));
  CHECK(module_dimension_sequence(d.system, 4) ==
        scaled_by(dimension_sequence(F.system, 4), a.dim));

  // The generators surviving at degree zero are exactly the [1 (x) nu_u]
  // family: every rule eliminates a G(p,u) with p >= 1.
  for (const ModRule& r : d.system.rules) {
    if (!r.word.empty()) continue;
    CHECK(static_cast<size_t>(r.gen) / d.N.dim >= 1);
  }
  std::vector<ModKey> deg0 = module_monomial_basis(d.system, 0);
  REQUIRE(deg0.size() == 2);
  for (const ModKey& k : deg0) CHECK(static_cast<size_t>(k.first) / d.N.dim == 0);
}

TEST_CASE("the free-rank law also holds over the dual numbers") {
  FinAlgebra a = dual_numbers(Q());
  SweedlerPresentation F = build_F(a, a, 4);
  FinModule m = regular_module(a);
  ModulePresentation d = build_D(m, m, F, 4);
  CHECK(module_dimension_sequence(d.system, 4) ==
        scaled_by(dimension_sequence(F.system, 4), a.dim));
}

TEST_CASE("dimension sequences add across direct sums in both slots") {
  FinAlgebra a = gauss();
  SweedlerPresentation F = build_F(a, a, 4);
  FinModule reg = regular_module(a);
  FinModule tw = twisted_gauss_module();

  std::vector<size_t> left_sum = module_dimension_sequence(
      build_D(direct_sum_modules(reg, tw), reg, F, 4).system, 4);
  std::vector<size_t> left_parts =
      summed(module_dimension_sequence(build_D(reg, reg, F, 4).system, 4),
             module_dimension_sequence(build_D(tw, reg, F, 4).system, 4));
  CHECK(left_sum == left_parts);

  std::vector<size_t> right_sum = module_dimension_sequence(
      build_D(reg, direct_sum_modules(reg, tw), F, 4).system, 4);
  std::vector<size_t> right_parts =
      summed(module_dimension_sequence(build_D(reg, reg, F, 4).system, 4),
             module_dimension_sequence(build_D(reg, tw, F, 4).system, 4));
  CHECK(right_sum == right_parts);
}

TEST_CASE("tau is a module map and lands on the frozen normal forms") {
  FinAlgebra a = gauss();
  SweedlerPresentation F = build_F(a, a, 4);
  FinModule m = regular_module(a);
  ModulePresentation d = build_D(m, m, F, 4);

  TauReport tau = tau_map(d);
  REQUIRE(tau.ok());
  FieldPtr f = Q();
  CHECK(tau.tau[0][0] == ModPoly::generator(f, 0));
  CHECK(tau.tau[0][1] == ModPoly::generator(f, 1));
  ModPoly t11 = ModPoly::monomial(f, 1, Word{0}, Scalar::one(f));
  t11 += ModPoly::monomial(f, 0, Word{1}, Scalar::one(f));
  CHECK(tau.tau[1][1] == t11);
  ModPoly t10 = ModPoly::monomial(f, 1, Word{1}, Scalar::of_int(f, -1));
  t10 += ModPoly::monomial(f, 0, Word{0}, Scalar::one(f));
  CHECK(tau.tau[1][0] == t10);

  TauReport empty = tau_map(build_D(zero_module(a), m, F, 4));
  CHECK(empty.ok());
  CHECK(empty.tau.empty());
}

TEST_CASE("tau commutes with module maps over the identity") {
  FinAlgebra a = gauss();
  SweedlerPresentation F = build_F(a, a, 4);
  FinModule reg = regular_module(a);
  FinModule sum = direct_sum_modules(reg, reg);
  ModulePresentation d_reg = build_D(reg, reg, F, 4);
  ModulePresentation d_sum = build_D(sum, reg, F, 4);
  TauReport tau_reg = tau_map(d_reg);
  TauReport tau_sum = tau_map(d_sum);

  // Right multiplication by x commutes with the left action.
  Mat rx = mat2(0, -1, 1, 0);
  for (size_t p = 0; p < reg.dim; ++p)
    for (size_t w = 0; w < reg.dim; ++w) {
      ModPoly lhs(Q());
      for (size_t q = 0; q < reg.dim; ++q)
        if (!rx.at(q, p).is_zero()) lhs += tau_reg.tau[q][w].scaled(rx.at(q, p));
      CHECK(module_normal_form(d_reg.system, lhs) ==
            push_through(tau_reg.tau[p][w], rx, d_reg, d_reg));
    }

  // Projection onto the first summand, a map over the identity of A.
  Mat proj = mat_zero(Q(), 2, 4);
  proj.at(0, 0) = Scalar::one(Q());
  proj.at(1, 1) = Scalar::one(Q());
  for (size_t p = 0; p < sum.dim; ++p)
    for (size_t w = 0; w < reg.dim; ++w) {
      ModPoly lhs(Q());
      for (size_t q = 0; q < reg.dim; ++q)
        if (!proj.at(q, p).is_zero())
          lhs += tau_reg.tau[q][w].scaled(proj.at(q, p));
      CHECK(module_normal_form(d_reg.system, lhs) ==
            push_through(tau_sum.tau[p][w], proj, d_sum, d_reg));
    }
}

TEST_CASE("the conjugation extension factors through D") {
  FinAlgebra a = gauss();
  SweedlerPresentation F = build_F(a, a, 4);
  FinModule m = regular_module(a);
  ModulePresentation d = build_D(m, m, F, 4);

  ExtensionMap sigma;
  sigma.A = a;
  sigma.S = base_field_algebra(Q());
  sigma.B = a;
  sigma.sigma = {{Vec{Scalar::one(Q()), Scalar::zero(Q())}},
                 {Vec{Scalar::zero(Q()), Scalar::of_int(Q(), -1)}}};
  REQUIRE(verify_extension(sigma).empty());

  FinModule w = base_field_module(Q(), 1);
  // rho(m) = 1 (x) conjugate of m.
  Mat r0 = mat_zero(Q(), 1, 2), r1 = mat_zero(Q(), 1, 2);
  r0.at(0, 0) = Scalar::one(Q());
  r1.at(0, 1) = Scalar::of_int(Q(), -1);
  std::vector<Mat> rho = {r0, r1};

  DExtensionReport rep = D_of_extension(d, sigma, w, rho);
  CHECK(rep.ok());
  CHECK(rep.images[d.gen_of(1, 1)] == Vec{Scalar::of_int(Q(), -1)});
  CHECK(rep.images[d.gen_of(0, 0)] == Vec{Scalar::one(Q())});
  CHECK(rep.images[d.gen_of(0, 1)] == Vec{Scalar::zero(Q())});

  // Dropping the conjugation breaks the module-map law over sigma.
  std::vector<Mat> wrong = rho;
  wrong[1].at(0, 1) = Scalar::one(Q());
  DExtensionReport bad = D_of_extension(d, sigma, w, wrong);
  CHECK_FALSE(bad.module_map_failures.empty());
}

TEST_CASE("the identity extension factors through D") {
  FinAlgebra a = gauss();
  SweedlerPresentation F = build_F(a, a, 4);
  FinModule m = regular_module(a);
  ModulePresentation d = build_D(m, m, F, 4);

  ExtensionMap sigma;
  sigma.A = a;
  sigma.S = base_field_algebra(Q());
  sigma.B = a;
  sigma.sigma = {{Vec{Scalar::one(Q()), Scalar::zero(Q())}},
                 {Vec{Scalar::zero(Q()), Scalar::one(Q())}}};
  FinModule w = base_field_module(Q(), 1);
  Mat r0 = mat_zero(Q(), 1, 2), r1 = mat_zero(Q(), 1, 2);
  r0.at(0, 0) = Scalar::one(Q());
  r1.at(0, 1) = Scalar::one(Q());
  DExtensionReport rep = D_of_extension(d, sigma, w, {r0, r1});
  CHECK(rep.ok());
}

TEST_CASE("a representation-induced extension factors through D") {
  FinAlgebra a = gauss();
  SweedlerPresentation F = build_F(a, a, 3);
  std::vector<Mat> imgs = {mat2(0, 1, 3, 0), mat2(2, 0, 0, -2)};
  RepMeasuringReport rep = representation_to_measuring_coalgebra(F, imgs, 2);
  REQUIRE(rep.ok());
  ExtensionMap sigma = *rep.extension;

  FinModule m = regular_module(a);
  ModulePresentation d = build_D(m, m, F, 3);
  FinModule v = column_module(sigma.S, 2);
  std::vector<Mat> theta = extension_applied_to_v0(sigma, v);

  DExtensionReport out = D_of_extension(d, sigma, v, theta);
  CHECK(out.ok());
}

TEST_CASE("build_D rejects mismatched inputs") {
  FinAlgebra a = gauss();
  SweedlerPresentation F = build_F(a, a, 3);
  FinModule m = regular_module(a);
  CHECK_THROWS_WITH_AS(build_D(m, m, F, 9),
                       "module bound must lie within the presentation bound",
                       InputError);
  CHECK_THROWS_AS(build_D(regular_module(dual_numbers(Q())), m, F, 3), InputError);
  ModulePresentation d = build_D(m, m, F, 3);
  ExtensionMap sigma;
  sigma.A = a;
  sigma.S = base_field_algebra(Q());
  sigma.B = a;
  sigma.sigma = {{Vec{Scalar::one(Q()), Scalar::zero(Q())}},
                 {Vec{Scalar::zero(Q()), Scalar::of_int(Q(), 2)}}};  // not a map
  FinModule w = base_field_module(Q(), 1);
  Mat r0 = mat_zero(Q(), 1, 2), r1 = mat_zero(Q(), 1, 2);
  CHECK_THROWS_WITH_AS(D_of_extension(d, sigma, w, {r0, r1}),
                       "sigma is not an algebra extension", InputError);
}
