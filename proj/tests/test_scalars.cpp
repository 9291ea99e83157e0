#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sweedler/linalg.hpp"
#include "sweedler/scalar.hpp"

using namespace sweedler;

namespace {

// Deterministic small random scalars for property checks.
struct Sampler {
  std::mt19937 rng{20260814};
  Rational rat() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  }
  Scalar scalar(const FieldPtr& f) {
    if (f->kind == FieldSpec::Kind::rationals) return Scalar::of(f, rat());
    PolyQ p;
    for (int i = 0; i < polq_deg(f->modulus); ++i) p.push_back(rat());
    return Scalar::from_poly(f, polq_trim(std::move(p)));
  }
};

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(rational_to_string(rational_from_string("6/4")) == "3/2");
  CHECK(rational_to_string(rational_from_string("-10/5")) == "-2");
  CHECK(rational_to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(rational_from_string("1.5"), InputError);
  CHECK_THROWS_AS(rational_from_string(""), InputError);
}

TEST_CASE("polynomial parser round trips and diagnostics") {
  PolyQ p = polq_from_string("x^2+1", "x");
  CHECK(polq_to_string(p, "x") == "x^2 + 1");
  CHECK(polq_to_string(polq_from_string("t^2 - 2", "t"), "t") == "t^2 - 2");
  CHECK(polq_to_string(polq_from_string("1/2*t + 3", "t"), "t") == "1/2*t + 3");
  CHECK(polq_to_string(polq_from_string("-x", "x"), "x") == "-x");
  CHECK(polq_to_string(polq_from_string("3", "x"), "x") == "3");
  // Offset diagnostics point at the offending character.
  try {
    polq_from_string("x^+1", "x");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
  CHECK_THROWS_AS(polq_from_string("x+", "x"), InputError);
  CHECK_THROWS_AS(polq_from_string("y+1", "x"), InputError);
}

TEST_CASE("number field construction rejects reducible moduli") {
  CHECK_NOTHROW(field_number(polq_from_string("t^2+1", "t")));
  CHECK_NOTHROW(field_number(polq_from_string("t^2-2", "t")));
  CHECK_NOTHROW(field_number(polq_from_string("t^3-2", "t")));
  try {
    field_number(polq_from_string("t^2-1", "t"));
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()) == "reducible: (t - 1)(t + 1)");
  }
  CHECK_THROWS_AS(field_number(polq_from_string("t^2-4", "t")), InputError);
  CHECK_THROWS_AS(field_number(polq_from_string("t^3-1", "t")), InputError);
  // Quadratic-factor search: (t^2+1)(t^2+2) has no rational root.
  CHECK_THROWS_AS(field_number(polq_from_string("t^4+3*t^2+2", "t")),
                  InputError);
  CHECK_THROWS_AS(field_number(polq_from_string("2*t^2-2", "t")), InputError);
}

TEST_CASE("field axioms hold on sampled triples") {
  Sampler s;
  for (const FieldPtr& f :
       {field_rationals(), field_number(polq_from_string("t^2+1", "t")),
        field_number(polq_from_string("t^3-2", "t"))}) {
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = s.scalar(f), b = s.scalar(f), c = s.scalar(f);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Scalar::zero(f) == a);
      CHECK(a * Scalar::one(f) == a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar::one(f));
        CHECK(a / a == Scalar::one(f));
      }
    }
  }
}

TEST_CASE("number field arithmetic uses the modulus") {
  FieldPtr f = field_number(polq_from_string("t^2+1", "t"));
  Scalar t = Scalar::generator(f);
  CHECK(t * t == Scalar::of_int(f, -1));
  CHECK(t.inverse() == -t);  // 1/t = -t since t^2 = -1
  CHECK(t.to_string() == "t");
  CHECK((t + Scalar::one(f)).to_string() == "t + 1");
  FieldPtr g = field_number(polq_from_string("t^2-2", "t"));
  Scalar r = Scalar::generator(g);
  CHECK(r * r == Scalar::of_int(g, 2));
  CHECK(Scalar::from_string(g, "1/2*t") * r == Scalar::one(g));
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), ComputeError);
}

TEST_CASE("matrix inverse is exact") {
  FieldPtr f = field_number(polq_from_string("t^2+1", "t"));
  Scalar t = Scalar::generator(f);
  // Vandermonde of the roots (t, -t) of x^2+1, rows indexed by powers.
  Mat v = mat_zero(f, 2, 2);
  v.at(0, 0) = Scalar::one(f);
  v.at(0, 1) = Scalar::one(f);
  v.at(1, 0) = t;
  v.at(1, 1) = -t;
  Mat inv = mat_inv(v);
  CHECK(inv.at(0, 0) == Scalar::from_string(f, "1/2"));
  CHECK(inv.at(0, 1) == Scalar::from_string(f, "-1/2*t"));
  CHECK(inv.at(1, 0) == Scalar::from_string(f, "1/2"));
  CHECK(inv.at(1, 1) == Scalar::from_string(f, "1/2*t"));
  CHECK(v * inv == mat_identity(f, 2));
  CHECK(inv * v == mat_identity(f, 2));

  Sampler s;
  FieldPtr q = field_rationals();
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = mat_zero(q, 3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) m.at(i, j) = s.scalar(q);
    try {
      Mat mi = mat_inv(m);
      CHECK(m * mi == mat_identity(q, 3));
    } catch (const ComputeError&) {
      CHECK(mat_rank(m) < 3);  // singular inputs must actually be singular
    }
  }
}

TEST_CASE("singular matrices name the failing pivot column") {
  FieldPtr q = field_rationals();
  Mat m = mat_zero(q, 2, 2);
  m.at(0, 0) = Scalar::one(q);
  m.at(0, 1) = Scalar::one(q);
  m.at(1, 0) = Scalar::one(q);
  m.at(1, 1) = Scalar::one(q);
  try {
    mat_inv(m);
    FAIL("expected ComputeError");
  } catch (const ComputeError& e) {
    CHECK(std::string(e.what()).find("column 1") != std::string::npos);
  }
}

TEST_CASE("nullspace vectors satisfy the system") {
  FieldPtr q = field_rationals();
  Mat m = mat_zero(q, 2, 3);
  // x + y + z = 0; y - z = 0.
  m.at(0, 0) = Scalar::one(q);
  m.at(0, 1) = Scalar::one(q);
  m.at(0, 2) = Scalar::one(q);
  m.at(1, 1) = Scalar::one(q);
  m.at(1, 2) = Scalar::of_int(q, -1);
  auto basis = mat_nullspace(q, m);
  REQUIRE(basis.size() == 1);
  for (const auto& v : basis) {
    Vec img = mat_apply(m, v);
    for (const auto& s : img) CHECK(s.is_zero());
  }
}

TEST_CASE("central polynomials") {
  FieldPtr q = field_rationals();
  CentralPoly l = CentralPoly::lambda(q);
  CentralPoly one = CentralPoly::one(q);
  CentralPoly p = (l + one) * (l - one);
  CHECK(p.to_string() == "L^2 - 1");
  CHECK(p.coeff(2) == Scalar::one(q));
  CHECK(p.coeff(1).is_zero());
  CHECK(p.eval(Scalar::of_int(q, 3)) == Scalar::of_int(q, 8));
  CHECK(CentralPoly::from_string(q, "L^2 - 1") == p);
  CHECK((p - p).is_zero());
  CHECK(CentralPoly::zero(q).to_string() == "0");
  FieldPtr f = field_number(polq_from_string("t^2+1", "t"));
  CHECK(CentralPoly::from_string(f, "t").coeff(0) == Scalar::generator(f));
}
