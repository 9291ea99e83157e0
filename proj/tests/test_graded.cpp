// Chain complexes as comodules over the square-zero presentation: the
// coaction formula, its counit/coassociativity oracle, the failing
// raised-exponent variant, and random d.d = 0 complexes built from
// nullspaces.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sweedler/graded_comodule.hpp"

using namespace sweedler;

namespace {

FieldPtr Q() { return field_rationals(); }

Mat empty_d0(size_t dim0) { return Mat(0, dim0, Scalar::zero(Q())); }

ChainComplex two_term() {
  ChainComplex c;
  c.field = Q();
  c.dims = {1, 1};
  c.d = {empty_d0(1), Mat(1, 1, Scalar::one(Q()))};
  return c;
}

struct Sampler {
  std::mt19937 rng{20260814u};
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }
  Scalar rat() {
    return Scalar::of_int(Q(), pick(-3, 3));
  }
};

}  // namespace

TEST_CASE("two-term complex carries the coaction") {
  GradedComodule g = chain_to_comodule(two_term(), 4);
  REQUIRE(g.basis_labels == std::vector<std::string>({"m0_0", "m1_0"}));

  ModPoly rho_n(Q());
  rho_n.add_term(0, {}, Scalar::one(Q()));
  CHECK(g.coaction[0] == rho_n);

  ModPoly rho_m(Q());
  rho_m.add_term(1, {1}, Scalar::one(Q()));
  rho_m.add_term(0, {0}, Scalar::one(Q()));
  CHECK(g.coaction[1] == rho_m);

  CHECK(check_graded_comodule(g).empty());
}

TEST_CASE("raised exponent fails coassociativity") {
  GradedComodule g = chain_to_comodule_with_offset(two_term(), 4, +1);
  auto failures = check_graded_comodule(g);
  REQUIRE_FALSE(failures.empty());
  CHECK(failures.front() == "coassociativity fails at m1_0");
  CHECK(raised_exponent_note().find("coassociativity") != std::string::npos);
}

TEST_CASE("zero differential gives grouplike powers") {
  ChainComplex c;
  c.field = Q();
  c.dims = {2, 1, 2};
  c.d = {empty_d0(2), Mat(2, 1, Scalar::zero(Q())),
         Mat(1, 2, Scalar::zero(Q()))};
  GradedComodule g = chain_to_comodule(c, 4);
  for (size_t m = 0; m < g.coaction.size(); ++m) {
    ModPoly expect(Q());
    expect.add_term(static_cast<int>(m), Word(g.degree_of[m], 1),
                    Scalar::one(Q()));
    CHECK(g.coaction[m] == expect);
  }
  CHECK(check_graded_comodule(g).empty());
}

TEST_CASE("validation rejects broken complexes") {
  ChainComplex c;
  c.field = Q();
  c.dims = {1, 1, 1};
  c.d = {empty_d0(1), Mat(1, 1, Scalar::one(Q())),
         Mat(1, 1, Scalar::one(Q()))};
  CHECK_THROWS_WITH_AS(validate_chain_complex(c),
                       "d.d is nonzero entering degree 0", InputError);

  c.d[2] = Mat(2, 1, Scalar::zero(Q()));
  CHECK_THROWS_WITH_AS(validate_chain_complex(c),
                       "differential at degree 2 has the wrong shape",
                       InputError);

  CHECK_THROWS_WITH_AS(chain_to_comodule(two_term(), 1),
                       "bound 1 below the longest coaction word 2",
                       InputError);
}

TEST_CASE("random complexes satisfy the comodule laws") {
  Sampler s;
  for (int trial = 0; trial < 20; ++trial) {
    const size_t degrees = static_cast<size_t>(s.pick(1, 3));
    ChainComplex c;
    c.field = Q();
    for (size_t i = 0; i <= degrees; ++i)
      c.dims.push_back(static_cast<size_t>(s.pick(1, 4)));
    c.d.push_back(empty_d0(c.dims[0]));

    // Each differential's columns are random combinations of a kernel
    // basis of the previous one, so d.d = 0 by construction.
    for (size_t i = 1; i <= degrees; ++i) {
      Mat di = mat_zero(Q(), c.dims[i - 1], c.dims[i]);
      if (i == 1) {
        for (size_t u = 0; u < di.rows(); ++u)
          for (size_t v = 0; v < di.cols(); ++v) di.at(u, v) = s.rat();
      } else {
        const std::vector<Vec> kernel = mat_nullspace(Q(), c.d[i - 1]);
        for (size_t v = 0; v < di.cols(); ++v)
          for (const Vec& k : kernel) {
            const Scalar coeff = s.rat();
            for (size_t u = 0; u < di.rows(); ++u)
              di.at(u, v) += k[u] * coeff;
          }
      }
      c.d.push_back(di);
    }

    validate_chain_complex(c);
    GradedComodule g = chain_to_comodule(c, 6);
    CHECK(check_graded_comodule(g).empty());
  }
}
