#pragma once
// Exact scalar arithmetic: rationals and simple number fields Q[t]/(m),
// plus central polynomials in a formal parameter L over either field.

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sweedler {

using Rational = mpq_class;

// Thrown for malformed user input (bad polynomials, invalid tables, ...).
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computation cannot proceed (singular matrix, bound
// exceeded, rule explosion).  Also mapped to exit code 2 by the CLI;
// mathematical check failures are reported as violations instead.
struct ComputeError : std::runtime_error {
  explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& q);

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, coefficient vector indexed by power.
// Invariant: no trailing zero coefficients (zero polynomial = empty vector).

using PolyQ = std::vector<Rational>;

PolyQ polq_trim(PolyQ p);
PolyQ polq_add(const PolyQ& a, const PolyQ& b);
PolyQ polq_sub(const PolyQ& a, const PolyQ& b);
PolyQ polq_mul(const PolyQ& a, const PolyQ& b);
PolyQ polq_scale(const PolyQ& a, const Rational& s);
// Euclidean division by a nonzero divisor; returns {quotient, remainder}.
std::pair<PolyQ, PolyQ> polq_divmod(const PolyQ& a, const PolyQ& b);
int polq_deg(const PolyQ& p);  // -1 for the zero polynomial
std::string polq_to_string(const PolyQ& p, const std::string& var);
PolyQ polq_from_string(const std::string& text, const std::string& var);

// ---------------------------------------------------------------------------
// Field description.  A number field is Q[t]/(m) with m monic irreducible.

struct FieldSpec {
  enum class Kind { rationals, number_field };
  Kind kind = Kind::rationals;
  PolyQ modulus;  // monic, degree >= 1; empty for the rationals
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

FieldPtr field_rationals();
// Validates monic + irreducible; error messages name a discovered factor,
// e.g. "reducible: (t - 1)(t + 1)".
FieldPtr field_number(PolyQ modulus);
bool field_eq(const FieldPtr& a, const FieldPtr& b);
std::string field_to_string(const FieldPtr& f);

// ---------------------------------------------------------------------------
// An element of the chosen field.  For Q the coordinate vector has size 1;
// for Q[t]/(m) it has size deg m, coordinates on 1, t, ..., t^(deg-1).

class Scalar {
 public:
  Scalar() = default;  // invalid until assigned; field() is null

  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar of(const FieldPtr& f, const Rational& q);
  static Scalar of_int(const FieldPtr& f, long n);
  // Class of t in Q[t]/(m); error for the rationals.
  static Scalar generator(const FieldPtr& f);
  // Reduces an arbitrary Q[t] polynomial into the field.
  static Scalar from_poly(const FieldPtr& f, const PolyQ& p);

  const FieldPtr& field() const { return fld_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in Q; `rational_value` requires it.
  bool is_rational() const;
  Rational rational_value() const;
  PolyQ to_poly() const;

  Scalar operator-() const;
  Scalar inverse() const;  // error on zero
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;  // polynomial form in t, "p/q" rationals
  static Scalar from_string(const FieldPtr& f, const std::string& text);

 private:
  Scalar(FieldPtr f, std::vector<Rational> c)
      : fld_(std::move(f)), c_(std::move(c)) {}
  FieldPtr fld_;
  std::vector<Rational> c_;
};

// Total order usable as a map comparator (field contents, then coords).
int scalar_cmp(const Scalar& a, const Scalar& b);

// ---------------------------------------------------------------------------
// Polynomials in a central parameter L with Scalar coefficients.
// Invariant: no trailing zero coefficients.

class CentralPoly {
 public:
  CentralPoly() = default;
  explicit CentralPoly(Scalar constant);
  static CentralPoly zero(const FieldPtr& f);
  static CentralPoly one(const FieldPtr& f);
  static CentralPoly lambda(const FieldPtr& f);  // the parameter L
  static CentralPoly monomial(const Scalar& coeff, int power);

  const std::vector<Scalar>& coeffs() const { return c_; }
  const FieldPtr& field() const { return fld_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(int power) const;
  // Substitute a field value for L.
  Scalar eval(const Scalar& value) const;

  CentralPoly operator-() const;
  friend CentralPoly operator+(const CentralPoly& a, const CentralPoly& b);
  friend CentralPoly operator-(const CentralPoly& a, const CentralPoly& b);
  friend CentralPoly operator*(const CentralPoly& a, const CentralPoly& b);
  CentralPoly& operator+=(const CentralPoly& b) { return *this = *this + b; }
  friend bool operator==(const CentralPoly& a, const CentralPoly& b);
  friend bool operator!=(const CentralPoly& a, const CentralPoly& b) {
    return !(a == b);
  }

  std::string to_string() const;  // in L, e.g. "L^2 - 1"
  static CentralPoly from_string(const FieldPtr& f, const std::string& text);

 private:
  CentralPoly(FieldPtr f, std::vector<Scalar> c)
      : fld_(std::move(f)), c_(std::move(c)) {}
  void trim();
  FieldPtr fld_;
  std::vector<Scalar> c_;  // coordinate on L^k at index k
};

}  // namespace sweedler
