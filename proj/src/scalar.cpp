#include "sweedler/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace sweedler {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  try {
    Rational q(text, 10);
    if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational '" + text + "'");
  }
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// PolyQ

PolyQ polq_trim(PolyQ p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int polq_deg(const PolyQ& p) { return static_cast<int>(p.size()) - 1; }

PolyQ polq_add(const PolyQ& a, const PolyQ& b) {
  PolyQ r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return polq_trim(std::move(r));
}

PolyQ polq_sub(const PolyQ& a, const PolyQ& b) {
  PolyQ r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return polq_trim(std::move(r));
}

PolyQ polq_mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return polq_trim(std::move(r));
}

PolyQ polq_scale(const PolyQ& a, const Rational& s) {
  if (s == 0) return {};
  PolyQ r = a;
  for (auto& c : r) c *= s;
  return r;
}

std::pair<PolyQ, PolyQ> polq_divmod(const PolyQ& a, const PolyQ& b) {
  if (b.empty()) throw ComputeError("polynomial division by zero");
  PolyQ rem = a;
  PolyQ quot;
  const int db = polq_deg(b);
  while (polq_deg(rem) >= db) {
    const int k = polq_deg(rem) - db;
    Rational c = rem.back() / b.back();
    if (static_cast<int>(quot.size()) < k + 1) quot.resize(k + 1, Rational(0));
    quot[k] += c;
    for (int i = 0; i <= db; ++i) rem[i + k] -= c * b[i];
    rem = polq_trim(std::move(rem));
  }
  return {polq_trim(std::move(quot)), std::move(rem)};
}

std::string polq_to_string(const PolyQ& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = polq_deg(p); k >= 0; --k) {
    const Rational& q = p[k];
    if (q == 0) continue;
    const bool neg = q < 0;
    Rational mag = neg ? Rational(-q) : q;
    std::string body;
    if (k == 0) {
      body = rational_to_string(mag);
    } else {
      std::string varpart = (k == 1) ? var : var + "^" + std::to_string(k);
      body = (mag == 1) ? varpart : rational_to_string(mag) + "*" + varpart;
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

namespace {

// Recursive-descent parser for linear combinations of powers of one
// variable.  Reports the byte offset of the first offending character.
class PolyParser {
 public:
  PolyParser(const std::string& s, const std::string& var) : s_(s), var_(var) {}

  PolyQ parse() {
    PolyQ acc;
    skip_ws();
    if (eof()) fail("empty polynomial");
    bool expect_term = true;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = (take() == '-') ? -1 : 1;
      skip_ws();
    }
    while (expect_term) {
      acc = polq_add(acc, term(sign));
      skip_ws();
      if (eof()) break;
      if (peek() == '+') sign = 1;
      else if (peek() == '-') sign = -1;
      else fail("expected '+' or '-'");
      take();
      skip_ws();
      if (eof()) fail("trailing operator");
    }
    return acc;
  }

 private:
  PolyQ term(int sign) {
    Rational coeff(sign);
    bool have_coeff = false;
    if (isdigit(peek())) {
      coeff *= number();
      have_coeff = true;
      skip_ws();
      if (!eof() && peek() == '*') {
        take();
        skip_ws();
        if (eof()) fail("expected variable after '*'");
      }
    }
    int power = 0;
    if (!eof() && match_var()) {
      power = 1;
      if (!eof() && peek() == '^') {
        take();
        if (eof() || !isdigit(peek())) fail("expected exponent digits");
        power = static_cast<int>(number().get_num().get_si());
      }
    } else if (!have_coeff) {
      fail("expected coefficient or variable");
    }
    PolyQ t(power + 1, Rational(0));
    t[power] = coeff;
    return t;
  }

  Rational number() {
    size_t start = pos_;
    while (!eof() && isdigit(peek())) take();
    std::string num = s_.substr(start, pos_ - start);
    if (!eof() && peek() == '/') {
      take();
      if (eof() || !isdigit(peek())) fail("expected denominator digits");
      size_t dstart = pos_;
      while (!eof() && isdigit(peek())) take();
      num += "/" + s_.substr(dstart, pos_ - dstart);
    }
    return rational_from_string(num);
  }

  bool match_var() {
    if (s_.compare(pos_, var_.size(), var_) == 0) {
      // Reject a longer identifier that merely starts with the variable.
      size_t after = pos_ + var_.size();
      if (after < s_.size() &&
          (isalnum(static_cast<unsigned char>(s_[after])) || s_[after] == '_'))
        fail("unknown identifier");
      pos_ += var_.size();
      return true;
    }
    if (isalpha(static_cast<unsigned char>(peek())) || peek() == '_')
      fail("unknown identifier");
    return false;
  }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  char take() { return s_[pos_++]; }
  void skip_ws() {
    while (!eof() && isspace(static_cast<unsigned char>(peek()))) take();
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("malformed polynomial '" + s_ + "': " + why +
                     " at offset " + std::to_string(pos_));
  }

  const std::string& s_;
  std::string var_;
  size_t pos_ = 0;
};

}  // namespace

PolyQ polq_from_string(const std::string& text, const std::string& var) {
  return PolyParser(text, var).parse();
}

// ---------------------------------------------------------------------------
// Field construction

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  return out;
}

Rational polq_eval(const PolyQ& p, const Rational& x) {
  Rational acc(0);
  for (int k = polq_deg(p); k >= 0; --k) acc = acc * x + p[k];
  return acc;
}

[[noreturn]] void report_reducible(const PolyQ& factor, const PolyQ& cofactor) {
  throw InputError("reducible: (" + polq_to_string(factor, "t") + ")(" +
                   polq_to_string(cofactor, "t") + ")");
}

// Monic rational m is irreducible over Q iff its monic integer rescaling
// M(s) = D^n m(s/D) is irreducible over Z (Gauss); search monic integer
// factors of M up to half degree and translate any hit back.
void check_irreducible(const PolyQ& m) {
  const int n = polq_deg(m);
  if (n <= 1) return;

  mpz_class d(1);
  for (const auto& c : m) d = lcm(d, c.get_den());
  std::vector<mpz_class> big(n + 1);  // M coefficients, monic integer
  mpz_class dpow(1);
  for (int k = n; k >= 0; --k) {
    Rational scaled = m[k] * Rational(dpow);
    big[k] = scaled.get_num();
    dpow *= d;
  }

  // Linear factors of M: integer roots r dividing M(0) (0 if M(0) = 0);
  // these correspond to rational roots r/D of m.
  auto try_root = [&](const Rational& root) {
    if (polq_eval(m, root) == 0) {
      PolyQ factor = {-root, Rational(1)};
      report_reducible(factor, polq_divmod(m, factor).first);
    }
  };
  if (big[0] == 0) try_root(Rational(0));
  for (const auto& r : divisors_of(big[0])) {
    try_root(Rational(r) / Rational(d));
    try_root(Rational(-r) / Rational(d));
  }
  if (n <= 3) return;

  // Quadratic factors s^2 + b s + c of M: c divides M(0), |b| bounded by
  // twice the Cauchy root bound.  Covers degrees 4 and 5 completely.
  if (n >= 6)
    throw ComputeError("irreducibility check not implemented beyond degree 5");
  mpz_class maxc(1);
  for (const auto& c : big) maxc = std::max(maxc, mpz_class(abs(c)));
  const mpz_class bbound = 2 * (1 + maxc);
  PolyQ M(n + 1);
  for (int k = 0; k <= n; ++k) M[k] = Rational(big[k]);
  long guard = 0;
  for (const auto& cmag : divisors_of(big[0])) {
    for (int csign = -1; csign <= 1; csign += 2) {
      for (mpz_class b = -bbound; b <= bbound; ++b) {
        if (++guard > 2000000)
          throw ComputeError("irreducibility search cap exceeded");
        PolyQ quad = {Rational(csign * cmag), Rational(b), Rational(1)};
        auto [q, r] = polq_divmod(M, quad);
        if (r.empty()) {
          // Translate the factor of M(s) back to a factor of m(t), t = s/D.
          PolyQ back = {quad[0] / Rational(d * d), quad[1] / Rational(d),
                        Rational(1)};
          report_reducible(back, polq_divmod(m, back).first);
        }
      }
    }
  }
}

}  // namespace

FieldPtr field_rationals() {
  static const FieldPtr f = std::make_shared<FieldSpec>();
  return f;
}

FieldPtr field_number(PolyQ modulus) {
  modulus = polq_trim(std::move(modulus));
  const int n = polq_deg(modulus);
  if (n < 1) throw InputError("number field modulus must have degree >= 1");
  if (modulus.back() != 1) throw InputError("number field modulus must be monic");
  check_irreducible(modulus);
  auto f = std::make_shared<FieldSpec>();
  f->kind = FieldSpec::Kind::number_field;
  f->modulus = std::move(modulus);
  return f;
}

bool field_eq(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->kind == b->kind && a->modulus == b->modulus;
}

std::string field_to_string(const FieldPtr& f) {
  if (!f || f->kind == FieldSpec::Kind::rationals) return "Q";
  return "Q[t]/(" + polq_to_string(f->modulus, "t") + ")";
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

size_t field_width(const FieldPtr& f) {
  if (!f) throw ComputeError("scalar with no field");
  return f->kind == FieldSpec::Kind::rationals ? 1 : f->modulus.size() - 1;
}

void require_same(const Scalar& a, const Scalar& b) {
  if (!field_eq(a.field(), b.field()))
    throw ComputeError("scalar field mismatch: " + field_to_string(a.field()) +
                       " vs " + field_to_string(b.field()));
}

}  // namespace

Scalar Scalar::zero(const FieldPtr& f) {
  return Scalar(f, std::vector<Rational>(field_width(f), Rational(0)));
}

Scalar Scalar::one(const FieldPtr& f) { return of_int(f, 1); }

Scalar Scalar::of(const FieldPtr& f, const Rational& q) {
  std::vector<Rational> c(field_width(f), Rational(0));
  c[0] = q;
  c[0].canonicalize();  // callers may pass mpq_class(p, q) unreduced
  return Scalar(f, std::move(c));
}

Scalar Scalar::of_int(const FieldPtr& f, long n) { return of(f, Rational(n)); }

Scalar Scalar::generator(const FieldPtr& f) {
  if (!f || f->kind != FieldSpec::Kind::number_field)
    throw InputError("field generator t requires a number field");
  std::vector<Rational> c(field_width(f), Rational(0));
  if (c.size() < 2) throw InputError("degree-1 modulus leaves no generator");
  c[1] = 1;
  return Scalar(f, std::move(c));
}

Scalar Scalar::from_poly(const FieldPtr& f, const PolyQ& p) {
  PolyQ r = p;
  if (f->kind == FieldSpec::Kind::number_field)
    r = polq_divmod(r, f->modulus).second;
  else if (polq_deg(r) > 0)
    throw InputError("polynomial scalar given for the rationals");
  std::vector<Rational> c(field_width(f), Rational(0));
  for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
  return Scalar(f, std::move(c));
}

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return !c_.empty();
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw ComputeError("scalar is not rational: " + to_string());
  return c_[0];
}

PolyQ Scalar::to_poly() const { return polq_trim(c_); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  Scalar r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  Scalar r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field()->kind == FieldSpec::Kind::rationals)
    return Scalar::of(a.field(), a.c_[0] * b.c_[0]);
  return Scalar::from_poly(a.field(), polq_mul(a.to_poly(), b.to_poly()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ComputeError("division by zero scalar");
  if (fld_->kind == FieldSpec::Kind::rationals)
    return of(fld_, Rational(1) / c_[0]);
  // Extended Euclid in Q[t]: find u with u * this == gcd(this, m) = const.
  PolyQ r0 = fld_->modulus, r1 = to_poly();
  PolyQ s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r2] = polq_divmod(r0, r1);
    PolyQ s2 = polq_sub(s0, polq_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (polq_deg(r0) != 0)
    throw ComputeError("non-invertible element mod " +
                       polq_to_string(fld_->modulus, "t"));
  return from_poly(fld_, polq_scale(s0, Rational(1) / r0[0]));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a.c_ == b.c_;
}

std::string Scalar::to_string() const {
  if (fld_->kind == FieldSpec::Kind::rationals)
    return rational_to_string(c_[0]);
  return polq_to_string(to_poly(), "t");
}

Scalar Scalar::from_string(const FieldPtr& f, const std::string& text) {
  return from_poly(f, polq_from_string(text, "t"));
}

int scalar_cmp(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  for (size_t i = 0; i < a.coords().size(); ++i) {
    int c = cmp(a.coords()[i], b.coords()[i]);
    if (c != 0) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// CentralPoly

CentralPoly::CentralPoly(Scalar constant) : fld_(constant.field()) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

CentralPoly CentralPoly::zero(const FieldPtr& f) { return CentralPoly(f, {}); }

CentralPoly CentralPoly::one(const FieldPtr& f) {
  return CentralPoly(Scalar::one(f));
}

CentralPoly CentralPoly::lambda(const FieldPtr& f) {
  return CentralPoly(f, {Scalar::zero(f), Scalar::one(f)});
}

CentralPoly CentralPoly::monomial(const Scalar& coeff, int power) {
  if (coeff.is_zero()) return zero(coeff.field());
  std::vector<Scalar> c(power + 1, Scalar::zero(coeff.field()));
  c[power] = coeff;
  return CentralPoly(coeff.field(), std::move(c));
}

Scalar CentralPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size()))
    return Scalar::zero(fld_);
  return c_[power];
}

Scalar CentralPoly::eval(const Scalar& value) const {
  Scalar acc = Scalar::zero(fld_);
  for (int k = degree(); k >= 0; --k) acc = acc * value + c_[k];
  return acc;
}

void CentralPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CentralPoly CentralPoly::operator-() const {
  CentralPoly r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

CentralPoly operator+(const CentralPoly& a, const CentralPoly& b) {
  FieldPtr f = a.fld_ ? a.fld_ : b.fld_;
  if (a.fld_ && b.fld_ && !field_eq(a.fld_, b.fld_))
    throw ComputeError("central polynomial field mismatch");
  CentralPoly r(f, std::vector<Scalar>(std::max(a.c_.size(), b.c_.size()),
                                       Scalar::zero(f)));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

CentralPoly operator-(const CentralPoly& a, const CentralPoly& b) {
  return a + (-b);
}

CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
  FieldPtr f = a.fld_ ? a.fld_ : b.fld_;
  if (a.fld_ && b.fld_ && !field_eq(a.fld_, b.fld_))
    throw ComputeError("central polynomial field mismatch");
  if (a.is_zero() || b.is_zero()) return CentralPoly::zero(f);
  CentralPoly r(f, std::vector<Scalar>(a.c_.size() + b.c_.size() - 1,
                                       Scalar::zero(f)));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

bool operator==(const CentralPoly& a, const CentralPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::string CentralPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    std::string cs = c_[k].to_string();
    bool neg = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
        c_[k].is_rational()) {
      neg = true;
      cs = cs.substr(1);
    }
    std::string body;
    if (k == 0) {
      body = (c_[k].is_rational() || cs.find(' ') == std::string::npos)
                 ? cs
                 : "(" + cs + ")";
    } else {
      std::string varpart = (k == 1) ? "L" : "L^" + std::to_string(k);
      if (cs == "1")
        body = varpart;
      else if (c_[k].is_rational() || cs.find(' ') == std::string::npos)
        body = cs + "*" + varpart;
      else
        body = "(" + cs + ")*" + varpart;
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

CentralPoly CentralPoly::from_string(const FieldPtr& f,
                                     const std::string& text) {
  // Parse in L with coefficients that may themselves mention t: handled by
  // parsing as a polynomial in L over Q when no t occurs, else digit-free
  // coefficients are not supported in this position.
  if (text.find('t') == std::string::npos) {
    PolyQ p = polq_from_string(text, "L");
    std::vector<Scalar> c;
    c.reserve(p.size());
    for (const auto& q : p) c.push_back(Scalar::of(f, q));
    CentralPoly r(f, std::move(c));
    r.trim();
    return r;
  }
  if (text.find('L') == std::string::npos)
    return CentralPoly(Scalar::from_string(f, text));
  throw InputError("mixed t and L in one literal is not supported: '" + text +
                   "'");
}

}  // namespace sweedler
