#pragma once
// Words in free generators and noncommutative polynomials over a Scalar
// field, with the fixed admissible monomial order used by the rewriting
// engine.
//
// Monomial order: compare total degree first; ties are broken by scanning
// the two words from the RIGHT, and at the first differing position the
// EARLIER-declared generator counts as the larger letter.  This order is
// total, multiplicative and degree-compatible.  It makes f0^2 > f1^2 and
// f1.f0 > f0.f1 for declaration order (f0, f1), so completed systems have
// the normal-word shape f0^e . f1^k familiar from the presentations this
// project constructs.

#include <map>
#include <string>
#include <vector>

#include "sweedler/scalar.hpp"

namespace sweedler {

using Gen = int;
using Word = std::vector<Gen>;

// +1 when a > b in the monomial order, -1 when a < b, 0 on equality.
int word_cmp(const Word& a, const Word& b);

// Comparator putting LARGER words first, so map iteration starts at the
// leading term.
struct WordGreater {
  bool operator()(const Word& a, const Word& b) const {
    return word_cmp(a, b) > 0;
  }
};

Word word_concat(const Word& a, const Word& b);
std::string word_to_string(const Word& w, const std::vector<std::string>& labels);

class NcPoly {
 public:
  using TermMap = std::map<Word, Scalar, WordGreater>;

  NcPoly() = default;
  explicit NcPoly(FieldPtr f) : fld_(std::move(f)) {}
  static NcPoly zero(const FieldPtr& f) { return NcPoly(f); }
  static NcPoly constant(const Scalar& s);
  static NcPoly monomial(const FieldPtr& f, Word w, Scalar coeff);

  const FieldPtr& field() const { return fld_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // degree of the leading word; -1 for zero
  const Word& leading_word() const;
  const Scalar& leading_coeff() const;
  Scalar coeff(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);  // accumulates, drops zeros

  NcPoly operator-() const;
  friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator-(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  NcPoly& operator+=(const NcPoly& b);
  NcPoly& operator-=(const NcPoly& b);
  friend bool operator==(const NcPoly& a, const NcPoly& b);
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

  NcPoly scaled(const Scalar& s) const;
  // prefix * this * suffix, word by word.
  NcPoly framed(const Word& prefix, const Word& suffix) const;

  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  FieldPtr fld_;
  TermMap terms_;
};

// Parses the text form "3/2*f0.f1.f1 - 1" against a generator label list;
// accepts '^' powers on letters.  Reports offsets on malformed input.
NcPoly ncpoly_from_string(const FieldPtr& f,
                          const std::vector<std::string>& labels,
                          const std::string& text);

// Elements of the tensor square of a free algebra: pairs of words with
// Scalar coefficients.  Legs are reduced by rewriting systems separately.
class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  struct KeyGreater {
    bool operator()(const Key& a, const Key& b) const {
      int c = word_cmp(a.first, b.first);
      if (c != 0) return c > 0;
      return word_cmp(a.second, b.second) > 0;
    }
  };
  using TermMap = std::map<Key, Scalar, KeyGreater>;

  TensorPoly() = default;
  explicit TensorPoly(FieldPtr f) : fld_(std::move(f)) {}
  static TensorPoly tensor(const NcPoly& left, const NcPoly& right);

  const FieldPtr& field() const { return fld_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& l, const Word& r, const Scalar& c);

  TensorPoly operator-() const;
  friend TensorPoly operator+(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator-(const TensorPoly& a, const TensorPoly& b);
  // Componentwise product: (u (x) v)(u' (x) v') = u u' (x) v v'.
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
  TensorPoly& operator+=(const TensorPoly& b);
  friend bool operator==(const TensorPoly& a, const TensorPoly& b);
  friend bool operator!=(const TensorPoly& a, const TensorPoly& b) {
    return !(a == b);
  }
  TensorPoly scaled(const Scalar& s) const;

  std::string to_string(const std::vector<std::string>& left_labels,
                        const std::vector<std::string>& right_labels) const;

 private:
  FieldPtr fld_;
  TermMap terms_;
};

}  // namespace sweedler
