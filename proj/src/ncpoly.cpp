#include "sweedler/ncpoly.hpp"

#include <algorithm>

namespace sweedler {

int word_cmp(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;  // smaller index is larger
  }
  return 0;
}

Word word_concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::string word_to_string(const Word& w,
                           const std::vector<std::string>& labels) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += labels[w[i]];
  }
  return out;
}

NcPoly NcPoly::constant(const Scalar& s) {
  NcPoly p(s.field());
  p.add_term({}, s);
  return p;
}

NcPoly NcPoly::monomial(const FieldPtr& f, Word w, Scalar coeff) {
  NcPoly p(f);
  p.add_term(w, coeff);
  return p;
}

int NcPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

const Word& NcPoly::leading_word() const {
  if (terms_.empty()) throw ComputeError("leading word of zero polynomial");
  return terms_.begin()->first;
}

const Scalar& NcPoly::leading_coeff() const {
  if (terms_.empty()) throw ComputeError("leading coeff of zero polynomial");
  return terms_.begin()->second;
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(fld_) : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
  NcPoly r = a;
  r += b;
  return r;
}

NcPoly operator-(const NcPoly& a, const NcPoly& b) {
  NcPoly r = a;
  r -= b;
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& b) {
  if (!fld_) fld_ = b.fld_;
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& b) {
  if (!fld_) fld_ = b.fld_;
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly r(a.fld_ ? a.fld_ : b.fld_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_)
      r.add_term(word_concat(wa, wb), ca * cb);
  return r;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

NcPoly NcPoly::scaled(const Scalar& s) const {
  NcPoly r(fld_);
  if (s.is_zero()) return r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * s);
  return r;
}

NcPoly NcPoly::framed(const Word& prefix, const Word& suffix) const {
  NcPoly r(fld_);
  for (const auto& [w, c] : terms_)
    r.terms_.emplace(word_concat(prefix, word_concat(w, suffix)), c);
  return r;
}

namespace {

void append_term(std::string& out, bool& first, const Scalar& c,
                 const std::string& body_word) {
  std::string cs = c.to_string();
  bool neg = false;
  if (c.is_rational() && !cs.empty() && cs[0] == '-') {
    neg = true;
    cs = cs.substr(1);
  }
  std::string body;
  if (body_word == "1")
    body = c.is_rational() ? cs : "(" + cs + ")";
  else if (cs == "1")
    body = body_word;
  else
    body = (c.is_rational() ? cs : "(" + cs + ")") + "*" + body_word;
  if (first) {
    out += (neg ? "-" : "") + body;
    first = false;
  } else {
    out += (neg ? " - " : " + ") + body;
  }
}

}  // namespace

std::string NcPoly::to_string(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_)
    append_term(out, first, c, word_to_string(w, labels));
  return out;
}

NcPoly ncpoly_from_string(const FieldPtr& f,
                          const std::vector<std::string>& labels,
                          const std::string& text) {
  // Longest-match lookup of generator labels at a position.
  auto match_label = [&](size_t pos) -> std::pair<int, size_t> {
    int best = -1;
    size_t best_len = 0;
    for (size_t g = 0; g < labels.size(); ++g) {
      const std::string& l = labels[g];
      if (l.size() > best_len && text.compare(pos, l.size(), l) == 0) {
        best = static_cast<int>(g);
        best_len = l.size();
      }
    }
    return {best, best_len};
  };
  auto fail = [&](const std::string& why, size_t pos) -> void {
    throw InputError("malformed polynomial '" + text + "': " + why +
                     " at offset " + std::to_string(pos));
  };

  NcPoly out(f);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos == text.size()) fail("empty polynomial", pos);
  bool done = false;
  int sign = 1;
  if (text[pos] == '+' || text[pos] == '-') sign = (text[pos++] == '-') ? -1 : 1;
  while (!done) {
    skip_ws();
    // Optional rational coefficient.
    Rational coeff(sign);
    bool have_coeff = false;
    if (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
      size_t start = pos;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      std::string num = text.substr(start, pos - start);
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < text.size() &&
               isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        if (dstart == pos) fail("expected denominator digits", pos);
        num += "/" + text.substr(dstart, pos - dstart);
      }
      coeff *= rational_from_string(num);
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    // Optional word: labels joined by '.', each with an optional '^' power.
    Word w;
    bool more_letters = true;
    bool have_word = false;
    while (more_letters && pos < text.size()) {
      auto [g, len] = match_label(pos);
      if (g < 0) {
        if (have_word) fail("expected generator label", pos);
        break;
      }
      have_word = true;
      pos += len;
      int power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        size_t dstart = pos;
        while (pos < text.size() &&
               isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        if (dstart == pos) fail("expected exponent digits", pos);
        power = std::stoi(text.substr(dstart, pos - dstart));
      }
      for (int k = 0; k < power; ++k) w.push_back(g);
      skip_ws();
      if (pos < text.size() && text[pos] == '.') {
        ++pos;
        skip_ws();
      } else {
        more_letters = false;
      }
    }
    if (!have_coeff && !have_word) fail("expected coefficient or label", pos);
    out.add_term(w, Scalar::of(f, coeff));
    skip_ws();
    if (pos == text.size()) {
      done = true;
    } else if (text[pos] == '+' || text[pos] == '-') {
      sign = (text[pos++] == '-') ? -1 : 1;
      if (pos == text.size()) fail("trailing operator", pos);
    } else {
      fail("expected '+' or '-'", pos);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// TensorPoly

TensorPoly TensorPoly::tensor(const NcPoly& left, const NcPoly& right) {
  TensorPoly t(left.field() ? left.field() : right.field());
  for (const auto& [wl, cl] : left.terms())
    for (const auto& [wr, cr] : right.terms())
      t.add_term(wl, wr, cl * cr);
  return t;
}

void TensorPoly::add_term(const Word& l, const Word& r, const Scalar& c) {
  if (c.is_zero()) return;
  Key key{l, r};
  auto [it, fresh] = terms_.emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly TensorPoly::operator-() const {
  TensorPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TensorPoly operator+(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r = a;
  r += b;
  return r;
}

TensorPoly operator-(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& b) {
  if (!fld_) fld_ = b.fld_;
  for (const auto& [k, c] : b.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r(a.fld_ ? a.fld_ : b.fld_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(word_concat(ka.first, kb.first),
                 word_concat(ka.second, kb.second), ca * cb);
  return r;
}

bool operator==(const TensorPoly& a, const TensorPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

TensorPoly TensorPoly::scaled(const Scalar& s) const {
  TensorPoly r(fld_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
  return r;
}

std::string TensorPoly::to_string(
    const std::vector<std::string>& left_labels,
    const std::vector<std::string>& right_labels) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_)
    append_term(out, first, c,
                word_to_string(k.first, left_labels) + "(x)" +
                    word_to_string(k.second, right_labels));
  return out;
}

}  // namespace sweedler
