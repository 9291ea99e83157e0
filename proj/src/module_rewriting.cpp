#include "sweedler/module_rewriting.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace sweedler {

int modkey_cmp(const ModKey& a, const ModKey& b) {
  if (a.first != b.first) return a.first < b.first ? -1 : 1;
  return word_cmp(a.second, b.second);
}

ModPoly ModPoly::generator(const FieldPtr& f, int gen) {
  return monomial(f, gen, {}, Scalar::one(f));
}

ModPoly ModPoly::monomial(const FieldPtr& f, int gen, Word w, Scalar c) {
  ModPoly p(f);
  p.add_term(gen, w, c);
  return p;
}

const ModKey& ModPoly::leading_key() const {
  if (terms_.empty()) throw ComputeError("leading key of zero module element");
  return terms_.begin()->first;
}

const Scalar& ModPoly::leading_coeff() const {
  if (terms_.empty()) throw ComputeError("leading coeff of zero module element");
  return terms_.begin()->second;
}

int ModPoly::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    d = std::max(d, static_cast<int>(k.second.size()));
  return d;
}

void ModPoly::add_term(int gen, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  ModKey key{gen, w};
  auto [it, fresh] = terms_.emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModPoly ModPoly::operator-() const {
  ModPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  ModPoly r = a;
  r += b;
  return r;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  ModPoly r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

ModPoly& ModPoly::operator+=(const ModPoly& b) {
  if (!fld_) fld_ = b.fld_;
  for (const auto& [k, c] : b.terms_) add_term(k.first, k.second, c);
  return *this;
}

bool operator==(const ModPoly& a, const ModPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

ModPoly ModPoly::scaled(const Scalar& s) const {
  ModPoly r(fld_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
  return r;
}

ModPoly ModPoly::framed_left(const Word& prefix) const {
  ModPoly r(fld_);
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(ModKey{k.first, word_concat(prefix, k.second)}, c);
  return r;
}

std::string ModPoly::to_string(
    const std::vector<std::string>& alg_labels,
    const std::vector<std::string>& gen_labels) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string cs = c.to_string();
    bool neg = false;
    if (c.is_rational() && !cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    std::string mono = gen_labels[k.first];
    if (!k.second.empty())
      mono = word_to_string(k.second, alg_labels) + "." + mono;
    std::string body = (cs == "1") ? mono
                                   : ((c.is_rational() ? cs : "(" + cs + ")") +
                                      "*" + mono);
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

ModPoly left_mul(const NcPoly& a, const ModPoly& m) {
  ModPoly r(m.field() ? m.field() : a.field());
  for (const auto& [w, c] : a.terms())
    for (const auto& [k, d] : m.terms())
      r.add_term(k.first, word_concat(w, k.second), c * d);
  return r;
}

namespace {

bool is_suffix(const Word& suffix, const Word& w) {
  if (suffix.size() > w.size()) return false;
  return std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
}

struct ModEngine {
  const RewritingSystem& algebra;
  FieldPtr field;
  size_t ngens;
  int bound;  // algebra completed degree: cap for every word we touch
  size_t max_rules;
  bool permuted;

  struct ERule {
    Word word;
    int gen;
    ModPoly rhs;
    bool active = true;
  };
  std::vector<ERule> rules;
  std::vector<ModPoly> pending;
  std::set<std::tuple<size_t, size_t, size_t>> done;  // (alg id, mod id, o)

  // One reduction step of the largest reducible monomial; module rules
  // take precedence, then algebra rules inside the word.
  ModPoly nf(ModPoly p) const {
    while (true) {
      bool changed = false;
      for (const auto& [key, c] : p.terms()) {
        const int gen = key.first;
        const Word w = key.second;  // copied: the term may be erased below
        const Scalar coef = c;
        if (static_cast<int>(w.size()) > bound)
          throw ComputeError(
              "bound exceeded: module reduction reached word degree " +
              std::to_string(w.size()) + " with algebra completed up to " +
              std::to_string(bound));
        // Module rules: lowest id whose lead is a suffix of w.
        bool stepped = false;
        for (size_t r = 0; r < rules.size() && !stepped; ++r) {
          if (!rules[r].active || rules[r].gen != gen) continue;
          if (!is_suffix(rules[r].word, w)) continue;
          Word prefix(w.begin(), w.end() - rules[r].word.size());
          ModPoly repl = rules[r].rhs.framed_left(prefix);
          p.add_term(gen, w, -coef);
          p += repl.scaled(coef);
          stepped = true;
        }
        if (!stepped) {
          // Algebra reduction of the word, leftmost-lowest strategy.
          NcPoly as_poly = NcPoly::monomial(field, w, Scalar::one(field));
          NcPoly red = normal_form(algebra, as_poly);
          if (!(red == as_poly)) {
            p.add_term(gen, w, -coef);
            for (const auto& [rw, rc] : red.terms())
              p.add_term(gen, rw, coef * rc);
            stepped = true;
          }
        }
        if (stepped) {
          changed = true;
          break;
        }
      }
      if (!changed) return p;
    }
  }

  void install(ModPoly p) {
    p = nf(std::move(p));
    if (p.is_zero()) return;
    p = p.scaled(p.leading_coeff().inverse());
    auto [gen, word] = p.leading_key();
    ModPoly rhs = ModPoly::monomial(field, gen, word, Scalar::one(field)) - p;
    for (auto& r : rules) {
      if (!r.active || r.gen != gen) continue;
      if (is_suffix(word, r.word)) {
        r.active = false;
        pending.push_back(
            ModPoly::monomial(field, r.gen, r.word, Scalar::one(field)) -
            r.rhs);
      }
    }
    rules.push_back({std::move(word), gen, std::move(rhs), true});
    if (rules.size() > max_rules)
      throw ComputeError("rule explosion: more than " +
                         std::to_string(max_rules) + " module rules");
  }

  void drain() {
    while (!pending.empty()) {
      size_t best = pending.size();
      for (size_t i = 0; i < pending.size(); ++i) {
        if (pending[i].is_zero()) continue;
        if (best == pending.size() ||
            modkey_cmp(pending[i].leading_key(), pending[best].leading_key()) <
                0)
          best = i;
      }
      if (best == pending.size()) {
        pending.clear();
        return;
      }
      ModPoly p = std::move(pending[best]);
      pending.erase(pending.begin() + best);
      install(std::move(p));
    }
  }

  struct Ambiguity {
    Word word;  // A.B.C
    int gen;
    size_t alg, mod, o;
  };

  std::vector<Ambiguity> collect() const {
    std::vector<Ambiguity> out;
    for (size_t ai = 0; ai < algebra.rules.size(); ++ai) {
      const Word& L = algebra.rules[ai].lhs;
      for (size_t mi = 0; mi < rules.size(); ++mi) {
        if (!rules[mi].active) continue;
        const Word& u = rules[mi].word;
        if (u.empty()) continue;  // empty leads overlap with nothing
        const size_t omax = std::min(L.size() - 1, u.size());
        for (size_t o = 1; o <= omax; ++o) {
          if (done.count({ai, mi, o})) continue;
          if (!std::equal(L.end() - o, L.end(), u.begin())) continue;
          Word w(L.begin(), L.end() - o);
          w.insert(w.end(), u.begin(), u.end());
          if (static_cast<int>(w.size()) > bound) continue;
          out.push_back({std::move(w), rules[mi].gen, ai, mi, o});
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Ambiguity& a, const Ambiguity& b) {
                if (a.gen != b.gen) return a.gen < b.gen;
                int c = word_cmp(a.word, b.word);
                if (c != 0) return c < 0;
                return std::tie(a.alg, a.mod, a.o) <
                       std::tie(b.alg, b.mod, b.o);
              });
    return out;
  }

  void run(const std::vector<ModPoly>& relations) {
    for (const auto& r : relations)
      if (!r.is_zero()) pending.push_back(r);
    drain();
    while (true) {
      std::vector<Ambiguity> amb = collect();
      if (amb.empty()) break;
      if (permuted) std::reverse(amb.begin(), amb.end());
      bool restart = false;
      for (const auto& a : amb) {
        done.insert({a.alg, a.mod, a.o});
        // Ambiguity monomial (A.B.C).[G], algebra lhs == A.B, module
        // lead == (B.C).[G]: reduce both one-step rewrites.
        const Word& L = algebra.rules[a.alg].lhs;
        const Word& u = rules[a.mod].word;
        Word A(L.begin(), L.end() - a.o);
        Word C(u.begin() + a.o, u.end());
        // Route 1: algebra rhs applied to the prefix, times C.[G].
        ModPoly route1(field);
        for (const auto& [rw, rc] : algebra.rules[a.alg].rhs.terms())
          route1.add_term(a.gen, word_concat(rw, C), rc);
        // Route 2: module rhs with the leftover prefix A.
        ModPoly route2 = rules[a.mod].rhs.framed_left(A);
        ModPoly s = nf(route1 - route2);
        if (!s.is_zero()) {
          install(std::move(s));
          drain();
          restart = true;
          break;
        }
      }
      if (!restart) break;
    }
    // Canonical polish.
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& r : rules) {
        if (!r.active) continue;
        ModPoly red = nf(r.rhs);
        if (red != r.rhs) {
          r.rhs = std::move(red);
          changed = true;
        }
      }
    }
  }
};

}  // namespace

ModuleSystem module_complete(const RewritingSystem& algebra,
                             const std::vector<std::string>& gen_labels,
                             const std::vector<ModPoly>& relations,
                             const ModuleCompletionOptions& opts) {
  if (algebra.complete_up_to < 1)
    throw InputError("module completion needs a completed algebra system");
  for (const auto& r : relations)
    for (const auto& [k, c] : r.terms())
      if (k.first < 0 || static_cast<size_t>(k.first) >= gen_labels.size())
        throw InputError("module relation mentions generator index " +
                         std::to_string(k.first) +
                         " outside the declared set");
  ModEngine e{algebra,
              algebra.field,
              gen_labels.size(),
              algebra.complete_up_to,
              opts.max_rules,
              opts.permuted_schedule,
              {},
              {},
              {}};
  e.run(relations);
  ModuleSystem sys;
  sys.algebra = algebra;
  sys.gen_labels = gen_labels;
  sys.complete_up_to = algebra.complete_up_to;
  for (auto& r : e.rules)
    if (r.active)
      sys.rules.push_back({std::move(r.word), r.gen, std::move(r.rhs)});
  std::sort(sys.rules.begin(), sys.rules.end(),
            [](const ModRule& a, const ModRule& b) {
              return modkey_cmp({a.gen, a.word}, {b.gen, b.word}) > 0;
            });
  return sys;
}

ModPoly module_normal_form(const ModuleSystem& sys, ModPoly p) {
  ModEngine e{sys.algebra,
              sys.algebra.field,
              sys.gen_labels.size(),
              sys.complete_up_to,
              10000,
              false,
              {},
              {},
              {}};
  for (const auto& r : sys.rules) e.rules.push_back({r.word, r.gen, r.rhs, true});
  return e.nf(std::move(p));
}

std::vector<ModKey> module_monomial_basis(const ModuleSystem& sys, int degree) {
  if (degree < 0) throw InputError("module_monomial_basis needs degree >= 0");
  if (degree > sys.complete_up_to)
    throw ComputeError("bound exceeded: degree " + std::to_string(degree) +
                       " requested, completed up to " +
                       std::to_string(sys.complete_up_to));
  std::vector<ModKey> out;
  const std::vector<Word> words = monomial_basis(sys.algebra, degree);
  for (size_t g = 0; g < sys.ngens(); ++g) {
    // Generators eliminated by an empty-word rule have no normal words.
    std::vector<const Word*> suffix_leads;
    bool dead = false;
    for (const auto& r : sys.rules) {
      if (r.gen != static_cast<int>(g)) continue;
      if (r.word.empty()) dead = true;
      suffix_leads.push_back(&r.word);
    }
    if (dead) continue;
    for (const Word& w : words) {
      bool normal = true;
      for (const Word* u : suffix_leads)
        if (is_suffix(*u, w)) {
          normal = false;
          break;
        }
      if (normal) out.push_back({static_cast<int>(g), w});
    }
  }
  std::sort(out.begin(), out.end(), [](const ModKey& a, const ModKey& b) {
    return modkey_cmp(a, b) > 0;
  });
  return out;
}

std::vector<size_t> module_dimension_sequence(const ModuleSystem& sys,
                                              int dmax) {
  std::vector<size_t> dims;
  for (int d = 0; d <= dmax; ++d)
    dims.push_back(module_monomial_basis(sys, d).size());
  return dims;
}

std::vector<std::string> module_rule_strings(const ModuleSystem& sys) {
  std::vector<std::string> out;
  out.reserve(sys.rules.size());
  for (const auto& r : sys.rules) {
    std::string lead = sys.gen_labels[r.gen];
    if (!r.word.empty())
      lead = word_to_string(r.word, sys.algebra.labels) + "." + lead;
    out.push_back(lead + " -> " +
                  r.rhs.to_string(sys.algebra.labels, sys.gen_labels));
  }
  return out;
}

}  // namespace sweedler
