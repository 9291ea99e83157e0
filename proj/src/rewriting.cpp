#include "sweedler/rewriting.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace sweedler {

namespace {

// Rules are addressed through a view list so the engine can deactivate
// entries without renumbering; rule ids stay stable for bookkeeping.
struct RuleView {
  const Word* lhs;
  const NcPoly* rhs;
};

// Word matcher with a first-letter index: every rule matching at a
// position starts with the letter at that position, so one bucket scan
// per position suffices.
struct Matcher {
  std::vector<RuleView> rules;
  std::vector<std::vector<size_t>> buckets;

  Matcher(size_t ngens, std::vector<RuleView> v) : rules(std::move(v)) {
    buckets.resize(ngens);
    for (size_t r = 0; r < rules.size(); ++r) {
      const Word& l = *rules[r].lhs;
      if (!l.empty()) buckets[l[0]].push_back(r);
    }
  }

  // Leftmost occurrence; among rules matching there, lowest id wins.
  bool find(const Word& w, size_t& pos_out, size_t& rule_out) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (size_t r : buckets[w[pos]]) {
        const Word& l = *rules[r].lhs;
        if (l.size() > w.size() - pos) continue;
        if (std::equal(l.begin(), l.end(), w.begin() + pos)) {
          pos_out = pos;
          rule_out = r;
          return true;
        }
      }
    }
    return false;
  }
};

// Fully reduces p.  Each step rewrites one reducible term; the rewrite
// replaces the term by strictly smaller ones, so the loop terminates.
NcPoly reduce_full(const Matcher& m, NcPoly p) {
  while (true) {
    bool changed = false;
    for (const auto& [w, c] : p.terms()) {
      size_t pos, rid;
      if (!m.find(w, pos, rid)) continue;
      const Word& l = *m.rules[rid].lhs;
      Word prefix(w.begin(), w.begin() + pos);
      Word suffix(w.begin() + pos + l.size(), w.end());
      NcPoly replacement = m.rules[rid].rhs->framed(prefix, suffix);
      Scalar coef = c;
      p.add_term(w, -coef);
      p += replacement.scaled(coef);
      changed = true;
      break;  // the term map was edited; restart the scan
    }
    if (!changed) return p;
  }
}

bool word_has_factor(const Word& w, const Word& f) {
  if (f.empty() || f.size() > w.size()) return false;
  for (size_t pos = 0; pos + f.size() <= w.size(); ++pos)
    if (std::equal(f.begin(), f.end(), w.begin() + pos)) return true;
  return false;
}

bool poly_mentions_factor(const NcPoly& p, const Word& f) {
  for (const auto& [w, c] : p.terms())
    if (word_has_factor(w, f)) return true;
  return false;
}

struct Engine {
  FieldPtr field;
  size_t ngens;
  int bound;
  size_t max_rules;
  bool permuted;

  struct ERule {
    Word lhs;
    NcPoly rhs;
    bool active = true;
  };
  std::vector<ERule> rules;
  std::vector<NcPoly> pending;
  // Ambiguities already resolved, keyed by stable rule ids and overlap
  // length; entries for deactivated rules simply never match again.
  std::set<std::tuple<size_t, size_t, size_t>> done;

  Matcher matcher() const {
    std::vector<RuleView> v;
    for (const auto& r : rules)
      if (r.active) v.push_back({&r.lhs, &r.rhs});
    return Matcher(ngens, std::move(v));
  }

  NcPoly nf(NcPoly p) const { return reduce_full(matcher(), std::move(p)); }

  // Reduces, orients and installs one relation; any existing rule whose
  // leading word the new rule reduces goes back to the pending queue.
  void install(NcPoly p) {
    p = nf(std::move(p));
    if (p.is_zero()) return;
    if (p.degree() > bound)
      throw ComputeError("relation of degree " + std::to_string(p.degree()) +
                         " exceeds completion bound " + std::to_string(bound));
    if (p.leading_word().empty())
      throw ComputeError("inconsistent presentation: relations reduce 1 to 0");
    p = p.scaled(p.leading_coeff().inverse());
    Word lhs = p.leading_word();
    NcPoly rhs = NcPoly::monomial(field, lhs, Scalar::one(field)) - p;
    for (auto& r : rules) {
      if (!r.active) continue;
      if (word_has_factor(r.lhs, lhs)) {
        r.active = false;
        pending.push_back(NcPoly::monomial(field, r.lhs, Scalar::one(field)) -
                          r.rhs);
      }
    }
    rules.push_back({std::move(lhs), std::move(rhs), true});
    if (rules.size() > max_rules)
      throw ComputeError("rule explosion: more than " +
                         std::to_string(max_rules) + " rules");
    // Keep right-hand sides current, but only touch the ones that
    // actually mention the new leading word.
    const Word& fresh = rules.back().lhs;
    Matcher m = matcher();
    for (auto& r : rules) {
      if (!r.active) continue;
      if (&r != &rules.back() && poly_mentions_factor(r.rhs, fresh))
        r.rhs = reduce_full(m, std::move(r.rhs));
    }
  }

  void drain_pending() {
    while (!pending.empty()) {
      // Smallest leading word first; ties resolved by queue position.
      size_t best = pending.size();
      for (size_t i = 0; i < pending.size(); ++i) {
        if (pending[i].is_zero()) continue;
        if (best == pending.size() ||
            word_cmp(pending[i].leading_word(), pending[best].leading_word()) <
                0)
          best = i;
      }
      if (best == pending.size()) {
        pending.clear();
        return;
      }
      NcPoly p = std::move(pending[best]);
      pending.erase(pending.begin() + best);
      install(std::move(p));
    }
  }

  struct Ambiguity {
    Word word;
    size_t i, j, o;
  };

  // Unprocessed overlaps lhs_i == A.B, lhs_j == B.C with |B| = o >= 1 and
  // both A.B, B.C proper (containments are removed by inter-reduction).
  std::vector<Ambiguity> collect() const {
    std::vector<Ambiguity> out;
    for (size_t i = 0; i < rules.size(); ++i) {
      if (!rules[i].active) continue;
      for (size_t j = 0; j < rules.size(); ++j) {
        if (!rules[j].active) continue;
        const Word& li = rules[i].lhs;
        const Word& lj = rules[j].lhs;
        const size_t omax = std::min(li.size(), lj.size()) - 1;
        for (size_t o = 1; o <= omax; ++o) {
          if (done.count({i, j, o})) continue;
          if (!std::equal(li.end() - o, li.end(), lj.begin())) continue;
          Word w(li);
          w.insert(w.end(), lj.begin() + o, lj.end());
          if (static_cast<int>(w.size()) > bound) continue;
          out.push_back({std::move(w), i, j, o});
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Ambiguity& a, const Ambiguity& b) {
                int c = word_cmp(a.word, b.word);
                if (c != 0) return c < 0;
                return std::tie(a.i, a.j, a.o) < std::tie(b.i, b.j, b.o);
              });
    return out;
  }

  void run(const std::vector<NcPoly>& relations) {
    for (const auto& r : relations)
      if (!r.is_zero()) pending.push_back(r);
    drain_pending();
    while (true) {
      std::vector<Ambiguity> amb = collect();
      if (amb.empty()) break;
      if (permuted) std::reverse(amb.begin(), amb.end());
      bool restart = false;
      for (const auto& a : amb) {
        done.insert({a.i, a.j, a.o});
        // Two rewrites of the ambiguity word A.B.C: rule i on the prefix
        // A.B gives rhs_i.C, rule j on the suffix B.C gives A.rhs_j.
        const Word& li = rules[a.i].lhs;
        const Word& lj = rules[a.j].lhs;
        Word A(li.begin(), li.end() - a.o);
        Word C(lj.begin() + a.o, lj.end());
        NcPoly s = rules[a.i].rhs.framed({}, C) - rules[a.j].rhs.framed(A, {});
        s = nf(std::move(s));
        if (!s.is_zero()) {
          install(std::move(s));
          drain_pending();
          restart = true;
          break;  // the rule set changed; recollect ambiguities
        }
      }
      if (!restart) break;
    }
    // Canonical polish: right-hand sides fully reduced.  Together with
    // the final sort this makes the completed bounded system unique, so
    // permuted schedules produce identical output.
    bool changed = true;
    while (changed) {
      changed = false;
      Matcher m = matcher();
      for (auto& r : rules) {
        if (!r.active) continue;
        NcPoly red = reduce_full(m, r.rhs);
        if (red != r.rhs) {
          r.rhs = std::move(red);
          changed = true;
        }
      }
    }
  }
};

Matcher matcher_of(const RewritingSystem& sys) {
  std::vector<RuleView> v;
  v.reserve(sys.rules.size());
  for (const auto& r : sys.rules) v.push_back({&r.lhs, &r.rhs});
  return Matcher(sys.ngens(), std::move(v));
}

}  // namespace

RewritingSystem complete(const FieldPtr& field,
                         const std::vector<std::string>& labels,
                         const std::vector<NcPoly>& relations,
                         const CompletionOptions& opts) {
  if (opts.degree_bound < 1) throw InputError("completion bound must be >= 1");
  for (const auto& r : relations)
    for (const auto& [w, c] : r.terms())
      for (Gen g : w)
        if (g < 0 || static_cast<size_t>(g) >= labels.size())
          throw InputError("relation mentions generator index " +
                           std::to_string(g) + " outside the declared set");
  Engine e{field,
           labels.size(),
           opts.degree_bound,
           opts.max_rules,
           opts.permuted_schedule,
           {},
           {},
           {}};
  e.run(relations);
  RewritingSystem sys;
  sys.field = field;
  sys.labels = labels;
  sys.complete_up_to = opts.degree_bound;
  for (auto& r : e.rules)
    if (r.active) sys.rules.push_back({std::move(r.lhs), std::move(r.rhs)});
  std::sort(
      sys.rules.begin(), sys.rules.end(),
      [](const Rule& a, const Rule& b) { return word_cmp(a.lhs, b.lhs) > 0; });
  return sys;
}

NcPoly normal_form(const RewritingSystem& sys, const NcPoly& p) {
  if (p.degree() > sys.complete_up_to)
    throw ComputeError("bound exceeded: degree " + std::to_string(p.degree()) +
                       " input, system completed up to " +
                       std::to_string(sys.complete_up_to));
  return reduce_full(matcher_of(sys), p);
}

bool reduces_to_zero(const RewritingSystem& sys, const NcPoly& p) {
  return normal_form(sys, p).is_zero();
}

bool word_is_normal(const RewritingSystem& sys, const Word& w) {
  for (const auto& r : sys.rules)
    if (word_has_factor(w, r.lhs)) return false;
  return true;
}

namespace {

// Depth-first enumeration of normal words.  A redex survives when the
// word is extended on the right, so only suffixes ending at the fresh
// letter need checking.
template <class Visit>
void enumerate_normal(size_t ngens, size_t max_lhs, const std::set<Word>& leads,
                      Word& w, int depth_left, Visit&& visit) {
  visit(w);
  if (depth_left == 0) return;
  for (Gen g = 0; g < static_cast<Gen>(ngens); ++g) {
    w.push_back(g);
    bool normal = true;
    for (size_t len = 1; len <= std::min(max_lhs, w.size()); ++len) {
      Word suffix(w.end() - len, w.end());
      if (leads.count(suffix)) {
        normal = false;
        break;
      }
    }
    if (normal)
      enumerate_normal(ngens, max_lhs, leads, w, depth_left - 1, visit);
    w.pop_back();
  }
}

std::set<Word> lead_set(const RewritingSystem& sys, size_t& max_lhs) {
  std::set<Word> leads;
  max_lhs = 0;
  for (const auto& r : sys.rules) {
    leads.insert(r.lhs);
    max_lhs = std::max(max_lhs, r.lhs.size());
  }
  return leads;
}

}  // namespace

std::vector<Word> monomial_basis(const RewritingSystem& sys, int degree) {
  if (degree < 0) throw InputError("monomial_basis needs degree >= 0");
  if (degree > sys.complete_up_to)
    throw ComputeError("bound exceeded: degree " + std::to_string(degree) +
                       " requested, system completed up to " +
                       std::to_string(sys.complete_up_to));
  size_t max_lhs = 0;
  std::set<Word> leads = lead_set(sys, max_lhs);
  std::vector<Word> out;
  Word w;
  enumerate_normal(sys.ngens(), max_lhs, leads, w, degree, [&](const Word& v) {
    if (static_cast<int>(v.size()) == degree) out.push_back(v);
  });
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return word_cmp(a, b) > 0; });
  return out;
}

std::vector<size_t> dimension_sequence(const RewritingSystem& sys, int dmax) {
  if (dmax < 0) throw InputError("dimension_sequence needs dmax >= 0");
  if (dmax > sys.complete_up_to)
    throw ComputeError("bound exceeded: degree " + std::to_string(dmax) +
                       " requested, system completed up to " +
                       std::to_string(sys.complete_up_to));
  size_t max_lhs = 0;
  std::set<Word> leads = lead_set(sys, max_lhs);
  std::vector<size_t> dims(dmax + 1, 0);
  Word w;
  enumerate_normal(sys.ngens(), max_lhs, leads, w, dmax,
                   [&](const Word& v) { dims[v.size()]++; });
  return dims;
}

std::vector<std::string> rule_strings(const RewritingSystem& sys) {
  std::vector<std::string> out;
  out.reserve(sys.rules.size());
  for (const auto& r : sys.rules)
    out.push_back(word_to_string(r.lhs, sys.labels) + " -> " +
                  r.rhs.to_string(sys.labels));
  return out;
}

}  // namespace sweedler
