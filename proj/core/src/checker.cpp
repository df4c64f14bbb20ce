#include "lndt/checker.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace lndt {

namespace {

using Ids = std::vector<std::uint32_t>;

Ids ids_of(const std::vector<Formula>& v) {
  Ids r;
  r.reserve(v.size());
  for (Formula f : v) r.push_back(f.id());
  std::sort(r.begin(), r.end());
  return r;
}

// a + xs == b + ys as multisets
bool sum_eq(const Ids& a, std::initializer_list<Formula> xs, const Ids& b, std::initializer_list<Formula> ys) {
  if (a.size() + xs.size() != b.size() + ys.size()) return false;
  Ids l = a, r = b;
  for (Formula f : xs) l.push_back(f.id());
  for (Formula f : ys) r.push_back(f.id());
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  return l == r;
}

bool contains(const Ids& a, Formula f) { return std::binary_search(a.begin(), a.end(), f.id()); }

class Checker {
 public:
  explicit Checker(const Proof& p) : p_(p) {}

  CheckResult run() {
    if (p_.lines.empty()) return fail(0, "empty proof");
    AxiomCheck ac = check_axiom_set(p_.axioms);
    if (!ac.ok) return fail(0, "axiom set: entry " + std::to_string(ac.entry + 1) + " (" + ac.var + "): " + ac.message);
    if (!p_.axioms.empty() && !p_.dialect.allows_ext()) return fail(0, "dialect " + p_.dialect.name() + " has no extension axioms");
    for (const auto& e : p_.axioms.entries()) {
      if (!p_.dialect.admits(e.body))
        return fail(0, "axiom body of " + ext_name(e.var) + " not admitted by " + p_.dialect.name());
    }
    for (const auto& h : p_.hypotheses) {
      if (!hyps_.emplace(h.tag, &h.seq).second) return fail(0, "duplicate hypothesis tag " + h.tag);
    }
    ant_.resize(p_.lines.size());
    suc_.resize(p_.lines.size());
    for (std::size_t i = 0; i < p_.lines.size(); ++i) {
      ant_[i] = ids_of(p_.lines[i].seq.ant);
      suc_[i] = ids_of(p_.lines[i].seq.suc);
      std::string why = line(i);
      if (!why.empty()) return fail(i, why);
    }
    const Sequent& c = p_.conclusion();
    if (p_.dialect.allows_ext() && p_.hypotheses.empty() && !p_.intermediate && !ext_free(c))
      return fail(p_.lines.size() - 1, "conclusion mentions an extension variable");
    return {};
  }

 private:
  static CheckResult fail(std::size_t line, std::string why) { return {false, line, std::move(why)}; }

  std::string formula_ok(Formula f) {
    if (!p_.dialect.admits(f)) return "formula " + to_string(f) + " not admitted by " + p_.dialect.name();
    if (!f.has_ext()) return "";
    std::vector<Formula> stack{f};
    while (!stack.empty()) {
      Formula g = stack.back();
      stack.pop_back();
      if (!g.has_ext() || !scoped_.insert(g.node()).second) continue;
      if (g.kind() == Kind::Ext) {
        if (!p_.axioms.defines(g.ext())) return "extension variable " + ext_name(g.ext()) + " has no axiom";
      } else if (!g.is_atomic()) {
        stack.push_back(g.left());
        stack.push_back(g.right());
      }
    }
    return "";
  }

  std::string line(std::size_t i) {
    const ProofLine& l = p_.lines[i];
    const Justification& j = l.just;
    const Sequent& s = l.seq;
    for (Formula f : s.ant)
      if (auto w = formula_ok(f); !w.empty()) return w;
    for (Formula f : s.suc)
      if (auto w = formula_ok(f); !w.empty()) return w;
    if (static_cast<int>(j.premises.size()) != rule_arity(j.rule))
      return rule_name(j.rule) + " expects " + std::to_string(rule_arity(j.rule)) + " premises";
    for (auto q : j.premises)
      if (q >= i) return "premise L" + std::to_string(q + 1) + " does not precede this line";
    if (rule_arity(j.rule) > 0) {
      if (!j.formula.valid()) return "missing principal formula";
      if (auto w = formula_ok(j.formula); !w.empty()) return "principal: " + w;
    }
    const Ids& ca = ant_[i];
    const Ids& cs = suc_[i];
    static const Ids kEmpty;
    auto exact = [&](std::initializer_list<Formula> a, std::initializer_list<Formula> b) {
      return sum_eq(ca, {}, kEmpty, a) && sum_eq(cs, {}, kEmpty, b);
    };
    const DialectKind dk = p_.dialect.kind;
    switch (j.rule) {
      case Rule::Ax0:
        return exact({zero()}, {}) ? "" : "ax0 concludes exactly '0 |-'";
      case Rule::Ax1:
        return exact({}, {one()}) ? "" : "ax1 concludes exactly '|- 1'";
      case Rule::Id: {
        if (j.lit.negative && dk != DialectKind::PlusMinus) return "identity on a negative literal outside eLNDT+-";
        Formula a = lit(j.lit);
        return exact({a}, {a}) ? "" : "id concludes exactly 'p |- p'";
      }
      case Rule::NegL:
      case Rule::NegR: {
        if (dk != DialectKind::PlusMinus) return "negation axioms exist only in eLNDT+-";
        if (j.lit.negative) return "negation axiom takes a positive variable";
        Formula p = pos(j.lit.var), np = neg(j.lit.var);
        bool ok = j.rule == Rule::NegL ? exact({p, np}, {}) : exact({}, {p, np});
        return ok ? "" : "malformed negation axiom";
      }
      case Rule::ThrL:
      case Rule::ThrR: {
        if (dk != DialectKind::Tk) return "threshold axioms exist only in Tk";
        const Word& vs = p_.dialect.vars;
        if (j.index >= vs.size()) return "threshold axiom index out of range";
        Word rest;
        for (std::size_t t = 0; t < vs.size(); ++t)
          if (t != j.index) rest.push_back(vs[t]);
        Formula p = pos(vs[j.index]);
        Formula t = thr(rest, p_.dialect.k);
        if (!p_.axioms.defines(t.ext())) return "threshold axiom needs " + ext_name(t.ext());
        bool ok = j.rule == Rule::ThrL ? exact({p, t}, {}) : exact({}, {p, t});
        return ok ? "" : "malformed threshold axiom";
      }
      case Rule::ExtLR:
      case Rule::ExtRL: {
        if (!p_.dialect.allows_ext()) return "extension axioms not available in " + p_.dialect.name();
        if (j.ext == nullptr || !p_.axioms.defines(j.ext)) return "unknown extension variable";
        Formula e = ext(j.ext), a = p_.axioms.body(j.ext);
        bool ok = j.rule == Rule::ExtLR ? exact({e}, {a}) : exact({a}, {e});
        return ok ? "" : "extension axiom does not match its entry";
      }
      case Rule::Hyp: {
        auto it = hyps_.find(j.tag);
        if (it == hyps_.end()) return "unknown hypothesis " + j.tag;
        return same_sequent(*it->second, s) ? "" : "line differs from hypothesis " + j.tag;
      }
      default:
        break;
    }

    const Ids& a1 = ant_[j.premises[0]];
    const Ids& s1 = suc_[j.premises[0]];
    const Ids& a2 = j.premises.size() > 1 ? ant_[j.premises[1]] : kEmpty;
    const Ids& s2 = j.premises.size() > 1 ? suc_[j.premises[1]] : kEmpty;
    Formula d = j.formula;
    switch (j.rule) {
      case Rule::Cut:
        if (!sum_eq(a1, {}, ca, {}) || !sum_eq(s1, {}, cs, {d})) return "left premise must be G |- D, A";
        if (!sum_eq(a2, {}, ca, {d}) || !sum_eq(s2, {}, cs, {})) return "right premise must be G, A |- D";
        return "";
      case Rule::WL:
        return sum_eq(ca, {}, a1, {d}) && sum_eq(cs, {}, s1, {}) ? "" : "weakening mismatch";
      case Rule::WR:
        return sum_eq(cs, {}, s1, {d}) && sum_eq(ca, {}, a1, {}) ? "" : "weakening mismatch";
      case Rule::CL:
        return contains(ca, d) && sum_eq(a1, {}, ca, {d}) && sum_eq(cs, {}, s1, {}) ? "" : "contraction mismatch";
      case Rule::CR:
        return contains(cs, d) && sum_eq(s1, {}, cs, {d}) && sum_eq(ca, {}, a1, {}) ? "" : "contraction mismatch";
      case Rule::OrL:
        if (d.kind() != Kind::Or) return "orL principal is not a disjunction";
        if (!sum_eq(a1, {d}, ca, {d.left()}) || !sum_eq(s1, {}, cs, {})) return "left premise must be G, A |- D";
        if (!sum_eq(a2, {d}, ca, {d.right()}) || !sum_eq(s2, {}, cs, {})) return "right premise must be G, B |- D";
        return "";
      case Rule::OrR:
        if (d.kind() != Kind::Or) return "orR principal is not a disjunction";
        return sum_eq(s1, {d}, cs, {d.left(), d.right()}) && sum_eq(a1, {}, ca, {}) ? ""
                                                                                  : "premise must be G |- D, A, B";
      case Rule::PL:
      case Rule::PR: {
        if (dk != DialectKind::LNDT && dk != DialectKind::ELNDT) return "general decision rules only in (e)LNDT";
        if (d.kind() != Kind::Dec && d.kind() != Kind::PosDec) return "principal is not a decision";
        Formula a = d.left(), p = lit(d.lit());
        Formula b = d.kind() == Kind::Dec ? d.right() : mk_or(d.left(), d.right());
        if (j.rule == Rule::PL) {
          if (!sum_eq(a1, {d}, ca, {a}) || !sum_eq(s1, {}, cs, {p})) return "left premise must be G, A |- D, p";
          if (!sum_eq(a2, {d}, ca, {p, b}) || !sum_eq(s2, {}, cs, {})) return "right premise must be G, p, B |- D";
        } else {
          if (!sum_eq(a1, {}, ca, {}) || !sum_eq(s1, {d}, cs, {a, p})) return "left premise must be G |- D, A, p";
          if (!sum_eq(a2, {}, ca, {p}) || !sum_eq(s2, {d}, cs, {b})) return "right premise must be G, p |- D, B";
        }
        return "";
      }
      case Rule::PosPL:
      case Rule::PosPR: {
        if (!p_.dialect.positive_rules()) return "positive decision rules not available in " + p_.dialect.name();
        if (d.kind() != Kind::PosDec) return "principal is not a positive decision";
        Formula a = d.left(), b = d.right(), p = lit(d.lit());
        if (j.rule == Rule::PosPL) {
          if (!sum_eq(a1, {d}, ca, {a}) || !sum_eq(s1, {}, cs, {})) return "left premise must be G, A |- D";
          if (!sum_eq(a2, {d}, ca, {p, b}) || !sum_eq(s2, {}, cs, {})) return "right premise must be G, p, B |- D";
        } else {
          if (!sum_eq(a1, {}, ca, {}) || !sum_eq(s1, {d}, cs, {a, p})) return "left premise must be G |- D, A, p";
          if (!sum_eq(a2, {}, ca, {}) || !sum_eq(s2, {d}, cs, {a, b})) return "right premise must be G |- D, A, B";
        }
        return "";
      }
      default:
        return "unhandled rule";
    }
  }

  const Proof& p_;
  std::vector<Ids> ant_, suc_;
  std::unordered_set<const Node*> scoped_;
  std::map<std::string, const Sequent*> hyps_;
};

// Memoised variable support per node, following extension bodies.
class SupportCache {
 public:
  explicit SupportCache(const ExtAxiomSet& ax) : ax_(ax) {}

  const std::vector<Var>& operator()(Formula f) {
    auto it = memo_.find(f.node());
    if (it != memo_.end()) return it->second;
    std::vector<Var> r;
    auto merge = [&](const std::vector<Var>& x) {
      std::vector<Var> out;
      std::set_union(r.begin(), r.end(), x.begin(), x.end(), std::back_inserter(out));
      r.swap(out);
    };
    switch (f.kind()) {
      case Kind::Lit:
        r.push_back(f.lit().var);
        break;
      case Kind::Ext:
        r = (*this)(ax_.body(f.ext()));
        break;
      case Kind::Or:
        r = (*this)(f.left());
        merge((*this)(f.right()));
        break;
      case Kind::Dec:
      case Kind::PosDec:
        r = (*this)(f.left());
        merge((*this)(f.right()));
        merge({f.lit().var});
        break;
      default:
        break;
    }
    return memo_.emplace(f.node(), std::move(r)).first->second;
  }

  Word of(const Sequent& s) {
    std::set<Var> vs;
    for (const auto* side : {&s.ant, &s.suc})
      for (Formula f : *side)
        for (Var v : (*this)(f)) vs.insert(v);
    return Word(vs.begin(), vs.end());
  }

 private:
  const ExtAxiomSet& ax_;
  std::unordered_map<const Node*, std::vector<Var>> memo_;
};

// Bit-parallel evaluation on explicitly supplied variable columns.
class SampleEvaluator {
 public:
  using Bits = std::vector<std::uint64_t>;
  SampleEvaluator(const ExtAxiomSet& ax, std::size_t words, std::mt19937_64& rng) : ax_(ax), words_(words), rng_(rng) {}

  const Bits& operator()(Formula f) {
    auto it = memo_.find(f.node());
    if (it != memo_.end()) return it->second;
    Bits r(words_, 0);
    switch (f.kind()) {
      case Kind::Zero:
        break;
      case Kind::One:
        for (auto& w : r) w = ~std::uint64_t{0};
        break;
      case Kind::Lit:
        r = lit_bits(f.lit());
        break;
      case Kind::Ext:
        r = (*this)(ax_.body(f.ext()));
        break;
      case Kind::Or: {
        const Bits& a = (*this)(f.left());
        const Bits& b = (*this)(f.right());
        for (std::size_t w = 0; w < words_; ++w) r[w] = a[w] | b[w];
        break;
      }
      case Kind::Dec:
      case Kind::PosDec: {
        const Bits& a = (*this)(f.left());
        const Bits& b = (*this)(f.right());
        const Bits p = lit_bits(f.lit());
        for (std::size_t w = 0; w < words_; ++w)
          r[w] = f.kind() == Kind::Dec ? ((~p[w] & a[w]) | (p[w] & b[w])) : (a[w] | (p[w] & b[w]));
        break;
      }
    }
    return memo_.emplace(f.node(), std::move(r)).first->second;
  }

  std::optional<Assignment> countermodel(const Sequent& s) {
    Bits bad(words_, ~std::uint64_t{0});
    for (Formula f : s.ant) {
      const Bits& b = (*this)(f);
      for (std::size_t w = 0; w < words_; ++w) bad[w] &= b[w];
    }
    for (Formula f : s.suc) {
      const Bits& b = (*this)(f);
      for (std::size_t w = 0; w < words_; ++w) bad[w] &= ~b[w];
    }
    for (std::size_t w = 0; w < words_; ++w) {
      if (!bad[w]) continue;
      int bit = std::countr_zero(bad[w]);
      Assignment a;
      for (const auto& [v, col] : cols_) a.set(v, (col[w] >> bit) & 1u);
      return a;
    }
    return std::nullopt;
  }

 private:
  Bits lit_bits(Literal l) {
    auto it = cols_.find(l.var);
    if (it == cols_.end()) {
      Bits c(words_);
      for (auto& w : c) w = rng_();
      it = cols_.emplace(l.var, std::move(c)).first;
    }
    Bits r = it->second;
    if (l.negative)
      for (auto& w : r) w = ~w;
    return r;
  }

  const ExtAxiomSet& ax_;
  std::size_t words_;
  std::mt19937_64& rng_;
  std::map<Var, Bits> cols_;
  std::unordered_map<const Node*, Bits> memo_;
};

}  // namespace

std::string CheckResult::message() const {
  if (ok) return "ok";
  return "line L" + std::to_string(line + 1) + ": " + reason;
}

CheckResult check_proof(const Proof& p) { return Checker(p).run(); }

SoundnessReport check_soundness(const Proof& p, int cap) {
  SoundnessReport r;
  SupportCache sc(p.axioms);
  std::vector<Word> supports;
  supports.reserve(p.lines.size());
  std::set<Var> all;
  for (const auto& l : p.lines) {
    supports.push_back(sc.of(l.seq));
    all.insert(supports.back().begin(), supports.back().end());
  }
  if (static_cast<int>(all.size()) <= cap) {
    TableEvaluator ev(p.axioms, Word(all.begin(), all.end()), cap);
    for (std::size_t i = 0; i < p.lines.size(); ++i) {
      ++r.checked;
      if (auto cm = ev.countermodel(p.lines[i].seq)) {
        r.ok = false;
        r.line = i;
        r.countermodel = cm;
        return r;
      }
    }
    return r;
  }
  std::map<Word, std::unique_ptr<TableEvaluator>> evs;
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    if (static_cast<int>(supports[i].size()) > cap) {
      ++r.skipped;
      continue;
    }
    auto& ev = evs[supports[i]];
    if (!ev) ev = std::make_unique<TableEvaluator>(p.axioms, supports[i], cap);
    ++r.checked;
    if (auto cm = ev->countermodel(p.lines[i].seq)) {
      r.ok = false;
      r.line = i;
      r.countermodel = cm;
      return r;
    }
  }
  return r;
}

SoundnessReport check_soundness_sampled(const Proof& p, std::size_t samples, std::uint64_t seed) {
  SoundnessReport r;
  std::mt19937_64 rng(seed);
  SampleEvaluator ev(p.axioms, std::max<std::size_t>(1, (samples + 63) / 64), rng);
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    ++r.checked;
    if (auto cm = ev.countermodel(p.lines[i].seq)) {
      r.ok = false;
      r.line = i;
      r.countermodel = cm;
      return r;
    }
  }
  return r;
}

}  // namespace lndt
