#include "lndt/sim.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "lndt/checker.hpp"
#include "lndt/generators.hpp"
#include "lndt/lemmas.hpp"
#include "lndt/transform.hpp"

namespace lndt {

namespace {

Formula negtrans_rec(Formula f, std::unordered_map<const Node*, Formula>& memo) {
  if (f.is_atomic()) {
    if (f.kind() == Kind::Lit && f.lit().negative) throw SimError("negtrans: negative literal in source");
    return f;
  }
  auto it = memo.find(f.node());
  if (it != memo.end()) return it->second;
  Formula a = negtrans_rec(f.left(), memo), b = negtrans_rec(f.right(), memo);
  Formula r;
  if (f.kind() == Kind::Or) {
    r = mk_or(a, b);
  } else {
    if (f.lit().negative) throw SimError("negtrans: decision on a negative literal");
    Var p = f.lit().var;
    if (f.kind() == Kind::PosDec) b = mk_or(a, b);
    r = mk_or(mk_pdec(zero(), {p, true}, a), mk_pdec(zero(), {p, false}, b));
  }
  memo.emplace(f.node(), r);
  return r;
}

// 1-branch of a decision as the general rules read it.
Formula branch1(Formula d) { return d.kind() == Kind::Dec ? d.right() : mk_or(d.left(), d.right()); }

}  // namespace

Formula negtrans(Formula f) {
  std::unordered_map<const Node*, Formula> memo;
  return negtrans_rec(f, memo);
}

ExtAxiomSet negtrans_axioms(const ExtAxiomSet& ax) {
  ExtAxiomSet out;
  std::unordered_map<const Node*, Formula> memo;
  for (const AxiomEntry& e : ax.entries()) {
    if (e.var->family != Family::Plain) throw SimError("negtrans: source axioms must be plain, got " + ext_name(e.var));
    out.define(e.var, negtrans_rec(e.body, memo));
  }
  return out;
}

Proof translate_to_minus(const Proof& p) {
  if (p.dialect.kind != DialectKind::ELNDT && p.dialect.kind != DialectKind::LNDT)
    throw SimError("translate_to_minus: source must be an (e)LNDT proof");
  if (!p.hypotheses.empty()) throw SimError("translate_to_minus: source has hypotheses");
  if (CheckResult c = check_proof(p); !c) throw SimError("translate_to_minus: source fails check: " + c.message());

  ProofBuilder b(Dialect::plus_minus());
  b.axioms() = negtrans_axioms(p.axioms);
  Lemmas lm(b);
  std::unordered_map<const Node*, Formula> memo;
  ReplayHooks h;
  h.map = [&](Formula f) { return negtrans_rec(f, memo); };
  h.identity = [&](Formula f) { return lm.identity(f); };
  h.line = [&](const ProofLine& line, const std::vector<LineId>& prem) -> std::optional<LineId> {
    const Justification& j = line.just;
    if (j.rule != Rule::PL && j.rule != Rule::PR) return std::nullopt;
    Formula d = j.formula;
    Var p = d.lit().var;
    Formula a = negtrans_rec(d.left(), memo), bb = negtrans_rec(branch1(d), memo);
    Formula lp = pos(p);
    if (j.rule == Rule::PL) {
      // G, A |- D, p and G, p, B |- D
      LineId y = b.cut(lm.negtrans_truth(1, a, p, bb), prem[0], a);
      LineId x = b.cut(lm.negtrans_truth(2, a, p, bb), prem[1], bb);
      return b.cut(y, x, lp);
    }
    // G |- D, A, p and G, p |- D, B
    LineId y = b.cut(prem[0], lm.negtrans_truth(3, a, p, bb), a);
    LineId x = b.cut(prem[1], lm.negtrans_truth(4, a, p, bb), bb);
    return b.cut(y, x, lp);
  };
  LineId root = replay(p, b, h).back();
  root = b.adapt(root, map_sequent(p.conclusion(), h.map));
  return finish_proof(b, root);
}

namespace {

// A == negtrans(A) for positive, extension-free A, inside an eLNDT+- builder.
class StripEquiv {
 public:
  explicit StripEquiv(Lemmas& lm) : lm_(lm), b_(lm.builder()) {}

  Equiv operator()(Formula f) {
    auto it = memo_.find(f.node());
    if (it != memo_.end()) return it->second;
    Equiv e = make(f);
    memo_.emplace(f.node(), e);
    return e;
  }

 private:
  Equiv make(Formula f) {
    if (f.is_atomic()) return lm_.refl(f);
    Formula nf = negtrans(f);
    if (f.kind() == Kind::Or) {
      Equiv a = (*this)(f.left()), c = (*this)(f.right());
      return {b_.or_l(b_.or_r(a.fwd, nf), b_.or_r(c.fwd, nf), f), b_.or_l(b_.or_r(a.bwd, f), b_.or_r(c.bwd, f), nf)};
    }
    // f = pdec(A,p,B), nf = pdec(0,~p,nA) or pdec(0,p,nA or nB)
    Formula a = f.left(), c = f.right();
    Literal p = f.lit();
    Formula na = negtrans(a), nc = negtrans(c), nac = mk_or(na, nc);
    Equiv ea = (*this)(a), ec = (*this)(c);
    LineId item3 = lm_.negtrans_truth(3, na, p.var, nac);  // nA |- nf, p
    LineId item4 = lm_.negtrans_truth(4, na, p.var, nac);  // p, nA or nC |- nf
    LineId na_nf = b_.cut(item3, b_.cut(b_.or_r(lm_.identity(na), nac), item4, nac), pos(p.var));
    LineId fwd = b_.pos_pl(b_.cut(ea.fwd, na_nf, na), b_.cut(b_.or_r(ec.fwd, nac), item4, nac), f);

    Formula l0 = nf.left(), l1 = nf.right();
    LineId na_f = b_.cut(ea.bwd, lm_.truth(3, a, p, c), a);
    LineId left = b_.pos_pl(b_.ax0(), b_.wl(na_f, neg(p.var)), l0);
    LineId nc_f = b_.cut(ec.bwd, lm_.truth(4, a, p, c), c);
    LineId right = b_.pos_pl(b_.ax0(), b_.or_l(b_.wl(na_f, pos(p.var)), nc_f, nac), l1);
    return {fwd, b_.or_l(left, right, nf)};
  }

  Lemmas& lm_;
  ProofBuilder& b_;
  std::unordered_map<const Node*, Equiv> memo_;
};

bool plain_positive(Formula f) { return !f.has_ext() && !f.has_neg() && !f.has_dec(); }

}  // namespace

Proof strip_negtrans(const Proof& pm, const Sequent& target) {
  for (const auto* side : {&target.ant, &target.suc})
    for (Formula f : *side)
      if (!plain_positive(f)) throw SimError("strip_negtrans: target is not positive and extension-free");
  Sequent expect = map_sequent(target, negtrans);
  if (!same_sequent(pm.conclusion(), expect)) throw SimError("strip_negtrans: proof does not conclude negtrans(target)");

  ProofBuilder b(Dialect::plus_minus());
  b.axioms() = pm.axioms;
  Lemmas lm(b);
  StripEquiv eq(lm);
  LineId root = replay(pm, b, {}).back();
  for (Formula f : target.ant)
    if (negtrans(f) != f) root = b.cut(eq(f).fwd, root, negtrans(f));
  for (Formula f : target.suc)
    if (negtrans(f) != f) root = b.cut(root, eq(f).bwd, negtrans(f));
  root = b.adapt(root, target);
  return finish_proof(b, root, &target);
}

SimContext SimContext::of(const Proof& pm) {
  SimContext c;
  std::set<Var> vs;
  auto add = [&](Formula f) {
    for (Var v : vars_in(f)) vs.insert(v);
  };
  std::uint32_t top = 0;
  for (const AxiomEntry& e : pm.axioms.entries()) {
    if (e.var->family != Family::Plain) throw SimError("simulation context: axioms must be plain");
    top = std::max(top, e.var->index);
    add(e.body);
  }
  for (const ProofLine& l : pm.lines) {
    for (Formula f : l.seq.ant) add(f);
    for (Formula f : l.seq.suc) add(f);
  }
  c.vars.assign(vs.begin(), vs.end());
  c.axioms = pm.axioms;
  c.stride = top + 1;
  return c;
}

std::size_t SimContext::index_of(Var v) const {
  auto it = std::lower_bound(vars.begin(), vars.end(), v);
  if (it == vars.end() || *it != v) throw SimError("variable " + var_name(v) + " outside the simulation context");
  return static_cast<std::size_t>(it - vars.begin());
}

ThresholdTranslation::ThresholdTranslation(const SimContext& ctx, int k, ExtAxiomSet& out)
    : ctx_(ctx), k_(k), out_(out) {
  for (const AxiomEntry& e : ctx.axioms.entries()) {
    Formula body = (*this)(e.body);
    out_.ensure_in(body);
    out_.define(ext(e.var), body);
  }
}

const ExtVar* ThresholdTranslation::ext(const ExtVar* e) const {
  if (e->family != Family::Plain) throw SimError("threshold translation: unexpected " + ext_name(e));
  return plain_var(ctx_.stride * static_cast<std::uint32_t>(k_ + 1) + e->index);
}

Formula ThresholdTranslation::operator()(Formula f) {
  switch (f.kind()) {
    case Kind::Zero:
    case Kind::One:
      return f;
    case Kind::Lit:
      if (!f.lit().negative) return f;
      return thr(without(ctx_.vars, ctx_.index_of(f.lit().var)), k_);
    case Kind::Ext:
      return lndt::ext(ext(f.ext()));
    case Kind::Dec:
      throw SimError("threshold translation: general decision");
    default:
      break;
  }
  auto it = memo_.find(f.node());
  if (it != memo_.end()) return it->second;
  Formula a = (*this)(f.left()), b = (*this)(f.right());
  Formula r;
  if (f.kind() == Kind::Or) r = mk_or(a, b);
  else if (!f.lit().negative) r = mk_pdec(a, f.lit(), b);
  else r = lndt::ext(refthr_var(without(ctx_.vars, ctx_.index_of(f.lit().var)), k_, a, b));
  memo_.emplace(f.node(), r);
  return r;
}

Formula ttrans(Formula f, int k, const SimContext& ctx) {
  ExtAxiomSet scratch;
  return ThresholdTranslation(ctx, k, scratch)(f);
}

Proof translate_to_Tk(const Proof& pm, int k, const SimContext& ctx) {
  if (pm.dialect.kind != DialectKind::PlusMinus) throw SimError("translate_to_Tk: source must be eLNDT+-");
  ProofBuilder b(Dialect::tk(k, ctx.vars));
  ThresholdTranslation t(ctx, k, b.axioms());
  Lemmas lm(b);
  ReplayHooks h;
  h.map = [&](Formula f) { return t(f); };
  h.identity = [&](Formula f) { return lm.identity(f); };
  h.ext = [&](const ExtVar* e) { return t.ext(e); };
  h.line = [&](const ProofLine& line, const std::vector<LineId>& prem) -> std::optional<LineId> {
    const Justification& j = line.just;
    switch (j.rule) {
      case Rule::NegL:
        return b.thr_l(static_cast<std::uint32_t>(ctx.index_of(j.lit.var)));
      case Rule::NegR:
        return b.thr_r(static_cast<std::uint32_t>(ctx.index_of(j.lit.var)));
      case Rule::PosPL:
      case Rule::PosPR:
        break;
      default:
        return std::nullopt;
    }
    Formula d = j.formula;
    if (!d.lit().negative) return std::nullopt;
    Word w = without(ctx.vars, ctx.index_of(d.lit().var));
    Formula a = t(d.left()), c = t(d.right()), tt = thr(w, k);
    if (j.rule == Rule::PosPL) {
      // G, A |- D and G, T, B |- D
      LineId x = b.cut(lm.refthr_truth(2, w, k, a, c), prem[0], a);  // G, R |- D, B
      LineId y = b.cut(lm.refthr_truth(1, w, k, a, c), prem[0], a);  // G, R |- D, T
      y = b.cut(y, prem[1], tt);                                      // G, R, B |- D
      return b.cut(x, y, c);
    }
    // G |- D, A, T and G |- D, A, B
    LineId x = b.cut(prem[0], lm.refthr_truth(3, w, k, a, c), a);  // G |- D, R, T
    x = b.cut(x, lm.refthr_truth(4, w, k, a, c), tt);              // G, B |- D, R
    LineId y = b.cut(prem[1], lm.refthr_truth(3, w, k, a, c), a);  // G |- D, R, B
    return b.cut(y, x, c);
  };
  LineId root = replay(pm, b, h).back();
  root = b.adapt(root, map_sequent(pm.conclusion(), h.map));
  return finish_proof(b, root);
}

Proof eliminate_Tk(const Proof& pk, int k, const SimContext& ctx) {
  if (pk.dialect.kind != DialectKind::Tk || pk.dialect.k != k) throw SimError("eliminate_Tk: source must be a T_k proof");
  ProofBuilder b(Dialect::plus());
  b.axioms() = pk.axioms;
  Lemmas lm(b);
  Formula lo = thr(ctx.vars, k), hi = thr(ctx.vars, k + 1);
  ReplayHooks h;
  h.identity = [&](Formula f) { return lm.identity(f); };
  h.line = [&](const ProofLine& line, const std::vector<LineId>&) -> std::optional<LineId> {
    if (line.just.rule == Rule::ThrL) return b.wl(lm.increment_left(ctx.vars, line.just.index, k), lo);
    if (line.just.rule == Rule::ThrR) return b.wr(lm.increment_right(ctx.vars, line.just.index, k), hi);
    return std::nullopt;
  };
  h.after = [&](std::size_t i, LineId l) {
    const Justification& j = pk.lines[i].just;
    if (!j.premises.empty() || j.rule == Rule::ThrL || j.rule == Rule::ThrR) return l;
    return b.wr(b.wl(l, lo), hi);
  };
  LineId root = replay(pk, b, h).back();
  const Sequent& c = pk.conclusion();
  Sequent target{ms_plus(c.ant, {lo}), ms_plus(c.suc, {hi})};
  root = b.adapt(root, target);
  return finish_proof(b, root, &target);
}

Proof simulate(const Proof& p, SimStats* stats, unsigned jobs) {
  const Sequent goal = p.conclusion();
  for (const auto* side : {&goal.ant, &goal.suc})
    for (Formula f : *side)
      if (!plain_positive(f)) throw SimError("simulate: conclusion is not positive and extension-free");

  Proof pm = translate_to_minus(p);
  Proof ps = strip_negtrans(pm, goal);
  SimContext ctx = SimContext::of(ps);
  int m = static_cast<int>(ctx.vars.size());

  // k = 0..m covers every count; thr^p_{m+1} is refuted below.
  std::vector<Proof> tk(m + 1), ek(m + 1);
  auto run = [&](int k) {
    tk[k] = translate_to_Tk(ps, k, ctx);
    ek[k] = eliminate_Tk(tk[k], k, ctx);
  };
  unsigned lanes = std::max(1u, jobs);
  for (int base = 0; base <= m; base += static_cast<int>(lanes)) {
    std::vector<std::future<void>> fs;
    for (int k = base; k <= m && k < base + static_cast<int>(lanes); ++k) {
      if (lanes == 1) run(k);
      else fs.push_back(std::async(std::launch::async, run, k));
    }
    for (auto& f : fs) f.get();
  }

  ProofBuilder b(Dialect::plus());
  for (const Proof& e : ek) b.axioms().merge(e.axioms);
  Lemmas lm(b);
  LineId acc = lm.thr_true(ctx.vars);
  for (int k = 0; k <= m; ++k) acc = b.cut(acc, replay(ek[k], b, {}).back(), thr(ctx.vars, k));
  acc = b.cut(acc, lm.thr_false(ctx.vars, m + 1), thr(ctx.vars, m + 1));
  acc = b.adapt(acc, goal);
  Proof out = finish_proof(b, acc, &goal);

  if (stats) {
    stats->vars = ctx.vars.size();
    stats->source = proof_size(p);
    stats->minus = proof_size(pm);
    stats->stripped = proof_size(ps);
    stats->tk.clear();
    stats->bracketed.clear();
    for (int k = 0; k <= m; ++k) {
      stats->tk.push_back(proof_size(tk[k]));
      stats->bracketed.push_back(proof_size(ek[k]));
    }
    stats->output = proof_size(out);
  }
  return out;
}

}  // namespace lndt
