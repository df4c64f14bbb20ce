#include "lndt/builder.hpp"

#include <algorithm>
#include <unordered_map>

namespace lndt {

namespace {

std::unordered_map<std::uint32_t, int> counts(const std::vector<Formula>& v) {
  std::unordered_map<std::uint32_t, int> c;
  for (Formula f : v) ++c[f.id()];
  return c;
}

}  // namespace

std::vector<Formula> ms_minus(const std::vector<Formula>& a, std::initializer_list<Formula> remove) {
  std::vector<Formula> out = a;
  for (Formula r : remove) {
    auto it = std::find(out.rbegin(), out.rend(), r);
    if (it != out.rend()) out.erase(std::next(it).base());
  }
  return out;
}

std::vector<Formula> ms_plus(const std::vector<Formula>& a, std::initializer_list<Formula> add) {
  std::vector<Formula> out = a;
  out.insert(out.end(), add.begin(), add.end());
  return out;
}

std::vector<Formula> ms_union(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::vector<Formula> out = a;
  auto have = counts(a);
  std::unordered_map<std::uint32_t, int> seen;
  for (Formula f : b) {
    if (++seen[f.id()] > have[f.id()]) out.push_back(f);
  }
  return out;
}

ProofBuilder::ProofBuilder(Dialect d) { proof_.dialect = std::move(d); }

std::optional<LineId> ProofBuilder::find(const Sequent& s) const {
  auto it = index_.find(seq_key(s));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LineId ProofBuilder::add(Sequent s, Justification j) { return emit(std::move(s), std::move(j)); }

LineId ProofBuilder::emit(Sequent s, Justification j) {
  SeqKey key = seq_key(s);
  if (dedup_) {
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
  }
  for (const auto* side : {&s.ant, &s.suc})
    for (Formula f : *side)
      if (f.has_ext()) proof_.axioms.ensure_in(f);
  if (j.formula.valid() && j.formula.has_ext()) proof_.axioms.ensure_in(j.formula);
  LineId id = static_cast<LineId>(proof_.lines.size());
  proof_.lines.push_back({std::move(s), std::move(j)});
  index_.emplace(std::move(key), id);
  return id;
}

LineId ProofBuilder::ax0() { return emit({{zero()}, {}}, {Rule::Ax0, {}, {}, 0, nullptr, {}, {}}); }
LineId ProofBuilder::ax1() { return emit({{}, {one()}}, {Rule::Ax1, {}, {}, 0, nullptr, {}, {}}); }

LineId ProofBuilder::id(Literal p) {
  Formula a = lit(p);
  return emit({{a}, {a}}, {Rule::Id, {}, p, 0, nullptr, {}, {}});
}

LineId ProofBuilder::neg_l(Var p) {
  return emit({{pos(p), neg(p)}, {}}, {Rule::NegL, {}, {p, false}, 0, nullptr, {}, {}});
}

LineId ProofBuilder::neg_r(Var p) {
  return emit({{}, {pos(p), neg(p)}}, {Rule::NegR, {}, {p, false}, 0, nullptr, {}, {}});
}

static Formula thr_axiom_formula(const Dialect& d, std::uint32_t i) {
  if (d.kind != DialectKind::Tk || i >= d.vars.size()) throw BuildError("threshold axiom outside Tk range");
  Word rest;
  for (std::size_t t = 0; t < d.vars.size(); ++t)
    if (t != i) rest.push_back(d.vars[t]);
  return thr(rest, d.k);
}

LineId ProofBuilder::thr_l(std::uint32_t i) {
  Formula t = thr_axiom_formula(proof_.dialect, i);
  return emit({{pos(proof_.dialect.vars[i]), t}, {}}, {Rule::ThrL, {}, {}, i, nullptr, {}, {}});
}

LineId ProofBuilder::thr_r(std::uint32_t i) {
  Formula t = thr_axiom_formula(proof_.dialect, i);
  return emit({{}, {pos(proof_.dialect.vars[i]), t}}, {Rule::ThrR, {}, {}, i, nullptr, {}, {}});
}

LineId ProofBuilder::ext_lr(const ExtVar* e) {
  proof_.axioms.ensure(e);
  return emit({{ext(e)}, {proof_.axioms.body(e)}}, {Rule::ExtLR, {}, {}, 0, e, {}, {}});
}

LineId ProofBuilder::ext_rl(const ExtVar* e) {
  proof_.axioms.ensure(e);
  return emit({{proof_.axioms.body(e)}, {ext(e)}}, {Rule::ExtRL, {}, {}, 0, e, {}, {}});
}

LineId ProofBuilder::hyp(const std::string& tag, const Sequent& s) {
  auto it = std::find_if(proof_.hypotheses.begin(), proof_.hypotheses.end(),
                         [&](const Hypothesis& h) { return h.tag == tag; });
  if (it == proof_.hypotheses.end()) proof_.hypotheses.push_back({tag, s});
  else if (!same_sequent(it->seq, s)) throw BuildError("hypothesis " + tag + " redefined");
  return emit(s, {Rule::Hyp, {}, {}, 0, nullptr, tag, {}});
}

LineId ProofBuilder::wl(LineId l, Formula a) {
  Sequent s = seq(l);
  s.ant.push_back(a);
  return emit(std::move(s), {Rule::WL, a, {}, 0, nullptr, {}, {l}});
}

LineId ProofBuilder::wr(LineId l, Formula a) {
  Sequent s = seq(l);
  s.suc.push_back(a);
  return emit(std::move(s), {Rule::WR, a, {}, 0, nullptr, {}, {l}});
}

LineId ProofBuilder::cl(LineId l, Formula a) {
  Sequent s = seq(l);
  s.ant = ms_minus(s.ant, {a});
  return emit(std::move(s), {Rule::CL, a, {}, 0, nullptr, {}, {l}});
}

LineId ProofBuilder::cr(LineId l, Formula a) {
  Sequent s = seq(l);
  s.suc = ms_minus(s.suc, {a});
  return emit(std::move(s), {Rule::CR, a, {}, 0, nullptr, {}, {l}});
}

bool ProofBuilder::can_adapt(LineId l, const Sequent& target) const {
  const Sequent& s = seq(l);
  for (int side = 0; side < 2; ++side) {
    const auto& have = side == 0 ? s.ant : s.suc;
    auto want = counts(side == 0 ? target.ant : target.suc);
    for (const auto& [id, c] : counts(have)) {
      auto it = want.find(id);
      if (it == want.end() || it->second == 0) return false;
      (void)c;
    }
  }
  return true;
}

LineId ProofBuilder::adapt(LineId l, const Sequent& target) {
  if (!can_adapt(l, target)) throw BuildError("cannot adapt " + to_string(seq(l)) + " to " + to_string(target));
  LineId cur = l;
  for (int side = 0; side < 2; ++side) {
    const auto& want_v = side == 0 ? target.ant : target.suc;
    auto want = counts(want_v);
    std::vector<Formula> have_v = side == 0 ? seq(cur).ant : seq(cur).suc;
    auto have = counts(have_v);
    for (Formula f : have_v) {
      while (have[f.id()] > want[f.id()]) {
        cur = side == 0 ? cl(cur, f) : cr(cur, f);
        --have[f.id()];
      }
    }
    for (Formula f : want_v) {
      while (have[f.id()] < want[f.id()]) {
        cur = side == 0 ? wl(cur, f) : wr(cur, f);
        ++have[f.id()];
      }
    }
  }
  return cur;
}

LineId ProofBuilder::set_display_order(LineId l, const Sequent& target) {
  if (!same_sequent(seq(l), target)) throw BuildError("display order must be a permutation");
  proof_.lines[l].seq = target;
  return l;
}

LineId ProofBuilder::rule2(Rule r, LineId l1, LineId l2, Formula d, const Sequent& prem1, const Sequent& prem2,
                           const Sequent& concl) {
  LineId a = adapt(l1, prem1);
  LineId b = adapt(l2, prem2);
  return emit(concl, {r, d, {}, 0, nullptr, {}, {a, b}});
}

LineId ProofBuilder::cut(LineId l1, LineId l2, Formula a) {
  const Sequent& s1 = seq(l1);
  const Sequent& s2 = seq(l2);
  auto g = ms_union(s1.ant, ms_minus(s2.ant, {a}));
  auto dl = ms_union(ms_minus(s1.suc, {a}), s2.suc);
  Sequent p1{g, ms_plus(dl, {a})}, p2{ms_plus(g, {a}), dl}, c{g, dl};
  return rule2(Rule::Cut, l1, l2, a, p1, p2, c);
}

LineId ProofBuilder::or_l(LineId l1, LineId l2, Formula d) {
  if (d.kind() != Kind::Or) throw BuildError("or_l on non-disjunction");
  Formula a = d.left(), b = d.right();
  const Sequent& s1 = seq(l1);
  const Sequent& s2 = seq(l2);
  auto g = ms_union(ms_minus(s1.ant, {a}), ms_minus(s2.ant, {b}));
  auto dl = ms_union(s1.suc, s2.suc);
  return rule2(Rule::OrL, l1, l2, d, {ms_plus(g, {a}), dl}, {ms_plus(g, {b}), dl}, {ms_plus(g, {d}), dl});
}

LineId ProofBuilder::or_r(LineId l, Formula d) {
  if (d.kind() != Kind::Or) throw BuildError("or_r on non-disjunction");
  Formula a = d.left(), b = d.right();
  const Sequent s = seq(l);
  auto dl = ms_minus(s.suc, {a, b});
  Sequent prem{s.ant, ms_plus(dl, {a, b})};
  LineId p = adapt(l, prem);
  return emit({s.ant, ms_plus(dl, {d})}, {Rule::OrR, d, {}, 0, nullptr, {}, {p}});
}

LineId ProofBuilder::pos_pl(LineId l1, LineId l2, Formula d) {
  if (d.kind() != Kind::PosDec) throw BuildError("pos_pl on non-positive-decision");
  Formula a = d.left(), b = d.right(), p = lit(d.lit());
  const Sequent& s1 = seq(l1);
  const Sequent& s2 = seq(l2);
  auto g = ms_union(ms_minus(s1.ant, {a}), ms_minus(s2.ant, {p, b}));
  auto dl = ms_union(s1.suc, s2.suc);
  return rule2(Rule::PosPL, l1, l2, d, {ms_plus(g, {a}), dl}, {ms_plus(g, {p, b}), dl}, {ms_plus(g, {d}), dl});
}

LineId ProofBuilder::pos_pr(LineId l1, LineId l2, Formula d) {
  if (d.kind() != Kind::PosDec) throw BuildError("pos_pr on non-positive-decision");
  Formula a = d.left(), b = d.right(), p = lit(d.lit());
  const Sequent& s1 = seq(l1);
  const Sequent& s2 = seq(l2);
  auto g = ms_union(s1.ant, s2.ant);
  auto dl = ms_union(ms_minus(s1.suc, {a, p}), ms_minus(s2.suc, {a, b}));
  return rule2(Rule::PosPR, l1, l2, d, {g, ms_plus(dl, {a, p})}, {g, ms_plus(dl, {a, b})}, {g, ms_plus(dl, {d})});
}

static Formula dec_one_branch(Formula d) {
  if (d.kind() == Kind::Dec) return d.right();
  if (d.kind() == Kind::PosDec) return mk_or(d.left(), d.right());
  throw BuildError("decision rule on non-decision");
}

LineId ProofBuilder::pl(LineId l1, LineId l2, Formula d) {
  Formula a = d.left(), b = dec_one_branch(d), p = lit(d.lit());
  const Sequent& s1 = seq(l1);
  const Sequent& s2 = seq(l2);
  auto g = ms_union(ms_minus(s1.ant, {a}), ms_minus(s2.ant, {p, b}));
  auto dl = ms_union(ms_minus(s1.suc, {p}), s2.suc);
  return rule2(Rule::PL, l1, l2, d, {ms_plus(g, {a}), ms_plus(dl, {p})}, {ms_plus(g, {p, b}), dl},
               {ms_plus(g, {d}), dl});
}

LineId ProofBuilder::pr(LineId l1, LineId l2, Formula d) {
  Formula a = d.left(), b = dec_one_branch(d), p = lit(d.lit());
  const Sequent& s1 = seq(l1);
  const Sequent& s2 = seq(l2);
  auto g = ms_union(s1.ant, ms_minus(s2.ant, {p}));
  auto dl = ms_union(ms_minus(s1.suc, {a, p}), ms_minus(s2.suc, {b}));
  return rule2(Rule::PR, l1, l2, d, {g, ms_plus(dl, {a, p})}, {ms_plus(g, {p}), ms_plus(dl, {b})},
               {g, ms_plus(dl, {d})});
}

Equiv ProofBuilder::compose(const Equiv& ab, const Equiv& bc, Formula b) {
  return {cut(ab.fwd, bc.fwd, b), cut(bc.bwd, ab.bwd, b)};
}

Proof ProofBuilder::take() {
  index_.clear();
  Proof out = std::move(proof_);
  proof_ = Proof{};
  proof_.dialect = out.dialect;
  return out;
}

}  // namespace lndt
