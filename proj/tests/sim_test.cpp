#include <gtest/gtest.h>

#include "lndt/corpus.hpp"
#include "lndt/php.hpp"
#include "lndt/builder.hpp"
#include "lndt/search.hpp"
#include "lndt/sim.hpp"
#include "support.hpp"

using namespace lndt;
using namespace lndt::testing;

namespace {

bool pure_positive(const Proof& p) {
  for (const ProofLine& l : p.lines) {
    if (l.just.rule == Rule::NegL || l.just.rule == Rule::NegR || l.just.rule == Rule::ThrL ||
        l.just.rule == Rule::ThrR || l.just.rule == Rule::PL || l.just.rule == Rule::PR)
      return false;
    for (const auto* side : {&l.seq.ant, &l.seq.suc})
      for (Formula f : *side)
        if (f.has_neg() || f.has_dec()) return false;
  }
  for (const AxiomEntry& e : p.axioms.entries())
    if (e.body.has_neg() || e.body.has_dec()) return false;
  return true;
}

Proof general_proof(const std::string& seq) {
  SearchOptions o;
  o.general = true;
  SearchResult r = prove_by_search(parse_sequent(seq), {}, o);
  if (!r.proof) throw std::runtime_error("not provable: " + seq);
  return *r.proof;
}

}  // namespace

TEST(Negtrans, Shapes) {
  Formula d = mk_dec(pos(1), {0, false}, pos(2));
  EXPECT_EQ(negtrans(d), mk_or(mk_pdec(zero(), {0, true}, pos(1)), mk_pdec(zero(), {0, false}, pos(2))));
  EXPECT_EQ(negtrans(mk_or(pos(1), one())), mk_or(pos(1), one()));
  Formula pd = mk_pdec(pos(1), {0, false}, pos(2));
  EXPECT_EQ(negtrans(pd), negtrans(mk_dec(pos(1), {0, false}, mk_or(pos(1), pos(2)))));
}

TEST(Negtrans, PreservesSemantics) {
  auto by = positive_formulas_by_depth({0, 1, 2}, 1);
  for (Formula f : by[1]) {
    Formula g = mk_dec(f, {1, false}, mk_or(f, pos(2)));
    EXPECT_EQ(truth_table(negtrans(g), {}, {0, 1, 2}), truth_table(g, {}, {0, 1, 2}));
  }
}

TEST(Simulate, TrivialSequent) {
  Proof p = general_proof("p0 |- or(p0,p1)");
  SimStats st;
  Proof s = simulate(p, &st);
  EXPECT_TRUE(checks_and_sound(s));
  EXPECT_EQ(to_string(s.conclusion()), to_string(p.conclusion()));
  EXPECT_TRUE(pure_positive(s));
  EXPECT_EQ(st.tk.size(), st.vars + 1);
}

TEST(Simulate, StagesArePipelined) {
  std::mt19937_64 rng(4);
  Proof src = depositivise(general_proof("p0, pdec(p1,p0,p2) |- or(p1,p2)"), rng, 3);
  ASSERT_TRUE(check_proof(src).ok);
  ASSERT_EQ(src.dialect, Dialect::elndt());

  Proof minus = translate_to_minus(src);
  EXPECT_EQ(minus.dialect, Dialect::plus_minus());
  EXPECT_TRUE(check_proof(minus).ok);
  Proof stripped = strip_negtrans(minus, src.conclusion());
  EXPECT_TRUE(checks_and_sound(stripped));
  EXPECT_TRUE(same_sequent(stripped.conclusion(), src.conclusion()));

  SimContext ctx = SimContext::of(stripped);
  for (int k = 0; k <= static_cast<int>(ctx.vars.size()); ++k) {
    Proof tk = translate_to_Tk(stripped, k, ctx);
    EXPECT_TRUE(check_proof(tk).ok) << k;
    Proof br = eliminate_Tk(tk, k, ctx);
    EXPECT_TRUE(checks_and_sound(br)) << k;
    EXPECT_TRUE(pure_positive(br)) << k;
  }
}

TEST(Simulate, PhpOneWithDetours) {
  std::mt19937_64 rng(8);
  SearchOptions o;
  o.general = true;
  SearchResult r = prove_by_search(php_sequent(1), {}, o);
  ASSERT_TRUE(r.proof);
  Proof src = depositivise(*r.proof, rng, 3);
  ASSERT_TRUE(check_proof(src).ok);
  Proof s = simulate(src);
  EXPECT_TRUE(checks_and_sound(s));
  EXPECT_EQ(to_string(s.conclusion()), to_string(php_sequent(1)));
  EXPECT_TRUE(pure_positive(s));
}

TEST(Simulate, RejectsNonPositiveConclusion) {
  ProofBuilder b(Dialect::elndt());
  LineId l = b.wr(b.ax0(), mk_dec(pos(1), {0, false}, pos(2)));
  Proof p = b.take();
  ASSERT_TRUE(check_proof(p).ok) << to_string(b.seq(l));
  EXPECT_THROW(simulate(p), SimError);
}

TEST(Simulate, ThreadedMatchesSerial) {
  std::mt19937_64 rng(2);
  Proof src = depositivise(general_proof("pdec(p0,p1,p2) |- or(p0,p2)"), rng, 2);
  Proof a = simulate(src, nullptr, 1), b = simulate(src, nullptr, 4);
  EXPECT_EQ(proof_size(a), proof_size(b));
  EXPECT_TRUE(check_proof(b).ok);
}

TEST(Corpus, EntriesAreGenuineAndBounded) {
  CorpusOptions opt;
  opt.count = 6;
  opt.seed = 3;
  opt.max_vars = 4;
  for (const CorpusEntry& e : make_corpus(opt)) {
    EXPECT_TRUE(check_proof(e.proof).ok);
    EXPECT_LE(proof_size(e.proof), opt.max_tokens);
    EXPECT_TRUE(same_sequent(e.proof.conclusion(), e.sequent));
    bool general = false;
    for (const ProofLine& l : e.proof.lines) general |= l.just.rule == Rule::PL || l.just.rule == Rule::PR;
    EXPECT_TRUE(general);
    Proof s = simulate(e.proof);
    EXPECT_TRUE(check_proof(s).ok);
    EXPECT_TRUE(pure_positive(s));
    EXPECT_TRUE(check_axiom_set(s.axioms).ok);
  }
}

TEST(Corpus, Deterministic) {
  CorpusOptions opt;
  opt.count = 3;
  opt.seed = 11;
  auto a = make_corpus(opt), b = make_corpus(opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(proof_size(a[i].proof), proof_size(b[i].proof));
}
