#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "lndt/axioms.hpp"
#include "lndt/parse.hpp"
#include "lndt/semantics.hpp"
#include "support.hpp"

using namespace lndt;
using namespace lndt::testing;

TEST(Formula, HashConsingGivesIdentity) {
  Formula a = mk_pdec(pos(1), {2, false}, mk_or(pos(3), one()));
  Formula b = mk_pdec(pos(1), {2, false}, mk_or(pos(3), one()));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, mk_dec(pos(1), {2, false}, mk_or(pos(3), one())));
  EXPECT_EQ(thr({1, 2}, 1), thr({1, 2}, 1));
  EXPECT_NE(thr({1, 2}, 1), thr({2, 1}, 1));
}

TEST(Formula, ConcurrentInterningAgrees) {
  std::vector<Formula> got(4);
  std::vector<std::thread> ts;
  for (int t = 0; t < 4; ++t)
    ts.emplace_back([&, t] {
      Formula f = zero();
      for (Var v = 0; v < 200; ++v) f = mk_pdec(f, {v % 7, false}, mk_or(pos(v), f));
      got[t] = f;
    });
  for (auto& t : ts) t.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(got[0], got[t]);
}

TEST(Formula, FlagsAndTokens) {
  Formula f = mk_dec(neg(1), {2, true}, thr({1}, 1));
  EXPECT_TRUE(f.has_neg());
  EXPECT_TRUE(f.has_dec());
  EXPECT_TRUE(f.has_ext());
  EXPECT_FALSE(f.has_posdec());
  EXPECT_FALSE(f.is_atomic());
  EXPECT_TRUE(pos(3).is_atomic());
  EXPECT_EQ(pos(1).tokens(), 1u);
  EXPECT_GT(f.tokens(), mk_or(pos(1), pos(2)).tokens());
}

TEST(Formula, OrFold) {
  EXPECT_EQ(or_fold({}), zero());
  EXPECT_EQ(or_fold({pos(1)}), pos(1));
  EXPECT_EQ(or_fold({pos(1), pos(2), pos(3)}), mk_or(mk_or(pos(1), pos(2)), pos(3)));
}

TEST(Parse, RoundTrip) {
  for (const char* s : {"0", "1", "p3", "~p4", "or(p1,~p2)", "dec(p1,~p2,or(0,1))", "pdec(thr[p1 p2; 1],p3,e7)",
                        "ex[p1 p2 p3; 2]", "rthr[p1 p2; 1; p5; or(p6,p7)]", "thr[p1; -1]"}) {
    Formula f = parse_formula(s);
    EXPECT_EQ(parse_formula(to_string(f)), f) << s;
  }
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_formula("or(p1"), ParseError);
  EXPECT_THROW(parse_formula("p"), ParseError);
  EXPECT_THROW(parse_formula("dec(p1,or(p1,p2),p3)"), ParseError);
  EXPECT_THROW(parse_formula("p1 p2"), ParseError);
}

TEST(Parse, DialectPolicy) {
  EXPECT_THROW(parse_formula("~p1", Dialect::plus()), ParseError);
  EXPECT_THROW(parse_formula("dec(p1,p2,p3)", Dialect::plus_minus()), ParseError);
  EXPECT_THROW(parse_formula("e1", Dialect::lndt()), ParseError);
  EXPECT_THROW(parse_formula("dec(~p1,p2,e3)", Dialect::elndt()), ParseError);
  EXPECT_NO_THROW(parse_formula("dec(p1,p2,e3)", Dialect::elndt()));
  EXPECT_NO_THROW(parse_formula("pdec(~p1,p2,p3)", Dialect::plus_minus()));
}

TEST(Parse, SplitTopLevel) {
  auto parts = split_top_level("or(p1,p2), thr[p1 p2; 1], p3", ',');
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(trim(parts[1]), "thr[p1 p2; 1]");
}

TEST(Dialect, NamesRoundTrip) {
  for (const Dialect& d : {Dialect::lndt(), Dialect::elndt(), Dialect::plus(), Dialect::plus_minus(),
                           Dialect::tk(2, {0, 1, 2})})
    EXPECT_EQ(Dialect::parse(d.name()), d);
}

TEST(Axioms, ThrInstantiationIsWellFounded) {
  ExtAxiomSet ax = instantiate_thr({1, 2, 3}, 2);
  EXPECT_TRUE(check_axiom_set(ax).ok);
  EXPECT_TRUE(ax.defines(thr_var({1, 2, 3}, 2)));
  EXPECT_TRUE(ax.defines(thr_var({}, 0)));
  for (const AxiomEntry& e : ax.entries())
    for (const ExtVar* d : ext_vars_in(e.body)) EXPECT_LT(ax.position(d), ax.position(e.var));
}

TEST(Axioms, EmptyWordThresholds) {
  EXPECT_EQ(family_body(thr_var({}, 0)), one());
  for (int k : {-3, -1, 1, 2}) EXPECT_EQ(family_body(thr_var({}, k)), zero()) << k;
}

TEST(Axioms, RejectsCycleAndRedefinition) {
  ExtAxiomSet ax;
  ax.append_unchecked(plain_var(1), ext(plain_var(2)));
  ax.append_unchecked(plain_var(2), ext(plain_var(1)));
  EXPECT_FALSE(check_axiom_set(ax).ok);

  ExtAxiomSet bx;
  bx.define(plain_var(1), pos(1));
  EXPECT_NO_THROW(bx.define(plain_var(1), pos(1)));
  EXPECT_ANY_THROW(bx.define(plain_var(1), pos(2)));
}

TEST(Axioms, StrictIndices) {
  ExtAxiomSet ax;
  ax.define(plain_var(5), pos(1));
  ax.define(plain_var(3), ext(plain_var(5)));
  EXPECT_TRUE(check_axiom_set(ax).ok);
  EXPECT_FALSE(check_axiom_set(ax, true).ok);
}

TEST(Axioms, FileRoundTrip) {
  ExtAxiomSet ax = instantiate_refthr({1, 2}, 1, pos(5), pos(6));
  ax.ensure(thr_var({1, 2}, 1));
  ax.define(plain_var(0), mk_or(thr({1, 2}, 1), pos(9)));
  ExtAxiomSet back = parse_axiom_file(axiom_file_string(ax));
  ASSERT_EQ(back.size(), ax.size());
  for (std::size_t i = 0; i < ax.size(); ++i) {
    EXPECT_EQ(back.entries()[i].var, ax.entries()[i].var);
    EXPECT_EQ(back.entries()[i].body, ax.entries()[i].body);
  }
}

TEST(Semantics, DecisionsAndDisjunction) {
  Formula d = mk_dec(pos(1), {3, false}, pos(2));
  Formula pd = mk_pdec(pos(1), {3, false}, pos(2));
  for (int m = 0; m < 8; ++m) {
    Assignment a{{1, m & 1}, {2, (m >> 1) & 1}, {3, (m >> 2) & 1}};
    bool p1 = m & 1, p2 = (m >> 1) & 1, p3 = (m >> 2) & 1;
    EXPECT_EQ(eval(d, {}, a), p3 ? p2 : p1);
    EXPECT_EQ(eval(pd, {}, a), p1 || (p3 && p2));
    EXPECT_EQ(eval(mk_or(pos(1), neg(2)), {}, a), p1 || !p2);
  }
}

TEST(Semantics, CountingAgainstPopcount) {
  for (int n = 0; n <= 6; ++n) {
    Word w = iota(n);
    ExtAxiomSet ax;
    for (int k = 0; k <= n + 2; ++k) {
      ax.ensure(thr_var(w, k));
      ax.ensure(exact_var(w, k));
    }
    TruthTable base(w);
    for (std::uint64_t i = 0; i < base.size(); ++i) {
      Assignment a = base.assignment(i);
      int c = popcount_of(a, w);
      for (int k = 0; k <= n + 2; ++k) {
        EXPECT_EQ(eval(thr(w, k), ax, a), c >= k) << n << " " << k;
        EXPECT_EQ(eval(exact(w, k), ax, a), c == k) << n << " " << k;
      }
    }
  }
}

TEST(Semantics, NegativeThresholdIsFalse) {
  ExtAxiomSet ax = instantiate_thr({1, 2}, -1);
  EXPECT_FALSE(eval(thr({1, 2}, -1), ax, {{1, true}, {2, true}}));
}

TEST(Semantics, RefthrIsGuardedDisjunction) {
  Word w{1, 2, 3};
  Formula a = pos(5), b = mk_or(pos(6), pos(1));
  ExtAxiomSet ax = instantiate_refthr(w, 2, a, b);
  TruthTable t(Word{1, 2, 3, 5, 6});
  for (std::uint64_t i = 0; i < t.size(); ++i) {
    Assignment s = t.assignment(i);
    bool want = s(5) || (popcount_of(s, w) >= 2 && (s(6) || s(1)));
    EXPECT_EQ(eval(ext(refthr_var(w, 2, a, b)), ax, s), want);
  }
}

TEST(Semantics, TableEvaluatorMatchesPointwise) {
  std::mt19937_64 rng(7);
  Word w{0, 1, 2, 3};
  ExtAxiomSet ax = instantiate_thr(w, 2);
  Formula f = mk_dec(thr(w, 2), {1, true}, mk_pdec(pos(0), {3, false}, neg(2)));
  TableEvaluator te(ax, w);
  TruthTable t = te.table(f);
  for (std::uint64_t i = 0; i < t.size(); ++i) EXPECT_EQ(t.get(i), eval(f, ax, t.assignment(i)));
}

TEST(Semantics, SequentValidity) {
  EXPECT_FALSE(sequent_valid({{pos(1)}, {mk_or(pos(1), pos(2))}}, {}).has_value());
  auto cm = sequent_valid({{mk_or(pos(1), pos(2))}, {pos(1)}}, {});
  ASSERT_TRUE(cm.has_value());
  EXPECT_TRUE((*cm)(2));
  EXPECT_FALSE((*cm)(1));
  EXPECT_THROW(sequent_valid({{}, {or_fold([] {
                                std::vector<Formula> v;
                                for (Var i = 0; i < 30; ++i) v.push_back(pos(i));
                                return v;
                              }())}},
                             {}, 24),
               OracleCapExceeded);
}

TEST(Semantics, MonotoneClosure) {
  // p1 xor p2 closes to p1 or p2
  TruthTable t(Word{1, 2}, {0b0110});
  EXPECT_FALSE(is_monotone(t));
  TruthTable c = monotone_closure(t);
  EXPECT_TRUE(is_monotone(c));
  EXPECT_EQ(c.to_bitstring(), "0111");
}

TEST(Semantics, PositiveFormulasAreMonotone) {
  std::mt19937_64 rng(3);
  auto by = positive_formulas_by_depth({1, 2, 3}, 1);
  for (Formula f : by[1]) {
    EXPECT_TRUE(is_positive(f));
    EXPECT_TRUE(is_monotone(truth_table(f, {}, {1, 2, 3})));
  }
}

TEST(Semantics, Substitution) {
  Formula f = mk_pdec(pos(1), {2, false}, pos(3));
  Formula g = substitute(f, {{1, mk_or(pos(4), pos(5))}});
  EXPECT_EQ(g, mk_pdec(mk_or(pos(4), pos(5)), {2, false}, pos(3)));
  EXPECT_EQ(substitute(mk_dec(pos(1), {2, false}, pos(3)), {{2, neg(4)}}), mk_dec(pos(1), {4, true}, pos(3)));
  EXPECT_THROW(substitute(mk_dec(pos(1), {2, false}, pos(3)), {{2, mk_or(pos(4), pos(5))}}), SubstitutionError);
}

TEST(Semantics, DnfEncodingSmall) {
  // p or ~p is valid, p alone is not
  EXPECT_TRUE(dnf_valid({{{0, false}}, {{0, true}}}));
  EXPECT_FALSE(dnf_valid({{{0, false}}}));
  PositiveEncoding e = dnf_to_positive_sequent({{{0, false}}, {{0, true}}});
  EXPECT_TRUE(ext_free(e.sequent));
  for (Formula f : e.sequent.ant) EXPECT_TRUE(is_positive(f));
  for (Formula f : e.sequent.suc) EXPECT_TRUE(is_positive(f));
  EXPECT_FALSE(sequent_valid(e.sequent, {}).has_value());
}

TEST(Semantics, Support) {
  ExtAxiomSet ax = instantiate_thr({4, 2}, 1);
  EXPECT_EQ(support(mk_or(thr({4, 2}, 1), pos(9)), ax), (Word{2, 4, 9}));
}
