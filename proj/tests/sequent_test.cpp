#include <gtest/gtest.h>

#include <random>

#include "lndt/builder.hpp"
#include "lndt/checker.hpp"
#include "lndt/parse.hpp"
#include "lndt/proof_text.hpp"
#include "lndt/search.hpp"
#include "lndt/transform.hpp"
#include "support.hpp"

using namespace lndt;
using namespace lndt::testing;

namespace {

const char* kFixtures[] = {"truth1.lndt",    "truth2.lndt",    "truth3.lndt",    "truth4.lndt",
                           "negtrans1.lndt", "negtrans2.lndt", "negtrans3.lndt", "negtrans4.lndt"};

}  // namespace

class FixtureTest : public ::testing::TestWithParam<const char*> {};

TEST_P(FixtureTest, ChecksAndIsSound) {
  Proof p = parse_proof(fixture(GetParam()));
  EXPECT_TRUE(checks_and_sound(p));
}

TEST_P(FixtureTest, EveryPremiseMutationFails) {
  Proof p = parse_proof(fixture(GetParam()));
  auto mutants = premise_mutants(p);
  ASSERT_FALSE(mutants.empty());
  for (const Proof& q : mutants) EXPECT_FALSE(check_proof(q).ok);
}

TEST_P(FixtureTest, TextRoundTrip) {
  std::string text = fixture(GetParam());
  EXPECT_EQ(write_proof(parse_proof(text)), text);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FixtureTest, ::testing::ValuesIn(kFixtures),
                         [](const auto& info) { return std::string(info.param).substr(0, std::string(info.param).find('.')); });

TEST(Checker, NegativeAxiomsNeedPlusMinus) {
  std::string text = fixture("negtrans2.lndt");
  text.replace(text.find("eLNDT+-"), 7, "eLNDT+");
  EXPECT_ANY_THROW({
    Proof p = parse_proof(text);
    if (!check_proof(p)) throw std::runtime_error("rejected");
  });
}

TEST(Checker, WrongConclusionIsReported) {
  std::string text = fixture("truth4.lndt");
  text.replace(text.rfind("posPR"), 5, "posPL");
  Proof p = parse_proof(text);
  CheckResult r = check_proof(p);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.line, p.lines.size() - 1);
  EXPECT_NE(r.message().find("L7"), std::string::npos);
}

TEST(Checker, ForwardPremiseIsRejected) {
  Proof p = parse_proof("% lndt proof v1\ndialect eLNDT+\nL1: p0, p0 |- p0 ; wL[p0](L2)\nL2: p0 |- p0 ; id[p0]\n");
  CheckResult r = check_proof(p);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.line, 0u);
}

TEST(Checker, ExtensionAxiomsNeedDefinitions) {
  ProofBuilder b(Dialect::plus());
  b.axioms().ensure(thr_var({1, 2}, 1));
  b.ext_lr(thr_var({1, 2}, 1));
  Proof p = b.take();
  p.intermediate = true;
  EXPECT_TRUE(check_proof(p).ok);
  Proof q = p;
  q.axioms = ExtAxiomSet{};
  EXPECT_FALSE(check_proof(q).ok);
}

TEST(Checker, SoundnessCatchesBogusLine) {
  ProofBuilder b;
  b.add({{pos(1)}, {pos(2)}}, Justification{Rule::Hyp, {}, {}, 0, nullptr, "h", {}});
  Proof p = b.take();
  EXPECT_FALSE(check_soundness(p).ok);
}

TEST(Builder, DeduplicatesBySequent) {
  ProofBuilder b;
  LineId a = b.id({1, false});
  LineId c = b.id({1, false});
  EXPECT_EQ(a, c);
  LineId w1 = b.wl(a, pos(2));
  LineId w2 = b.adapt(a, {{pos(2), pos(1)}, {pos(1)}});
  EXPECT_EQ(w1, w2);
  b.set_dedup(false);
  EXPECT_NE(b.id({1, false}), a);
}

TEST(Builder, CutMergesContexts) {
  ProofBuilder b;
  LineId l1 = b.wl(b.id({1, false}), pos(3));  // p3, p1 |- p1
  LineId l2 = b.wr(b.id({1, false}), pos(4));  // p1 |- p1, p4
  LineId c = b.cut(l1, l2, pos(1));
  EXPECT_TRUE(same_sequent(b.seq(c), {{pos(3), pos(1)}, {pos(1), pos(4)}}));
  Proof p = b.take();
  EXPECT_TRUE(checks_and_sound(p));
}

TEST(Builder, PositiveDecisionRules) {
  // posPR: G |- D, A, p and G |- D, A, B give G |- D, pdec(A,p,B)
  ProofBuilder b;
  Formula d = mk_pdec(pos(1), {0, false}, pos(2));
  LineId r = b.pos_pr(b.wr(b.id({1, false}), pos(0)), b.wr(b.id({2, false}), pos(1)), d);
  EXPECT_TRUE(same_sequent(b.seq(r), {{pos(1), pos(2)}, {d}})) << to_string(b.seq(r));
  Proof p = b.take();
  EXPECT_TRUE(checks_and_sound(p));
}

TEST(Builder, RejectsImpossibleAdapt) {
  ProofBuilder b;
  LineId a = b.id({1, false});
  EXPECT_FALSE(b.can_adapt(a, {{}, {pos(1)}}));
  EXPECT_THROW(b.adapt(a, {{}, {pos(1)}}), BuildError);
}

TEST(Proof, PruneKeepsDependencies) {
  ProofBuilder b;
  b.id({5, false});
  LineId a = b.id({1, false});
  b.wl(a, pos(2));
  Proof p = b.take();
  Proof q = prune(p);
  EXPECT_EQ(q.lines.size(), 2u);
  EXPECT_TRUE(check_proof(q).ok);
  EXPECT_EQ(rule_histogram(q).at("id"), 1u);
}

TEST(Proof, SequentParsing) {
  Sequent s = parse_sequent("p1, or(p2,p3) |- pdec(0,p1,p2)");
  ASSERT_EQ(s.ant.size(), 2u);
  ASSERT_EQ(s.suc.size(), 1u);
  EXPECT_EQ(s.suc[0], mk_pdec(zero(), {1, false}, pos(2)));
  EXPECT_TRUE(parse_sequent("|-").ant.empty());
}

TEST(Search, SimpleValid) {
  SearchResult r = prove_by_search(parse_sequent("p0 |- or(p0,p1)"), {});
  ASSERT_TRUE(r.proof);
  EXPECT_TRUE(checks_and_sound(*r.proof));
  EXPECT_TRUE(same_sequent(r.proof->conclusion(), parse_sequent("p0 |- or(p0,p1)")));
}

TEST(Search, InvalidGivesCountermodel) {
  Sequent s = parse_sequent("or(p0,p1) |- p0");
  SearchResult r = prove_by_search(s, {});
  EXPECT_FALSE(r.proof);
  ASSERT_TRUE(r.countermodel);
  EXPECT_FALSE(eval(s.suc[0], {}, *r.countermodel));
  EXPECT_TRUE(eval(s.ant[0], {}, *r.countermodel));
}

TEST(Search, UnwindsExtensionVariables) {
  ExtAxiomSet ax = instantiate_thr({1, 2, 3}, 2);
  ax.ensure(thr_var({1, 2, 3}, 1));
  Sequent s{{thr({1, 2, 3}, 2)}, {thr({1, 2, 3}, 1)}};
  SearchResult r = prove_by_search(s, ax);
  ASSERT_TRUE(r.proof);
  EXPECT_TRUE(checks_and_sound(*r.proof));
}

TEST(Search, GeneralDecisions) {
  SearchOptions o;
  o.general = true;
  Sequent s = parse_sequent("dec(p1,p0,p2) |- or(p1,p2)");
  SearchResult r = prove_by_search(s, {}, o);
  ASSERT_TRUE(r.proof);
  EXPECT_EQ(r.proof->dialect, Dialect::elndt());
  EXPECT_THROW(prove_by_search(parse_sequent("~p0 |- ~p0"), {}, o), SearchError);
  EXPECT_TRUE(checks_and_sound(*r.proof));
}

TEST(Search, AgreesWithOracleOnSmallSequents) {
  auto by = positive_formulas_by_depth({0, 1}, 1);
  std::vector<Formula> fs = by[0];
  fs.insert(fs.end(), by[1].begin(), by[1].end());
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
  for (int it = 0; it < 3000; ++it) {
    Sequent s;
    int nl = it % 3, nr = (it / 3) % 3;
    for (int i = 0; i < nl; ++i) s.ant.push_back(fs[pick(rng)]);
    for (int i = 0; i < nr; ++i) s.suc.push_back(fs[pick(rng)]);
    bool valid = !sequent_valid(s, {}).has_value();
    SearchResult r = prove_by_search(s, {});
    ASSERT_EQ(r.proof.has_value(), valid) << to_string(s);
    if (r.proof) ASSERT_TRUE(check_proof(*r.proof).ok) << to_string(s);
  }
}

TEST(Search, TrimmingOffStillProves) {
  SearchOptions o;
  o.trim = false;
  SearchResult r = prove_by_search(parse_sequent("p0, p1, p2 |- pdec(p1,p0,p2), p3"), {}, o);
  ASSERT_TRUE(r.proof);
  EXPECT_TRUE(check_proof(*r.proof).ok);
}

TEST(Replay, IdentityReplayReproducesProof) {
  Proof p = parse_proof(fixture("truth3.lndt"));
  ProofBuilder b(p.dialect);
  auto ids = replay(p, b, {});
  EXPECT_TRUE(same_sequent(b.seq(ids.back()), p.conclusion()));
  Proof q = b.take();
  EXPECT_TRUE(check_proof(q).ok);
}
