#include <gtest/gtest.h>

#include "grid.hpp"
#include "lndt/lemmas.hpp"
#include "support.hpp"

using namespace lndt;
using namespace lndt::testing;

TEST(Generators, GridChecksAndIsSound) {
  int instances = 0;
  for_each_generator(4, [&](const std::string& name, auto make, int count) {
    std::vector<Proof> ps;
    ASSERT_NO_THROW(ps = make()) << name;
    ASSERT_EQ(static_cast<int>(ps.size()), count) << name;
    for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_TRUE(checks_and_sound(ps[i])) << name << " #" << i + 1;
    ++instances;
  });
  EXPECT_GT(instances, 300);
}

TEST(Generators, Conclusions) {
  Word pv{1, 2}, qv{3};
  Proof m = gen_merge(pv, qv, 1, 1);
  EXPECT_TRUE(same_sequent(m.conclusion(), {{thr(pv, 1), thr(qv, 1)}, {thr({1, 2, 3}, 2)}}));
  Proof s = gen_split(pv, qv, 1, 1);
  EXPECT_TRUE(same_sequent(s.conclusion(), {{thr({1, 2, 3}, 2)}, {thr(pv, 2), thr(qv, 1)}}));
  auto ca = gen_case_analysis({1}, 2, {3}, 2);
  EXPECT_TRUE(same_sequent(ca[0].conclusion(), {{thr({1, 2, 3}, 2)}, {thr({2, 1, 3}, 2)}}));
  EXPECT_TRUE(same_sequent(ca[1].conclusion(), {{thr({2, 1, 3}, 2)}, {thr({1, 2, 3}, 2)}}));
  auto inc = gen_thresh_increment({1, 2, 3}, 1, 1);
  EXPECT_TRUE(same_sequent(inc[0].conclusion(), {{pos(2), thr({1, 3}, 1)}, {thr({1, 2, 3}, 2)}}));
  EXPECT_TRUE(same_sequent(inc[1].conclusion(), {{thr({1, 2, 3}, 1)}, {pos(2), thr({1, 3}, 1)}}));
  auto mono = gen_thr_monotone({1, 2}, 1);
  EXPECT_TRUE(same_sequent(mono[0].conclusion(), {{}, {thr({1, 2}, 0)}}));
  EXPECT_TRUE(same_sequent(mono[2].conclusion(), {{thr({1, 2}, 3)}, {}}));
}

TEST(Generators, ExtendedConclusionsAreIntermediate) {
  EXPECT_TRUE(gen_merge({1}, {2}, 1, 1).intermediate);
  EXPECT_FALSE(gen_truth(pos(1), {2, false}, pos(3))[0].intermediate);
}

TEST(Lemmas, MemoisedInstancesAreShared) {
  ProofBuilder b;
  Lemmas lm(b);
  LineId x = lm.merge({1, 2}, {3, 4}, 1, 1);
  std::size_t size = b.size();
  EXPECT_EQ(lm.merge({1, 2}, {3, 4}, 1, 1), x);
  EXPECT_EQ(b.size(), size);
}

TEST(Lemmas, ThrDownChainsSteps) {
  ProofBuilder b;
  Lemmas lm(b);
  LineId l = lm.thr_down({1, 2, 3}, 3, 0);
  EXPECT_TRUE(same_sequent(b.seq(l), {{thr({1, 2, 3}, 3)}, {thr({1, 2, 3}, 0)}}));
  Proof p = prune(b.proof(), l);
  p.intermediate = true;
  EXPECT_TRUE(checks_and_sound(p));
}

TEST(Lemmas, RejectsBadParameters) {
  ProofBuilder b;
  Lemmas lm(b);
  EXPECT_THROW(lm.unit_in({1, 2}, 5), LemmaError);
  EXPECT_THROW(lm.symmetry({1, 2}, {1, 3}, 1), LemmaError);
}

TEST(Lemmas, FaithfulIdentityGrowsWithWord) {
  std::uint64_t last = 0;
  for (int n = 1; n <= 6; ++n) {
    Word w = iota(n);
    std::uint64_t size = proof_size(gen_identity(thr(w, (n + 1) / 2), instantiate_thr(w, (n + 1) / 2)));
    EXPECT_GT(size, last) << n;
    last = size;
  }
}

TEST(Lemmas, SubstituteProof) {
  Proof t = gen_truth(pos(1), {2, false}, pos(3))[2];
  ProofBuilder b;
  Lemmas lm(b);
  LineId l = lm.substitute_proof(t, {{1, mk_or(pos(5), pos(6))}, {3, pos(7)}});
  EXPECT_TRUE(same_sequent(b.seq(l),
                           {{mk_or(pos(5), pos(6))}, {mk_pdec(mk_or(pos(5), pos(6)), {2, false}, pos(7))}}));
  Proof p = prune(b.proof(), l);
  EXPECT_TRUE(checks_and_sound(p));
}
