#include <gtest/gtest.h>

#include "lndt/php.hpp"
#include "lndt/proof_text.hpp"
#include "support.hpp"

using namespace lndt;
using namespace lndt::testing;

TEST(Php, VariablesAreDistinct) {
  for (int n = 1; n <= 4; ++n) {
    Word all = php_rows(n);
    ASSERT_EQ(all.size(), static_cast<std::size_t>(n * (n + 1)));
    Word sorted = all;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
    Word cols = php_columns(n);
    std::sort(cols.begin(), cols.end());
    EXPECT_EQ(cols, sorted);
    EXPECT_EQ(php_row(n, 1).size(), static_cast<std::size_t>(n));
    EXPECT_EQ(php_column(n, 1).size(), static_cast<std::size_t>(n + 1));
  }
}

TEST(Php, SequentIsValidForSmallN) {
  for (int n = 1; n <= 2; ++n) {
    Sequent s = php_sequent(n);
    EXPECT_EQ(s.ant.size(), static_cast<std::size_t>(n + 1));
    EXPECT_FALSE(sequent_valid(s, {}).has_value()) << n;
  }
}

TEST(Php, DroppingAPigeonIsInvalid) {
  Sequent s = php_sequent(2);
  s.ant.pop_back();
  EXPECT_TRUE(sequent_valid(s, {}).has_value());
}

TEST(Php, EndToEndSmall) {
  for (int n = 1; n <= 3; ++n) {
    Proof p = gen_php(n);
    EXPECT_TRUE(check_proof(p).ok) << n;
    EXPECT_EQ(to_string(p.conclusion()), to_string(php_sequent(n)));
    EXPECT_FALSE(p.intermediate);
  }
  EXPECT_TRUE(checks_and_sound(gen_php(1)));
}

TEST(Php, PartsChainUp) {
  int n = 2;
  Proof l = gen_php_left(n), t = gen_php_transpose(n), r = gen_php_right(n);
  for (const Proof* p : {&l, &t, &r}) EXPECT_TRUE(check_proof(*p).ok);
  EXPECT_TRUE(same_multiset(l.conclusion().suc, t.conclusion().ant));
  EXPECT_TRUE(same_multiset(t.conclusion().suc, r.conclusion().ant));
  EXPECT_TRUE(same_multiset(r.conclusion().suc, php_sequent(n).suc));
}

TEST(Php, EmittedFileRoundTrips) {
  Proof p = gen_php(2);
  Proof back = parse_proof(write_proof(p));
  EXPECT_TRUE(check_proof(back).ok);
  EXPECT_EQ(proof_size(back), proof_size(p));
}
