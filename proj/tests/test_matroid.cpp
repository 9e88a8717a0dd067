#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "posetcode/matroid.hpp"
#include "posetcode/random.hpp"

using namespace posetcode;

namespace {

LinearCode code42() {
  return LinearCode::from_generator(Matrix::from_rows(Field::of_order(2), {{1, 1, 0, 0}, {0, 0, 1, 1}}));
}

}  // namespace

TEST(Matroid, RhoExamples) {
  const RankProfile p(code42());
  EXPECT_EQ(p.rho(0), 0);
  EXPECT_EQ(p.rho(0b0011), 1);
  EXPECT_EQ(p.rho(0b1111), 2);
}

TEST(Matroid, RhoPerpExamples) {
  const RankProfile p(code42());
  EXPECT_EQ(p.rho_perp(0), 0);
  EXPECT_EQ(p.rho_perp(0b1111), 2);
  EXPECT_EQ(p.rho_perp(0b0101), 2);
}

TEST(Matroid, RankAxiomsHold) {
  const RankProfile p(code42());
  const auto r = check_rank_axioms(p);
  EXPECT_TRUE(r.ok) << r.failure;
  EXPECT_GT(r.checked, 0u);
}

TEST(Matroid, CorruptedMemoIsCaught) {
  RankProfile p(code42());
  p.inject_for_testing(0b0001, 0, std::nullopt);  // rho({1}) should be 1
  p.inject_for_testing(0b0011, 2, std::nullopt);  // breaks submodularity with {1} and {2}
  const auto r = check_rank_axioms(p);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.failure.find("rho"), std::string::npos);
  EXPECT_NE(r.witness_a | r.witness_b, 0u);

  RankProfile q(code42());
  q.inject_for_testing(0b0001, 2, std::nullopt);
  const auto r1 = check_rank_axioms(q);
  EXPECT_FALSE(r1.ok);
  EXPECT_NE(r1.failure.find("R1"), std::string::npos);
}

TEST(Matroid, CorankIdentity) {
  const RankProfile p(code42());
  EXPECT_TRUE(check_corank_identity(p).ok);
  // A = {1,2}: rho_perp = 1 and |A| - k + rho({3,4}) = 2 - 2 + 1.
  EXPECT_EQ(p.rho_perp(0b0011), 1);
  EXPECT_EQ(2 - 2 + p.rho(0b1100), 1);

  RankProfile bad(code42());
  bad.inject_for_testing(0b0011, std::nullopt, 2);
  const auto r = check_corank_identity(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness_a, 0b0011u);
}

TEST(Matroid, ShorteningTriple) {
  const RankProfile p(code42());
  EXPECT_EQ(shortening_triple(p, 0b1111), (ShorteningTriple{2, 2, 2}));
  EXPECT_EQ(shortening_triple(p, 0), (ShorteningTriple{0, 0, 0}));
  EXPECT_EQ(shortening_triple(p, 0b0011), (ShorteningTriple{1, 1, 1}));
}

TEST(Matroid, SampledModeForLongCodes) {
  Rng rng(8);
  const auto c = random_code(rng, Field::of_order(3), 16, 5);
  const RankProfile p(c);
  EXPECT_TRUE(check_rank_axioms(p, CheckMode::sampled).ok);
  EXPECT_TRUE(check_corank_identity(p, CheckMode::sampled, 2000).ok);
  EXPECT_THROW(check_rank_axioms(p, CheckMode::exhaustive), std::invalid_argument);
}

TEST(Matroid, RandomizedIdentities) {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const unsigned q = std::vector<unsigned>{2, 3, 4, 5}[draw_below(rng, 4)];
    const std::size_t n = draw_between(rng, 2, 10);
    const std::size_t k = draw_between(rng, 1, std::min<std::size_t>(5, n - 1));
    const auto c = random_code(rng, Field::of_order(q), n, k);
    const RankProfile p(c);
    const RankProfile dual(dualize(c));
    ASSERT_TRUE(check_rank_axioms(p).ok);
    ASSERT_TRUE(check_corank_identity(p).ok);
    for (Mask j = 0; j <= full_mask(n); ++j) {
      ASSERT_TRUE(shortening_triple(p, j).consistent());
      // The corank of C is the rank of its dual.
      ASSERT_EQ(p.rho_perp(j), dual.rho(j));
    }
    EXPECT_EQ(p.rho(full_mask(n)), int(k));
    EXPECT_EQ(p.rho_perp(full_mask(n)), int(n - k));
  }
}

// An r-dimensional subcode inside J forces rho(complement of J) <= k - r.
TEST(Matroid, SubcodeSupportBoundsRank) {
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = draw_between(rng, 3, 8);
    const std::size_t k = draw_between(rng, 1, std::min<std::size_t>(4, n - 1));
    const auto c = random_code(rng, Field::of_order(3), n, k);
    const RankProfile p(c);
    const auto words = c.codewords();
    for (int s = 0; s < 30; ++s) {
      std::vector<Codeword> pick;
      const std::size_t count = draw_between(rng, 1, 3);
      for (std::size_t i = 0; i < count; ++i) pick.push_back(words[draw_below(rng, words.size())]);
      Matrix m(c.field(), 0, n);
      Mask support = 0;
      for (const auto& u : pick) {
        m.append_row(u.coords);
        support |= u.support();
      }
      const int r = static_cast<int>(rank(m));
      for (Mask j = 0; j <= full_mask(n); ++j)
        if (is_subset(support, j)) {
          ASSERT_LE(p.rho(full_mask(n) & ~j), int(k) - r);
        }
    }
  }
}

TEST(Matroid, ConcurrentMemoAccess) {
  Rng rng(4);
  const auto c = random_code(rng, Field::of_order(4), 10, 4);
  const RankProfile shared(c);
  std::vector<std::vector<int>> results(4);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      for (Mask a = 0; a < 1024; ++a) results[w].push_back(shared.rho(a) * 16 + shared.rho_perp(a));
    });
  for (auto& th : workers) th.join();
  for (int w = 1; w < 4; ++w) EXPECT_EQ(results[w], results[0]);
  for (Mask a = 0; a < 1024; ++a)
    EXPECT_EQ(results[0][a], int(column_submatrix_rank(c.generator(), a)) * 16 +
                                 int(column_submatrix_rank(c.parity(), a)));
}
