#include <gtest/gtest.h>

#include "oracles.hpp"
#include "posetcode/distribution.hpp"
#include "posetcode/random.hpp"

using namespace posetcode;

namespace {

const FieldPtr& f2() {
  static const auto f = Field::of_order(2);
  return f;
}

LinearCode from(std::vector<std::vector<unsigned>> rows, unsigned q = 2) {
  return LinearCode::from_generator(Matrix::from_rows(Field::of_order(q), rows));
}

LinearCode code42() { return from({{1, 1, 0, 0}, {0, 0, 1, 1}}); }
LinearCode parity3() { return from({{1, 1, 0}, {0, 1, 1}}); }
LinearCode rep3() { return from({{1, 1, 1}}); }
LinearCode full2() { return LinearCode::from_generator(Matrix::identity(f2(), 2)); }

using Counts = std::vector<Count>;

// Distribution from the parity-check kernel and the Floyd-Warshall order.
Counts oracle_distribution(const LinearCode& c, const Poset& p) {
  const auto rel = oracle::Relation::of(p);
  Counts out(c.length() + 1, 0);
  for (const auto& w : oracle::codewords_via_parity(c)) ++out[popcount(rel.closure(oracle::support(w)))];
  return out;
}

}  // namespace

TEST(Distribution, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(ipow(3, 4), 81);
  EXPECT_EQ(ipow(7, 0), 1);
}

TEST(Distribution, ExactSupportExamples) {
  const RankProfile p42(code42());
  const auto anti = Poset::antichain(4);
  for (auto m : {CountMethod::enumerate, CountMethod::moebius}) {
    EXPECT_EQ(count_exact_support(p42, anti, 0, m), 1);
    EXPECT_EQ(count_exact_support(p42, anti, 0b0011, m), 1);
    EXPECT_EQ(count_exact_support(p42, anti, 0b0110, m), 0);
    EXPECT_EQ(count_exact_support(p42, anti, 0b1111, m), 1);
  }
  const RankProfile full(full2());
  const auto chain = Poset::chain(2);
  for (auto m : {CountMethod::enumerate, CountMethod::moebius}) {
    EXPECT_EQ(count_exact_support(full, chain, 0b11, m), 2);
    EXPECT_EQ(count_exact_support(full, chain, 0b01, m), 1);
  }
  EXPECT_THROW(count_exact_support(full, chain, 0b10, CountMethod::moebius), std::invalid_argument);
}

TEST(Distribution, LambdaSignSumVanishes) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto p = random_poset(rng, 7);
    for (Mask i : p.ideals()) EXPECT_EQ(lambda_sign_sum(p, i), i == 0 ? 1 : 0);
  }
}

TEST(Distribution, DistributionExamples) {
  const RankProfile full(full2());
  EXPECT_EQ(distribution(full, Poset::chain(2), DistributionMethod::enumerate).counts, (Counts{1, 1, 2}));
  EXPECT_EQ(distribution(full, Poset::chain(2), DistributionMethod::moebius).counts, (Counts{1, 1, 2}));
  const RankProfile p42(code42());
  for (auto m : {DistributionMethod::enumerate, DistributionMethod::moebius, DistributionMethod::closed_form})
    EXPECT_EQ(distribution(p42, Poset::antichain(4), m).counts, (Counts{1, 0, 2, 0, 1}));
  EXPECT_THROW(distribution(p42, Poset::antichain(3), DistributionMethod::enumerate), InputError);
}

TEST(Distribution, ClassifyExamples) {
  const auto c = classify(RankProfile(parity3()), Poset::antichain(3));
  EXPECT_EQ(c.kind, CodeClass::mds);
  EXPECT_EQ(c.d1, 2);
  EXPECT_EQ(c.d2, 3);
  EXPECT_EQ(c.rank_profile_holds, true);

  const auto n42 = classify(RankProfile(code42()), Poset::antichain(4));
  EXPECT_EQ(n42.kind, CodeClass::nmds);
  EXPECT_EQ(n42.d1, 2);
  EXPECT_EQ(n42.d2, 4);
  EXPECT_EQ(n42.rank_profile_holds, true);

  const auto rep = classify(RankProfile(rep3()), Poset::chain(3));
  EXPECT_EQ(rep.kind, CodeClass::mds);
  EXPECT_EQ(rep.d1, 3);
  EXPECT_FALSE(rep.d2.has_value());

  // {00, 11} is MDS under any order on two points; code42 under a chain stays NMDS.
  EXPECT_EQ(classify(RankProfile(from({{1, 1}})), Poset::chain(2)).kind, CodeClass::mds);
  EXPECT_EQ(classify(RankProfile(code42()), Poset::chain(4)).kind, CodeClass::nmds);
  const auto other = classify(RankProfile(from({{1, 0, 0, 0}, {0, 1, 0, 0}})), Poset::antichain(4));
  EXPECT_EQ(other.kind, CodeClass::other);
  EXPECT_FALSE(other.rank_profile_holds.has_value());
}

TEST(Distribution, MdsFixtures) {
  EXPECT_EQ(mds_closed_form(RankProfile(parity3()), Poset::antichain(3)).counts, (Counts{1, 0, 3, 0}));
  EXPECT_EQ(mds_closed_form(RankProfile(full2()), Poset::chain(2)).counts, (Counts{1, 1, 2}));
  EXPECT_EQ(mds_closed_form(RankProfile(rep3()), Poset::chain(3)).counts, (Counts{1, 0, 0, 1}));
  EXPECT_THROW(mds_closed_form(RankProfile(code42()), Poset::antichain(4)), InputError);
}

TEST(Distribution, NmdsFixture) {
  const RankProfile p42(code42());
  const auto anti = Poset::antichain(4);
  EXPECT_EQ(nmds_closed_form(p42, anti, CountMethod::enumerate).counts, (Counts{1, 0, 2, 0, 1}));
  EXPECT_EQ(nmds_closed_form(p42, anti, CountMethod::moebius).counts, (Counts{1, 0, 2, 0, 1}));
  EXPECT_EQ(hamming_nmds_closed_form(p42).counts, (Counts{1, 0, 2, 0, 1}));
  Count a_d = 0;
  for (Mask j : anti.ideals(2)) a_d += count_exact_support(p42, anti, j, CountMethod::enumerate);
  EXPECT_EQ(a_d, 2);
  EXPECT_THROW(nmds_closed_form(RankProfile(parity3()), Poset::antichain(3)), InputError);
  EXPECT_THROW(hamming_nmds_closed_form(RankProfile(parity3())), InputError);
  EXPECT_THROW(distribution_closed_form(RankProfile(from({{1, 0, 0, 0}, {0, 1, 0, 0}})), Poset::antichain(4)),
               InputError);
}

// Poset 1 < 3 on four points with the [4,2] code: class decided at test time,
// closed form (if any) must match the oracle distribution.
TEST(Distribution, SmallPosetCase) {
  const auto p = Poset::from_cover_relations(4, std::vector<CoverPair>{{1, 3}});
  const auto c = code42();
  const RankProfile prof(c);
  const auto expected = oracle_distribution(c, p);
  EXPECT_EQ(distribution_enumerate(c, p).counts, expected);
  EXPECT_EQ(distribution_moebius(prof, p).counts, expected);
  const auto cls = classify(prof, p);
  if (cls.kind != CodeClass::other) {
    EXPECT_EQ(distribution_closed_form(prof, p).counts, expected);
  }
}

TEST(Distribution, ViolationDetector) {
  DistributionReport r;
  r.counts = {1, 1, 2};
  EXPECT_FALSE(distribution_violation(r, full2()));
  r.counts = {1, 2, 2};
  EXPECT_TRUE(distribution_violation(r, full2()));
  r.counts = {0, 2, 2};
  EXPECT_TRUE(distribution_violation(r, full2()));
  r.counts = {1, 1, 2};
  r.classification = Classification{CodeClass::other, 2, std::nullopt, std::nullopt, std::nullopt};
  EXPECT_TRUE(distribution_violation(r, full2()));
}

TEST(Distribution, RandomizedAgreement) {
  Rng rng(31337);
  int mds = 0, nmds = 0;
  for (int t = 0; t < 200; ++t) {
    const auto inst = random_instance(rng, InstanceShape{{2, 3, 4, 5}, 2, 8, 4});
    const auto& c = inst.code;
    const RankProfile prof(c);
    const auto expected = oracle_distribution(c, inst.poset);
    ASSERT_EQ(distribution_enumerate(c, inst.poset).counts, expected);
    ASSERT_EQ(distribution_moebius(prof, inst.poset).counts, expected);
    const auto hist = exact_support_histogram(c, inst.poset);
    for (Mask i : inst.poset.ideals()) {
      const auto it = hist.find(i);
      ASSERT_EQ(count_exact_support(prof, inst.poset, i, CountMethod::moebius), it == hist.end() ? 0 : it->second);
    }
    const auto cls = classify(prof, inst.poset);
    if (cls.kind == CodeClass::mds) {
      ++mds;
      ASSERT_EQ(cls.rank_profile_holds, true);
      ASSERT_EQ(mds_closed_form(prof, inst.poset).counts, expected);
    } else if (cls.kind == CodeClass::nmds) {
      ++nmds;
      ASSERT_EQ(cls.rank_profile_holds, true);
      ASSERT_EQ(nmds_closed_form(prof, inst.poset, CountMethod::moebius).counts, expected);
    }
    const Poset anti = Poset::antichain(c.length());
    if (classify(prof, anti).kind == CodeClass::nmds) {
      ASSERT_EQ(hamming_nmds_closed_form(prof).counts, oracle_distribution(c, anti));
    }
  }
  EXPECT_GT(mds, 0);
  EXPECT_GT(nmds, 0);
}
