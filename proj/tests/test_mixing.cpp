#include "collatz/mixing.hpp"
#include "collatz/families.hpp"

#include <gtest/gtest.h>

using namespace collatz;

TEST(Mixing, WorkedCase)
{
    const auto seeds = primitive_seeds(3);
    const MixingCheck c = mixing_verify(seeds[0], 0);
    EXPECT_EQ(c.member, 151);
    EXPECT_EQ(c.image, 227);
    EXPECT_EQ(c.predicted.target, Branch::E);
    EXPECT_EQ(c.predicted.iterations(0), 2u);
    EXPECT_TRUE(c.ok());
}

TEST(Mixing, LevelThree)
{
    for (const auto& seed : primitive_seeds(3)) {
        for (Exponent b0 = 0; b0 <= 2; ++b0) EXPECT_TRUE(mixing_verify(seed, b0).ok()) << to_decimal(seed.value);
    }
}

TEST(Mixing, LevelFour)
{
    std::size_t to_e = 0;
    for (const auto& seed : primitive_seeds(4)) {
        const MixingCheck c = mixing_verify(seed, 0);
        EXPECT_TRUE(c.ok()) << to_decimal(seed.value);
        to_e += c.predicted.target == Branch::E;
    }
    EXPECT_EQ(to_e, 108u); // balanced
}

TEST(Mixing, RequiresLevelThree) { EXPECT_THROW(mixing_classify(make_params(Branch::E, {})), DomainViolation); }

TEST(Partition, Membership)
{
    EXPECT_TRUE(partition_membership(3).in_e);
    EXPECT_TRUE(partition_membership(17).in_o);
    EXPECT_TRUE(partition_membership(1).in_o);
    for (std::uint64_t m = 1; m < 2000; m += 2) {
        const auto f = partition_membership(m);
        ASSERT_NE(f.in_e, f.in_o) << m;
    }
}

TEST(Partition, AgreesWithGapParity)
{
    const auto r = partition_parity_test(20'001);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.checked, 10'000u);
    EXPECT_EQ(r.e_count + r.o_count, r.checked);
}

TEST(GapCount, Bounds)
{
    for (auto [k, r] : std::vector<std::pair<std::size_t, Exponent>>{{1, 8}, {1, 12}, {2, 20}}) {
        const auto g = gap_sequence_count(k, r);
        EXPECT_TRUE(g.ok()) << k << " " << r << ": " << g.count;
    }
    EXPECT_EQ(gap_sequence_count(1, 8).bound, 2);
    EXPECT_EQ(gap_sequence_count(2, 20).bound, 4);
    EXPECT_THROW(gap_sequence_count(0, 8), DomainViolation);
}
