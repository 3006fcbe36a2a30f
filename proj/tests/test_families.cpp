#include "collatz/families.hpp"
#include "collatz/trajectory.hpp"

#include <gtest/gtest.h>

using namespace collatz;

TEST(Families, LevelOne)
{
    EXPECT_EQ(level1(0), 1);
    EXPECT_EQ(level1(1), 5);
    EXPECT_EQ(level1(2), 21);
}

TEST(Families, LevelTwoMatchesEO)
{
    for (Exponent b0 = 0; b0 <= 3; ++b0) {
        for (Exponent b1 = 0; b1 <= 3; ++b1) {
            EXPECT_EQ(level2_x(b0, b1), eo_evaluate(EOParams{Branch::E, {}, 4, {b0, b1}}));
            EXPECT_EQ(level2_y(b0, b1), eo_evaluate(EOParams{Branch::O, {}, 2, {b0, b1}}));
        }
    }
    EXPECT_EQ(level2_x(0, 0), 3);
    EXPECT_EQ(level2_x(0, 1), 227);
}

TEST(Families, LevelThreeMatchesSeeds)
{
    const auto seeds = primitive_seeds(3);
    for (std::size_t i = 0; i < kLevel3Families.size(); ++i) {
        const auto& fam = kLevel3Families[i];
        for (Exponent b0 = 0; b0 <= 2; ++b0) {
            for (Exponent b1 = 0; b1 <= 2; ++b1) {
                for (Exponent b2 = 0; b2 <= 1; ++b2) {
                    EOParams p = seeds[i].params;
                    p.b = {b0, b1, b2};
                    ASSERT_EQ(level3_member(fam, b0, b1, b2), eo_evaluate(p)) << i;
                }
            }
        }
        // The image family: E for odd upsilon_1, so X; O so Y.
        EXPECT_EQ(fam.maps_to_x, seeds[i].params.upsilon[0] % 2 == 1) << i;
    }
}

TEST(Families, CornerEvenClosedForm)
{
    EXPECT_EQ(corner_even(0), 3);
    EXPECT_EQ(corner_even(1), 151);
    EXPECT_EQ(corner_even(2), 26512143);
    const std::vector<Exponent> b{1, 0, 2};
    EXPECT_EQ(corner_even(1, b), eo_evaluate(corner_even_params(1, b)));
    for (std::size_t k = 0; k <= 4; ++k) {
        EXPECT_EQ(solve_c(Branch::E, std::vector<Exponent>(k, 1)), corner_even_params(k).c) << k;
    }
}

TEST(Families, CornerOddClosedForm)
{
    EXPECT_EQ(corner_odd(0), 1);
    EXPECT_EQ(corner_odd(1), 2417);
    const std::vector<Exponent> b{2, 1, 0};
    EXPECT_EQ(corner_odd(1, b), eo_evaluate(corner_odd_params(1, b)));
    for (std::size_t k = 1; k <= 4; ++k) {
        EXPECT_EQ(solve_c(Branch::O, corner_odd_params(k).upsilon), corner_odd_params(k).c) << k;
    }
}

TEST(Families, ZkValues)
{
    const Exponent expected[] = {4, 19, 14, 141, 88, 1223, 738, 10945};
    for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(zk(k), expected[k]);
    for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(solve_c(Branch::O, std::vector<Exponent>(k, 1)), zk(k) - k - 2) << k;
    EXPECT_EQ(zk_evaluate(0), 1);
    EXPECT_EQ(zk_evaluate(1), eo_evaluate(zk_params(1)));
    const auto c = orbit_counts_auto(zk_evaluate(3));
    EXPECT_EQ(c.odd, 5u);
    EXPECT_EQ(c.even, 141u);
}

TEST(Families, BTooLong) { EXPECT_THROW(corner_even(0, std::vector<Exponent>{0, 0, 0}), DomainViolation); }

TEST(Families, CornerCongruence)
{
    for (std::size_t k = 0; k <= 8; ++k) {
        for (Exponent b = 0; b <= 3; ++b) {
            const auto r = corner_congruence_check(k, b);
            EXPECT_TRUE(r.congruence) << k << " " << b;
            EXPECT_TRUE(r.identity) << k;
        }
    }
}

// A c = 2 family with its top b at 0 is the family one level down whose c is
// the dropped upsilon_k.
TEST(Families, ContainmentClosedForms)
{
    for (Exponent b0 = 0; b0 <= 4; ++b0) EXPECT_EQ(level2_y(b0, 0), level1(b0));
    const auto seeds = primitive_seeds(3);
    for (Exponent b0 = 0; b0 <= 2; ++b0) {
        for (Exponent b1 = 0; b1 <= 2; ++b1) {
            EXPECT_EQ(level3_member(kLevel3Families[3], b0, b1, 0), level2_x(b0, b1)); // (2,4,1)
            EXPECT_EQ(level3_member(kLevel3Families[7], b0, b1, 0), level2_y(b0, b1)); // (2,2,2)
        }
    }
    EXPECT_EQ(seeds[3].params.c, 2u);
    EXPECT_EQ(seeds[7].params.c, 2u);
}

TEST(Families, ContainmentEOLevels)
{
    for (std::size_t n = 4; n <= 5; ++n) {
        std::size_t checked = 0;
        for (const auto& seed : primitive_seeds(n)) {
            if (!seed.expansion_duplicate()) continue;
            std::vector<Exponent> lower = seed.params.upsilon;
            const Exponent c = lower.back();
            lower.pop_back();
            for (Exponent b0 = 0; b0 <= 1; ++b0) {
                EOParams upper = seed.params;
                upper.b.assign(n, 0);
                upper.b[0] = b0;
                upper.b[1] = 1;
                EOParams down{seed.params.branch, lower, c, std::vector<Exponent>(upper.b.begin(), upper.b.end() - 1)};
                ASSERT_EQ(eo_evaluate(upper), eo_evaluate(down));
                ++checked;
            }
        }
        EXPECT_GT(checked, 0u);
    }
}
