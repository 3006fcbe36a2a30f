#include "collatz/eolevels.hpp"
#include "collatz/wirsching.hpp"

#include <gtest/gtest.h>

using namespace collatz;

namespace {

// Oracle: apply the generators one at a time, innermost first.
Rational compose(const std::vector<Exponent>& alphas, Rational q)
{
    for (std::size_t i = alphas.size(); i-- > 0;) {
        for (Exponent j = 0; j < alphas[i]; ++j) q *= 2;
        if (i > 0) q = (2 * q - 1) / 3;
    }
    return q;
}

} // namespace

TEST(Wirsching, ThreeAnchors)
{
    const auto s = wirsching_encode(3);
    EXPECT_EQ(s, WirschingSeq({0, 0, 3}));
    EXPECT_EQ(s.length(), 2u);
    EXPECT_EQ(s.absolute(), 3u);
    EXPECT_EQ(s.norm(), 5u);
    EXPECT_EQ(wirsching_eval(s, 1), 3);
    EXPECT_EQ(wirsching_eval(WirschingSeq({0, 0, 3, 1}), 1), 3);
}

TEST(Wirsching, SmallValues)
{
    EXPECT_EQ(wirsching_encode(1), WirschingSeq({0, 1}));
    EXPECT_EQ(wirsching_encode(5), WirschingSeq({0, 3}));
    EXPECT_EQ(wirsching_encode(8), WirschingSeq({3}));
}

TEST(Wirsching, ClosedFormMatchesComposition)
{
    const std::vector<std::vector<Exponent>> samples{{0}, {2}, {0, 1}, {0, 0, 3}, {1, 2, 3}, {0, 5, 0, 2}, {3, 1, 1, 1, 4}};
    const Rational qs[] = {Rational(1), Rational(7), Rational(2, 3), Rational(-5, 11)};
    for (const auto& a : samples) {
        for (const auto& q : qs) EXPECT_EQ(wirsching_eval(WirschingSeq(a), q), compose(a, q));
    }
}

TEST(Wirsching, ConcatComposes)
{
    const WirschingSeq s({0, 0, 3}), w({2, 1, 4}), one({0, 1});
    for (int q = -3; q <= 5; ++q) {
        EXPECT_EQ(wirsching_eval(wirsching_concat(s, w), q), wirsching_eval(s, wirsching_eval(w, q)));
    }
    EXPECT_EQ(wirsching_concat(one, one), WirschingSeq({0, 1, 1}));
    EXPECT_EQ(wirsching_eval(wirsching_concat(one, one), 1), 1);
}

TEST(Wirsching, EncodeRoundtrip)
{
    for (std::uint64_t m = 1; m <= 10'000; ++m) {
        const auto s = wirsching_encode(m);
        ASSERT_EQ(wirsching_eval(s, 1), m) << m;
        ASSERT_EQ(s.norm(), total_stopping_time<std::uint64_t>(m)) << m;
    }
}

TEST(Wirsching, SmallPredicate)
{
    EXPECT_TRUE(WirschingSeq({0, 1, 5}).is_small());
    EXPECT_FALSE(WirschingSeq({0, 2}).is_small());
    EXPECT_FALSE(WirschingSeq({1}).is_small());
    EXPECT_THROW(WirschingSeq(std::vector<Exponent>{}), DomainViolation);
}

TEST(Wirsching, SeedNormsBelowLevelBound)
{
    // ||s|| = e for a seed, and the exponent layout caps e below 3^{k+2} - 1.
    // The tighter 3^{k+1} - 1 fails already at level 3, e.g. (8,6,2) with e = 16.
    std::size_t above_tight = 0;
    for (std::size_t n = 3; n <= 5; ++n) {
        const std::size_t k = n - 2;
        for (const auto& seed : primitive_seeds(n)) {
            if (seed.expansion_duplicate()) continue;
            const auto s = wirsching_encode(seed.value);
            ASSERT_EQ(s.norm(), seed.e());
            ASSERT_LT(BigInt(s.norm()), pow3(k + 2) - 1);
            above_tight += BigInt(s.norm()) >= pow3(k + 1) - 1;
        }
    }
    EXPECT_GT(above_tight, 0u);
}

TEST(Wirsching, AgreesWithCrandallExponents)
{
    for (std::uint64_t m = 3; m <= 10'001; m += 2) {
        const auto s = wirsching_encode(m);
        const auto rep = rep_from_trajectory(m);
        ASSERT_EQ(s.norm(), rep.top()) << m;
        ASSERT_EQ(s.alphas().front(), 0u);
        ASSERT_EQ(s.length() + 1, rep.exponents.size());
        for (std::size_t i = 1; i < s.alphas().size(); ++i) {
            ASSERT_EQ(s.alphas()[i] + 1, rep.exponents[i] - rep.exponents[i - 1]) << m;
        }
    }
}
