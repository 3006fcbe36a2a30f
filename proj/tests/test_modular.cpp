#include "collatz/modular.hpp"

#include <gtest/gtest.h>

using namespace collatz;
using namespace collatz::modular;

TEST(Modular, PowMod)
{
    EXPECT_EQ(pow_mod(2, 10, 1000), 24u);
    EXPECT_EQ(pow_mod(2, 0, 7), 1u);
    EXPECT_EQ(pow2_mod_pow3(BigInt(6), 2), 1u);
    EXPECT_EQ(pow2_mod_pow3(pow2(200), 5), boost::multiprecision::powm(BigInt(2), pow2(200), pow3(5)).convert_to<u64>());
}

TEST(Modular, OrderOfTwoIsFull)
{
    for (unsigned n = 1; n <= 20; ++n) {
        EXPECT_EQ(order_of_two(n), 2 * pow3_u64(n - 1)) << n;
        EXPECT_NO_THROW(require_primitive_root(n));
    }
}

TEST(Modular, DlogMatchesDirectScan)
{
    for (unsigned n = 1; n <= 7; ++n) {
        const u64 mod = pow3_u64(n);
        const u64 order = 2 * pow3_u64(n - 1);
        u64 p = 1;
        for (u64 x = 0; x < order; ++x) {
            ASSERT_EQ(dlog2_mod_pow3(p, n), x) << "n=" << n;
            p = p * 2 % mod;
        }
    }
}

TEST(Modular, DlogLargeModulus)
{
    const unsigned n = 38;
    const u64 mod = pow3_u64(n);
    for (u64 x : {u64{0}, u64{1}, u64{12345678901}, 2 * pow3_u64(n - 1) - 1}) {
        EXPECT_EQ(dlog2_mod_pow3(pow_mod(2, x, mod), n), x);
    }
}

TEST(Modular, DlogRejectsMultiplesOfThree) { EXPECT_ANY_THROW(dlog2_mod_pow3(9, 3)); }
