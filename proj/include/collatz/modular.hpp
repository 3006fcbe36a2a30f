#pragma once

// Arithmetic in (Z/3^n Z)^*, a cyclic group of order 2*3^{n-1} generated by 2
// for every n >= 1.

#include "collatz/errors.hpp"
#include "collatz/natural.hpp"

#include <cstdint>
#include <string>

namespace collatz::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Largest n with 3^n < 2^64.
inline constexpr unsigned kMaxPow3Exponent = 40;

constexpr u64 pow3_u64(unsigned n)
{
    u64 r = 1;
    for (unsigned i = 0; i < n; ++i) r *= 3;
    return r;
}

constexpr u64 mul_mod(u64 a, u64 b, u64 mod) { return static_cast<u64>(static_cast<u128>(a) * b % mod); }

constexpr u64 pow_mod(u64 base, u64 exp, u64 mod)
{
    if (mod == 1) return 0;
    u64 result = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

/// BigInt exponent, reduced modulo the group order first.
inline u64 pow2_mod_pow3(const BigInt& exp, unsigned n)
{
    const u64 mod = pow3_u64(n);
    const u64 order = 2 * pow3_u64(n - 1);
    return pow_mod(2, static_cast<u64>(exp % order), mod);
}

/// Order of 2 modulo 3^n. Only 2 and 3 divide the group order, so it is
/// found by stripping factors while 2^{d} stays 1.
inline u64 order_of_two(unsigned n)
{
    if (n < 1 || n > kMaxPow3Exponent) throw DomainViolation("order_of_two: n out of range");
    const u64 mod = pow3_u64(n);
    u64 d = 2 * pow3_u64(n - 1);
    for (u64 p : {u64{2}, u64{3}}) {
        while (d % p == 0 && pow_mod(2, d / p, mod) == 1) d /= p;
    }
    return d;
}

/// Throws unless 2 generates (Z/3^n)^*.
inline void require_primitive_root(unsigned n)
{
    if (order_of_two(n) != 2 * pow3_u64(n - 1)) {
        throw CollatzError("2 is not a primitive root modulo 3^" + std::to_string(n));
    }
}

/// x in [0, 2*3^{n-1}) with 2^x == a (mod 3^n); a must be prime to 3.
/// Pohlig-Hellman: the parity of x from the order-2 subgroup, the base-3
/// digits of x mod 3^{n-1} one at a time from the order-3 subgroup, then CRT.
inline u64 dlog2_mod_pow3(u64 a, unsigned n)
{
    if (n < 1 || n > kMaxPow3Exponent) throw DomainViolation("dlog2_mod_pow3: n out of range");
    const u64 mod = pow3_u64(n);
    a %= mod;
    if (a % 3 == 0) throw DomainViolation("dlog2_mod_pow3: argument divisible by 3");
    const u64 three_part = pow3_u64(n - 1);
    const u64 order = 2 * three_part;

    // x mod 2
    const u64 parity = pow_mod(a, three_part, mod) == 1 ? 0 : 1;

    // x mod 3^{n-1}
    u64 x3 = 0;
    if (n >= 2) {
        const u64 inv2 = pow_mod(2, order - 1, mod);
        const u64 gamma = pow_mod(2, order / 3, mod); // order-3 element
        const u64 gamma2 = mul_mod(gamma, gamma, mod);
        u64 digit_weight = 1;
        for (unsigned j = 0; j + 1 < n; ++j) {
            // h = (a * 2^{-x3})^{order / 3^{j+1}}
            const u64 reduced = mul_mod(a, pow_mod(inv2, x3, mod), mod);
            const u64 h = pow_mod(reduced, order / pow3_u64(j + 1), mod);
            u64 d;
            if (h == 1) {
                d = 0;
            } else if (h == gamma) {
                d = 1;
            } else if (h == gamma2) {
                d = 2;
            } else {
                throw CollatzError("dlog2_mod_pow3: no solution (2 not a generator?)");
            }
            x3 += d * digit_weight;
            digit_weight *= 3;
        }
    }

    // CRT: x == parity (mod 2), x == x3 (mod 3^{n-1})
    const u64 x = (x3 % 2 == parity) ? x3 : x3 + three_part;
    return x % order;
}

} // namespace collatz::modular
