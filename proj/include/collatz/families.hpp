#pragma once

// Closed-form families evaluated straight from their displayed formulas,
// independent of the generic E/O machinery: levels 1 and 2, the twelve
// level-3 families, the two corner families, the z_k family and the
// congruence 2^{3^{k+1}+k+2+2b3^{k+1}} == 3^{k+2} - 2^{k+2} (mod 3^{k+2}).

#include "collatz/eolevels.hpp"
#include "collatz/errors.hpp"
#include "collatz/natural.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace collatz {

namespace detail {

inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* who)
{
    if (num <= 0) throw RepresentationError(RepresentationError::Kind::NotPositive, std::string(who) + ": numerator not positive");
    if (num % den != 0) throw RepresentationError(RepresentationError::Kind::NotDivisible, std::string(who) + ": numerator not divisible");
    return num / den;
}

/// sum_{i=0}^{j} 2 b_i 3^i
inline Exponent b_shift(std::span<const Exponent> b, std::size_t j)
{
    Exponent s = 0;
    Exponent w = 2;
    for (std::size_t i = 0; i <= j && i < b.size(); ++i, w *= 3) s += b[i] * w;
    return s;
}

inline void require_b_length(std::span<const Exponent> b, std::size_t k, const char* who)
{
    if (b.size() > k + 2) throw DomainViolation(std::string(who) + ": b must have at most k+2 entries");
}

} // namespace detail

/// (2^{2b_0+2} - 1)/3
inline BigInt level1(Exponent b0) { return detail::exact_div(pow2(2 * b0 + 2) - 1, 3, "level1"); }

/// 2^{2b_0} (2^{6b_1+5} - 5)/9 + (2^{2b_0} - 1)/3
inline BigInt level2_x(Exponent b0, Exponent b1)
{
    return pow2(2 * b0) * detail::exact_div(pow2(6 * b1 + 5) - 5, 9, "level2_x") + (pow2(2 * b0) - 1) / 3;
}

/// 2^{2b_0} (2^{6b_1+4} - 7)/9 + (2^{2b_0} - 1)/3
inline BigInt level2_y(Exponent b0, Exponent b1)
{
    return pow2(2 * b0) * detail::exact_div(pow2(6 * b1 + 4) - 7, 9, "level2_y") + (pow2(2 * b0) - 1) / 3;
}

/// One of the twelve level-3 families
///   2^{2b_0} (2^{6b_1} (2^{18b_2+shift} - sub)/27 + coef (2^{6b_1} - 1)/9) + (2^{2b_0} - 1)/3.
struct Level3Family {
    Exponent shift;
    Exponent sub;
    Exponent coef;     // 5 for the E families, 7 for the O families
    bool maps_to_x;    // image family at level 2
};

inline constexpr std::array<Level3Family, 12> kLevel3Families{{
    {12, 19, 5, true},
    {11, 23, 5, false},
    {20, 31, 5, true},
    {7, 47, 5, false},
    {10, 79, 5, true},
    {21, 143, 5, false},
    {19, 29, 7, true},
    {6, 37, 7, false},
    {9, 53, 7, true},
    {20, 85, 7, false},
    {17, 149, 7, true},
    {16, 277, 7, false},
}};

inline BigInt level3_member(const Level3Family& fam, Exponent b0, Exponent b1, Exponent b2)
{
    // 2^{6b_1} == 1 (mod 9), so the second quotient is exact (and 0 at b_1 = 0).
    const BigInt inner = pow2(6 * b1) * detail::exact_div(pow2(18 * b2 + fam.shift) - fam.sub, 27, "level3") +
                         fam.coef * ((pow2(6 * b1) - 1) / 9);
    return pow2(2 * b0) * inner + (pow2(2 * b0) - 1) / 3;
}

/// Even corner: upsilon_i = 1 throughout.
///   (2^{3^{k+1}+k+2+S_{k+1}} - sum_{j=0}^{k} 3^{k-j} 2^{j+1+S_j} - 3^{k+1}) / 3^{k+2},  S_j = sum_{i<=j} 2 b_i 3^i
inline BigInt corner_even(std::size_t k, std::span<const Exponent> b = {})
{
    detail::require_b_length(b, k, "corner_even");
    BigInt num = pow2(modular::pow3_u64(static_cast<unsigned>(k + 1)) + k + 2 + detail::b_shift(b, k + 1));
    for (std::size_t j = 0; j <= k; ++j) num -= pow3(k - j) * pow2(j + 1 + detail::b_shift(b, j));
    num -= pow3(k + 1);
    return detail::exact_div(num, pow3(k + 2), "corner_even");
}

/// Odd corner: upsilon_i = 2*3^i throughout.
///   (2^{2*3^{k+1}-2+S_{k+1}} - sum_{j=0}^{k} 3^{k-j} 2^{3^{j+1}-1+S_j} - 3^{k+1}) / 3^{k+2}
inline BigInt corner_odd(std::size_t k, std::span<const Exponent> b = {})
{
    detail::require_b_length(b, k, "corner_odd");
    BigInt num = pow2(2 * modular::pow3_u64(static_cast<unsigned>(k + 1)) - 2 + detail::b_shift(b, k + 1));
    for (std::size_t j = 0; j <= k; ++j) {
        num -= pow3(k - j) * pow2(modular::pow3_u64(static_cast<unsigned>(j + 1)) - 1 + detail::b_shift(b, j));
    }
    num -= pow3(k + 1);
    return detail::exact_div(num, pow3(k + 2), "corner_odd");
}

/// z_k = 15*3^{k-1}+k+3 for odd k, 3^k+k+3 for even k.
inline Exponent zk(std::size_t k)
{
    if (k % 2 == 1) return 15 * modular::pow3_u64(static_cast<unsigned>(k - 1)) + k + 3;
    return modular::pow3_u64(static_cast<unsigned>(k)) + k + 3;
}

/// O-branch family with upsilon_i = 1:
///   (2^{z_k+S_{k+1}} - sum_{j=0}^{k} 3^{k-j} 2^{j+2+S_j} - 3^{k+1}) / 3^{k+2}
inline BigInt zk_evaluate(std::size_t k, std::span<const Exponent> b = {})
{
    detail::require_b_length(b, k, "zk_evaluate");
    BigInt num = pow2(zk(k) + detail::b_shift(b, k + 1));
    for (std::size_t j = 0; j <= k; ++j) num -= pow3(k - j) * pow2(j + 2 + detail::b_shift(b, j));
    num -= pow3(k + 1);
    return detail::exact_div(num, pow3(k + 2), "zk_evaluate");
}

/// E/O parameters of the three families above (c derived from their top exponent).
inline EOParams corner_even_params(std::size_t k, std::vector<Exponent> b = {})
{
    return EOParams{Branch::E, std::vector<Exponent>(k, 1), modular::pow3_u64(static_cast<unsigned>(k + 1)) + 1, std::move(b)};
}

inline EOParams corner_odd_params(std::size_t k, std::vector<Exponent> b = {})
{
    std::vector<Exponent> upsilon;
    for (std::size_t i = 1; i <= k; ++i) upsilon.push_back(upsilon_range(i));
    return EOParams{Branch::O, std::move(upsilon), modular::pow3_u64(static_cast<unsigned>(k + 1)) - 1, std::move(b)};
}

inline EOParams zk_params(std::size_t k, std::vector<Exponent> b = {})
{
    return EOParams{Branch::O, std::vector<Exponent>(k, 1), zk(k) - k - 2, std::move(b)};
}

struct CornerCongruence {
    bool congruence = false; // 2^{...} mod 3^{k+2} == 3^{k+2} - 2^{k+2}
    bool identity = false;   // 3^{k+2} - 2^{k+2} == sum_{j=0}^{k} 3^{k-j} 2^{j+1} + 3^{k+1}
    bool ok() const { return congruence && identity; }
};

inline CornerCongruence corner_congruence_check(std::size_t k, Exponent b)
{
    const BigInt mod = pow3(k + 2);
    const BigInt exponent = pow3(k + 1) * (1 + 2 * BigInt(b)) + k + 2;
    const BigInt lhs = boost::multiprecision::powm(BigInt(2), exponent, mod);
    const BigInt target = mod - pow2(k + 2);
    BigInt sum = pow3(k + 1);
    for (std::size_t j = 0; j <= k; ++j) sum += pow3(k - j) * pow2(j + 1);
    return {lhs == target, sum == target};
}

} // namespace collatz
