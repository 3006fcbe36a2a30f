#pragma once

// Arbitrary-precision naturals and exact rationals shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace collatz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponents of 2 and 3 are plain machine integers; values built from them are BigInt.
using Exponent = std::uint64_t;

inline constexpr double kLn2 = std::numbers::ln2;
inline const double kLn3 = std::log(3.0);
/// ln2/ln3, the supremum of the completeness ratio.
inline const double kLog3Of2 = kLn2 / std::log(3.0);

inline BigInt pow2(Exponent e)
{
    BigInt r = 1;
    r <<= static_cast<unsigned>(e);
    return r;
}

inline BigInt pow3(Exponent e)
{
    return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(e));
}

/// Number of binary digits; 0 for 0.
inline Exponent bit_length(const BigInt& x)
{
    if (x.is_zero()) return 0;
    return static_cast<Exponent>(boost::multiprecision::msb(x)) + 1;
}

inline bool is_power_of_two(const BigInt& x)
{
    return x > 0 && boost::multiprecision::msb(x) == boost::multiprecision::lsb(x);
}

/// 2-adic valuation of a positive integer.
inline Exponent two_adic_valuation(const BigInt& x)
{
    if (x <= 0) throw std::domain_error("two_adic_valuation: argument must be positive");
    return static_cast<Exponent>(boost::multiprecision::lsb(x));
}

/// Exact ceil(log2(x)) for x >= 1.
inline Exponent ceil_log2(const BigInt& x)
{
    if (x <= 0) throw std::domain_error("ceil_log2: argument must be positive");
    const Exponent bits = bit_length(x);
    return is_power_of_two(x) ? bits - 1 : bits;
}

/// Natural log of a positive integer of any size. The top 64 bits go through
/// the float log, the remaining shift is added as a multiple of ln2.
inline double log_natural(const BigInt& x)
{
    if (x <= 0) throw std::domain_error("log_natural: argument must be positive");
    const Exponent bits = bit_length(x);
    if (bits <= 64) return std::log(x.convert_to<double>());
    const Exponent shift = bits - 64;
    const BigInt top = x >> static_cast<unsigned>(shift);
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * kLn2;
}

/// num/den as a double with ~64 significant bits kept through the division.
inline double ratio_to_double(const BigInt& num, const BigInt& den)
{
    if (den.is_zero()) throw std::domain_error("ratio_to_double: zero denominator");
    if (num.is_zero()) return 0.0;
    const bool negative = (num < 0) != (den < 0);
    const BigInt n = abs(num);
    const BigInt d = abs(den);
    // Scale so the integer quotient carries 64+ bits.
    const long long shift = 64 + static_cast<long long>(bit_length(d)) - static_cast<long long>(bit_length(n));
    const BigInt q = shift >= 0 ? BigInt((n << static_cast<unsigned>(shift)) / d) : BigInt((n >> static_cast<unsigned>(-shift)) / d);
    const double v = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
    return negative ? -v : v;
}

inline double rational_to_double(const Rational& q)
{
    return ratio_to_double(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

/// Parses a non-empty string of decimal digits.
inline BigInt parse_natural(std::string_view text)
{
    if (text.empty()) throw std::invalid_argument("empty number");
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("not a decimal natural: " + std::string(text));
    }
    return BigInt(std::string(text));
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& q)
{
    const BigInt& den = boost::multiprecision::denominator(q);
    if (den == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

} // namespace collatz
