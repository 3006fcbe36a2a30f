#pragma once

// Completeness, stopping-time ratio and residual along the corner families,
// plus the exact lower bound on the number of even terms.

#include "collatz/errors.hpp"
#include "collatz/families.hpp"
#include "collatz/natural.hpp"
#include "collatz/trajectory.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace collatz {

/// ceil(log2(3^{o+1} - 2^{o+1})), from the bit length; every odd m >= 3 with
/// o odd terms has at least this many even terms.
inline Exponent completeness_floor(std::uint64_t o)
{
    if (o < 1) throw DomainViolation("completeness_floor: o must be >= 1");
    return ceil_log2(pow3(o + 1) - pow2(o + 1));
}

/// m*_k = (2^{3^{k+1}+k+2} - 3^{k+2} + 2^{k+2}) / 3^{k+2}, the primitive
/// member of the even corner family.
inline BigInt corner_even_seed(std::size_t k)
{
    const Exponent top = modular::pow3_u64(static_cast<unsigned>(k + 1)) + k + 2;
    return (pow2(top) - pow3(k + 2) + pow2(k + 2)) / pow3(k + 2);
}

struct CornerRow {
    std::size_t k = 0;
    BigInt m;
    std::uint64_t e = 0;
    std::uint64_t o = 0;
    double gamma = 0.0;
    Rational completeness;
    double res = 0.0;
};

enum class CornerFamily { Even, Odd };

inline BigInt corner_seed(CornerFamily family, std::size_t k) { return family == CornerFamily::Even ? corner_even(k) : corner_odd(k); }

/// Orbit statistics of the family's primitive member for k in [k_min, k_max].
inline std::vector<CornerRow> corner_table(CornerFamily family, std::size_t k_min, std::size_t k_max,
                                           std::uint64_t max_steps = kDefaultStepBudget)
{
    std::vector<CornerRow> rows;
    for (std::size_t k = k_min; k <= k_max; ++k) {
        CornerRow row;
        row.k = k;
        row.m = corner_seed(family, k);
        const OrbitCounts c = orbit_counts_auto(row.m, max_steps);
        row.e = c.even;
        row.o = c.odd;
        row.gamma = gamma_value(row.m, row.e);
        row.completeness = Rational(row.o, row.e);
        row.res = res_value(row.m, row.e, row.o);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline constexpr std::size_t kGammaTableCap = 7;

/// Gamma(m*_k) for k = 0..k_max; throws if the sequence is not strictly
/// decreasing or drops to 1/ln2.
inline std::vector<CornerRow> gamma_limit_table(std::size_t k_max, std::size_t cap = kGammaTableCap)
{
    if (k_max > cap) throw ResourceCap("gamma_limit_table: k_max exceeds cap");
    auto rows = corner_table(CornerFamily::Even, 0, k_max);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].gamma <= 1.0 / kLn2) throw CollatzError("gamma_limit_table: Gamma(m*_k) <= 1/ln2");
        if (i > 0 && !(rows[i].gamma < rows[i - 1].gamma)) throw CollatzError("gamma_limit_table: not strictly decreasing");
    }
    return rows;
}

/// Completeness of the family's primitive member per k; throws unless the
/// values decrease strictly and stay below ln2/ln3. The odd family starts at
/// k = 1 since its k = 0 member is 1.
inline std::vector<CornerRow> completeness_trend(CornerFamily family, std::size_t k_max)
{
    const std::size_t k_min = family == CornerFamily::Even ? 0 : 1;
    auto rows = corner_table(family, k_min, k_max);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!(rational_to_double(rows[i].completeness) < kLog3Of2)) throw CollatzError("completeness_trend: C >= ln2/ln3");
        if (i > 0 && !(rows[i].completeness < rows[i - 1].completeness)) throw CollatzError("completeness_trend: not strictly decreasing");
    }
    return rows;
}

/// The 22-digit completeness record.
inline const BigInt& big_completeness_record()
{
    static const BigInt m("7219136416377236271195");
    return m;
}

inline double big_completeness_check(std::uint64_t max_steps = kDefaultStepBudget)
{
    const OrbitCounts c = orbit_counts_auto(big_completeness_record(), max_steps);
    return static_cast<double>(c.odd) / static_cast<double>(c.even);
}

/// Smallest m in [2, search_cap] whose orbit has exactly k odd terms.
inline std::optional<BigInt> smallest_with_k_odds(std::uint64_t k, const BigInt& search_cap, std::uint64_t max_steps = kDefaultStepBudget)
{
    if (k < 1) throw DomainViolation("smallest_with_k_odds: k must be >= 1");
    for (BigInt m = 2; m <= search_cap; ++m) {
        if (orbit_counts_auto(m, max_steps).odd == k) return m;
    }
    return std::nullopt;
}

struct ExponentBalance {
    double lhs_log = 0.0; // ln((2^k)^{1 - ln2/ln6})
    double rhs_log = 0.0; // ln((3^k)^{ln2/ln6})
    double relative_error = 0.0;
    bool identity = false;
    bool bracketing = false; // ln2/ln6 < 0.40 and 1 - ln2/ln6 > 0.606061

    bool ok() const { return identity && bracketing; }
};

/// (2^k)^{1 - ln2/ln6} = (3^k)^{ln2/ln6}, compared in log space.
inline ExponentBalance exponent_balance_check(std::uint64_t k)
{
    if (k < 1) throw DomainViolation("exponent_balance_check: k must be >= 1");
    const double ratio = kLn2 / std::log(6.0);
    ExponentBalance r;
    r.lhs_log = static_cast<double>(k) * kLn2 * (1.0 - ratio);
    r.rhs_log = static_cast<double>(k) * kLn3 * ratio;
    r.relative_error = std::abs(r.lhs_log - r.rhs_log) / std::abs(r.rhs_log);
    r.identity = r.relative_error <= 1e-12;
    r.bracketing = ratio < 0.40 && 1.0 - ratio > 0.606061;
    return r;
}

} // namespace collatz
