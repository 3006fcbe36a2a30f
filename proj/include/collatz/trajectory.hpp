#pragma once

// Collatz dynamics under f (3x+1 / x/2) and the accelerated map t
// ((3x+1)/2 / x/2), parity bookkeeping and per-orbit statistics.

#include "collatz/errors.hpp"
#include "collatz/natural.hpp"

#include <concepts>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace collatz {

enum class MapKind { F, T };

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

namespace detail {

inline bool is_odd(const BigInt& x) { return boost::multiprecision::bit_test(x, 0); }
inline bool is_odd(std::uint64_t x) { return (x & 1u) != 0; }

inline bool is_one(const BigInt& x) { return x == 1; }
inline bool is_one(std::uint64_t x) { return x == 1; }

inline void triple_plus_one(BigInt& x)
{
    x *= 3;
    ++x;
}

inline void triple_plus_one(std::uint64_t& x)
{
    if (x > (std::numeric_limits<std::uint64_t>::max() - 1) / 3) throw std::overflow_error("3x+1 overflows 64 bits");
    x = 3 * x + 1;
}

} // namespace detail

template <class N>
concept OrbitValue = std::same_as<N, BigInt> || std::same_as<N, std::uint64_t>;

template <OrbitValue N>
N step_f(N x)
{
    if (detail::is_odd(x)) {
        detail::triple_plus_one(x);
    } else {
        x >>= 1;
    }
    return x;
}

template <OrbitValue N>
N step_t(N x)
{
    if (detail::is_odd(x)) detail::triple_plus_one(x);
    x >>= 1;
    return x;
}

inline BigInt step(const BigInt& x, MapKind map) { return map == MapKind::F ? step_f(x) : step_t(x); }

/// A finite orbit from `start` to the first 1 reached after at least one step.
struct Trajectory {
    BigInt start;
    std::vector<BigInt> terms;
    MapKind map = MapKind::F;

    std::size_t steps() const { return terms.empty() ? 0 : terms.size() - 1; }
};

inline Trajectory run_trajectory(const BigInt& m, MapKind map, std::uint64_t max_steps = kDefaultStepBudget)
{
    if (m < 1) throw DomainViolation("run_trajectory: start must be >= 1");
    Trajectory traj{m, {m}, map};
    BigInt x = m;
    std::uint64_t steps = 0;
    do {
        if (steps == max_steps) throw StepBudgetExceeded(m, max_steps);
        x = step(x, map);
        ++steps;
        traj.terms.push_back(x);
    } while (x != 1);
    return traj;
}

/// Even-run lengths between consecutive odd terms of an f-orbit, read from
/// the start toward 1: (g_{k+1}, ..., g_1).
struct GapSequence {
    std::vector<Exponent> gaps;

    std::size_t k() const { return gaps.empty() ? 0 : gaps.size() - 1; }
    Exponent total() const
    {
        Exponent s = 0;
        for (auto g : gaps) s += g;
        return s;
    }

    friend bool operator==(const GapSequence&, const GapSequence&) = default;
    friend auto operator<=>(const GapSequence&, const GapSequence&) = default;
};

inline GapSequence gap_sequence(const Trajectory& traj)
{
    if (traj.map != MapKind::F) throw DomainViolation("gap_sequence: trajectory must be generated by f");
    if (!detail::is_odd(traj.start)) throw EvenStart("gap_sequence: start " + to_decimal(traj.start) + " is even");
    GapSequence out;
    Exponent run = 0;
    for (std::size_t i = 1; i < traj.terms.size(); ++i) {
        if (detail::is_odd(traj.terms[i])) {
            out.gaps.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
    return out;
}

/// Streaming counts of an f-orbit up to the first 1: evens and odds among the
/// terms before that 1 (so the start is counted and the 1 is not), the first
/// even run after the start and the final even run before the 1.
struct OrbitCounts {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
    std::uint64_t first_gap = 0; // halvings after the first odd term; 0 when no odd term
    std::uint64_t final_gap = 0; // halvings after the last odd term (all of them if none)

    std::uint64_t steps() const { return even + odd; }
};

template <OrbitValue N>
OrbitCounts orbit_counts(N x, std::uint64_t max_steps = kDefaultStepBudget)
{
    const N start = x;
    OrbitCounts c;
    std::uint64_t run = 0;
    bool seen_odd = false;
    bool first_closed = false;
    do {
        if (c.steps() == max_steps) throw StepBudgetExceeded(BigInt(start), max_steps);
        if (detail::is_odd(x)) {
            if (seen_odd && !first_closed) {
                c.first_gap = run;
                first_closed = true;
            }
            seen_odd = true;
            ++c.odd;
            run = 0;
            detail::triple_plus_one(x);
        } else {
            ++c.even;
            ++run;
            x >>= 1;
        }
    } while (!detail::is_one(x));
    if (seen_odd && !first_closed) c.first_gap = run;
    c.final_gap = run;
    return c;
}

/// Uses 64-bit arithmetic while the orbit fits and restarts in BigInt otherwise.
inline OrbitCounts orbit_counts_auto(const BigInt& m, std::uint64_t max_steps = kDefaultStepBudget)
{
    if (m <= std::numeric_limits<std::uint64_t>::max()) {
        try {
            return orbit_counts<std::uint64_t>(m.convert_to<std::uint64_t>(), max_steps);
        } catch (const std::overflow_error&) {
        }
    }
    return orbit_counts<BigInt>(m, max_steps);
}

/// Number of t-steps to the first 1 (the total stopping time).
template <OrbitValue N>
std::uint64_t total_stopping_time(N x, std::uint64_t max_steps = kDefaultStepBudget)
{
    const N start = x;
    std::uint64_t steps = 0;
    do {
        if (steps == max_steps) throw StepBudgetExceeded(BigInt(start), max_steps);
        x = step_t(x);
        ++steps;
    } while (!detail::is_one(x));
    return steps;
}

/// Per-orbit statistics. e and o are counted under f (start counted, the 1
/// not); sigma_inf is counted under t.
struct SequenceStats {
    BigInt m;
    std::uint64_t e = 0;
    std::uint64_t o = 0;
    std::uint64_t sigma_inf = 0;
    std::uint64_t final_gap = 0;
    Rational completeness; // o/e
    Rational ones_ratio;   // o/sigma_inf
    double gamma = 0.0;    // e/ln m, equal to sigma_inf/ln m
    double res = 0.0;      // 2^e / (m 3^o)
};

/// 2^e / (m 3^o) as an exact rational.
inline Rational res_exact(const BigInt& m, std::uint64_t e, std::uint64_t o) { return Rational(pow2(e), m * pow3(o)); }

inline double res_value(const BigInt& m, std::uint64_t e, std::uint64_t o) { return ratio_to_double(pow2(e), m * pow3(o)); }

inline double gamma_value(const BigInt& m, std::uint64_t e) { return static_cast<double>(e) / log_natural(m); }

inline SequenceStats stats(const BigInt& m, std::uint64_t max_steps = kDefaultStepBudget)
{
    if (m < 2) throw DomainViolation("stats: m must be >= 2");
    const OrbitCounts counts = orbit_counts_auto(m, max_steps);
    SequenceStats s;
    s.m = m;
    s.e = counts.even;
    s.o = counts.odd;
    s.final_gap = counts.final_gap;
    if (m <= std::numeric_limits<std::uint64_t>::max()) {
        try {
            s.sigma_inf = total_stopping_time<std::uint64_t>(m.convert_to<std::uint64_t>(), max_steps);
        } catch (const std::overflow_error&) {
            s.sigma_inf = total_stopping_time<BigInt>(m, max_steps);
        }
    } else {
        s.sigma_inf = total_stopping_time<BigInt>(m, max_steps);
    }
    s.completeness = Rational(s.o, s.e);
    s.ones_ratio = Rational(s.o, s.sigma_inf);
    s.gamma = gamma_value(m, s.e);
    s.res = res_value(m, s.e, s.o);
    return s;
}

} // namespace collatz
