#pragma once

// Inverse-iterate representations of 1:
//
//   m = (2^{a_{k+1}} - sum_{i=0}^{k} 2^{a_i} 3^{k-i}) / 3^{k+1},   a_0 < ... < a_{k+1}
//
// together with 3-smooth special representations, the level-raising
// expansion, the cycle equation and 4m+1 seed chains.

#include "collatz/errors.hpp"
#include "collatz/natural.hpp"
#include "collatz/trajectory.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace collatz {

/// Exponent vector (a_0, ..., a_{k+1}); the level is k = size - 2.
struct CrandallRep {
    std::vector<Exponent> exponents;

    std::size_t level() const { return exponents.size() - 2; }
    /// Number of odd terms described (k+1).
    std::size_t odd_terms() const { return exponents.size() - 1; }
    Exponent top() const { return exponents.back(); }

    friend bool operator==(const CrandallRep&, const CrandallRep&) = default;
};

inline std::string to_string(const CrandallRep& rep)
{
    std::string s = "(";
    for (std::size_t i = 0; i < rep.exponents.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rep.exponents[i]);
    }
    return s + ")";
}

namespace detail {

inline void require_strictly_increasing(std::span<const Exponent> a, const char* who)
{
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] <= a[i - 1]) {
            throw RepresentationError(RepresentationError::Kind::NotMonotone,
                                      std::string(who) + ": exponents must be strictly increasing");
        }
    }
}

/// sum_{i=0}^{k} 2^{a_i} 3^{k-i} over the first k+1 entries of `a`.
inline BigInt smooth_sum(std::span<const Exponent> a)
{
    BigInt sum = 0;
    for (Exponent ai : a) {
        sum *= 3;
        sum += pow2(ai);
    }
    return sum;
}

} // namespace detail

/// Numerator 2^{a_{k+1}} - sum 2^{a_i} 3^{k-i} (may be non-positive for invalid input).
inline BigInt rep_numerator(const CrandallRep& rep)
{
    std::span<const Exponent> a(rep.exponents);
    return pow2(a.back()) - detail::smooth_sum(a.first(a.size() - 1));
}

inline BigInt rep_evaluate(const CrandallRep& rep)
{
    if (rep.exponents.size() < 2) {
        throw RepresentationError(RepresentationError::Kind::NotMonotone, "rep_evaluate: need at least two exponents");
    }
    detail::require_strictly_increasing(rep.exponents, "rep_evaluate");
    const BigInt num = rep_numerator(rep);
    if (num <= 0) {
        throw RepresentationError(RepresentationError::Kind::NotPositive, "rep_evaluate: numerator of " + to_string(rep) + " is not positive");
    }
    const BigInt den = pow3(rep.level() + 1);
    if (num % den != 0) {
        throw RepresentationError(RepresentationError::Kind::NotDivisible,
                                  "rep_evaluate: numerator of " + to_string(rep) + " is not divisible by 3^" + std::to_string(rep.level() + 1));
    }
    return num / den;
}

/// Least-terms representation read off the orbit of an odd m: a_0 = 0 and
/// the partial sums of the gap sequence.
inline CrandallRep rep_from_gaps(const GapSequence& gaps)
{
    CrandallRep rep{{0}};
    Exponent acc = 0;
    for (Exponent g : gaps.gaps) {
        acc += g;
        rep.exponents.push_back(acc);
    }
    return rep;
}

inline CrandallRep rep_from_trajectory(const BigInt& m, std::uint64_t max_steps = kDefaultStepBudget)
{
    return rep_from_gaps(gap_sequence(run_trajectory(m, MapKind::F, max_steps)));
}

/// One level up, same value: (..., a_{k+1}) -> (..., a_{k+1}, a_{k+1}+2).
inline CrandallRep rep_expand(CrandallRep rep)
{
    rep.exponents.push_back(rep.exponents.back() + 2);
    return rep;
}

/// Undo expansions: drop trailing (a, a+2) steps while the level stays >= 0.
/// The result is the least-terms representation of the same value.
inline CrandallRep rep_contract(CrandallRep rep)
{
    auto& a = rep.exponents;
    while (a.size() > 2 && a[a.size() - 1] - a[a.size() - 2] == 2) a.pop_back();
    return rep;
}

/// Number of expansion steps removed by rep_contract.
inline std::size_t expansion_depth(const CrandallRep& rep) { return rep.exponents.size() - rep_contract(rep).exponents.size(); }

/// n = sum_{i=0}^{k} 3^{k-i} 2^{a_i}, 0 = a_0 < ... < a_k.
struct SmoothRep {
    std::vector<Exponent> exponents;

    std::size_t level() const { return exponents.size() - 1; }
    BigInt value() const { return detail::smooth_sum(exponents); }

    friend bool operator==(const SmoothRep&, const SmoothRep&) = default;
};

/// The level-k special representation of n, if any. Each a_i is forced: it
/// is the 2-adic valuation of what remains after removing the earlier terms.
inline std::optional<SmoothRep> smooth_special_rep(const BigInt& n, std::size_t k)
{
    if (n < 1) return std::nullopt;
    BigInt rest = n - pow3(k);
    SmoothRep rep{{0}};
    for (std::size_t i = 1; i <= k; ++i) {
        if (rest <= 0) return std::nullopt;
        const Exponent ai = two_adic_valuation(rest);
        if (ai <= rep.exponents.back()) return std::nullopt;
        rep.exponents.push_back(ai);
        rest -= pow3(k - i) * pow2(ai);
    }
    if (rest != 0) return std::nullopt;
    return rep;
}

struct SmoothWitness {
    Exponent a = 0;    // e(x)
    std::size_t k = 0; // o(x)
    BigInt n;          // 2^a - 3^k x
    SmoothRep rep;     // level k-1
};

/// For odd x reaching 1: n = 2^{e(x)} - 3^{o(x)} x has a special
/// representation of level o(x)-1 whose exponents are the interior
/// exponents of x's least-terms representation.
inline SmoothWitness smooth_witness(const BigInt& x, std::uint64_t max_steps = kDefaultStepBudget)
{
    const CrandallRep rep = rep_from_trajectory(x, max_steps);
    SmoothWitness w;
    w.a = rep.top();
    w.k = rep.odd_terms();
    w.n = pow2(w.a) - pow3(w.k) * x;
    auto smooth = smooth_special_rep(w.n, w.k - 1);
    if (!smooth) throw CollatzError("smooth_witness: no special representation for " + to_decimal(w.n));
    const std::vector<Exponent> interior(rep.exponents.begin(), rep.exponents.end() - 1);
    if (smooth->exponents != interior) throw CollatzError("smooth_witness: special representation disagrees with orbit of " + to_decimal(x));
    w.rep = std::move(*smooth);
    return w;
}

enum class CycleStatus {
    Trivial,            // q* = 1
    NonTrivialIntegral, // integral q* > 1: a non-trivial cycle witness
    NonIntegral,
    Degenerate          // 2^{a_{k+1}} < 3^{k+1}: q* <= 0
};

/// q* = sum 2^{a_i} 3^{k-i} / (2^{a_{k+1}} - 3^{k+1}).
struct CycleCandidate {
    std::vector<Exponent> exponents;
    Rational q_star;
    CycleStatus status = CycleStatus::NonIntegral;
};

inline CycleCandidate cycle_solve(std::span<const Exponent> a)
{
    if (a.size() < 2 || a.front() != 0) throw DomainViolation("cycle_solve: need 0 = a_0 < ... < a_{k+1}");
    detail::require_strictly_increasing(a, "cycle_solve");
    const std::size_t k = a.size() - 2;
    const BigInt num = detail::smooth_sum(a.first(k + 1));
    const BigInt den = pow2(a.back()) - pow3(k + 1); // never 0: 2^x != 3^y for y >= 1
    CycleCandidate out{{a.begin(), a.end()}, den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den)};
    if (den < 0) {
        out.status = CycleStatus::Degenerate;
    } else if (num % den != 0) {
        out.status = CycleStatus::NonIntegral;
    } else {
        out.status = (num == den) ? CycleStatus::Trivial : CycleStatus::NonTrivialIntegral;
    }
    return out;
}

/// Calls fn(span) for every exponent vector 0 = a_0 < a_1 < ... < a_{k+1} <= cap.
template <class Fn>
void for_each_profile(std::size_t k, Exponent cap, Fn&& fn)
{
    std::vector<Exponent> a(k + 2);
    a[0] = 0;
    // Fill positions 1..k+1 in increasing order via an odometer.
    auto fill = [&](auto&& self, std::size_t pos, Exponent lo) -> void {
        if (pos == a.size()) {
            fn(std::span<const Exponent>(a));
            return;
        }
        const Exponent remaining = a.size() - 1 - pos; // slots after this one
        for (Exponent v = lo; v + remaining <= cap; ++v) {
            a[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    fill(fill, 1, 1);
}

struct CycleSearchReport {
    std::size_t k = 0; // odd terms in the cycle
    Exponent cap = 0;
    std::uint64_t profiles = 0;
    std::uint64_t trivial = 0;
    std::uint64_t nontrivial = 0;
    std::uint64_t bound_violations = 0; // integral q* > 1 with q* <= 3^{k-1}
    std::vector<CycleCandidate> witnesses{};
};

/// Searches all profiles with exactly k odd terms and a_k <= cap for
/// integral q* > 1 and checks each against q* > 3^{k-1}.
inline CycleSearchReport cycle_lower_bound_check(std::size_t k, Exponent cap)
{
    if (k < 1) throw DomainViolation("cycle_lower_bound_check: k must be >= 1");
    CycleSearchReport r{.k = k, .cap = cap};
    const BigInt bound = pow3(k - 1);
    for_each_profile(k - 1, cap, [&](std::span<const Exponent> a) {
        ++r.profiles;
        CycleCandidate c = cycle_solve(a);
        if (c.status == CycleStatus::Trivial) ++r.trivial;
        if (c.status == CycleStatus::NonTrivialIntegral) {
            ++r.nontrivial;
            if (boost::multiprecision::numerator(c.q_star) <= bound) ++r.bound_violations;
            r.witnesses.push_back(std::move(c));
        }
    });
    return r;
}

/// (m, 4m+1, 4(4m+1)+1, ...) of the given length.
inline std::vector<BigInt> seed_chain(const BigInt& m, std::size_t count)
{
    if (!detail::is_odd(m)) throw DomainViolation("seed_chain: m must be odd");
    std::vector<BigInt> out;
    out.reserve(count);
    BigInt x = m;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(x);
        x = 4 * x + 1;
    }
    return out;
}

} // namespace collatz
