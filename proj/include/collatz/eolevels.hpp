#pragma once

// Even-odd representations. For branch B (upsilon_0 = 1 for E, 2 for O),
// k >= 1, upsilon_i in [1, 2*3^i] and free b_0..b_{k+1} >= 0 the exponent
// vector at level K = k+1 is
//
//   a_0 = 0
//   a_1 = upsilon_0 + 2 b_0
//   a_{j+1} = a_j + upsilon_j + 2 b_j 3^j          (1 <= j <= k)
//   a_{k+2} = a_{k+1} + c + 2 b_{k+1} 3^{k+1}
//
// and the family member is the value of that representation. c is not free:
// it is the unique exponent in [2, 2*3^{k+1}) making the numerator divisible
// by 3^{k+2}. Level n = k+2 counts the odd terms of a member's orbit.

#include "collatz/errors.hpp"
#include "collatz/modular.hpp"
#include "collatz/natural.hpp"
#include "collatz/repcore.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace collatz {

enum class Branch { E, O };

inline Exponent upsilon0(Branch b) { return b == Branch::E ? 1 : 2; }
inline char branch_char(Branch b) { return b == Branch::E ? 'E' : 'O'; }

struct EOParams {
    Branch branch = Branch::E;
    std::vector<Exponent> upsilon; // upsilon_1 .. upsilon_k
    Exponent c = 0;
    std::vector<Exponent> b; // b_0 .. b_{k+1}; empty means all zero

    std::size_t k() const { return upsilon.size(); }
    std::size_t level() const { return k() + 2; }

    Exponent b_at(std::size_t i) const { return i < b.size() ? b[i] : 0; }

    friend bool operator==(const EOParams&, const EOParams&) = default;
};

/// 2 * 3^i, the size of the upsilon_i domain and the period of b_i.
inline Exponent upsilon_range(std::size_t i) { return 2 * modular::pow3_u64(static_cast<unsigned>(i)); }

inline void check_upsilon_domain(const std::vector<Exponent>& upsilon)
{
    for (std::size_t i = 0; i < upsilon.size(); ++i) {
        if (upsilon[i] < 1 || upsilon[i] > upsilon_range(i + 1)) {
            throw DomainViolation("upsilon_" + std::to_string(i + 1) + " = " + std::to_string(upsilon[i]) + " outside [1, " +
                                  std::to_string(upsilon_range(i + 1)) + "]");
        }
    }
}

/// Exponent vector of the member selected by `p` (see header comment).
inline CrandallRep eo_exponents(const EOParams& p)
{
    const std::size_t k = p.k();
    CrandallRep rep;
    rep.exponents.reserve(k + 3);
    rep.exponents.push_back(0);
    Exponent a = upsilon0(p.branch) + 2 * p.b_at(0);
    rep.exponents.push_back(a);
    for (std::size_t j = 1; j <= k; ++j) {
        a += p.upsilon[j - 1] + p.b_at(j) * upsilon_range(j);
        rep.exponents.push_back(a);
    }
    a += p.c + p.b_at(k + 1) * upsilon_range(k + 1);
    rep.exponents.push_back(a);
    return rep;
}

/// The 3-smooth part sum 2^{a_i} 3^{k+1-i} (i <= k+1) at b = 0.
inline BigInt smooth_part(Branch branch, const std::vector<Exponent>& upsilon)
{
    const CrandallRep rep = eo_exponents(EOParams{branch, upsilon, 0, {}});
    std::span<const Exponent> a(rep.exponents);
    return detail::smooth_sum(a.first(a.size() - 1));
}

/// Solves 2^{c + sum upsilon_i + upsilon_0} == smooth_part (mod 3^{k+2}) by a
/// discrete log base 2. The result lies in [2, 2*3^{k+1}) and is 2 or 4 mod 6;
/// anything else is reported as DomainViolation.
inline Exponent solve_c(Branch branch, const std::vector<Exponent>& upsilon)
{
    check_upsilon_domain(upsilon);
    const std::size_t k = upsilon.size();
    const unsigned n = static_cast<unsigned>(k + 2);
    if (n > modular::kMaxPow3Exponent) throw ResourceCap("solve_c: k too large for 64-bit modular arithmetic");
    const modular::u64 mod = modular::pow3_u64(n);
    const modular::u64 order = upsilon_range(k + 1);
    const BigInt a = smooth_part(branch, upsilon) % mod;
    const modular::u64 x = modular::dlog2_mod_pow3(a.convert_to<modular::u64>(), n);
    modular::u64 shift = upsilon0(branch);
    for (Exponent u : upsilon) shift = (shift + u) % order;
    const Exponent c = (x + order - shift % order) % order;
    if (c < 2 || (c % 6 != 2 && c % 6 != 4)) {
        throw DomainViolation("solve_c: solved c = " + std::to_string(c) + " is not 2 or 4 mod 6 in [2, " + std::to_string(order) + ")");
    }
    return c;
}

/// Fills in c for the given branch and upsilon.
inline EOParams make_params(Branch branch, std::vector<Exponent> upsilon, std::vector<Exponent> b = {})
{
    EOParams p{branch, std::move(upsilon), 0, std::move(b)};
    p.c = solve_c(p.branch, p.upsilon);
    return p;
}

/// The odd natural selected by `p`; divisibility and parity are checked exactly.
inline BigInt eo_evaluate(const EOParams& p)
{
    if (p.b.size() > p.k() + 2) throw DomainViolation("eo_evaluate: b has more than k+2 entries");
    BigInt v = rep_evaluate(eo_exponents(p));
    if (!detail::is_odd(v)) throw RepresentationError(RepresentationError::Kind::NotOdd, "eo_evaluate: value " + to_decimal(v) + " is even");
    return v;
}

/// Reads the E/O family and b-parameters off any representation of an odd
/// number with at least two odd terms. Throws DomainViolation if the last gap
/// is not c + 2 b 3^{k+1} for the solved c.
inline EOParams eo_locate(const CrandallRep& rep)
{
    const auto& a = rep.exponents;
    if (a.size() < 3 || a.front() != 0) throw DomainViolation("eo_locate: need a_0 = 0 and at least two odd terms");
    const std::size_t k = a.size() - 3;
    EOParams p;
    const Exponent d0 = a[1] - a[0];
    p.branch = (d0 % 2 == 1) ? Branch::E : Branch::O;
    p.b.assign(k + 2, 0);
    p.b[0] = (d0 - upsilon0(p.branch)) / 2;
    for (std::size_t j = 1; j <= k; ++j) {
        const Exponent d = a[j + 1] - a[j];
        const Exponent range = upsilon_range(j);
        const Exponent u = (d - 1) % range + 1;
        p.upsilon.push_back(u);
        p.b[j] = (d - u) / range;
    }
    p.c = solve_c(p.branch, p.upsilon);
    const Exponent last = a[k + 2] - a[k + 1];
    const Exponent range = upsilon_range(k + 1);
    if (last < p.c || (last - p.c) % range != 0) {
        throw DomainViolation("eo_locate: last gap " + std::to_string(last) + " is not c + 2b3^{k+1} with c = " + std::to_string(p.c));
    }
    p.b[k + 1] = (last - p.c) / range;
    return p;
}

// ---------------------------------------------------------------------------
// Primitive seeds

struct PrimitiveSeed {
    EOParams params; // b all zero
    BigInt value;
    CrandallRep least_terms; // contracted representation of value

    bool expansion_duplicate() const { return params.c == 2; }
    /// Odd terms and even terms of value's orbit, read from the least-terms rep.
    std::uint64_t o() const { return least_terms.odd_terms(); }
    std::uint64_t e() const { return least_terms.top(); }

    /// (c, upsilon_k, ..., upsilon_1, upsilon_0)
    std::vector<Exponent> tuple() const
    {
        std::vector<Exponent> t{params.c};
        t.insert(t.end(), params.upsilon.rbegin(), params.upsilon.rend());
        t.push_back(upsilon0(params.branch));
        return t;
    }
};

inline PrimitiveSeed make_seed(Branch branch, std::vector<Exponent> upsilon)
{
    PrimitiveSeed s;
    s.params = make_params(branch, std::move(upsilon));
    s.value = eo_evaluate(s.params);
    s.least_terms = rep_contract(eo_exponents(s.params));
    return s;
}

/// 2^{n-1} 3^{(n-1)(n-2)/2}: families per level.
inline BigInt level_count(std::size_t n)
{
    if (n < 1) throw DomainViolation("level_count: n must be >= 1");
    return pow2(n - 1) * pow3((n - 1) * (n - 2) / 2);
}

/// (2*3^{n-1} - 1) level_count(n): families at level n+1 not containing members of level n.
inline BigInt new_set_count(std::size_t n)
{
    if (n < 1) throw DomainViolation("new_set_count: n must be >= 1");
    return (2 * pow3(n - 1) - 1) * level_count(n);
}

/// 2^{n-2} 3^{(n-2)(n-3)/2}: how often each admissible c occurs at level n.
inline BigInt c_multiplicity(std::size_t n)
{
    if (n < 2) throw DomainViolation("c_multiplicity: n must be >= 2");
    return pow2(n - 2) * pow3((n - 2) * (n - 3) / 2);
}

struct SeedOptions {
    std::size_t level_cap = 5;
    unsigned threads = 1; // 0: hardware concurrency
};

/// Decodes a lexicographic index (branch, upsilon_1, ..., upsilon_k) with upsilon_k fastest.
inline std::pair<Branch, std::vector<Exponent>> seed_coordinates(std::size_t k, std::uint64_t index)
{
    std::vector<Exponent> upsilon(k);
    for (std::size_t i = k; i >= 1; --i) {
        const Exponent range = upsilon_range(i);
        upsilon[i - 1] = index % range + 1;
        index /= range;
    }
    return {index == 0 ? Branch::E : Branch::O, std::move(upsilon)};
}

/// Every primitive seed of level n >= 3, in lexicographic order. The output
/// is identical for any thread count: workers write disjoint index slots.
inline std::vector<PrimitiveSeed> primitive_seeds(std::size_t n, const SeedOptions& opt = {})
{
    if (n < 3) throw DomainViolation("primitive_seeds: levels 1 and 2 are closed forms; n must be >= 3");
    if (n > opt.level_cap) {
        throw ResourceCap("primitive_seeds: level " + std::to_string(n) + " exceeds level cap " + std::to_string(opt.level_cap));
    }
    const std::size_t k = n - 2;
    modular::require_primitive_root(static_cast<unsigned>(n));
    const std::uint64_t total = level_count(n).convert_to<std::uint64_t>();
    std::vector<PrimitiveSeed> seeds(total);

    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
    constexpr std::uint64_t kChunk = 256;
    std::atomic<std::uint64_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            for (;;) {
                const std::uint64_t lo = next.fetch_add(kChunk);
                if (lo >= total) return;
                const std::uint64_t hi = std::min(total, lo + kChunk);
                for (std::uint64_t i = lo; i < hi; ++i) {
                    auto [branch, upsilon] = seed_coordinates(k, i);
                    seeds[i] = make_seed(branch, std::move(upsilon));
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = total;
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    return seeds;
}

} // namespace collatz
