#pragma once

// Named property suites run by `collatzlab verify`. Each returns a pass count
// and the first few failure messages; nothing here throws on a failed check.

#include "collatz/asymptotics.hpp"
#include "collatz/eolevels.hpp"
#include "collatz/families.hpp"
#include "collatz/mixing.hpp"
#include "collatz/repcore.hpp"
#include "collatz/trajectory.hpp"
#include "collatz/wirsching.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace collatz::verify {

struct SuiteResult {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t total = 0;
    std::vector<std::string> failures{};

    bool ok() const { return passed == total; }

    void check(bool cond, const std::function<std::string()>& what)
    {
        ++total;
        if (cond) {
            ++passed;
        } else if (failures.size() < 10) {
            failures.push_back(what());
        }
    }
};

struct Scale {
    std::uint64_t roundtrip_limit = 100'000;
    std::uint64_t random_reps = 1'000;
    std::uint64_t c2_limit = 100'000;
    std::uint64_t wirsching_limit = 10'000;
    std::size_t cycle_k_max = 5;
    Exponent cycle_cap = 30;
    std::uint64_t seed = 20240601;
};

struct LevelThreeRow {
    Exponent c, upsilon1, upsilon0;
    Exponent top;
    Exponent sub;
};

/// Level-3 primitive seeds as (2^top - sub)/27.
inline constexpr LevelThreeRow kLevelThreeSeeds[] = {
    {10, 1, 1, 12, 19},  {8, 2, 1, 11, 23},  {16, 3, 1, 20, 31}, {2, 4, 1, 7, 47},   {4, 5, 1, 10, 79},   {14, 6, 1, 21, 143},
    {16, 1, 2, 19, 29},  {2, 2, 2, 6, 37},   {4, 3, 2, 9, 53},   {14, 4, 2, 20, 85}, {10, 5, 2, 17, 149}, {8, 6, 2, 16, 277},
};

inline SuiteResult level_three_table()
{
    SuiteResult r{.name = "table1"};
    const auto seeds = primitive_seeds(3);
    r.check(seeds.size() == 12, [&] { return "expected 12 seeds, got " + std::to_string(seeds.size()); });
    for (std::size_t i = 0; i < std::min<std::size_t>(seeds.size(), 12); ++i) {
        const auto& row = kLevelThreeSeeds[i];
        const BigInt expected = (pow2(row.top) - row.sub) / 27;
        const std::vector<Exponent> tuple{row.c, row.upsilon1, row.upsilon0};
        r.check(seeds[i].tuple() == tuple && seeds[i].value == expected,
                [&] { return "row " + std::to_string(i + 1) + ": got m=" + to_decimal(seeds[i].value) + ", want " + to_decimal(expected); });
    }
    return r;
}

inline SuiteResult roundtrip(const Scale& s = {})
{
    SuiteResult r{.name = "roundtrip"};
    for (std::uint64_t m = 3; m <= s.roundtrip_limit; m += 2) {
        const CrandallRep rep = rep_from_trajectory(m);
        r.check(rep_evaluate(rep) == m, [&] { return "rep_evaluate(rep(" + std::to_string(m) + ")) mismatch"; });
    }
    std::mt19937_64 rng(s.seed);
    for (std::uint64_t i = 0; i < s.random_reps; ++i) {
        const std::uint64_t m = 2 * (rng() % 500'000) + 1;
        CrandallRep rep = rep_from_trajectory(m);
        const std::size_t times = 1 + rng() % 4;
        for (std::size_t j = 0; j < times; ++j) rep = rep_expand(rep);
        r.check(rep_evaluate(rep) == m && rep_contract(rep) == rep_from_trajectory(m),
                [&] { return "expansion changed the value of " + std::to_string(m); });
    }
    return r;
}

inline SuiteResult mixing()
{
    SuiteResult r{.name = "mixing"};
    for (const auto& seed : primitive_seeds(3)) {
        for (Exponent b0 = 0; b0 <= 2; ++b0) {
            const MixingCheck c = mixing_verify(seed, b0);
            r.check(c.ok(), [&] { return "level-3 seed m=" + to_decimal(seed.value) + " b0=" + std::to_string(b0); });
        }
    }
    for (const auto& seed : primitive_seeds(4)) {
        const MixingCheck c = mixing_verify(seed, 0);
        r.check(c.ok(), [&] { return "level-4 seed m=" + to_decimal(seed.value); });
    }
    const BigInt image = step_f(step_f(BigInt(151)));
    r.check(image == 227 && image == level2_x(0, 1), [&] { return "f^2(151) = " + to_decimal(image) + " is not 227 in X"; });
    return r;
}

inline SuiteResult corner_congruence(std::size_t k_max = 8, Exponent b_max = 3)
{
    SuiteResult r{.name = "prop6"};
    for (std::size_t k = 0; k <= k_max; ++k) {
        for (Exponent b = 0; b <= b_max; ++b) {
            r.check(corner_congruence_check(k, b).ok(), [&] { return "k=" + std::to_string(k) + " b=" + std::to_string(b); });
        }
    }
    return r;
}

inline SuiteResult partition_parity(const Scale& s = {})
{
    SuiteResult r{.name = "c2"};
    const PartitionReport rep = partition_parity_test(BigInt(s.c2_limit));
    r.total = rep.checked;
    r.passed = rep.agree;
    for (const auto& m : rep.counterexamples) r.failures.push_back("disagreement at m=" + to_decimal(m));
    return r;
}

inline SuiteResult gap_count()
{
    SuiteResult r{.name = "lemma-l1"};
    const std::pair<std::size_t, Exponent> cases[] = {{1, 8}, {1, 12}, {2, 20}};
    for (auto [k, rr] : cases) {
        const GapCountReport g = gap_sequence_count(k, rr);
        r.check(g.ok(), [&] {
            return "k=" + std::to_string(k) + " r=" + std::to_string(rr) + ": count " + std::to_string(g.count) + " < bound " + to_decimal(g.bound);
        });
    }
    return r;
}

/// Every integral q* >= 1 over all profiles with k <= k_max and a_{k+1} <= cap.
inline SuiteResult cycles(const Scale& s = {})
{
    SuiteResult r{.name = "cycles"};
    for (std::size_t k = 0; k <= s.cycle_k_max; ++k) {
        for_each_profile(k, s.cycle_cap, [&](std::span<const Exponent> a) {
            const CycleCandidate c = cycle_solve(a);
            r.check(c.status != CycleStatus::NonTrivialIntegral, [&] { return "integral q* = " + to_string(c.q_star) + " at " + to_string(CrandallRep{c.exponents}); });
        });
    }
    return r;
}

/// Expected odd-term count of corner_odd(k): k+2, except k = 0 where the
/// seed is 1 (a c = 2 duplicate).
inline std::uint64_t corner_odd_expected_o(std::size_t k) { return k == 0 ? 1 : k + 2; }

inline SuiteResult corner(std::size_t even_k_max = 5, std::size_t odd_k_max = 4)
{
    SuiteResult r{.name = "corner"};
    for (std::size_t k = 0; k <= even_k_max; ++k) {
        const BigInt m = corner_even(k);
        const OrbitCounts c = orbit_counts_auto(m);
        const std::uint64_t e = modular::pow3_u64(static_cast<unsigned>(k + 1)) + k + 2;
        r.check(c.odd == k + 2 && c.even == e, [&] {
            return "corner_even(" + std::to_string(k) + "): o=" + std::to_string(c.odd) + " e=" + std::to_string(c.even);
        });
        r.check(m == corner_even_seed(k) && m == eo_evaluate(corner_even_params(k)),
                [&] { return "corner_even(" + std::to_string(k) + ") disagrees with its E/O form"; });
    }
    for (std::size_t k = 0; k <= odd_k_max; ++k) {
        const BigInt m = corner_odd(k);
        const OrbitCounts c = orbit_counts_auto(m);
        r.check(c.odd == corner_odd_expected_o(k), [&] { return "corner_odd(" + std::to_string(k) + "): o=" + std::to_string(c.odd); });
        r.check(m == eo_evaluate(corner_odd_params(k)), [&] { return "corner_odd(" + std::to_string(k) + ") disagrees with its E/O form"; });
    }
    return r;
}

inline constexpr Exponent kZkAnchors[] = {4, 19, 14, 141, 88, 1223, 738, 10945};

inline SuiteResult zk_suite(std::size_t eval_k_max = 5)
{
    SuiteResult r{.name = "zk"};
    for (std::size_t k = 0; k < std::size(kZkAnchors); ++k) {
        r.check(zk(k) == kZkAnchors[k], [&] { return "z_" + std::to_string(k) + " = " + std::to_string(zk(k)); });
    }
    for (std::size_t k = 0; k <= eval_k_max; ++k) {
        const BigInt m = zk_evaluate(k);
        const OrbitCounts c = orbit_counts_auto(m);
        // k = 0 has c = 2, so its member 1 has fewer odd terms than the level.
        const bool duplicate = zk(k) - k - 2 == 2;
        r.check(duplicate ? m == 1 : (c.odd == k + 2 && c.even == zk(k)), [&] { return "zk_evaluate(" + std::to_string(k) + ") orbit mismatch"; });
        r.check(m == eo_evaluate(zk_params(k)), [&] { return "zk_evaluate(" + std::to_string(k) + ") disagrees with its E/O form"; });
        if (k >= 1) {
            r.check(solve_c(Branch::O, std::vector<Exponent>(k, 1)) == zk(k) - k - 2,
                    [&] { return "solved c for z_" + std::to_string(k) + " differs"; });
        }
    }
    return r;
}

inline SuiteResult wirsching(const Scale& s = {})
{
    SuiteResult r{.name = "wirsching"};
    const WirschingSeq s3 = wirsching_encode(3);
    r.check(s3 == WirschingSeq({0, 0, 3}) && s3.length() == 2 && s3.absolute() == 3 && s3.norm() == 5 && wirsching_eval(s3, 1) == 3,
            [&] { return "s(3) = " + to_string(s3); });
    r.check(wirsching_eval(WirschingSeq({0, 0, 3, 1}), 1) == 3, [] { return "zeta_(0,0,3,1)(1) != 3"; });
    for (std::uint64_t m = 1; m <= s.wirsching_limit; m += 2) {
        r.check(wirsching_eval(wirsching_encode(m), 1) == m, [&] { return "zeta_s(m)(1) != m for m=" + std::to_string(m); });
    }
    return r;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"roundtrip", "table1", "mixing", "prop6", "c2", "lemma-l1", "cycles", "corner", "zk", "wirsching"};
    return names;
}

inline std::optional<SuiteResult> run_suite(const std::string& name, const Scale& s = {})
{
    if (name == "roundtrip") return roundtrip(s);
    if (name == "table1") return level_three_table();
    if (name == "mixing") return mixing();
    if (name == "prop6") return corner_congruence();
    if (name == "c2") return partition_parity(s);
    if (name == "lemma-l1") return gap_count();
    if (name == "cycles") return cycles(s);
    if (name == "corner") return corner();
    if (name == "zk") return zk_suite();
    if (name == "wirsching") return wirsching(s);
    return std::nullopt;
}

} // namespace collatz::verify
