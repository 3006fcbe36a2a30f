// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Time limits are part of each criterion.

#include "collatz/collatz.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace collatz;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && elapsed > limit_seconds) {
        out.ok = false;
        out.detail = "took longer than " + std::to_string(limit_seconds) + " s";
    }
    if (!out.ok) ++failures;
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2fs", elapsed);
    std::cout << (out.ok ? "PASS" : "FAIL") << "  [" << (id < 10 ? " " : "") << id << "] " << title << " (" << time_buf << ")";
    if (!out.detail.empty()) std::cout << ": " << out.detail;
    std::cout << std::endl;
}

unsigned worker_threads() { return std::max(2u, std::thread::hardware_concurrency()); }

// Brute-force enumeration of 0 = a_0 < ... < a_k with sum 3^{k-i} 2^{a_i} == n.
void smooth_enumerate(std::uint64_t n, std::size_t k, std::vector<Exponent>& a, std::uint64_t partial, std::vector<std::vector<Exponent>>& out)
{
    if (a.size() == k + 1) {
        if (partial == n) out.push_back(a);
        return;
    }
    std::uint64_t w = 1;
    for (std::size_t j = a.size(); j < k; ++j) w *= 3;
    for (Exponent ai = a.back() + 1; (w << ai) + partial <= n; ++ai) {
        a.push_back(ai);
        smooth_enumerate(n, k, a, partial + (w << ai), out);
        a.pop_back();
    }
}

std::vector<std::vector<Exponent>> smooth_brute(std::uint64_t n, std::size_t k)
{
    std::uint64_t w = 1;
    for (std::size_t j = 0; j < k; ++j) w *= 3;
    std::vector<std::vector<Exponent>> out;
    std::vector<Exponent> a{0};
    if (w <= n) smooth_enumerate(n, k, a, w, out);
    return out;
}

std::string seed_json_dump(std::size_t level, unsigned threads)
{
    std::string out;
    for (const auto& s : primitive_seeds(level, SeedOptions{5, threads})) out += format::seed_json_line(s) + "\n";
    return out;
}

} // namespace

int main()
{
    criterion(1, "Level-3 seed table reproduction", 1.0, [] {
        Outcome o;
        const auto t = verify::level_three_table();
        o.require(t.ok(), t.failures.empty() ? "table mismatch" : t.failures.front());
        const auto seeds = primitive_seeds(3);
        o.require(seeds[0].tuple() == std::vector<Exponent>{10, 1, 1} && seeds[0].value == 151, "(10,1,1) -> 151");
        o.require(seeds[7].tuple() == std::vector<Exponent>{2, 2, 2} && seeds[7].value == 1, "(2,2,2) -> 1");
        o.require(seeds[11].tuple() == std::vector<Exponent>{8, 6, 2} && seeds[11].value == 2417, "(8,6,2) -> 2417");
        return o;
    });

    criterion(2, "Level counts 12/216/11664, seeds odd and reaching 1, o = n off c=2", 120.0, [] {
        Outcome o;
        const std::pair<std::size_t, std::size_t> expected[] = {{3, 12}, {4, 216}, {5, 11664}};
        for (auto [n, count] : expected) {
            const auto seeds = primitive_seeds(n, SeedOptions{5, worker_threads()});
            o.require(seeds.size() == count, "level " + std::to_string(n) + " has " + std::to_string(seeds.size()) + " seeds");
            for (const auto& s : seeds) {
                o.require(s.value > 0 && detail::is_odd(s.value), "seed " + to_decimal(s.value) + " not a positive odd integer");
                const OrbitCounts c = orbit_counts_auto(s.value);
                if (!s.expansion_duplicate()) o.require(c.odd == n, "seed " + to_decimal(s.value) + " has o=" + std::to_string(c.odd));
            }
        }
        return o;
    });

    criterion(3, "c-multiplicity 2 at level 3 and 12 at level 4", 10.0, [] {
        Outcome o;
        for (auto [n, mult] : {std::pair<std::size_t, int>{3, 2}, {4, 12}}) {
            std::map<Exponent, int> counts;
            for (const auto& s : primitive_seeds(n)) ++counts[s.params.c];
            for (auto [c, k] : counts) o.require(k == mult, "level " + std::to_string(n) + ": c=" + std::to_string(c) + " appears " + std::to_string(k) + " times");
            o.require(BigInt(mult) == c_multiplicity(n), "multiplicity formula at level " + std::to_string(n));
        }
        return o;
    });

    criterion(4, "Statistics anchors for 3, 993 and the 22-digit record", 5.0, [] {
        Outcome o;
        const auto s = stats(3);
        o.require(s.completeness == Rational(2, 5), "C(3)");
        o.require(s.ones_ratio == Rational(2, 5), "rho(3)");
        o.require(std::abs(s.gamma - 5.0 / std::log(3.0)) <= 1e-12, "Gamma(3)");
        o.require(s.sigma_inf == 5, "sigma_inf(3)");
        o.require(std::abs(stats(993).res - 1.253142) <= 5e-7, "Res(993)");
        o.require(std::abs(big_completeness_check() - 0.606061) <= 5e-7, "C(7219136416377236271195)");
        return o;
    });

    criterion(5, "Record scans: completeness to 10^6, Res to 10^5", 60.0, [] {
        Outcome o;
        const ScanOptions opt{worker_threads()};
        const auto c = scan_records(1'000'000, StatKind::Completeness, opt);
        o.require(!c.empty() && c.front().m == 3 && format_value(c.front().value) == "0.400000", "first completeness record");
        for (const auto& r : c) o.require(r.value < kLog3Of2, "record at " + std::to_string(r.m) + " reaches ln2/ln3");
        const auto res = scan_records(100'000, StatKind::Res, opt);
        o.require(!res.empty() && res.back().m == 993, "Res peak");
        return o;
    });

    criterion(6, "Corner families reach 1 with the expected counts", 120.0, [] {
        Outcome o;
        for (std::size_t k = 0; k <= 5; ++k) {
            const OrbitCounts c = orbit_counts_auto(corner_even(k));
            o.require(c.odd == k + 2 && c.even == pow3(k + 1) + k + 2, "corner_even(" + std::to_string(k) + ")");
        }
        o.require(corner_even(0) == 3 && corner_even(1) == 151, "corner_even anchors");
        for (std::size_t k = 0; k <= 4; ++k) {
            const OrbitCounts c = orbit_counts_auto(corner_odd(k));
            o.require(c.odd == verify::corner_odd_expected_o(k), "corner_odd(" + std::to_string(k) + ") has o=" + std::to_string(c.odd));
        }
        return o;
    });

    criterion(7, "Gamma along the even corner decreases and stays above 1/ln2", 60.0, [] {
        Outcome o;
        const auto rows = gamma_limit_table(6);
        o.require(rows.size() == 7, "row count");
        o.require(std::abs(rows[0].gamma - 5.0 / std::log(3.0)) <= 1e-9, "k=0 value");
        return o;
    });

    criterion(8, "z_k anchors and members reaching 1", 10.0, [] {
        Outcome o;
        for (std::size_t k = 0; k < std::size(verify::kZkAnchors); ++k) o.require(zk(k) == verify::kZkAnchors[k], "z_" + std::to_string(k));
        for (std::size_t k = 0; k <= 5; ++k) o.require(orbit_counts_auto(zk_evaluate(k)).steps() > 0, "zk_evaluate(" + std::to_string(k) + ")");
        return o;
    });

    criterion(9, "Representation roundtrip to 10^5 and expansion invariance", 60.0, [] {
        Outcome o;
        for (std::uint64_t m = 3; m <= 100'000; m += 2) {
            if (rep_evaluate(rep_from_trajectory(m)) != m) o.require(false, "roundtrip at " + std::to_string(m));
        }
        std::mt19937_64 rng(97);
        for (int i = 0; i < 1000; ++i) {
            const std::uint64_t m = 2 * (rng() % 1'000'000) + 1;
            CrandallRep rep = rep_from_trajectory(m);
            const std::size_t times = 1 + rng() % 6;
            for (std::size_t j = 0; j < times; ++j) rep = rep_expand(rep);
            o.require(rep_evaluate(rep) == m && rep_contract(rep) == rep_from_trajectory(m), "expansion at " + std::to_string(m));
        }
        return o;
    });

    criterion(10, "3-smooth special representations agree with brute force", 60.0, [] {
        Outcome o;
        for (std::uint64_t n = 1; n <= 10'000; ++n) {
            for (std::size_t k = 0; k <= 8; ++k) {
                const auto brute = smooth_brute(n, k);
                const auto rep = smooth_special_rep(n, k);
                o.require(brute.size() <= 1, "two representations for n=" + std::to_string(n));
                o.require(rep.has_value() == !brute.empty() && (!rep || rep->exponents == brute.front()),
                          "n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
        }
        std::vector<std::size_t> levels;
        for (std::size_t k = 0; k <= 8; ++k) {
            if (smooth_special_rep(19, k)) levels.push_back(k);
        }
        o.require(levels == std::vector<std::size_t>{1, 2}, "19 levels");
        return o;
    });

    criterion(11, "Wirsching anchors and evaluation roundtrip", 60.0, [] {
        Outcome o;
        const auto r = verify::wirsching();
        o.require(r.ok(), r.failures.empty() ? "" : r.failures.front());
        return o;
    });

    criterion(12, "Cycle equation: q* = 1 is the only integral solution >= 1", 120.0, [] {
        Outcome o;
        const auto r = verify::cycles();
        o.require(r.ok(), r.failures.empty() ? "" : r.failures.front());
        std::uint64_t trivial = 0;
        for (std::size_t k = 1; k <= 6; ++k) {
            const auto rep = cycle_lower_bound_check(k, 30);
            o.require(rep.bound_violations == 0, "bound violation at k=" + std::to_string(k));
            trivial += rep.trivial;
        }
        o.require(trivial > 0, "no trivial solution found");
        return o;
    });

    criterion(13, "Congruence and identity for k <= 8, b <= 3", 1.0, [] {
        Outcome o;
        const auto r = verify::corner_congruence(8, 3);
        o.require(r.ok(), r.failures.empty() ? "" : r.failures.front());
        return o;
    });

    criterion(14, "Mixing classification confirmed by iteration", 60.0, [] {
        Outcome o;
        const auto r = verify::mixing();
        o.require(r.ok(), r.failures.empty() ? "" : r.failures.front());
        o.require(r.total == 12 * 3 + 216 + 1, "case count");
        return o;
    });

    criterion(15, "Gap parity agrees with E/O family membership to 10^5", 60.0, [] {
        Outcome o;
        const auto r = partition_parity_test(100'000);
        o.require(r.ok() && r.checked == 49'999, std::to_string(r.disagree) + " disagreements, " + std::to_string(r.ambiguous) + " ambiguous");
        return o;
    });

    criterion(16, "Realized gap sequences meet the counting bound", 60.0, [] {
        Outcome o;
        const auto r = verify::gap_count();
        o.require(r.ok(), r.failures.empty() ? "" : r.failures.front());
        return o;
    });

    criterion(17, "Level-5 JSON identical for 1 and N threads", 120.0, [] {
        Outcome o;
        const std::string one = seed_json_dump(5, 1);
        const std::string many = seed_json_dump(5, worker_threads());
        o.require(!one.empty() && one == many, "outputs differ");
        return o;
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
