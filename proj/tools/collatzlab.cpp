// collatzlab: command-line front end for the collatz headers.
//
// Exit codes: 0 success, 1 usage error, 2 step budget exceeded,
// 3 verification failure.

#include "collatz/collatz.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace collatz;
using format::Json;

enum class Output { Human, Json, Csv };

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

struct RunConfig {
    Output output = Output::Human;
    std::uint64_t budget = kDefaultStepBudget;
    std::size_t level_cap = 5;
    unsigned threads = 0;
    std::string cache_dir;
    bool quiet = false;
};

const std::map<std::string, Output> kOutputNames{{"human", Output::Human}, {"json", Output::Json}, {"csv", Output::Csv}};
const std::map<std::string, MapKind> kMapNames{{"f", MapKind::F}, {"t", MapKind::T}};

std::string rational_with_decimal(const Rational& q) { return to_string(q) + " (" + format::fixed6(rational_to_double(q)) + ")"; }

// ---------------------------------------------------------------------------

struct TrajArgs {
    std::string m;
    MapKind map = MapKind::F;
    bool full = false;
};

/// First `budget` terms, for the partial listing after a budget overrun.
Trajectory partial_trajectory(const BigInt& m, MapKind map, std::uint64_t budget)
{
    Trajectory t{m, {m}, map};
    BigInt x = m;
    for (std::uint64_t i = 0; i < budget && x != 1; ++i) {
        x = step(x, map);
        t.terms.push_back(x);
    }
    return t;
}

int cmd_traj(const RunConfig& cfg, const TrajArgs& args)
{
    const BigInt m = parse_natural(args.m);
    if (m < 1) throw DomainViolation("traj: m must be >= 1");
    Trajectory traj;
    try {
        traj = run_trajectory(m, args.map, cfg.budget);
    } catch (const StepBudgetExceeded& e) {
        if (!cfg.quiet) std::cout << "terms: " << format::terms(partial_trajectory(m, args.map, cfg.budget), args.full) << " (partial)\n";
        throw;
    }
    std::optional<GapSequence> gaps;
    if (args.map == MapKind::F && detail::is_odd(m)) gaps = gap_sequence(traj);
    std::optional<SequenceStats> st;
    if (m >= 2) st = stats(m, cfg.budget);

    if (cfg.output == Output::Json) {
        Json j;
        j["m"] = to_decimal(m);
        j["map"] = args.map == MapKind::F ? "f" : "t";
        j["steps"] = traj.steps();
        if (!cfg.quiet) {
            std::vector<std::string> terms;
            for (const auto& x : traj.terms) terms.push_back(to_decimal(x));
            j["terms"] = terms;
        }
        if (gaps) j["gaps"] = gaps->gaps;
        if (st) {
            j["e"] = st->e;
            j["o"] = st->o;
            j["sigma_inf"] = st->sigma_inf;
            j["completeness"] = to_string(st->completeness);
            j["ones_ratio"] = to_string(st->ones_ratio);
            j["gamma"] = format::fixed6(st->gamma);
            j["res"] = format::fixed6(st->res);
        }
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    if (cfg.output == Output::Csv) {
        std::cout << "m,map,steps,e,o,sigma_inf,completeness,ones_ratio,gamma,res\n";
        std::cout << to_decimal(m) << ',' << (args.map == MapKind::F ? "f" : "t") << ',' << traj.steps();
        if (st) {
            std::cout << ',' << st->e << ',' << st->o << ',' << st->sigma_inf << ',' << to_string(st->completeness) << ','
                      << to_string(st->ones_ratio) << ',' << format::fixed6(st->gamma) << ',' << format::fixed6(st->res);
        } else {
            std::cout << ",,,,,,,";
        }
        std::cout << '\n';
        return kExitOk;
    }
    if (!cfg.quiet) std::cout << "terms: " << format::terms(traj, args.full) << '\n';
    std::cout << "steps: " << traj.steps() << '\n';
    if (gaps && !cfg.quiet) std::cout << "gaps: " << format::gaps(*gaps) << '\n';
    if (st) {
        std::cout << "e=" << st->e << " o=" << st->o << " sigma_inf=" << st->sigma_inf << '\n';
        std::cout << "C=" << rational_with_decimal(st->completeness) << '\n';
        std::cout << "rho=" << rational_with_decimal(st->ones_ratio) << '\n';
        std::cout << "Gamma=" << format::fixed6(st->gamma) << '\n';
        std::cout << "Res=" << format::fixed6(st->res) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct RepArgs {
    std::string m;
    std::size_t expand = 0;
};

int cmd_rep(const RunConfig& cfg, const RepArgs& args)
{
    const BigInt m = parse_natural(args.m);
    CrandallRep rep = rep_from_trajectory(m, cfg.budget);
    for (std::size_t i = 0; i < args.expand; ++i) rep = rep_expand(rep);
    const BigInt value = rep_evaluate(rep);
    std::optional<EOParams> eo;
    if (rep.exponents.size() >= 3) eo = eo_locate(rep);

    if (cfg.output == Output::Json) {
        Json j;
        j["m"] = to_decimal(m);
        j["exponents"] = rep.exponents;
        j["level"] = rep.level();
        j["value"] = to_decimal(value);
        if (eo) {
            j["branch"] = std::string(1, branch_char(eo->branch));
            j["upsilon"] = eo->upsilon;
            j["c"] = eo->c;
            j["b"] = eo->b;
        }
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    std::cout << "rep: " << to_string(rep) << "  level=" << rep.level() << "  value=" << to_decimal(value) << '\n';
    if (eo) {
        std::cout << "family: " << branch_char(eo->branch) << "  upsilon=(" << format::join(eo->upsilon, ',') << ")  c=" << eo->c
                  << "  b=(" << format::join(eo->b, ',') << ")\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SeedsArgs {
    std::size_t level = 3;
    bool count_only = false;
    bool verify = false;
};

int cmd_seeds(const RunConfig& cfg, const SeedsArgs& args)
{
    if (args.count_only) {
        if (args.level < 1) throw DomainViolation("seeds: level must be >= 1");
        std::cout << to_decimal(level_count(args.level)) << '\n';
        return kExitOk;
    }
    const auto seeds = primitive_seeds(args.level, SeedOptions{cfg.level_cap, cfg.threads});
    std::uint64_t failures = 0;
    if (cfg.output == Output::Csv) std::cout << format::kSeedCsvHeader << '\n';
    for (const auto& s : seeds) {
        switch (cfg.output) {
        case Output::Json: std::cout << format::seed_json_line(s) << '\n'; break;
        case Output::Csv: std::cout << format::seed_csv_row(s) << '\n'; break;
        case Output::Human: std::cout << format::seed_human_row(s) << '\n'; break;
        }
        if (args.verify) {
            const OrbitCounts c = orbit_counts_auto(s.value, cfg.budget);
            const bool ok = c.odd == s.o() && c.even == s.e() && (s.expansion_duplicate() || c.odd == args.level);
            if (!ok) {
                ++failures;
                std::cerr << "verify: seed " << to_decimal(s.value) << " has o=" << c.odd << " e=" << c.even << '\n';
            }
        }
    }
    if (args.verify) {
        std::cerr << "verify: " << (seeds.size() - failures) << "/" << seeds.size() << " seeds consistent with their orbits\n";
        if (failures) return kExitVerify;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct CornerArgs {
    std::string family = "even";
    std::size_t k_min = 0;
    std::size_t k_max = 5;
};

/// log10(Res - 1) from the exact difference 2^e - m 3^o.
std::string log10_res_excess(const CornerRow& r)
{
    const BigInt den = r.m * pow3(r.o);
    const BigInt num = pow2(r.e) - den;
    if (num <= 0) return "-";
    return format::fixed6((log_natural(num) - log_natural(den)) / std::log(10.0));
}

int cmd_corner(const RunConfig& cfg, const CornerArgs& args)
{
    const CornerFamily fam = args.family == "even" ? CornerFamily::Even : CornerFamily::Odd;
    if (args.k_max > kGammaTableCap) throw ResourceCap("corner: k-max above " + std::to_string(kGammaTableCap));
    const auto rows = corner_table(fam, args.k_min, args.k_max, cfg.budget);
    if (cfg.output == Output::Csv) std::cout << "k,m,o,e,completeness,gamma,res,log10_res_excess\n";
    for (const auto& r : rows) {
        const std::string m = cfg.quiet ? std::to_string(to_decimal(r.m).size()) + " digits" : to_decimal(r.m);
        if (cfg.output == Output::Json) {
            Json j;
            j["k"] = r.k;
            j["m"] = to_decimal(r.m);
            j["o"] = r.o;
            j["e"] = r.e;
            j["completeness"] = to_string(r.completeness);
            j["gamma"] = format::fixed6(r.gamma);
            j["res"] = format::fixed6(r.res);
            j["log10_res_excess"] = log10_res_excess(r);
            std::cout << j.dump() << '\n';
        } else if (cfg.output == Output::Csv) {
            std::cout << r.k << ',' << to_decimal(r.m) << ',' << r.o << ',' << r.e << ',' << to_string(r.completeness) << ','
                      << format::fixed6(r.gamma) << ',' << format::fixed6(r.res) << ',' << log10_res_excess(r) << '\n';
        } else {
            std::cout << "k=" << r.k << "  m=" << m << "  o=" << r.o << "  e=" << r.e << "  C=" << rational_with_decimal(r.completeness)
                      << "  Gamma=" << format::fixed6(r.gamma) << "  Res=" << format::fixed6(r.res)
                      << "  log10(Res-1)=" << log10_res_excess(r) << '\n';
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct ZkArgs {
    std::size_t k_max = 7;
    std::size_t eval_max = 5;
};

int cmd_zk(const RunConfig& cfg, const ZkArgs& args)
{
    if (cfg.output == Output::Csv) std::cout << "k,z,c,m,o,e\n";
    for (std::size_t k = 0; k <= args.k_max; ++k) {
        const Exponent z = zk(k);
        const Exponent c = z - k - 2;
        std::string m, o, e;
        if (k <= args.eval_max) {
            const BigInt v = zk_evaluate(k);
            const OrbitCounts counts = orbit_counts_auto(v, cfg.budget);
            m = to_decimal(v);
            o = std::to_string(counts.odd);
            e = std::to_string(counts.even);
        }
        if (cfg.output == Output::Json) {
            Json j;
            j["k"] = k;
            j["z"] = z;
            j["c"] = c;
            if (!m.empty()) {
                j["m"] = m;
                j["o"] = std::stoull(o);
                j["e"] = std::stoull(e);
            }
            std::cout << j.dump() << '\n';
        } else if (cfg.output == Output::Csv) {
            std::cout << k << ',' << z << ',' << c << ',' << m << ',' << o << ',' << e << '\n';
        } else {
            std::cout << "k=" << k << "  z=" << z << "  c=" << c;
            if (!m.empty()) std::cout << "  m=" << (cfg.quiet ? std::to_string(m.size()) + " digits" : m) << "  o=" << o << "  e=" << e;
            std::cout << '\n';
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
    std::uint64_t limit = 0;
    std::string stat = "completeness";
    std::uint64_t shard = 100'000;
};

int cmd_scan(const RunConfig& cfg, const ScanArgs& args)
{
    const auto kind = parse_stat(args.stat);
    if (!kind) throw DomainViolation("scan: unknown stat " + args.stat);
    std::optional<ShardCache> cache;
    if (!cfg.cache_dir.empty()) cache.emplace(cfg.cache_dir);
    ScanOptions opt{cfg.threads, args.shard, cfg.budget, cache ? &*cache : nullptr};
    const auto records = scan_records(args.limit, *kind, opt);
    if (cfg.output == Output::Json) {
        for (const auto& r : records) std::cout << format::record_json(r).dump() << '\n';
    } else {
        std::cout << kRecordCsvHeader << '\n';
        for (const auto& r : records) std::cout << record_csv_row(r) << '\n';
    }
    if (cache && !cfg.quiet) std::cerr << "cache: " << cache->hits() << " shard(s) reused\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct MixingArgs {
    std::size_t level = 3;
    Exponent b0 = 0;
};

int cmd_mixing(const RunConfig& cfg, const MixingArgs& args)
{
    const auto seeds = primitive_seeds(args.level, SeedOptions{cfg.level_cap, cfg.threads});
    std::uint64_t ok = 0;
    for (const auto& s : seeds) {
        const MixingCheck c = mixing_verify(s, args.b0);
        ok += c.ok();
        if (cfg.quiet) continue;
        if (cfg.output == Output::Json) {
            Json j;
            j["tuple"] = s.tuple();
            j["member"] = to_decimal(c.member);
            j["image"] = to_decimal(c.image);
            j["iterations"] = c.predicted.iterations(args.b0);
            j["predicted"] = std::string(1, branch_char(c.predicted.target));
            j["observed"] = std::string(1, branch_char(c.observed));
            j["ok"] = c.ok();
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "(" << format::join(s.tuple(), ',') << ")  " << to_decimal(c.member) << " -f^" << c.predicted.iterations(args.b0)
                      << "-> " << to_decimal(c.image) << "  predicted " << branch_char(c.predicted.target) << "  observed "
                      << branch_char(c.observed) << (c.ok() ? "  ok" : "  FAIL") << '\n';
        }
    }
    std::cerr << "mixing: " << ok << "/" << seeds.size() << " confirmed\n";
    return ok == seeds.size() ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------

int cmd_c2(const RunConfig& cfg, const std::string& limit)
{
    const PartitionReport r = partition_parity_test(parse_natural(limit), cfg.budget);
    if (cfg.output == Output::Json) {
        Json j;
        j["checked"] = r.checked;
        j["agree"] = r.agree;
        j["disagree"] = r.disagree;
        j["ambiguous"] = r.ambiguous;
        j["e_count"] = r.e_count;
        j["o_count"] = r.o_count;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "checked=" << r.checked << " agree=" << r.agree << " disagree=" << r.disagree << " ambiguous=" << r.ambiguous
                  << " E=" << r.e_count << " O=" << r.o_count << '\n';
        for (const auto& m : r.counterexamples) std::cout << "counterexample: " << to_decimal(m) << '\n';
    }
    return r.ok() ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& suites)
{
    std::vector<std::string> names = suites;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) names = verify::suite_names();
    bool all_ok = true;
    for (const auto& name : names) {
        const auto r = verify::run_suite(name);
        if (!r) throw DomainViolation("verify: unknown suite " + name);
        all_ok = all_ok && r->ok();
        if (cfg.output == Output::Json) {
            Json j;
            j["suite"] = r->name;
            j["passed"] = r->passed;
            j["total"] = r->total;
            j["ok"] = r->ok();
            j["failures"] = r->failures;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << (r->ok() ? "PASS " : "FAIL ") << r->name << " " << r->passed << "/" << r->total << '\n';
            for (const auto& f : r->failures) std::cout << "  " << f << '\n';
        }
    }
    return all_ok ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------

int cmd_wirsching(const RunConfig& cfg, const std::string& arg)
{
    const BigInt m = parse_natural(arg);
    const WirschingSeq s = wirsching_encode(m, cfg.budget);
    const Rational back = wirsching_eval(s, 1);
    if (cfg.output == Output::Json) {
        Json j;
        j["m"] = to_decimal(m);
        j["alphas"] = s.alphas();
        j["length"] = s.length();
        j["absolute"] = s.absolute();
        j["norm"] = s.norm();
        j["small"] = s.is_small();
        j["zeta_at_1"] = to_string(back);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "s=" << to_string(s) << "  l=" << s.length() << "  |s|=" << s.absolute() << "  ||s||=" << s.norm()
                  << "  small=" << (s.is_small() ? "yes" : "no") << "  zeta_s(1)=" << to_string(back) << '\n';
    }
    return back == m ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------

struct CycleArgs {
    std::size_t k_max = 5;
    Exponent cap = 30;
};

int cmd_cycle(const RunConfig& cfg, const CycleArgs& args)
{
    std::uint64_t profiles = 0, trivial = 0, nontrivial = 0;
    for (std::size_t k = 0; k <= args.k_max; ++k) {
        std::uint64_t kp = 0, kt = 0, kn = 0;
        for_each_profile(k, args.cap, [&](std::span<const Exponent> a) {
            ++kp;
            const CycleCandidate c = cycle_solve(a);
            if (c.status == CycleStatus::Trivial) ++kt;
            if (c.status == CycleStatus::NonTrivialIntegral) {
                ++kn;
                std::cout << "non-trivial: " << to_string(CrandallRep{c.exponents}) << " q*=" << to_string(c.q_star) << '\n';
            }
        });
        if (!cfg.quiet) std::cout << "k=" << k << "  profiles=" << kp << "  q*=1: " << kt << "  other integral: " << kn << '\n';
        profiles += kp;
        trivial += kt;
        nontrivial += kn;
    }
    std::cout << "total profiles=" << profiles << "  q*=1: " << trivial << "  other integral: " << nontrivial << '\n';
    return nontrivial == 0 ? kExitOk : kExitVerify;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"collatzlab: Collatz trajectories, Crandall representations and E/O seed families"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string output = "human";
    app.add_option("--format", output, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--budget", cfg.budget, "Step budget per trajectory")->check(CLI::PositiveNumber);
    app.add_option("--level-cap", cfg.level_cap, "Highest level allowed for seed enumeration")->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
    app.add_option("--cache", cfg.cache_dir, "Directory for scan shard cache");
    app.add_flag("--quiet", cfg.quiet, "Terser output");
    app.fallthrough();

    TrajArgs traj;
    auto* c_traj = app.add_subcommand("traj", "Trajectory, gaps and statistics of m");
    c_traj->add_option("m", traj.m, "Start value (decimal)")->required();
    c_traj->add_option("--map", traj.map, "Iteration map")->transform(CLI::CheckedTransformer(kMapNames));
    c_traj->add_flag("--full", traj.full, "Print every term");

    RepArgs rep;
    auto* c_rep = app.add_subcommand("rep", "Crandall representation and E/O family of odd m");
    c_rep->add_option("m", rep.m, "Odd start value")->required();
    c_rep->add_option("--expand", rep.expand, "Apply this many expansion steps");

    SeedsArgs seeds;
    auto* c_seeds = app.add_subcommand("seeds", "Primitive seeds of a level");
    c_seeds->add_option("level", seeds.level, "Level (>= 3)")->required();
    c_seeds->add_flag("--count-only", seeds.count_only, "Print only the number of families");
    c_seeds->add_flag("--verify", seeds.verify, "Check each seed against its orbit");

    CornerArgs corner;
    auto* c_corner = app.add_subcommand("corner", "Orbit statistics of the corner families");
    c_corner->add_option("--family", corner.family)->check(CLI::IsMember({"even", "odd"}));
    c_corner->add_option("--k-min", corner.k_min);
    c_corner->add_option("--k-max", corner.k_max);

    ZkArgs zkargs;
    auto* c_zk = app.add_subcommand("zk", "The z_k exponents and their family members");
    c_zk->add_option("--k-max", zkargs.k_max);
    c_zk->add_option("--eval-max", zkargs.eval_max, "Evaluate members up to this k");

    ScanArgs scan;
    auto* c_scan = app.add_subcommand("scan", "Record scan over [3, limit]");
    c_scan->add_option("limit", scan.limit)->required()->check(CLI::Range(std::uint64_t{3}, std::numeric_limits<std::uint64_t>::max() / 4));
    c_scan->add_option("--stat", scan.stat)->check(CLI::IsMember({"completeness", "gamma", "res"}));
    c_scan->add_option("--shard", scan.shard, "Shard width")->check(CLI::PositiveNumber);

    MixingArgs mixing;
    auto* c_mixing = app.add_subcommand("mixing", "Check the mixing rule for every seed of a level");
    c_mixing->add_option("level", mixing.level)->required();
    c_mixing->add_option("--b0", mixing.b0);

    std::string c2_limit;
    auto* c_c2 = app.add_subcommand("c2", "Compare first-gap parity with E/O family membership");
    c_c2->add_option("limit", c2_limit)->required();

    std::vector<std::string> suites;
    auto* c_verify = app.add_subcommand("verify", "Run named property suites (default: all)");
    c_verify->add_option("suite", suites);

    std::string wm;
    auto* c_wirsching = app.add_subcommand("wirsching", "Wirsching sequence of m");
    c_wirsching->add_option("m", wm)->required();

    CycleArgs cycle;
    auto* c_cycle = app.add_subcommand("cycle", "Exhaustive cycle-equation search");
    c_cycle->add_option("--k-max", cycle.k_max);
    c_cycle->add_option("--cap", cycle.cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    cfg.output = kOutputNames.at(output);

    try {
        if (*c_traj) return cmd_traj(cfg, traj);
        if (*c_rep) return cmd_rep(cfg, rep);
        if (*c_seeds) return cmd_seeds(cfg, seeds);
        if (*c_corner) return cmd_corner(cfg, corner);
        if (*c_zk) return cmd_zk(cfg, zkargs);
        if (*c_scan) return cmd_scan(cfg, scan);
        if (*c_mixing) return cmd_mixing(cfg, mixing);
        if (*c_c2) return cmd_c2(cfg, c2_limit);
        if (*c_verify) return cmd_verify(cfg, suites);
        if (*c_wirsching) return cmd_wirsching(cfg, wm);
        if (*c_cycle) return cmd_cycle(cfg, cycle);
    } catch (const StepBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CollatzError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
