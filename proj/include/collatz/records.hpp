#pragma once

// Record scans over [3, limit]. A value is a record when it strictly exceeds
// the value at every smaller m, starting from the power-of-two baseline at
// m = 2 (C = 0, Gamma = 1/ln2, Res = 1).
//
// The range is cut into shards aligned to multiples of the shard size. Each
// shard yields its local records; replaying the shards in ascending order
// against a running maximum keeps exactly the global records, so the output
// does not depend on the thread count or on which shards came from cache.

#include "collatz/errors.hpp"
#include "collatz/natural.hpp"
#include "collatz/trajectory.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace collatz {

enum class StatKind { Gamma, Completeness, Res };

inline const char* stat_name(StatKind kind)
{
    switch (kind) {
    case StatKind::Gamma: return "gamma";
    case StatKind::Completeness: return "completeness";
    case StatKind::Res: return "res";
    }
    return "?";
}

inline std::optional<StatKind> parse_stat(const std::string& name)
{
    if (name == "gamma") return StatKind::Gamma;
    if (name == "completeness") return StatKind::Completeness;
    if (name == "res") return StatKind::Res;
    return std::nullopt;
}

struct RecordEntry {
    std::uint64_t m = 0;
    StatKind kind = StatKind::Completeness;
    double value = 0.0;
    std::uint64_t o = 0;
    std::uint64_t e = 0;
    std::uint64_t g1 = 0; // final even run before the first 1

    friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

inline double stat_value(StatKind kind, std::uint64_t m, std::uint64_t e, std::uint64_t o)
{
    switch (kind) {
    case StatKind::Gamma: return gamma_value(BigInt(m), e);
    case StatKind::Completeness: return e == 0 ? 0.0 : static_cast<double>(o) / static_cast<double>(e);
    case StatKind::Res: return res_value(BigInt(m), e, o);
    }
    return 0.0;
}

inline RecordEntry make_entry(StatKind kind, std::uint64_t m, std::uint64_t e, std::uint64_t o, std::uint64_t g1)
{
    return RecordEntry{m, kind, stat_value(kind, m, e, o), o, e, g1};
}

/// True when a's statistic is strictly larger than b's. Completeness and Res
/// are compared exactly; Gamma = e/ln m is compared as e_a ln m_b > e_b ln m_a.
inline bool exceeds(const RecordEntry& a, const RecordEntry& b)
{
    switch (a.kind) {
    case StatKind::Completeness:
        return static_cast<unsigned __int128>(a.o) * b.e > static_cast<unsigned __int128>(b.o) * a.e;
    case StatKind::Res:
        return pow2(a.e) * b.m * pow3(b.o) > pow2(b.e) * a.m * pow3(a.o);
    case StatKind::Gamma:
        return static_cast<long double>(a.e) * std::log(static_cast<long double>(b.m)) >
               static_cast<long double>(b.e) * std::log(static_cast<long double>(a.m));
    }
    return false;
}

inline RecordEntry baseline(StatKind kind) { return make_entry(kind, 2, 1, 0, 1); }

/// Records of [lo, hi] relative to the baseline only.
inline std::vector<RecordEntry> shard_local_records(StatKind kind, std::uint64_t lo, std::uint64_t hi,
                                                    std::uint64_t max_steps = kDefaultStepBudget)
{
    std::vector<RecordEntry> out;
    RecordEntry best = baseline(kind);
    for (std::uint64_t m = lo; m <= hi; ++m) {
        const OrbitCounts c = orbit_counts_auto(BigInt(m), max_steps);
        RecordEntry entry = make_entry(kind, m, c.even, c.odd, c.final_gap);
        if (exceeds(entry, best)) {
            best = entry;
            out.push_back(std::move(entry));
        }
    }
    return out;
}

/// Replays per-shard local records in ascending order.
inline std::vector<RecordEntry> merge_records(StatKind kind, const std::vector<std::vector<RecordEntry>>& shards)
{
    std::vector<RecordEntry> out;
    RecordEntry best = baseline(kind);
    for (const auto& shard : shards) {
        for (const auto& entry : shard) {
            if (exceeds(entry, best)) {
                best = entry;
                out.push_back(entry);
            }
        }
    }
    return out;
}

inline std::string format_value(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline constexpr const char* kRecordCsvHeader = "m,stat,value,o,e,g1";

inline std::string record_csv_row(const RecordEntry& r)
{
    return std::to_string(r.m) + "," + stat_name(r.kind) + "," + format_value(r.value) + "," + std::to_string(r.o) + "," +
           std::to_string(r.e) + "," + std::to_string(r.g1);
}

/// One CSV file per (stat, shard range, budget) under a directory. Values are
/// recomputed from m, e, o when loading, so the cache never feeds rounded
/// numbers into comparisons.
class ShardCache {
  public:
    explicit ShardCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

    std::filesystem::path path_for(StatKind kind, std::uint64_t lo, std::uint64_t hi, std::uint64_t budget) const
    {
        return dir_ / ("records-v1-" + std::string(stat_name(kind)) + "-" + std::to_string(lo) + "-" + std::to_string(hi) + "-b" +
                       std::to_string(budget) + ".csv");
    }

    std::optional<std::vector<RecordEntry>> load(StatKind kind, std::uint64_t lo, std::uint64_t hi, std::uint64_t budget) const
    {
        std::ifstream in(path_for(kind, lo, hi, budget));
        if (!in) return std::nullopt;
        std::string line;
        if (!std::getline(in, line) || line != kRecordCsvHeader) return std::nullopt;
        std::vector<RecordEntry> out;
        bool complete = false;
        while (std::getline(in, line)) {
            if (line == "#end") {
                complete = true;
                break;
            }
            std::istringstream row(line);
            std::string m, stat, value, o, e, g1;
            if (!std::getline(row, m, ',') || !std::getline(row, stat, ',') || !std::getline(row, value, ',') ||
                !std::getline(row, o, ',') || !std::getline(row, e, ',') || !std::getline(row, g1)) {
                return std::nullopt;
            }
            if (stat != stat_name(kind)) return std::nullopt;
            try {
                out.push_back(make_entry(kind, std::stoull(m), std::stoull(e), std::stoull(o), std::stoull(g1)));
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
        if (!complete) return std::nullopt;
        ++hits_;
        return out;
    }

    void store(StatKind kind, std::uint64_t lo, std::uint64_t hi, std::uint64_t budget, const std::vector<RecordEntry>& rows) const
    {
        const auto target = path_for(kind, lo, hi, budget);
        auto tmp = target;
        tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
        {
            std::ofstream out(tmp);
            out << kRecordCsvHeader << '\n';
            for (const auto& r : rows) out << record_csv_row(r) << '\n';
            out << "#end\n";
        }
        std::filesystem::rename(tmp, target);
    }

    std::uint64_t hits() const { return hits_; }

  private:
    std::filesystem::path dir_;
    mutable std::atomic<std::uint64_t> hits_{0};
};

struct ScanOptions {
    unsigned threads = 1; // 0: hardware concurrency
    std::uint64_t shard_size = 100'000;
    std::uint64_t max_steps = kDefaultStepBudget;
    const ShardCache* cache = nullptr;
};

inline std::vector<RecordEntry> scan_records(std::uint64_t limit, StatKind kind, const ScanOptions& opt = {})
{
    if (limit < 3) throw DomainViolation("scan_records: limit must be >= 3");
    if (opt.shard_size == 0) throw DomainViolation("scan_records: shard size must be positive");
    const std::uint64_t shard_count = limit / opt.shard_size + 1;
    std::vector<std::vector<RecordEntry>> shards(shard_count);

    std::atomic<std::uint64_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= shard_count) return;
                const std::uint64_t lo = std::max<std::uint64_t>(3, i * opt.shard_size);
                const std::uint64_t hi = std::min(limit, (i + 1) * opt.shard_size - 1);
                if (lo > hi) continue;
                if (opt.cache) {
                    if (auto cached = opt.cache->load(kind, lo, hi, opt.max_steps)) {
                        shards[i] = std::move(*cached);
                        continue;
                    }
                }
                shards[i] = shard_local_records(kind, lo, hi, opt.max_steps);
                if (opt.cache) opt.cache->store(kind, lo, hi, opt.max_steps, shards[i]);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = shard_count;
        }
    };
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    return merge_records(kind, shards);
}

} // namespace collatz
