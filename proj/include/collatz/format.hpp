#pragma once

// Text renderings shared by the command-line tool and the tests. Big values
// are always decimal strings in machine formats.

#include "collatz/eolevels.hpp"
#include "collatz/records.hpp"
#include "collatz/trajectory.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace collatz::format {

using Json = nlohmann::ordered_json;

/// (c, upsilon_k, ..., upsilon_1, upsilon_0) without the leading c.
inline std::vector<Exponent> upsilon_tuple(const PrimitiveSeed& s)
{
    const auto t = s.tuple();
    return {t.begin() + 1, t.end()};
}

inline Json seed_json(const PrimitiveSeed& s)
{
    Json j;
    j["level"] = s.params.level();
    j["branch"] = std::string(1, branch_char(s.params.branch));
    j["c"] = s.params.c;
    j["upsilon"] = upsilon_tuple(s);
    j["value"] = to_decimal(s.value);
    j["e"] = s.e();
    j["o"] = s.o();
    j["expansion_duplicate"] = s.expansion_duplicate();
    return j;
}

inline std::string seed_json_line(const PrimitiveSeed& s) { return seed_json(s).dump(); }

inline constexpr const char* kSeedCsvHeader = "level,branch,c,upsilon,value,e,o,expansion_duplicate";

inline std::string join(const std::vector<Exponent>& v, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string seed_csv_row(const PrimitiveSeed& s)
{
    return std::to_string(s.params.level()) + "," + branch_char(s.params.branch) + "," + std::to_string(s.params.c) + "," +
           join(upsilon_tuple(s), ';') + "," + to_decimal(s.value) + "," + std::to_string(s.e()) + "," + std::to_string(s.o()) + "," +
           (s.expansion_duplicate() ? "true" : "false");
}

inline std::string seed_human_row(const PrimitiveSeed& s)
{
    std::string row = "(" + join(s.tuple(), ',') + ")  " + branch_char(s.params.branch) + "  m=" + to_decimal(s.value) +
                      "  o=" + std::to_string(s.o()) + "  e=" + std::to_string(s.e());
    if (s.expansion_duplicate()) row += "  [c=2 duplicate]";
    return row;
}

inline Json record_json(const RecordEntry& r)
{
    Json j;
    j["m"] = std::to_string(r.m);
    j["stat"] = stat_name(r.kind);
    j["value"] = format_value(r.value);
    j["o"] = r.o;
    j["e"] = r.e;
    j["g1"] = r.g1;
    return j;
}

/// Terms of a trajectory; long ones keep the first and last five unless full.
inline std::string terms(const Trajectory& t, bool full, char sep = ',')
{
    constexpr std::size_t kKeep = 5;
    std::string out;
    const std::size_t n = t.terms.size();
    const bool elide = !full && n > 2 * kKeep + 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (elide && i == kKeep) {
            out += sep;
            out += "...(" + std::to_string(n - 2 * kKeep) + " terms)";
            i = n - kKeep - 1;
            continue;
        }
        if (i) out += sep;
        out += to_decimal(t.terms[i]);
    }
    return out;
}

inline std::string gaps(const GapSequence& g) { return "(" + join(g.gaps, ',') + ")"; }

inline std::string fixed6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace collatz::format
