#pragma once

// How families at level n map into level n-1 under f, the E/O partition
// tester on the odd numbers, and the count of realized gap sequences.

#include "collatz/eolevels.hpp"
#include "collatz/errors.hpp"
#include "collatz/natural.hpp"
#include "collatz/repcore.hpp"
#include "collatz/trajectory.hpp"

#include <set>
#include <vector>

namespace collatz {

struct MixingPrediction {
    Branch target = Branch::E;       // branch at level n-1
    bool odd_iteration_count = false; // 2b_0+3 (O) vs 2b_0+2 (E)

    /// f-steps from a member with the given b_0 to the next odd term.
    std::uint64_t iterations(Exponent b0) const { return 2 * b0 + (odd_iteration_count ? 3 : 2); }
};

/// upsilon_1 odd sends the family into E, even into O; the branch fixes the
/// parity of the number of f-steps.
inline MixingPrediction mixing_classify(const EOParams& params)
{
    if (params.k() < 1) throw DomainViolation("mixing_classify: need a family at level >= 3");
    return {params.upsilon.front() % 2 == 1 ? Branch::E : Branch::O, params.branch == Branch::O};
}

inline MixingPrediction mixing_classify(const PrimitiveSeed& seed) { return mixing_classify(seed.params); }

struct MixingCheck {
    BigInt member;
    BigInt image;             // f^{iterations}(member)
    MixingPrediction predicted;
    Branch observed = Branch::E; // parity of the image's first gap
    bool image_odd = false;
    bool landed_in_family = false; // image located in the expected level-(n-1) family
    bool expansion_duplicate = false;

    bool ok() const { return image_odd && observed == predicted.target && landed_in_family; }
};

/// Instantiates the family at (b_0, 0, ..., 0), iterates f the predicted
/// number of times and checks the image: it must be odd, its first even run
/// must have the predicted parity, and the tail of the member's exponent
/// vector must decompose into an E/O family of the predicted branch one
/// level down.
inline MixingCheck mixing_verify(const PrimitiveSeed& seed, Exponent b0)
{
    MixingCheck out;
    out.predicted = mixing_classify(seed);
    out.expansion_duplicate = seed.expansion_duplicate();
    EOParams member = seed.params;
    member.b.assign(member.k() + 2, 0);
    member.b[0] = b0;
    out.member = eo_evaluate(member);

    BigInt x = out.member;
    for (std::uint64_t i = 0; i < out.predicted.iterations(b0); ++i) x = step_f(x);
    out.image = x;
    out.image_odd = detail::is_odd(x);
    if (!out.image_odd) return out;

    const OrbitCounts counts = orbit_counts_auto(x);
    out.observed = counts.first_gap % 2 == 1 ? Branch::E : Branch::O;

    // The image's exponents are the member's exponents from a_1 on, shifted down.
    const CrandallRep rep = eo_exponents(member);
    CrandallRep tail;
    for (std::size_t i = 1; i < rep.exponents.size(); ++i) tail.exponents.push_back(rep.exponents[i] - rep.exponents[1]);
    try {
        if (rep_evaluate(tail) == x) {
            const EOParams located = eo_locate(tail);
            out.landed_in_family = located.branch == out.predicted.target && eo_exponents(located) == tail;
        }
    } catch (const CollatzError&) {
        out.landed_in_family = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// E/O partition of the odd numbers

/// Family membership of odd m in 4^w (4b+3) + (4^w-1)/3 (E) or
/// 4^w (8b+1) + (4^w-1)/3 (O), found by trying every w.
struct FamilyMembership {
    bool in_e = false;
    bool in_o = false;
};

inline FamilyMembership partition_membership(const BigInt& m)
{
    FamilyMembership f;
    BigInt four_w = 1;
    BigInt offset = 0; // (4^w - 1)/3
    while (offset <= m) {
        const BigInt rest = m - offset;
        if (rest % four_w == 0) {
            const BigInt r = rest / four_w;
            if (r % 4 == 3) f.in_e = true;
            if (r % 8 == 1) f.in_o = true;
        }
        offset += four_w;
        four_w *= 4;
    }
    return f;
}

struct PartitionReport {
    std::uint64_t checked = 0;
    std::uint64_t agree = 0;
    std::uint64_t disagree = 0;
    std::uint64_t ambiguous = 0; // in both families or in neither
    std::uint64_t e_count = 0;   // by gap parity
    std::uint64_t o_count = 0;
    std::vector<BigInt> counterexamples; // first few disagreements or ambiguities

    bool ok() const { return disagree == 0 && ambiguous == 0; }
};

/// For every odd 3 <= m <= limit compares the parity of the first even run
/// (odd: E, even: O) with the family membership above. This tests an
/// open claim; a disagreement is reported, never thrown.
inline PartitionReport partition_parity_test(const BigInt& limit, std::uint64_t max_steps = kDefaultStepBudget)
{
    if (limit < 3) throw DomainViolation("partition_parity_test: limit must be >= 3");
    PartitionReport r;
    for (BigInt m = 3; m <= limit; m += 2) {
        ++r.checked;
        const OrbitCounts counts = orbit_counts_auto(m, max_steps);
        const bool gap_says_e = counts.first_gap % 2 == 1;
        (gap_says_e ? r.e_count : r.o_count) += 1;
        const FamilyMembership fam = partition_membership(m);
        if (fam.in_e == fam.in_o) {
            ++r.ambiguous;
            if (r.counterexamples.size() < 20) r.counterexamples.push_back(m);
        } else if (fam.in_e == gap_says_e) {
            ++r.agree;
        } else {
            ++r.disagree;
            if (r.counterexamples.size() < 20) r.counterexamples.push_back(m);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Gap-sequence counting bound

struct GapCountReport {
    std::size_t k = 0;
    Exponent r = 0;
    std::uint64_t count = 0;
    BigInt bound{};

    bool ok() const { return count >= bound; }
};

/// Distinct gap sequences with k+1 gaps and gap sum <= r, realized by odd m
/// (every such m is below 2^r / 3^{k+1}), against (2 floor((r-2)/(6k)))^k.
inline GapCountReport gap_sequence_count(std::size_t k, Exponent r, std::uint64_t max_steps = kDefaultStepBudget)
{
    if (k < 1 || r <= 2) throw DomainViolation("gap_sequence_count: need k >= 1 and r > 2");
    GapCountReport out{.k = k, .r = r};
    out.bound = boost::multiprecision::pow(BigInt(2 * ((r - 2) / (6 * k))), static_cast<unsigned>(k));
    const BigInt limit = pow2(r) / pow3(k + 1);
    std::set<std::vector<Exponent>> seen;
    for (BigInt m = 1; m <= limit; m += 2) {
        const GapSequence g = gap_sequence(run_trajectory(m, MapKind::F, max_steps));
        if (g.gaps.size() == k + 1 && g.total() <= r) seen.insert(g.gaps);
    }
    out.count = seen.size();
    return out;
}

} // namespace collatz
