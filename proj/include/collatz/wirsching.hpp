#pragma once

// Sequences s = (alpha_0, ..., alpha_mu) acting on rationals through
//   zeta_s = zeta_+^{alpha_0} o (zeta_- o zeta_+^{alpha_1}) o ... o (zeta_- o zeta_+^{alpha_mu}),
// zeta_+(q) = 2q, zeta_-(q) = (2q - 1)/3; the inverse of the accelerated map.

#include "collatz/errors.hpp"
#include "collatz/natural.hpp"
#include "collatz/trajectory.hpp"

#include <string>
#include <vector>

namespace collatz {

class WirschingSeq {
  public:
    WirschingSeq() : alphas_{0} {}
    explicit WirschingSeq(std::vector<Exponent> alphas) : alphas_(std::move(alphas))
    {
        if (alphas_.empty()) throw DomainViolation("WirschingSeq: need at least alpha_0");
    }

    const std::vector<Exponent>& alphas() const { return alphas_; }

    /// l(s) = mu
    std::size_t length() const { return alphas_.size() - 1; }
    /// |s| = sum of alphas
    Exponent absolute() const
    {
        Exponent s = 0;
        for (auto a : alphas_) s += a;
        return s;
    }
    /// ||s|| = |s| + l(s)
    Exponent norm() const { return absolute() + length(); }

    /// alpha_i < 2 * 3^{i-1} for every i; alpha_0 must therefore be 0.
    bool is_small() const
    {
        BigInt two_pow3 = 2; // 2 * 3^i, compared against 3 * alpha_i
        for (Exponent a : alphas_) {
            if (BigInt(3) * a >= two_pow3) return false;
            two_pow3 *= 3;
        }
        return true;
    }

    friend bool operator==(const WirschingSeq&, const WirschingSeq&) = default;

  private:
    std::vector<Exponent> alphas_;
};

inline std::string to_string(const WirschingSeq& s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.alphas().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.alphas()[i]);
    }
    return out + ")";
}

/// zeta_s(q) = h(s) q - l(s) with h(s) = 2^{||s||}/3^{l(s)} and
/// l(s) = sum_{k=0}^{mu-1} 2^{k + alpha_0 + ... + alpha_k} / 3^{k+1}.
inline Rational wirsching_eval(const WirschingSeq& s, const Rational& q)
{
    const auto& alpha = s.alphas();
    const std::size_t mu = s.length();
    const Rational h(pow2(s.norm()), pow3(mu));
    Rational offset = 0;
    Exponent prefix = 0;
    for (std::size_t k = 0; k < mu; ++k) {
        prefix += alpha[k];
        offset += Rational(pow2(k + prefix), pow3(k + 1));
    }
    return h * q - offset;
}

/// s.w = (s_0, ..., s_{mu-1}, s_mu + w_0, w_1, ..., w_nu); zeta_{s.w} = zeta_s o zeta_w.
inline WirschingSeq wirsching_concat(const WirschingSeq& s, const WirschingSeq& w)
{
    std::vector<Exponent> out = s.alphas();
    out.back() += w.alphas().front();
    out.insert(out.end(), w.alphas().begin() + 1, w.alphas().end());
    return WirschingSeq(std::move(out));
}

/// Reads s off the t-orbit of m: alpha_0 halvings, an odd step, alpha_1
/// halvings, ..., an odd step, alpha_mu halvings reaching the first 1.
/// zeta_s(1) = m and ||s|| is the number of t-steps.
inline WirschingSeq wirsching_encode(const BigInt& m, std::uint64_t max_steps = kDefaultStepBudget)
{
    const Trajectory traj = run_trajectory(m, MapKind::T, max_steps);
    std::vector<Exponent> alphas{0};
    for (std::size_t i = 0; i + 1 < traj.terms.size(); ++i) {
        if (detail::is_odd(traj.terms[i])) {
            alphas.push_back(0);
        } else {
            ++alphas.back();
        }
    }
    return WirschingSeq(std::move(alphas));
}

} // namespace collatz
