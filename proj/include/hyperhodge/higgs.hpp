#pragma once

#include <set>
#include <vector>

#include "hyperhodge/hodge.hpp"

namespace hyperhodge {

// Stability weights for the parabolic Higgs moduli: two strictly
// increasing sequences in (0,1), the fractional correction c at z=1 and
// the resulting integer degree delta = -c - sum(a) - sum(b).
struct HiggsWeights {
    std::vector<Rational> a;
    std::vector<Rational> b;
    Rational c;
    long long delta = 0;
    bool resonant = false; // some a_i + b_j = 1
};

inline HiggsWeights make_weights(std::vector<Rational> a, std::vector<Rational> b)
{
    if (a.size() != b.size() || a.empty()) {
        throw Error("WeightsNotStrict", "a and b must be nonempty lists of equal length");
    }
    const auto check = [](const std::vector<Rational>& w, const char* name) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] <= 0 || w[i] >= 1) {
                throw Error("WeightOutOfRange", std::string(name) + " entries must lie in (0,1)");
            }
            if (i > 0 && !(w[i - 1] < w[i])) {
                throw Error("WeightsNotStrict", std::string(name) + " must be strictly increasing");
            }
        }
    };
    check(a, "a");
    check(b, "b");

    Rational sum = 0;
    for (const auto& x : a) {
        sum += x;
    }
    for (const auto& x : b) {
        sum += x;
    }
    HiggsWeights w;
    w.c = frac(-sum).value();
    const Rational delta = -w.c - sum;
    if (!is_integer(delta)) {
        throw Error("Internal", "delta is not an integer");
    }
    w.delta = numerator(delta).convert_to<long long>();
    for (const auto& x : a) {
        for (const auto& y : b) {
            if (x + y == 1) {
                w.resonant = true;
            }
        }
    }
    w.a = std::move(a);
    w.b = std::move(b);
    return w;
}

// Numeric profile of a candidate subbundle: its degree, the jump sets of
// its flag intersections at 0 and infinity, and whether its fiber at 1
// contains the marked line.
struct SubbundleProfile {
    long long degree = 0;
    std::vector<std::size_t> jumps_zero;     // subset of {1..h}
    std::vector<std::size_t> jumps_infinity; // subset of {1..h}
    bool contains_line = false;
    std::size_t rank = 0;
};

namespace detail {

inline void check_profile(const HiggsWeights& w, const SubbundleProfile& s)
{
    const std::size_t h = w.a.size();
    const auto check_jumps = [&](const std::vector<std::size_t>& jumps) {
        std::set<std::size_t> seen;
        for (std::size_t i : jumps) {
            if (i < 1 || i > h) {
                throw Error("JumpIndexOutOfRange", "jump index " + std::to_string(i));
            }
            if (!seen.insert(i).second) {
                throw Error("JumpIndexOutOfRange", "duplicate jump index " + std::to_string(i));
            }
        }
    };
    check_jumps(s.jumps_zero);
    check_jumps(s.jumps_infinity);
    if (s.jumps_zero.size() != s.rank || s.jumps_infinity.size() != s.rank) {
        throw Error("JumpIndexOutOfRange",
                    "a rank " + std::to_string(s.rank) + " profile needs that many jumps on each side");
    }
}

} // namespace detail

inline Rational parabolic_degree(const HiggsWeights& w, const SubbundleProfile& s)
{
    detail::check_profile(w, s);
    Rational deg = s.degree;
    for (std::size_t i : s.jumps_zero) {
        deg += w.a[i - 1];
    }
    for (std::size_t i : s.jumps_infinity) {
        deg += w.b[i - 1];
    }
    if (s.contains_line) {
        deg += w.c;
    }
    return deg;
}

// Strict stability: a proper invariant subbundle destabilizes as soon as
// its parabolic degree reaches 0.
inline bool is_destabilizing(const HiggsWeights& w, const SubbundleProfile& s)
{
    if (s.rank < 1 || s.rank >= w.a.size()) {
        throw Error("FullRankProfile", "candidate rank must lie in [1, h-1]");
    }
    return parabolic_degree(w, s) >= 0;
}

// Ranks of the Hodge grading of the unique stable point, via the
// substitution alpha_i = 1 - a_{h+1-i}, beta_i = b_i.
inline HodgeVector stable_decomposition_ranks(const HiggsWeights& w)
{
    if (w.resonant) {
        throw Error("Resonant", "some a_i + b_j = 1; the stable point is not unique");
    }
    const std::size_t h = w.a.size();
    std::vector<UnitRational> alpha;
    std::vector<UnitRational> beta;
    alpha.reserve(h);
    beta.reserve(h);
    for (std::size_t i = 1; i <= h; ++i) {
        alpha.push_back(UnitRational(1 - w.a[h - i]));
        beta.push_back(UnitRational(w.b[i - 1]));
    }
    return hodge_vector(HypergeometricData(std::move(alpha), std::move(beta)));
}

struct CandidateResult {
    SubbundleProfile profile;
    Rational degree;
    bool destabilizing = false;
};

struct CandidateReport {
    std::vector<CandidateResult> candidates;
    bool stable_against_candidates = true;
};

inline CandidateReport check_candidates(const HiggsWeights& w, const std::vector<SubbundleProfile>& candidates)
{
    CandidateReport report;
    for (const auto& s : candidates) {
        CandidateResult result{s, parabolic_degree(w, s), is_destabilizing(w, s)};
        report.stable_against_candidates = report.stable_against_candidates && !result.destabilizing;
        report.candidates.push_back(std::move(result));
    }
    return report;
}

} // namespace hyperhodge
