#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hyperhodge/circle.hpp"

namespace hyperhodge {

// The defining datum of a regular hypergeometric connection on
// P^1 - {0,1,infinity}: two equal-length lists of eigenvalue angles,
// kept sorted non-decreasingly, with alpha_i != beta_j for all pairs.
class HypergeometricData {
public:
    HypergeometricData(std::vector<UnitRational> alpha, std::vector<UnitRational> beta)
        : alpha_(std::move(alpha)), beta_(std::move(beta))
    {
        if (alpha_.size() != beta_.size()) {
            throw Error("LengthMismatch", "alpha has " + std::to_string(alpha_.size()) +
                                              " entries, beta has " + std::to_string(beta_.size()));
        }
        if (alpha_.empty()) {
            throw Error("Empty", "rank zero datum");
        }
        std::sort(alpha_.begin(), alpha_.end());
        std::sort(beta_.begin(), beta_.end());
        for (std::size_t i = 0; i < alpha_.size(); ++i) {
            for (std::size_t j = 0; j < beta_.size(); ++j) {
                if (alpha_[i] == beta_[j]) {
                    throw Error("AlphaBetaCollision",
                                "alpha[" + std::to_string(i + 1) + "] = beta[" + std::to_string(j + 1) +
                                    "] = " + to_string(alpha_[i]));
                }
            }
        }
    }

    const std::vector<UnitRational>& alpha() const { return alpha_; }
    const std::vector<UnitRational>& beta() const { return beta_; }
    std::size_t rank() const { return alpha_.size(); }

    friend bool operator==(const HypergeometricData&, const HypergeometricData&) = default;

private:
    std::vector<UnitRational> alpha_;
    std::vector<UnitRational> beta_;
};

inline HypergeometricData validate(std::vector<UnitRational> alpha, std::vector<UnitRational> beta)
{
    return HypergeometricData(std::move(alpha), std::move(beta));
}

enum class Side { alpha, beta };

inline std::size_t multiplicity(const HypergeometricData& data, Side side, const UnitRational& angle)
{
    const auto& list = side == Side::alpha ? data.alpha() : data.beta();
    return static_cast<std::size_t>(std::count(list.begin(), list.end(), angle));
}

enum class SingularPoint { zero, one, infinity };

enum class MonodromyTag { regular_from_alpha, regular_from_beta, pseudo_reflection, scalar };

// Local monodromy conjugacy class, stored as Jordan data: one block per
// distinct eigenvalue angle for the regular classes, and the determinant
// angle (which determines the class) for the pseudo-reflection at z=1.
struct MonodromyClass {
    MonodromyTag tag;
    std::vector<std::pair<UnitRational, std::size_t>> blocks; // (angle, block size)
    std::optional<UnitRational> determinant_angle;
};

inline MonodromyClass local_monodromy(const HypergeometricData& data, SingularPoint point)
{
    MonodromyClass result;
    switch (point) {
    case SingularPoint::zero: {
        result.tag = MonodromyTag::regular_from_alpha;
        for (const auto& a : data.alpha()) {
            if (result.blocks.empty() || result.blocks.back().first != a) {
                result.blocks.emplace_back(a, 1);
            } else {
                ++result.blocks.back().second;
            }
        }
        break;
    }
    case SingularPoint::infinity: {
        result.tag = MonodromyTag::regular_from_beta;
        for (const auto& b : data.beta()) {
            UnitRational angle = frac(-b.value());
            if (result.blocks.empty() || result.blocks.back().first != angle) {
                result.blocks.emplace_back(angle, 1);
            } else {
                ++result.blocks.back().second;
            }
        }
        break;
    }
    case SingularPoint::one: {
        result.tag = MonodromyTag::pseudo_reflection;
        Rational sum = 0;
        for (const auto& b : data.beta()) {
            sum += b.value();
        }
        for (const auto& a : data.alpha()) {
            sum -= a.value();
        }
        result.determinant_angle = frac(sum);
        break;
    }
    }
    return result;
}

// Subtract gamma from every angle modulo 1. Collisions are preserved by
// common rotation, so the result is always valid.
inline HypergeometricData twist(const HypergeometricData& data, const UnitRational& gamma)
{
    std::vector<UnitRational> alpha;
    std::vector<UnitRational> beta;
    alpha.reserve(data.rank());
    beta.reserve(data.rank());
    for (const auto& a : data.alpha()) {
        alpha.push_back(frac(a.value() - gamma.value()));
    }
    for (const auto& b : data.beta()) {
        beta.push_back(frac(b.value() - gamma.value()));
    }
    return HypergeometricData(std::move(alpha), std::move(beta));
}

// Pullback along z -> 1/z: swaps the roles of 0 and infinity.
inline HypergeometricData phi_dual(const HypergeometricData& data)
{
    std::vector<UnitRational> alpha;
    std::vector<UnitRational> beta;
    alpha.reserve(data.rank());
    beta.reserve(data.rank());
    for (const auto& b : data.beta()) {
        alpha.push_back(frac(-b.value()));
    }
    for (const auto& a : data.alpha()) {
        beta.push_back(frac(-a.value()));
    }
    return HypergeometricData(std::move(alpha), std::move(beta));
}

// Pullback along the transformation reversing (0,1,2); requires all
// angles strictly positive so that 1-x stays in (0,1).
inline HypergeometricData psi_dual(const HypergeometricData& data)
{
    if (data.alpha().front().value() == 0 || data.beta().front().value() == 0) {
        throw Error("ZeroAngle", "psi_dual needs alpha_1 > 0 and beta_1 > 0");
    }
    const std::size_t h = data.rank();
    std::vector<UnitRational> alpha;
    std::vector<UnitRational> beta;
    alpha.reserve(h);
    beta.reserve(h);
    for (std::size_t m = 0; m < h; ++m) {
        alpha.push_back(UnitRational(1 - data.beta()[h - 1 - m].value()));
        beta.push_back(UnitRational(1 - data.alpha()[h - 1 - m].value()));
    }
    return HypergeometricData(std::move(alpha), std::move(beta));
}

// True iff alpha_m + alpha_{h+1-m} and beta_m + beta_{h+1-m} are integers
// for every m; the condition for the real structure to exist.
inline bool self_duality_check(const HypergeometricData& data)
{
    const std::size_t h = data.rank();
    for (std::size_t m = 0; m < h; ++m) {
        if (!is_integer(data.alpha()[m].value() + data.alpha()[h - 1 - m].value())) {
            return false;
        }
        if (!is_integer(data.beta()[m].value() + data.beta()[h - 1 - m].value())) {
            return false;
        }
    }
    return true;
}

} // namespace hyperhodge
