#pragma once

#include <cstdint>
#include <random>

#include "hyperhodge/hyperdata.hpp"

namespace hyperhodge {

namespace detail {

// Modular draw instead of std::uniform_int_distribution so that seeded
// runs are byte-identical across standard library implementations.
inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n)
{
    return rng() % n;
}

inline UnitRational random_angle(std::mt19937_64& rng, unsigned max_den)
{
    const std::uint64_t q = 1 + pick(rng, max_den);
    const std::uint64_t p = pick(rng, q);
    return frac(Rational(Integer(p), Integer(q)));
}

} // namespace detail

// A valid random datum with rank in [1, max_h] and all denominators at
// most max_den. Repeated entries within alpha or beta are allowed; beta
// entries colliding with alpha are redrawn.
inline HypergeometricData random_hyperdata(std::mt19937_64& rng, std::size_t max_h, unsigned max_den)
{
    const std::size_t h = 1 + detail::pick(rng, max_h);
    std::vector<UnitRational> alpha;
    alpha.reserve(h);
    for (std::size_t i = 0; i < h; ++i) {
        alpha.push_back(detail::random_angle(rng, max_den));
    }
    std::vector<UnitRational> beta;
    beta.reserve(h);
    while (beta.size() < h) {
        UnitRational b = detail::random_angle(rng, max_den);
        bool collides = false;
        for (const auto& a : alpha) {
            collides = collides || a == b;
        }
        if (!collides) {
            beta.push_back(b);
        }
    }
    return HypergeometricData(std::move(alpha), std::move(beta));
}

} // namespace hyperhodge
