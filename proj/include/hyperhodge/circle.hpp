#pragma once

#include <compare>
#include <vector>

#include "hyperhodge/rational.hpp"

namespace hyperhodge {

// A point on the circle R/Z, stored as the canonical representative in [0,1).
class UnitRational {
public:
    UnitRational() = default;

    explicit UnitRational(Rational value) : value_(std::move(value))
    {
        if (value_ < 0 || value_ >= 1) {
            throw Error("OutOfRange", "unit rational must lie in [0,1): " + hyperhodge::to_string(value_));
        }
    }

    const Rational& value() const { return value_; }

    // cpp_rational has no operator<=>, so spell the comparisons out.
    friend bool operator==(const UnitRational& x, const UnitRational& y) { return x.value_ == y.value_; }
    friend bool operator!=(const UnitRational& x, const UnitRational& y) { return x.value_ != y.value_; }
    friend bool operator<(const UnitRational& x, const UnitRational& y) { return x.value_ < y.value_; }
    friend bool operator<=(const UnitRational& x, const UnitRational& y) { return x.value_ <= y.value_; }
    friend bool operator>(const UnitRational& x, const UnitRational& y) { return x.value_ > y.value_; }
    friend bool operator>=(const UnitRational& x, const UnitRational& y) { return x.value_ >= y.value_; }

private:
    Rational value_ = 0;
};

// The unique u in [0,1) with x - u an integer.
inline UnitRational frac(const Rational& x)
{
    return UnitRational(x - Rational(floor(x)));
}

inline UnitRational frac(const UnitRational& x)
{
    return x;
}

inline std::string to_string(const UnitRational& x)
{
    return to_string(x.value());
}

// Counterclockwise order predicate on the circle: true iff walking
// counterclockwise from a one meets b before c. Written a -> b -> c below.
inline bool cyclic_order(const UnitRational& a, const UnitRational& b, const UnitRational& c)
{
    if (a == b || a == c || b == c) {
        throw Error("DistinctnessViolation", "cyclic_order requires pairwise distinct points");
    }
    return frac(b.value() - a.value()) < frac(c.value() - a.value());
}

// Smallest clockwise distance from the pivot to any of the points.
inline Rational circular_gap(const UnitRational& pivot, const std::vector<UnitRational>& points)
{
    if (points.empty()) {
        throw Error("EmptySet", "circular_gap requires a nonempty point set");
    }
    bool have = false;
    Rational best;
    for (const auto& x : points) {
        if (x == pivot) {
            throw Error("PivotCollision", "pivot coincides with a point: " + to_string(pivot));
        }
        Rational d = frac(pivot.value() - x.value()).value();
        if (!have || d < best) {
            best = d;
            have = true;
        }
    }
    return best;
}

} // namespace hyperhodge
