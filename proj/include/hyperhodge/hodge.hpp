#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "hyperhodge/hyperdata.hpp"

namespace hyperhodge {

// Key of one local Hodge invariant: eigenvalue angle, nilpotency level l,
// Hodge degree p.
struct TableKey {
    UnitRational angle;
    int level = 0;
    int degree = 0;

    friend bool operator==(const TableKey& x, const TableKey& y)
    {
        return x.angle == y.angle && x.level == y.level && x.degree == y.degree;
    }
    friend bool operator<(const TableKey& x, const TableKey& y)
    {
        if (x.angle != y.angle) {
            return x.angle < y.angle;
        }
        return std::tie(x.level, x.degree) < std::tie(y.level, y.degree);
    }
};

// Finite association (angle, l, p) -> positive multiplicity. Houses the
// nu- and mu-invariants at one singular point.
class LocalHodgeTable {
public:
    using Entries = std::map<TableKey, int>;

    void add(const TableKey& key, int mult)
    {
        if (mult < 0 || key.level < 0) {
            throw Error("InvalidTableEntry", "negative level or multiplicity");
        }
        if (mult == 0) {
            return;
        }
        entries_[key] += mult;
    }

    const Entries& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    int min_degree() const
    {
        int m = std::numeric_limits<int>::max();
        for (const auto& [key, mult] : entries_) {
            m = std::min(m, key.degree);
        }
        return m;
    }

    int max_degree() const
    {
        int m = std::numeric_limits<int>::min();
        for (const auto& [key, mult] : entries_) {
            m = std::max(m, key.degree);
        }
        return m;
    }

    LocalHodgeTable shifted(int shift) const
    {
        LocalHodgeTable out;
        for (const auto& [key, mult] : entries_) {
            out.add({key.angle, key.level, key.degree + shift}, mult);
        }
        return out;
    }

    LocalHodgeTable relabeled(const std::function<UnitRational(const UnitRational&)>& relabel) const
    {
        LocalHodgeTable out;
        for (const auto& [key, mult] : entries_) {
            out.add({relabel(key.angle), key.level, key.degree}, mult);
        }
        return out;
    }

    // Sum of (l+1) * multiplicity over all entries at the given angle.
    int mass_at(const UnitRational& angle) const
    {
        int mass = 0;
        for (const auto& [key, mult] : entries_) {
            if (key.angle == angle) {
                mass += (key.level + 1) * mult;
            }
        }
        return mass;
    }

    friend bool operator==(const LocalHodgeTable&, const LocalHodgeTable&) = default;

private:
    Entries entries_;
};

// Finite association p -> h^p with positive entries; semantically defined
// only up to a uniform shift of p.
using HodgeVector = std::map<int, int>;

struct RealHodgeDiamond {
    int weight = 0;
    std::map<std::pair<int, int>, int> ranks; // (p,q) with p+q = weight

    friend bool operator==(const RealHodgeDiamond&, const RealHodgeDiamond&) = default;
};

inline LocalHodgeTable normalize_min_p_to_zero(const LocalHodgeTable& table)
{
    if (table.empty()) {
        return table;
    }
    return table.shifted(-table.min_degree());
}

inline HodgeVector normalize_min_p_to_zero(const HodgeVector& vec)
{
    if (vec.empty()) {
        return vec;
    }
    HodgeVector out;
    const int shift = vec.begin()->first;
    for (const auto& [p, count] : vec) {
        out[p - shift] = count;
    }
    return out;
}

// The shift s with b = a shifted by s in degree, or nothing.
inline std::optional<int> equal_up_to_shift(const LocalHodgeTable& a, const LocalHodgeTable& b)
{
    if (a.empty() || b.empty()) {
        return (a.empty() && b.empty()) ? std::optional<int>(0) : std::nullopt;
    }
    const int s = b.min_degree() - a.min_degree();
    if (a.shifted(s) == b) {
        return s;
    }
    return std::nullopt;
}

inline std::optional<int> equal_up_to_shift(const HodgeVector& a, const HodgeVector& b)
{
    if (a.empty() || b.empty()) {
        return (a.empty() && b.empty()) ? std::optional<int>(0) : std::nullopt;
    }
    const int s = b.begin()->first - a.begin()->first;
    HodgeVector shifted;
    for (const auto& [p, count] : a) {
        shifted[p + s] = count;
    }
    return shifted == b ? std::optional<int>(s) : std::nullopt;
}

namespace detail {

inline int count_le(const std::vector<UnitRational>& list, const UnitRational& x)
{
    int n = 0;
    for (const auto& v : list) {
        if (v <= x) {
            ++n;
        }
    }
    return n;
}

inline int count_lt(const std::vector<UnitRational>& list, const UnitRational& x)
{
    int n = 0;
    for (const auto& v : list) {
        if (v < x) {
            ++n;
        }
    }
    return n;
}

} // namespace detail

// rho(k) = #{j : alpha_j < beta_k} - k, for k in 1..h.
inline int rho(const HypergeometricData& data, std::size_t k)
{
    if (k < 1 || k > data.rank()) {
        throw Error("IndexOutOfRange", "rho index " + std::to_string(k));
    }
    return detail::count_lt(data.alpha(), data.beta()[k - 1]) - static_cast<int>(k);
}

// Hodge numbers in the canonical indexing h^p = #{k : rho(k) = p-1}.
inline HodgeVector hodge_vector(const HypergeometricData& data)
{
    HodgeVector out;
    for (std::size_t k = 1; k <= data.rank(); ++k) {
        ++out[rho(data, k) + 1];
    }
    return out;
}

// nu-table at z=0: one entry per distinct alpha-value a, at level
// mult(a)-1 and degree #{alpha_i <= a} - #{beta_i <= a}.
inline LocalHodgeTable local_table_zero(const HypergeometricData& data)
{
    LocalHodgeTable out;
    const auto& alpha = data.alpha();
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i > 0 && alpha[i] == alpha[i - 1]) {
            continue;
        }
        const int l = static_cast<int>(multiplicity(data, Side::alpha, alpha[i])) - 1;
        const int p = detail::count_le(alpha, alpha[i]) - detail::count_le(data.beta(), alpha[i]);
        out.add({alpha[i], l, p}, 1);
    }
    return out;
}

// nu-table at z=infinity: one entry per distinct beta-value b, filed under
// the monodromy angle frac(-b), at level mult(b)-1 and degree
// #{alpha_i < b} - #{beta_i < b}.
inline LocalHodgeTable local_table_infinity(const HypergeometricData& data)
{
    LocalHodgeTable out;
    const auto& beta = data.beta();
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (i > 0 && beta[i] == beta[i - 1]) {
            continue;
        }
        const int l = static_cast<int>(multiplicity(data, Side::beta, beta[i])) - 1;
        const int p = detail::count_lt(data.alpha(), beta[i]) - detail::count_lt(beta, beta[i]);
        out.add({frac(-beta[i].value()), l, p}, 1);
    }
    return out;
}

// Vanishing-cycle variant: entries at nonzero angles are copied, entries
// at angle 0 have the level shifted down (a level-0 entry at angle 0
// disappears).
inline LocalHodgeTable mu_from_nu(const LocalHodgeTable& table)
{
    const UnitRational zero{Rational(0)};
    LocalHodgeTable out;
    for (const auto& [key, mult] : table.entries()) {
        if (key.angle != zero) {
            out.add(key, mult);
        } else if (key.level >= 1) {
            out.add({key.angle, key.level - 1, key.degree}, mult);
        }
    }
    return out;
}

// Lefschetz summation: an entry at (a, l, q) spreads mass onto degrees
// q, q-1, ..., q-l.
inline HodgeVector lefschetz_hodge(const LocalHodgeTable& table)
{
    HodgeVector out;
    for (const auto& [key, mult] : table.entries()) {
        for (int k = 0; k <= key.level; ++k) {
            out[key.degree - k] += mult;
        }
    }
    return out;
}

inline int signature(const HypergeometricData& data)
{
    int s = 0;
    for (std::size_t k = 1; k <= data.rank(); ++k) {
        s += (rho(data, k) % 2 == 0) ? 1 : -1;
    }
    return s;
}

// Strict alternation of the two sequences, in either order.
inline bool interlacing(const HypergeometricData& data)
{
    const std::size_t h = data.rank();
    const auto alternates = [&](const std::vector<UnitRational>& lo, const std::vector<UnitRational>& hi) {
        for (std::size_t i = 0; i < h; ++i) {
            if (!(lo[i] < hi[i])) {
                return false;
            }
            if (i + 1 < h && !(hi[i] < lo[i + 1])) {
                return false;
            }
        }
        return true;
    };
    return alternates(data.alpha(), data.beta()) || alternates(data.beta(), data.alpha());
}

inline RealHodgeDiamond real_hodge_diamond(const HypergeometricData& data)
{
    if (!self_duality_check(data)) {
        throw Error("NotSelfDual", "real Hodge diamond needs a self-dual datum");
    }
    std::map<int, int> level_sets;
    for (std::size_t k = 1; k <= data.rank(); ++k) {
        ++level_sets[rho(data, k)];
    }
    const int p_minus = level_sets.begin()->first;
    const int p_plus = level_sets.rbegin()->first;
    RealHodgeDiamond out;
    out.weight = p_plus - p_minus;
    for (const auto& [k, count] : level_sets) {
        out.ranks[{k - p_minus, p_plus - k}] = count;
    }
    return out;
}

// The step function f(t) = #{i : alpha_i <= t} - #{i : beta_i <= t}; its
// maximum over [0,1) is attained at a point of alpha and equals
// max{p : h^p != 0} under the canonical indexing.
inline int max_step_function(const HypergeometricData& data)
{
    int best = std::numeric_limits<int>::min();
    for (const auto& a : data.alpha()) {
        best = std::max(best, detail::count_le(data.alpha(), a) - detail::count_le(data.beta(), a));
    }
    return best;
}

} // namespace hyperhodge
