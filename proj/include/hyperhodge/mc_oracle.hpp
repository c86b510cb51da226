#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperhodge/hodge.hpp"

namespace hyperhodge {

// Rank bookkeeping of one middle-convolution step: the convolution of the
// rank h-1 child gains (h-1)+(h-1)+1 from the singular fibers and loses
// h-1, landing back at h.
inline std::size_t mc_rank(std::size_t h)
{
    if (h < 2) {
        throw Error("IndexOutOfRange", "mc_rank needs h >= 2");
    }
    return (h - 1) + (h - 1) + 1 - (h - 1);
}

struct TwistChoice {
    UnitRational gamma;
    HypergeometricData twisted;
};

namespace detail {

inline std::vector<UnitRational> distinct_values(const std::vector<UnitRational>& list)
{
    std::vector<UnitRational> out;
    for (const auto& v : list) {
        if (out.empty() || out.back() != v) {
            out.push_back(v);
        }
    }
    return out;
}

inline std::size_t max_alpha_multiplicity(const HypergeometricData& data)
{
    std::size_t best = 0;
    for (const auto& a : distinct_values(data.alpha())) {
        best = std::max(best, multiplicity(data, Side::alpha, a));
    }
    return best;
}

inline bool alpha_all_distinct(const HypergeometricData& data)
{
    return max_alpha_multiplicity(data) == 1;
}

// Smallest alpha-value of maximal multiplicity.
inline UnitRational pivot_alpha(const HypergeometricData& data)
{
    const std::size_t best = max_alpha_multiplicity(data);
    for (const auto& a : distinct_values(data.alpha())) {
        if (multiplicity(data, Side::alpha, a) == best) {
            return a;
        }
    }
    throw Error("Internal", "unreachable: empty alpha list");
}

inline TwistChoice twist_at(const HypergeometricData& data, const UnitRational& pivot)
{
    std::vector<UnitRational> others;
    for (const auto& v : distinct_values(data.alpha())) {
        if (v != pivot) {
            others.push_back(v);
        }
    }
    for (const auto& v : distinct_values(data.beta())) {
        others.push_back(v);
    }
    const Rational d = circular_gap(pivot, others);
    const UnitRational gamma = frac(pivot.value() - d / 2);
    return {gamma, twist(data, gamma)};
}

} // namespace detail

// Choose a twist after which 0 < alpha'_1 < beta'_1 and alpha'_1 has
// maximal multiplicity among the alpha-values. If the datum already
// satisfies this, gamma = 0. Otherwise the pivot is placed at half the
// circular gap to its clockwise neighbor, which makes its image the
// unique minimum of all twisted values.
inline TwistChoice select_twist(const HypergeometricData& data)
{
    const UnitRational alpha1 = data.alpha().front();
    if (alpha1.value() > 0 && alpha1 < data.beta().front() &&
        multiplicity(data, Side::alpha, alpha1) == detail::max_alpha_multiplicity(data)) {
        return {UnitRational(Rational(0)), data};
    }
    return detail::twist_at(data, detail::pivot_alpha(data));
}

namespace detail {

inline std::vector<UnitRational> remove_one(const std::vector<UnitRational>& list, std::size_t index)
{
    std::vector<UnitRational> out;
    out.reserve(list.size() - 1);
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i != index) {
            out.push_back(list[i]);
        }
    }
    return out;
}

} // namespace detail

// The rank h-1 datum M_{k,j}: one copy of alpha_k and one of beta_j
// removed. Indices are 1-based into the sorted lists.
inline HypergeometricData mc_child(const HypergeometricData& data, std::size_t k, std::size_t j)
{
    if (k < 1 || k > data.rank() || j < 1 || j > data.rank()) {
        throw Error("IndexOutOfRange", "mc_child indices out of range");
    }
    return HypergeometricData(detail::remove_one(data.alpha(), k - 1), detail::remove_one(data.beta(), j - 1));
}

// Transport the child's mu-table at z=0 through the middle convolution
// step (k,j). Entries at angles other than alpha_k keep their degree when
// the angle precedes alpha_k on the arc toward beta_j, and shift up by
// one otherwise; entries at alpha_k move up one level and one degree.
// Valid when the twisted datum has alpha_1 > 0 and mult(alpha_k) >= 2.
inline LocalHodgeTable mu_step(const LocalHodgeTable& child_mu, std::size_t k, std::size_t j,
                               const HypergeometricData& twisted)
{
    const UnitRational alpha_k = twisted.alpha().at(k - 1);
    const UnitRational beta_j = twisted.beta().at(j - 1);

    LocalHodgeTable out;
    for (const auto& [key, mult] : child_mu.entries()) {
        if (key.angle == alpha_k) {
            out.add({key.angle, key.level + 1, key.degree + 1}, mult);
        } else {
            const bool before = cyclic_order(key.angle, alpha_k, beta_j);
            // Cross-check the fractional-part form of the same predicate.
            const bool before_frac =
                frac(alpha_k.value() - key.angle.value()) < frac(alpha_k.value() - beta_j.value());
            if (before != before_frac) {
                throw Error("Internal", "cyclic order predicate disagrees with fractional-part form");
            }
            out.add({key.angle, key.level, key.degree + (before ? 0 : 1)}, mult);
        }
    }

    for (const auto& a : detail::distinct_values(twisted.alpha())) {
        const int expected = static_cast<int>(multiplicity(twisted, Side::alpha, a));
        if (out.mass_at(a) != expected) {
            throw Error("MassViolation", "mass at " + to_string(a) + " is " + std::to_string(out.mass_at(a)) +
                                             ", expected " + std::to_string(expected));
        }
    }
    return out;
}

// The rank-two base case with distinct alpha-values: twist so that the
// four points read off in one of the two admissible linear orders, write
// the table down, and carry the angles back through the twist.
inline LocalHodgeTable rank2_base(const HypergeometricData& data)
{
    if (data.rank() != 2) {
        throw Error("NotRankTwo", "rank2_base needs h = 2");
    }
    if (data.alpha()[0] == data.alpha()[1]) {
        throw Error("EqualAlphas", "rank2_base needs distinct alpha-values");
    }

    for (const auto& pivot : data.alpha()) {
        const TwistChoice tc = detail::twist_at(data, pivot);
        const auto& a = tc.twisted.alpha();
        const auto& b = tc.twisted.beta();
        const bool case_one = a[0] < a[1] && a[1] < b[0];                // 0 < a1 < a2 < b1 <= b2
        const bool case_two = a[0] < b[0] && b[0] < a[1] && a[1] < b[1]; // 0 < a1 < b1 < a2 < b2
        if (!case_one && !case_two) {
            continue;
        }
        LocalHodgeTable table;
        table.add({a[0], 0, 1}, 1);
        table.add({a[1], 0, case_one ? 2 : 1}, 1);
        const Rational gamma = tc.gamma.value();
        return table.relabeled([&](const UnitRational& x) { return frac(x.value() + gamma); });
    }
    throw Error("Internal", "no admissible rank-two configuration found");
}

// One middle-convolution constraint system: a pair (k,j) together with
// the recursively computed mu-table of M_{k,j}, normalized to min p = 0.
struct ConstraintSystem {
    std::size_t k = 0;
    std::size_t j = 0;
    LocalHodgeTable child_mu;
};

namespace detail {

// Degree of the single level-0 entry the child table holds at the given
// angle, if any.
inline std::optional<int> table_degree_at(const LocalHodgeTable& table, const UnitRational& angle)
{
    std::optional<int> result;
    for (const auto& [key, mult] : table.entries()) {
        if (key.angle != angle) {
            continue;
        }
        if (result || key.level != 0 || mult != 1) {
            throw Error("Inconsistent", "child table is not a distinct-eigenvalue table");
        }
        result = key.degree;
    }
    return result;
}

} // namespace detail

// Solve the degree constraints of two (or more) middle-convolution steps
// for a datum with pairwise distinct alpha-values, h >= 3. The unknown
// per-step shifts c_{k,j} and the parent degrees are determined up to a
// simultaneous shift; the result is normalized to min p = 0.
inline LocalHodgeTable solve_constraints(const HypergeometricData& data, const std::vector<ConstraintSystem>& systems)
{
    const std::size_t h = data.rank();
    if (h < 3 || !detail::alpha_all_distinct(data)) {
        throw Error("Inconsistent", "solve_constraints needs h >= 3 with distinct alpha-values");
    }
    {
        std::set<std::size_t> ks;
        for (const auto& s : systems) {
            ks.insert(s.k);
        }
        if (ks.size() < 2) {
            throw Error("Underdetermined", "need at least two systems with distinct k");
        }
    }

    const auto& alpha = data.alpha();
    // p_m = q_m - c + [not (alpha_m -> alpha_k -> beta_j)], per system.
    const auto offset = [&](const ConstraintSystem& s, std::size_t m) {
        const UnitRational& alpha_k = alpha.at(s.k - 1);
        const UnitRational& beta_j = data.beta().at(s.j - 1);
        return cyclic_order(alpha[m], alpha_k, beta_j) ? 0 : 1;
    };
    const auto child_degree = [&](const ConstraintSystem& s, std::size_t m) {
        auto q = detail::table_degree_at(s.child_mu, alpha[m]);
        if (!q) {
            throw Error("Inconsistent", "child table misses angle " + to_string(alpha[m]));
        }
        return *q;
    };

    std::vector<std::optional<int>> degree(h);
    std::vector<std::optional<int>> shift(systems.size());
    shift[0] = 0; // global shift freedom
    for (std::size_t m = 0; m < h; ++m) {
        if (m + 1 != systems[0].k) {
            degree[m] = child_degree(systems[0], m) + offset(systems[0], m);
        }
    }
    for (std::size_t s = 1; s < systems.size(); ++s) {
        for (std::size_t m = 0; m < h; ++m) {
            if (m + 1 == systems[s].k || !degree[m]) {
                continue;
            }
            const int c = child_degree(systems[s], m) + offset(systems[s], m) - *degree[m];
            if (shift[s] && *shift[s] != c) {
                throw Error("Inconsistent", "constraint systems disagree on c_{k,j}");
            }
            shift[s] = c;
        }
        if (!shift[s]) {
            throw Error("Underdetermined", "no shared angle to pin the system's shift");
        }
        for (std::size_t m = 0; m < h; ++m) {
            if (m + 1 != systems[s].k && !degree[m]) {
                degree[m] = child_degree(systems[s], m) + offset(systems[s], m) - *shift[s];
            }
        }
    }

    LocalHodgeTable out;
    for (std::size_t m = 0; m < h; ++m) {
        if (!degree[m]) {
            throw Error("Underdetermined", "degree at " + to_string(alpha[m]) + " undetermined");
        }
        out.add({alpha[m], 0, *degree[m]}, 1);
    }

    // Every supplied equation must hold for the solution.
    for (std::size_t s = 0; s < systems.size(); ++s) {
        for (std::size_t m = 0; m < h; ++m) {
            if (m + 1 == systems[s].k) {
                continue;
            }
            if (*degree[m] != child_degree(systems[s], m) + offset(systems[s], m) - *shift[s]) {
                throw Error("Inconsistent", "solution violates a supplied constraint");
            }
        }
    }
    return normalize_min_p_to_zero(out);
}

namespace detail {

// The recursion proper: returns the table with min p = 0; the caller
// fixes the canonical degree normalization.
inline LocalHodgeTable oracle_impl(const HypergeometricData& data)
{
    const std::size_t h = data.rank();
    if (h == 1) {
        LocalHodgeTable table;
        table.add({data.alpha().front(), 0, 0}, 1);
        return table;
    }
    if (mc_rank(h) != h) {
        throw Error("Internal", "middle convolution rank bookkeeping failed");
    }
    if (h == 2 && alpha_all_distinct(data)) {
        return normalize_min_p_to_zero(rank2_base(data));
    }

    const TwistChoice tc = select_twist(data);
    LocalHodgeTable twisted_table;
    if (max_alpha_multiplicity(tc.twisted) >= 2) {
        const LocalHodgeTable child = oracle_impl(mc_child(tc.twisted, 1, 1));
        twisted_table = mu_step(child, 1, 1, tc.twisted);
    } else {
        std::vector<ConstraintSystem> systems;
        systems.push_back({1, 1, oracle_impl(mc_child(tc.twisted, 1, 1))});
        systems.push_back({2, 1, oracle_impl(mc_child(tc.twisted, 2, 1))});
        twisted_table = solve_constraints(tc.twisted, systems);
    }

    const Rational gamma = tc.gamma.value();
    return normalize_min_p_to_zero(
        twisted_table.relabeled([&](const UnitRational& x) { return frac(x.value() + gamma); }));
}

} // namespace detail

// Recompute the local Hodge table at z=0 by the middle-convolution
// recursion. The recursion determines the table up to a uniform degree
// shift; the canonical representative is pinned by the top occupied
// degree, which equals the maximum of the step function f.
inline LocalHodgeTable oracle_local_table(const HypergeometricData& data)
{
    const LocalHodgeTable table = detail::oracle_impl(data);
    return table.shifted(max_step_function(data) - table.max_degree());
}

struct VerifyReport {
    HypergeometricData input;
    LocalHodgeTable oracle;
    LocalHodgeTable closed_form;
    HodgeVector oracle_lefschetz;
    HodgeVector closed_lefschetz;
    std::optional<int> shift;
    bool pass = false;
    std::vector<std::string> diff;
};

inline VerifyReport verify(const HypergeometricData& data)
{
    VerifyReport report{data, oracle_local_table(data), local_table_zero(data), {}, {}, std::nullopt, false, {}};
    report.oracle_lefschetz = lefschetz_hodge(report.oracle);
    report.closed_lefschetz = lefschetz_hodge(report.closed_form);
    report.shift = equal_up_to_shift(report.oracle, report.closed_form);
    report.pass = report.oracle == report.closed_form;
    if (!report.pass) {
        std::set<TableKey> keys;
        for (const auto& [key, mult] : report.oracle.entries()) {
            keys.insert(key);
        }
        for (const auto& [key, mult] : report.closed_form.entries()) {
            keys.insert(key);
        }
        for (const auto& key : keys) {
            const auto get = [&](const LocalHodgeTable& t) {
                auto it = t.entries().find(key);
                return it == t.entries().end() ? 0 : it->second;
            };
            const int lhs = get(report.oracle);
            const int rhs = get(report.closed_form);
            if (lhs != rhs) {
                std::ostringstream os;
                os << "(" << to_string(key.angle) << ",l=" << key.level << ",p=" << key.degree
                   << "): oracle " << lhs << ", closed " << rhs;
                report.diff.push_back(os.str());
            }
        }
    }
    return report;
}

} // namespace hyperhodge
