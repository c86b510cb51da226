// Acceptance suite: runs every exactly-checkable identity and worked
// instance the library is required to satisfy and prints one pass/fail
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "enumerate.hpp"
#include "hyperhodge/higgs.hpp"
#include "hyperhodge/mc_oracle.hpp"
#include "hyperhodge/random_data.hpp"

using namespace hyperhodge;
using hyperhodge::testing::farey;
using hyperhodge::testing::for_each_data;
using hyperhodge::testing::quintic;
using hyperhodge::testing::ur;

namespace {

LocalHodgeTable table_of(std::initializer_list<std::pair<TableKey, int>> entries)
{
    LocalHodgeTable t;
    for (const auto& [key, mult] : entries) {
        t.add(key, mult);
    }
    return t;
}

struct Harness {
    int failures = 0;

    void run(int number, const std::string& name, const std::function<bool(std::string&)>& criterion)
    {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = criterion(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (ok ? "PASS" : "FAIL") << "  " << number << "  " << name << "  (" << std::fixed
                  << std::setprecision(1) << elapsed.count() / 1000.0 << " ms)";
        if (!ok && !detail.empty()) {
            std::cout << "  [" << detail << "]";
        }
        std::cout << "\n";
        if (!ok) {
            ++failures;
        }
    }
};

// The 200-datum sweep shared by criteria 3, 4, 6, and 7.
std::vector<HypergeometricData> sweep_data()
{
    std::mt19937_64 rng(20240901);
    std::vector<HypergeometricData> out;
    out.reserve(200);
    for (int i = 0; i < 200; ++i) {
        out.push_back(random_hyperdata(rng, 6, 12));
    }
    return out;
}

} // namespace

int main()
{
    Harness harness;
    const auto sweep = sweep_data();

    harness.run(1, "quintic-type instance, exact, < 1 ms", [](std::string& detail) {
        const auto d = quintic();
        const auto start = std::chrono::steady_clock::now();
        const auto hv = hodge_vector(d);
        const int sig = signature(d);
        const auto table = local_table_zero(d);
        const auto diamond = real_hodge_diamond(d);
        const auto elapsed = std::chrono::steady_clock::now() - start;
        if (elapsed >= std::chrono::milliseconds(1)) {
            detail = "too slow";
            return false;
        }
        const bool diamond_ok =
            diamond.weight == 3 &&
            diamond.ranks == std::map<std::pair<int, int>, int>{{{0, 3}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{3, 0}, 1}};
        return hv == HodgeVector{{1, 1}, {2, 1}, {3, 1}, {4, 1}} && sig == 0 &&
               table == table_of({{{ur(0, 1), 3, 4}, 1}}) && diamond_ok;
    });

    harness.run(2, "rank-two base cases I and II, exact", [](std::string&) {
        const auto case_one = validate({ur(1, 5), ur(2, 5)}, {ur(3, 5), ur(4, 5)});
        const auto case_two = validate({ur(1, 5), ur(3, 5)}, {ur(2, 5), ur(4, 5)});
        return local_table_zero(case_one) == table_of({{{ur(1, 5), 0, 1}, 1}, {{ur(2, 5), 0, 2}, 1}}) &&
               rank2_base(case_one) == table_of({{{ur(1, 5), 0, 1}, 1}, {{ur(2, 5), 0, 2}, 1}}) &&
               local_table_zero(case_two) == table_of({{{ur(1, 5), 0, 1}, 1}, {{ur(3, 5), 0, 1}, 1}}) &&
               rank2_base(case_two) == table_of({{{ur(1, 5), 0, 1}, 1}, {{ur(3, 5), 0, 1}, 1}});
    });

    harness.run(3, "oracle sweep, 200 random data h<=6 den<=12, < 60 s", [&](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            if (oracle_local_table(sweep[i]) != local_table_zero(sweep[i])) {
                detail = "mismatch at sweep index " + std::to_string(i);
                return false;
            }
        }
        if (std::chrono::steady_clock::now() - start >= std::chrono::seconds(60)) {
            detail = "too slow";
            return false;
        }
        return true;
    });

    harness.run(4, "Lefschetz identity at 0 and infinity over the sweep", [&](std::string& detail) {
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            const auto hv = hodge_vector(sweep[i]);
            if (lefschetz_hodge(local_table_zero(sweep[i])) != hv ||
                lefschetz_hodge(local_table_infinity(sweep[i])) != hv) {
                detail = "mismatch at sweep index " + std::to_string(i);
                return false;
            }
        }
        return true;
    });

    harness.run(5, "unitarity equivalence, exhaustive h<=3 den<=7", [](std::string& detail) {
        const auto values = farey(7);
        bool ok = true;
        for (std::size_t h = 1; h <= 3 && ok; ++h) {
            for_each_data(values, h, [&](const HypergeometricData& d) {
                const bool one_piece = hodge_vector(d).size() == 1;
                const bool sig_full = std::abs(signature(d)) == static_cast<int>(d.rank());
                if (interlacing(d) != one_piece || one_piece != sig_full) {
                    ok = false;
                }
            });
        }
        if (!ok) {
            detail = "equivalence broken";
        }
        return ok;
    });

    harness.run(6, "duality suite over the sweep", [&](std::string& detail) {
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            const auto& d = sweep[i];
            if (!equal_up_to_shift(hodge_vector(phi_dual(d)), hodge_vector(d))) {
                detail = "phi-duality failed at sweep index " + std::to_string(i);
                return false;
            }
            if (d.alpha().front().value() > 0 && d.beta().front().value() > 0) {
                const auto relabeled = local_table_zero(psi_dual(d)).relabeled(
                    [](const UnitRational& a) { return frac(-(1 - a.value())); });
                if (relabeled != local_table_infinity(d)) {
                    detail = "psi-relabeling failed at sweep index " + std::to_string(i);
                    return false;
                }
            }
        }
        return true;
    });

    harness.run(7, "six-case constraint check over the sweep", [&](std::string& detail) {
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            const auto& d = sweep[i];
            const std::size_t h = d.rank();
            if (h < 3 || !detail::alpha_all_distinct(d)) {
                continue;
            }
            const auto parent = local_table_zero(d);
            for (std::size_t k = 1; k <= h; ++k) {
                for (std::size_t j = 1; j <= h; ++j) {
                    const auto child = local_table_zero(mc_child(d, k, j));
                    const UnitRational& alpha_k = d.alpha()[k - 1];
                    const UnitRational& beta_j = d.beta()[j - 1];
                    const int c = alpha_k > beta_j ? 1 : 0;
                    for (const auto& [key, mult] : parent.entries()) {
                        if (key.angle == alpha_k) {
                            continue;
                        }
                        const int child_degree =
                            key.degree + (cyclic_order(key.angle, alpha_k, beta_j) ? c : c - 1);
                        auto it = child.entries().find({key.angle, 0, child_degree});
                        if (it == child.entries().end() || it->second != mult) {
                            detail = "eq:const failed at sweep index " + std::to_string(i) + ", (k,j)=(" +
                                     std::to_string(k) + "," + std::to_string(j) + ")";
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    harness.run(8, "Higgs identities, 100 random weight systems", [](std::string& detail) {
        std::mt19937_64 rng(77);
        for (int i = 0; i < 100; ++i) {
            const std::size_t h = 1 + rng() % 6;
            const unsigned den = 60;
            const auto draw = [&] {
                std::set<unsigned> nums;
                while (nums.size() < h) {
                    nums.insert(1 + static_cast<unsigned>(rng() % (den - 1)));
                }
                std::vector<Rational> out;
                for (unsigned n : nums) {
                    out.emplace_back(n, den);
                }
                return out;
            };
            const auto w = make_weights(draw(), draw());

            SubbundleProfile full;
            full.degree = w.delta;
            full.rank = h;
            full.contains_line = true;
            for (std::size_t m = 1; m <= h; ++m) {
                full.jumps_zero.push_back(m);
                full.jumps_infinity.push_back(m);
            }
            if (parabolic_degree(w, full) != 0) {
                detail = "full-bundle degree nonzero";
                return false;
            }

            bool collision = false;
            try {
                std::vector<UnitRational> alpha;
                std::vector<UnitRational> beta;
                for (std::size_t m = 1; m <= h; ++m) {
                    alpha.push_back(UnitRational(1 - w.a[h - m]));
                    beta.push_back(UnitRational(w.b[m - 1]));
                }
                HypergeometricData data(alpha, beta);
            } catch (const Error&) {
                collision = true;
            }
            if (w.resonant != collision) {
                detail = "resonance does not match the collision";
                return false;
            }
            if (!w.resonant) {
                int total = 0;
                for (const auto& [p, count] : stable_decomposition_ranks(w)) {
                    total += count;
                }
                if (total != static_cast<int>(h)) {
                    detail = "decomposition ranks do not sum to h";
                    return false;
                }
            }
        }
        return true;
    });

    harness.run(9, "circle algebra, exhaustive distinct triples den<=12, < 10 s", [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        const auto points = farey(12);
        long long triples = 0;
        for (const auto& u : points) {
            for (const auto& v : points) {
                for (const auto& w : points) {
                    if (u == v || u == w || v == w) {
                        continue;
                    }
                    ++triples;
                    const bool lhs = frac(w.value() - v.value()) < frac(w.value() - u.value());
                    if (lhs != cyclic_order(v, w, u)) {
                        detail = "equivalence failed";
                        return false;
                    }
                }
            }
        }
        if (triples < 90000) {
            detail = "triple enumeration too small";
            return false;
        }
        if (std::chrono::steady_clock::now() - start >= std::chrono::seconds(10)) {
            detail = "too slow";
            return false;
        }
        return true;
    });

    if (harness.failures != 0) {
        std::cout << harness.failures << " criterion(s) failed\n";
        return EXIT_FAILURE;
    }
    std::cout << "all criteria passed\n";
    return EXIT_SUCCESS;
}
