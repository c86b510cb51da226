#include <doctest.h>

#include "enumerate.hpp"
#include "hyperhodge/hyperdata.hpp"

using namespace hyperhodge;
using hyperhodge::testing::quintic;
using hyperhodge::testing::ur;

TEST_CASE("validation")
{
    CHECK(quintic().rank() == 4);
    CHECK_THROWS_WITH_AS(validate({ur(1, 3)}, {ur(1, 3)}), doctest::Contains("AlphaBetaCollision"), Error);
    CHECK_THROWS_WITH_AS(validate({ur(1, 2)}, {ur(1, 3), ur(2, 3)}), doctest::Contains("LengthMismatch"), Error);
    CHECK_THROWS_WITH_AS(validate({}, {}), doctest::Contains("Empty"), Error);
    // Unsorted input is accepted and normalized.
    const auto d = validate({ur(2, 5), ur(1, 5)}, {ur(4, 5), ur(3, 5)});
    CHECK(d.alpha() == std::vector<UnitRational>{ur(1, 5), ur(2, 5)});
    CHECK(d.beta() == std::vector<UnitRational>{ur(3, 5), ur(4, 5)});
}

TEST_CASE("multiplicity")
{
    const auto d = quintic();
    CHECK(multiplicity(d, Side::alpha, ur(0, 1)) == 4);
    CHECK(multiplicity(d, Side::alpha, ur(1, 2)) == 0);
    CHECK(multiplicity(d, Side::beta, ur(2, 5)) == 1);
}

TEST_CASE("local monodromy")
{
    const auto d = quintic();

    const auto at_zero = local_monodromy(d, SingularPoint::zero);
    CHECK(at_zero.tag == MonodromyTag::regular_from_alpha);
    REQUIRE(at_zero.blocks.size() == 1);
    CHECK(at_zero.blocks[0] == std::pair{ur(0, 1), std::size_t{4}});

    const auto at_infinity = local_monodromy(d, SingularPoint::infinity);
    CHECK(at_infinity.tag == MonodromyTag::regular_from_beta);
    REQUIRE(at_infinity.blocks.size() == 4);
    CHECK(at_infinity.blocks[0] == std::pair{ur(4, 5), std::size_t{1}});
    CHECK(at_infinity.blocks[3] == std::pair{ur(1, 5), std::size_t{1}});

    const auto at_one = local_monodromy(d, SingularPoint::one);
    CHECK(at_one.tag == MonodromyTag::pseudo_reflection);
    CHECK(at_one.determinant_angle == ur(0, 1));
}

TEST_CASE("block sizes sum to h and the determinant relation holds")
{
    const auto values = hyperhodge::testing::farey(5);
    hyperhodge::testing::for_each_data(values, 2, [](const HypergeometricData& d) {
        std::size_t total_zero = 0;
        for (const auto& [angle, size] : local_monodromy(d, SingularPoint::zero).blocks) {
            total_zero += size;
        }
        std::size_t total_infinity = 0;
        Rational angle_sum = 0;
        for (const auto& [angle, size] : local_monodromy(d, SingularPoint::infinity).blocks) {
            total_infinity += size;
            angle_sum += Rational(size) * angle.value();
        }
        CHECK(total_zero == d.rank());
        CHECK(total_infinity == d.rank());
        // Eigenvalue angles of the three local monodromies add up to an
        // integer: the total determinant product is trivial.
        for (const auto& [angle, size] : local_monodromy(d, SingularPoint::zero).blocks) {
            angle_sum += Rational(size) * angle.value();
        }
        angle_sum += local_monodromy(d, SingularPoint::one).determinant_angle->value();
        CHECK(is_integer(angle_sum));
    });
}

TEST_CASE("twist")
{
    const auto d = validate({ur(1, 5), ur(2, 5)}, {ur(3, 5), ur(4, 5)});
    const auto t = twist(d, ur(1, 5));
    CHECK(t.alpha() == std::vector<UnitRational>{ur(0, 1), ur(1, 5)});
    CHECK(t.beta() == std::vector<UnitRational>{ur(2, 5), ur(3, 5)});
    CHECK(twist(d, ur(0, 1)) == d);
    const auto half = twist(validate({ur(0, 1)}, {ur(1, 2)}), ur(1, 2));
    CHECK(half.alpha() == std::vector<UnitRational>{ur(1, 2)});
    CHECK(half.beta() == std::vector<UnitRational>{ur(0, 1)});
    // Composition law.
    CHECK(twist(twist(d, ur(1, 5)), ur(3, 5)) == twist(d, ur(4, 5)));
    CHECK(twist(twist(d, ur(4, 5)), ur(2, 5)) == twist(d, frac(Rational(6, 5))));
}

TEST_CASE("phi duality")
{
    const auto q = quintic();
    const auto dual = phi_dual(q);
    CHECK(dual.alpha() == q.beta());
    CHECK(dual.beta() == q.alpha());
    CHECK(phi_dual(dual) == q);
    const auto d = validate({ur(1, 3)}, {ur(2, 3)});
    CHECK(phi_dual(d) == d);
}

TEST_CASE("psi duality")
{
    const auto d = validate({ur(1, 5), ur(2, 5)}, {ur(3, 5), ur(4, 5)});
    CHECK(psi_dual(d) == d);
    CHECK(psi_dual(psi_dual(validate({ur(1, 3)}, {ur(1, 2)}))) == validate({ur(1, 3)}, {ur(1, 2)}));
    CHECK_THROWS_WITH_AS(psi_dual(validate({ur(0, 1)}, {ur(1, 2)})), doctest::Contains("ZeroAngle"), Error);
}

TEST_CASE("self duality check")
{
    CHECK(self_duality_check(quintic()));
    CHECK(self_duality_check(validate({ur(0, 1)}, {ur(1, 2)})));
    CHECK_FALSE(self_duality_check(validate({ur(1, 3), ur(1, 3)}, {ur(1, 5), ur(2, 5)})));
}
