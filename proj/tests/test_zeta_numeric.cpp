#include "szego/op_grammar.hpp"
#include "szego/zeta_numeric.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace szego;

TEST_CASE("continued trace values at simple points")
{
    // tr(Id rho^-s) on n=1 is the plain zeta function
    auto z = zeta_numeric(RhoExpr::identity(), SphereModel::make(1), {2.0, 0.0});
    CHECK(std::abs(z.real() - oracles::basel_series()) < 1e-12);
    CHECK(std::abs(z.imag()) < 1e-14);

    // sum k^-1 k^-s at s = 1 is again the Basel value
    auto z2 = zeta_numeric(RhoExpr::power_of(0, -1), SphereModel::make(1), {1.0, 0.0});
    CHECK(std::abs(z2.real() - 1.6449340668482264) < 1e-12);

    // sum (k+1)^-2 at s = 0
    auto z3 = zeta_numeric(RhoExpr::power_of(1, -2), SphereModel::make(1), {0.0, 0.0});
    CHECK(std::abs(z3.real() - 0.6449340668482264) < 1e-12);
}

TEST_CASE("evaluation refuses points too close to a pole")
{
    // tr(rho^-1 rho^-s) on n=1 has its pole at s = 0
    CHECK_THROWS_AS(zeta_numeric(RhoExpr::power_of(0, -1), SphereModel::make(1), {1e-8, 0.0}),
                    PoleProximity);
    // but s = 0 is fine when the k^-1 coefficient vanishes
    CHECK_NOTHROW(zeta_numeric(RhoExpr::power_of(1, -2), SphereModel::make(1), {0.0, 0.0}));
}

TEST_CASE("contour residues match the exact engine")
{
    CHECK(std::abs(residue_numeric(RhoExpr::power_of(0, -3), SphereModel::make(3)) - 0.5) <
          1e-8);
    CHECK(std::abs(residue_numeric(RhoExpr::identity(), SphereModel::make(3))) < 1e-10);
    RhoExpr diff = parse_op_spec("(rho)^-2 - (rho+1)^-2");
    CHECK(std::abs(residue_numeric(diff, SphereModel::make(3)) - 1.0) < 1e-8);
}

TEST_CASE("contour residues at nonzero centers")
{
    // tr(Id rho^-s) on n=2 has poles at s=2 and s=1 with residue 1
    SphereModel s2 = SphereModel::make(2);
    CHECK(std::abs(residue_numeric(RhoExpr::identity(), s2, 0, 2.0) - 1.0) < 1e-8);
    CHECK(std::abs(residue_numeric(RhoExpr::identity(), s2, 0, 1.0) - 1.0) < 1e-8);
    CHECK(std::abs(residue_numeric(RhoExpr::identity(), s2, 0, 0.0)) < 1e-10);
}

TEST_CASE("regulator weight shifts leave the residue stable")
{
    SphereModel s3 = SphereModel::make(3);
    RhoExpr op = RhoExpr::power_of(0, -3);
    for (unsigned a = 0; a <= 2; ++a)
        CHECK(std::abs(residue_numeric(op, s3, a) - 0.5) < 1e-8);
}

TEST_CASE("zeta evaluator reports pole locations")
{
    ZetaEvaluator eval(RhoExpr::identity(), SphereModel::make(2));
    auto poles = eval.pole_locations();
    REQUIRE(poles.size() >= 2);
    CHECK(poles[0] == 2);
    CHECK(poles[1] == 1);
}
