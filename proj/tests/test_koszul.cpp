#include "szego/koszul.hpp"

#include "szego/suites.hpp"
#include "szego/trace.hpp"

#include <doctest.h>

#include <random>

using namespace szego;

TEST_CASE("lift components carry signs, multiplicities and shifts")
{
    KoszulLift l1 = lift(RhoExpr::power_of(0, -4), 1);
    REQUIRE(l1.components.size() == 2);
    CHECK(l1.components[0].sign == 1);
    CHECK(l1.components[0].multiplicity == 1);
    CHECK(l1.components[0].op == RhoExpr::power_of(0, -4));
    CHECK(l1.components[1].sign == -1);
    CHECK(l1.components[1].op == RhoExpr::power_of(1, -4));

    KoszulLift l0 = lift(RhoExpr::rho(), 0);
    REQUIRE(l0.components.size() == 1);
    CHECK(l0.components[0].sign == 1);

    KoszulLift l2 = lift(RhoExpr::power_of(0, -2), 2);
    REQUIRE(l2.components.size() == 3);
    CHECK(l2.components[1].multiplicity == 2);
    CHECK(l2.components[1].sign == -1);
    CHECK(l2.components[2].op == RhoExpr::power_of(2, -2));
}

TEST_CASE("iterated codimension-one lifts compose to the full lift")
{
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        RhoExpr p = random_rho_expr(rng);
        KoszulLift twice_lifted = lift(p, 2);
        // lift each component of lift(p,1) one more step and merge
        KoszulLift once = lift(p, 1);
        std::map<std::pair<unsigned, int>, Rational> merged;
        for (const auto& comp : once.components) {
            KoszulLift inner = lift(comp.op, 1);
            for (size_t j = 0; j < inner.components.size(); ++j) {
                int sign = comp.sign * inner.components[j].sign;
                // weight by both multiplicities
                for (const auto& t : inner.components[j].op.terms()) {
                    Rational w = Rational(comp.multiplicity) *
                                 Rational(inner.components[j].multiplicity) * t.coeff;
                    merged[{t.shift, t.power}] += sign > 0 ? w : -w;
                }
            }
        }
        std::map<std::pair<unsigned, int>, Rational> direct;
        for (const auto& comp : twice_lifted.components)
            for (const auto& t : comp.op.terms()) {
                Rational w = Rational(comp.multiplicity) * t.coeff;
                direct[{t.shift, t.power}] += comp.sign > 0 ? w : -w;
            }
        CHECK(merged == direct);
    }
}

TEST_CASE("supertrace examples")
{
    // 3/2 - 1/2 = 1 on the n=3 ambient sphere
    CHECK(supertrace_res(lift(RhoExpr::power_of(0, -2), 1), SphereModel::make(3)) == 1);
    // the identity lifts to zero supertrace in any codimension
    for (unsigned d = 0; d <= 3; ++d)
        CHECK(supertrace_res(lift(RhoExpr::identity(), d), SphereModel::make(4)) == 0);
    // tr_res[(k+1)k^-1] - tr_res[(k+1)(k+1)^-1] = 1 - 0
    CHECK(supertrace_res(lift(RhoExpr::power_of(0, -1), 1), SphereModel::make(2)) == 1);
    CHECK_THROWS_AS(supertrace_res(lift(RhoExpr::identity(), 3), SphereModel::make(2)),
                    std::invalid_argument);
}

TEST_CASE("the paper pair value n/n! in codimension one")
{
    for (unsigned n = 1; n <= 6; ++n) {
        Rational st = supertrace_res(lift(RhoExpr::power_of(0, -static_cast<int>(n)), 1),
                                     SphereModel::make(n + 1));
        CHECK(st == rat(Integer(static_cast<long>(n)), factorial(n)));
        CHECK(st == rat(Integer(1), factorial(n - 1))); // same number as the base trace
    }
}

TEST_CASE("supertrace equals the base residual trace")
{
    for (unsigned n = 1; n <= 6; ++n) {
        auto rep = verify_c_equals_one(RhoExpr::power_of(0, -static_cast<int>(n)), n, 1);
        CHECK(rep.equal);
        CHECK(rep.rhs == rat(Integer(1), factorial(n - 1)));
    }
    auto mixed = verify_c_equals_one(
        RhoExpr::power_of(0, -1) + Rational(3) * RhoExpr::power_of(1, -3), 2, 2);
    CHECK(mixed.equal);

    auto id = verify_c_equals_one(RhoExpr::identity(), 3, 2);
    CHECK(id.equal);
    CHECK(id.rhs == 0);

    CHECK_THROWS_AS(verify_c_equals_one(RhoExpr::identity(), 0, 1), std::invalid_argument);
}

TEST_CASE("supertraces are independent of the ambient codimension")
{
    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 20; ++trial) {
        RhoExpr p = random_rho_expr(rng);
        unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        Rational base = residual_trace(p, SphereModel::make(n));
        for (unsigned d = 1; d <= 3; ++d)
            CHECK(supertrace_res(lift(p, d), SphereModel::make(n + d)) == base);
    }
}
