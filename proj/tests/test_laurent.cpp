#include "szego/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace szego;

TEST_CASE("binomial expansion of an inverse square")
{
    // (rho+1)^-2 at order 4: k^-2 - 2k^-3 + 3k^-4
    AsymptoticSeries s = expand_at_infinity(RhoExpr::power_of(1, -2), 4);
    CHECK(s.coeff(-2) == 1);
    CHECK(s.coeff(-3) == -2);
    CHECK(s.coeff(-4) == 3);
    CHECK(s.coeff(-1) == 0);

    // multiplying back by (k+1)^2 recovers 1 + O(k^-3)
    AsymptoticSeries back = s * AsymptoticSeries::expand_term(Rational(1), Rational(1), 2, 4);
    CHECK(back.coeff(0) == 1);
    CHECK(back.coeff(-1) == 0);
    CHECK(back.coeff(-2) == 0);
}

TEST_CASE("polynomial cases are exact")
{
    AsymptoticSeries s = expand_at_infinity(RhoExpr::power_of(0, -1), 3);
    CHECK(s.coeff(-1) == 1);
    CHECK(s.coeff(-2) == 0);
    CHECK(s.is_exact());

    AsymptoticSeries t = expand_at_infinity(RhoExpr::power_of(1, 1), 2);
    CHECK(t.coeff(1) == 1);
    CHECK(t.coeff(0) == 1);
    CHECK(t.is_exact());
}

TEST_CASE("truncated series match exact evaluation at k = 10^6")
{
    std::mt19937_64 rng(2024);
    const Rational big(1000000);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<RhoTerm> terms;
        size_t n_terms = 1 + rng() % 3;
        for (size_t t = 0; t < n_terms; ++t)
            terms.push_back({rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)),
                             static_cast<unsigned>(rng() % 4),
                             -1 - static_cast<int>(rng() % 5)});
        RhoExpr op(std::move(terms));
        int order = 2 + static_cast<int>(rng() % 5);
        AsymptoticSeries s = expand_at_infinity(op, order);
        Rational truncated = s.eval_truncated(big);
        Rational exact = op.eval(big);
        Rational err = truncated - exact;
        if (err < 0)
            err = -err;
        // |error| below k^-order relative to the function scale
        Rational scale = exact < 0 ? -exact : exact;
        if (scale < 1)
            scale = 1;
        CHECK(err <= scale * pow_rational(big, -order));
    }
}

TEST_CASE("multiplication tracks the guaranteed order")
{
    AsymptoticSeries inv = AsymptoticSeries::expand_term(Rational(1), Rational(1), -1, 6);
    AsymptoticSeries poly = AsymptoticSeries::expand_term(Rational(1), Rational(0), 2, 6);
    AsymptoticSeries prod = inv * poly; // lead k^1, trustworthy only to k^-(6-2)
    CHECK(prod.lead_power() == 1);
    CHECK(prod.order() == 4);
    CHECK(prod.coeff(1) == 1);
    CHECK(prod.coeff(0) == -1);
    CHECK(prod.coeff(-1) == 1);
}

TEST_CASE("addition and cancellation")
{
    AsymptoticSeries a = expand_at_infinity(RhoExpr::power_of(1, -1), 5);
    AsymptoticSeries b = expand_at_infinity(Rational(-1) * RhoExpr::power_of(1, -1), 5);
    CHECK((a + b).is_zero());
}
