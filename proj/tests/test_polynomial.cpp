#include "szego/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace szego;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int max_deg)
{
    std::vector<Rational> c;
    int deg = static_cast<int>(rng() % (max_deg + 1));
    for (int i = 0; i <= deg; ++i)
        c.push_back(rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)));
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("degree bookkeeping and evaluation")
{
    Polynomial p({Rational(2), Rational(0), Rational(1)}); // k^2 + 2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(3)) == 11);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial({Rational(0)}).is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("shifted linear factors build the falling product")
{
    Polynomial p = Polynomial::from_shifted_linear_factors({Rational(1), Rational(2)});
    // (k+1)(k+2) = k^2 + 3k + 2
    CHECK(p.coeff(0) == 2);
    CHECK(p.coeff(1) == 3);
    CHECK(p.coeff(2) == 1);
}

TEST_CASE("argument shift is an exact Taylor shift")
{
    Polynomial p({Rational(1), Rational(2), Rational(1)}); // (k+1)^2
    Polynomial q = p.shifted_argument(Rational(-1));       // k^2
    CHECK(q.coeff(0) == 0);
    CHECK(q.coeff(1) == 0);
    CHECK(q.coeff(2) == 1);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Polynomial r = random_poly(rng, 5);
        Rational delta = rat(static_cast<long>(rng() % 7) - 3);
        Polynomial shifted = r.shifted_argument(delta);
        for (long k = -3; k <= 3; ++k)
            CHECK(shifted.eval(Rational(k)) == r.eval(Rational(k) + delta));
    }
}

TEST_CASE("divmod reconstructs the dividend")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        Polynomial a = random_poly(rng, 6);
        Polynomial b = random_poly(rng, 3);
        if (b.is_zero())
            continue;
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        if (!r.is_zero())
            CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(Polynomial({Rational(1)}).divmod(Polynomial()), std::domain_error);
}
