#include "szego/hurwitz.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace szego;

TEST_CASE("bernoulli numbers")
{
    auto b = bernoulli_numbers(14);
    CHECK(b[0] == 1);
    CHECK(b[1] == rat(-1, 2));
    CHECK(b[2] == rat(1, 6));
    CHECK(b[3] == 0);
    CHECK(b[4] == rat(-1, 30));
    CHECK(b[6] == rat(1, 42));
    CHECK(b[8] == rat(-1, 30));
    CHECK(b[10] == rat(5, 66));
    CHECK(b[12] == rat(-691, 2730));
}

TEST_CASE("riemann zeta at real points")
{
    // series oracle for the Basel value
    double basel = oracles::basel_series();
    CHECK(std::abs(riemann_zeta({2, 0}).real() - basel) < 1e-12);
    CHECK(std::abs(riemann_zeta({2, 0}).real() - 1.6449340668482264) < 1e-14);

    // zeta(4) = pi^4/90
    double pi = 3.14159265358979323846;
    CHECK(std::abs(riemann_zeta({4, 0}).real() - pi * pi * pi * pi / 90.0) < 1e-14);

    // trivial zero neighborhood and known negative values
    CHECK(std::abs(riemann_zeta({0, 0}).real() + 0.5) < 1e-14);
    CHECK(std::abs(riemann_zeta({-1, 0}).real() + 1.0 / 12.0) < 1e-14);
    CHECK(std::abs(riemann_zeta({-3, 0}).real() - 1.0 / 120.0) < 1e-14);
    CHECK(std::abs(riemann_zeta({-2, 0}).real()) < 1e-14);

    CHECK_THROWS_AS(riemann_zeta({1, 0}), std::domain_error);
}

TEST_CASE("hurwitz zeta against shifted partial sums")
{
    // zeta_H(2, 2) = zeta(2) - 1
    CHECK(std::abs(hurwitz_zeta({2, 0}, 2.0).real() - (oracles::basel_series() - 1.0)) < 1e-12);

    // direct summation oracle for Re w = 3 at a few offsets
    for (double a : {1.0, 2.0, 5.0, 9.0}) {
        double direct = 0;
        for (long k = 200000; k >= 0; --k)
            direct += 1.0 / std::pow(a + k, 3.0);
        // tail below 1/(2 (a+N)^2)
        CHECK(std::abs(hurwitz_zeta({3, 0}, a).real() - direct) < 2e-11);
    }
}

TEST_CASE("hurwitz zeta matches the offset recurrence on complex arguments")
{
    // zeta_H(w, a) = zeta_H(w, a+1) + a^-w
    for (double re : {-0.4, 0.7, 2.3}) {
        for (double im : {-1.0, 0.5}) {
            std::complex<double> w(re, im);
            for (double a : {1.0, 3.0, 7.5}) {
                auto lhs = hurwitz_zeta(w, a);
                auto rhs = hurwitz_zeta(w, a + 1.0) + std::exp(-w * std::log(a));
                CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
            }
        }
    }
}

TEST_CASE("negative real part goes through the functional equation consistently")
{
    // zeta(w) = zeta_H(w, 2) + 1 must also hold across the FE/EM boundary
    for (double re : {-6.0, -2.5, -1.0}) {
        std::complex<double> w(re, 0.35);
        auto lhs = riemann_zeta(w);
        auto rhs = hurwitz_zeta(w, 2.0) + 1.0;
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("lanczos gamma on the right half plane")
{
    CHECK(std::abs(gamma_right_half({5, 0}).real() - 24.0) < 1e-12);
    CHECK(std::abs(gamma_right_half({0.5, 0}).real() - 1.7724538509055160) < 1e-13);
    // recurrence Gamma(z+1) = z Gamma(z)
    std::complex<double> z(2.3, 1.1);
    CHECK(std::abs(gamma_right_half(z + 1.0) - z * gamma_right_half(z)) <
          1e-12 * std::abs(gamma_right_half(z + 1.0)));
}
