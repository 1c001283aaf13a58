#include "szego/op_grammar.hpp"
#include "szego/rho_expr.hpp"

#include <doctest.h>

#include <random>

using namespace szego;

TEST_CASE("canonical form merges like terms and drops zeros")
{
    // add((1,0,-2), (1,0,-2)) -> (2,0,-2)
    RhoExpr sum = RhoExpr::term(Rational(1), 0, -2) + RhoExpr::term(Rational(1), 0, -2);
    REQUIRE(sum.terms().size() == 1);
    CHECK(sum.terms()[0].coeff == 2);
    CHECK(sum.terms()[0].power == -2);

    RhoExpr zero = RhoExpr::term(Rational(1), 1, -1) - RhoExpr::term(Rational(1), 1, -1);
    CHECK(zero.is_zero());

    // power-0 terms canonicalize to shift 0: shift(Id, 5) == Id
    CHECK(RhoExpr::identity().shifted(5) == RhoExpr::identity());
    CHECK(RhoExpr::term(Rational(2), 7, 0) == RhoExpr::term(Rational(2), 0, 0));
}

TEST_CASE("products merge powers at a common shift")
{
    // mul((1,0,-1), (1,0,-1)) -> (1,0,-2)
    RhoExpr inv = RhoExpr::power_of(0, -1);
    RhoExpr prod = inv * inv;
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms()[0].shift == 0);
    CHECK(prod.terms()[0].power == -2);
}

TEST_CASE("products with a polynomial factor expand across shifts")
{
    // (rho+1) * (rho)^-1 = 1 + (rho)^-1
    RhoExpr p = RhoExpr::power_of(1, 1) * RhoExpr::power_of(0, -1);
    CHECK(p == RhoExpr::identity() + RhoExpr::power_of(0, -1));

    // rho(rho+1) evaluated matches k(k+1)
    RhoExpr prod = RhoExpr::rho() * RhoExpr::power_of(1, 1);
    for (long k = 1; k <= 10; ++k)
        CHECK(prod.eval(Rational(k)) == Rational(k) * Rational(k + 1));
}

TEST_CASE("inverse powers at distinct shifts refuse to multiply")
{
    // 1/(k(k+1)) is not a finite term list; the k=1..5 values of the
    // partial-fraction identity 1/k - 1/(k+1) confirm the factored value.
    RhoExpr a = RhoExpr::power_of(0, -1);
    RhoExpr b = RhoExpr::power_of(1, -1);
    CHECK_THROWS_AS(a * b, NonClosedProduct);
    for (long k = 1; k <= 5; ++k) {
        Rational lhs = a.eval(Rational(k)) * b.eval(Rational(k));
        Rational rhs = rat(1, k) - rat(1, k + 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("shift replaces rho by rho + j")
{
    // shift(rho^-n, 1) -> (rho+1)^-n
    CHECK(RhoExpr::power_of(0, -3).shifted(1) == RhoExpr::power_of(1, -3));
    CHECK(RhoExpr::power_of(1, -1).shifted(2) == RhoExpr::power_of(3, -1));
}

TEST_CASE("canonicalization preserves spectral values")
{
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<RhoTerm> raw;
        size_t n_terms = 1 + rng() % 5;
        for (size_t t = 0; t < n_terms; ++t)
            raw.push_back({rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)),
                           static_cast<unsigned>(rng() % 4),
                           static_cast<int>(rng() % 9) - 6});
        RhoExpr canonical{std::vector<RhoTerm>(raw)};
        for (long k = 1; k <= 50; ++k) {
            Rational direct = 0;
            for (const auto& t : raw)
                direct += t.coeff * pow_rational(Rational(k) + static_cast<long>(t.shift), t.power);
            CHECK(direct == canonical.eval(Rational(k)));
        }
    }
}

TEST_CASE("operator grammar round-trips")
{
    RhoExpr e = parse_op_spec("(rho+1)^-2 - 2*(rho+2)^-2");
    REQUIRE(e.terms().size() == 2);
    CHECK(e.terms()[0].shift == 1);
    CHECK(e.terms()[0].power == -2);
    CHECK(e.terms()[1].coeff == -2);
    CHECK(parse_op_spec(e.str()) == e);

    CHECK(parse_op_spec("1") == RhoExpr::identity());
    CHECK(parse_op_spec("rho^-3") == parse_op_spec("(rho)^-3"));
    CHECK(parse_op_spec("1/2*(rho)^-1 + 3") ==
          rat(1, 2) * RhoExpr::power_of(0, -1) + Rational(3) * RhoExpr::identity());
    CHECK(parse_op_spec("-rho") == Rational(-1) * RhoExpr::rho());
}

TEST_CASE("parse errors carry the offending column")
{
    try {
        parse_op_spec("(rho");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column == 5);
    }
    CHECK_THROWS_AS(parse_op_spec(""), ParseError);
    CHECK_THROWS_AS(parse_op_spec("(rho+1)^"), ParseError);
    CHECK_THROWS_AS(parse_op_spec("2*"), ParseError);
    CHECK_THROWS_AS(parse_op_spec("1/0"), ParseError);
}
