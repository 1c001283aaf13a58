#ifndef SZEGO_LAURENT_HPP
#define SZEGO_LAURENT_HPP

#include "szego/polynomial.hpp"
#include "szego/rational.hpp"
#include "szego/rho_expr.hpp"

#include <map>

namespace szego {

// Truncated Laurent expansion at k = infinity with exact rational
// coefficients: sum_{j <= lead} c_j k^j, guaranteed down to k^(-order)
// with error O(k^(-order-1)). Laurent polynomials (finitely many terms,
// no tail) are flagged exact so products do not degrade them.
class AsymptoticSeries {
public:
    AsymptoticSeries() = default; // exact zero

    static AsymptoticSeries zero(int order);
    static AsymptoticSeries from_polynomial(const Polynomial& p); // exact
    // Expansion of c * (k + shift)^power; exact when power >= 0.
    static AsymptoticSeries expand_term(const Rational& c, const Rational& shift, int power,
                                        int order);
    // Expansion of a spectral function of rho, term by term.
    static AsymptoticSeries expand_rho(const RhoExpr& a, int order);

    bool is_zero() const { return c_.empty(); }
    bool is_exact() const { return exact_; }
    int order() const { return order_; }
    // Highest power with nonzero coefficient; meaningless for zero series.
    int lead_power() const;
    Rational coeff(int power) const; // 0 if absent
    const std::map<int, Rational, std::greater<int>>& coeffs() const { return c_; }

    // Value of the truncated sum at a rational point, exact.
    Rational eval_truncated(const Rational& k) const;

    AsymptoticSeries truncated(int order) const;

    AsymptoticSeries operator-() const;
    friend AsymptoticSeries operator+(const AsymptoticSeries& a, const AsymptoticSeries& b);
    friend AsymptoticSeries operator-(const AsymptoticSeries& a, const AsymptoticSeries& b);
    friend AsymptoticSeries operator*(const AsymptoticSeries& a, const AsymptoticSeries& b);
    friend AsymptoticSeries operator*(const Rational& s, const AsymptoticSeries& a);

    std::string str() const;

private:
    void set(int power, const Rational& c);
    void drop_below_order();

    std::map<int, Rational, std::greater<int>> c_;
    int order_ = 0;      // coefficients guaranteed for powers >= -order_
    bool exact_ = true;  // no omitted tail at all
};

// expand_at_infinity for operator spectral functions (the public name of
// the operation; see also fractions.hpp for the rational-function form).
AsymptoticSeries expand_at_infinity(const RhoExpr& a, int order);

} // namespace szego

#endif
