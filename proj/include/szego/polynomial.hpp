#ifndef SZEGO_POLYNOMIAL_HPP
#define SZEGO_POLYNOMIAL_HPP

#include "szego/rational.hpp"

#include <utility>
#include <vector>

namespace szego {

// Dense univariate polynomial over Rational, ascending coefficients.
// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, unsigned power);
    // (k + a0)(k + a1)... for the given roots' negatives.
    static Polynomial from_shifted_linear_factors(const std::vector<Rational>& shifts);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const;
    Rational coeff(unsigned i) const; // 0 beyond degree
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    // p(x + delta), exact Taylor shift.
    Polynomial shifted_argument(const Rational& delta) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    // Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    std::string str(const std::string& var = "k") const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace szego

#endif
