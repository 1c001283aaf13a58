#ifndef SZEGO_RHO_EXPR_HPP
#define SZEGO_RHO_EXPR_HPP

#include "szego/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace szego {

// One spectral term c * (rho + a)^m. The degree operator rho acts on the
// weight-k eigenspace as multiplication by k, so a term evaluates to
// c * (k + a)^m. Shifts a are nonnegative integers, which keeps every
// operator in the algebra finite at the spectral points k >= 1.
struct RhoTerm {
    Rational coeff;
    unsigned shift = 0;
    int power = 0;

    bool operator==(const RhoTerm& o) const
    {
        return coeff == o.coeff && shift == o.shift && power == o.power;
    }
};

// Thrown by products such as (rho)^-1 * (rho+1)^-1 whose result is not a
// finite term list; callers work at the rational-function level (see
// fractions.hpp) where closure holds.
struct NonClosedProduct : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operator given as an exact rational spectral function of rho.
// Canonical form: terms sorted by (shift, power), no duplicate keys, no
// zero coefficients, and constants (power 0) carried at shift 0 so the
// identity has the single representation (1, 0, 0).
class RhoExpr {
public:
    RhoExpr() = default; // the zero operator
    explicit RhoExpr(std::vector<RhoTerm> raw_terms);

    static RhoExpr identity();
    static RhoExpr rho();
    static RhoExpr term(const Rational& c, unsigned shift, int power);
    // (rho + shift)^power with unit coefficient.
    static RhoExpr power_of(unsigned shift, int power);

    const std::vector<RhoTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const; // all powers >= 0
    int min_power() const;      // 0 for the zero operator
    int max_power() const;
    unsigned max_shift() const;

    // Exact spectral value at eigenvalue k (k + shift must be nonzero for
    // every negative-power term).
    Rational eval(const Rational& k) const;

    RhoExpr shifted(unsigned j) const; // rho -> rho + j in every term

    RhoExpr operator-() const;
    friend RhoExpr operator+(const RhoExpr& a, const RhoExpr& b);
    friend RhoExpr operator-(const RhoExpr& a, const RhoExpr& b);
    friend RhoExpr operator*(const RhoExpr& a, const RhoExpr& b); // may throw NonClosedProduct
    friend RhoExpr operator*(const Rational& s, const RhoExpr& a);

    bool operator==(const RhoExpr& o) const { return terms_ == o.terms_; }

    // Rendering in the operator-spec grammar, e.g. "(rho+1)^-2 - 2*(rho+2)^-2".
    std::string str() const;

private:
    std::vector<RhoTerm> terms_;
};

} // namespace szego

#endif
