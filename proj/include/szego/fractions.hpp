#ifndef SZEGO_FRACTIONS_HPP
#define SZEGO_FRACTIONS_HPP

#include "szego/laurent.hpp"
#include "szego/polynomial.hpp"

#include <map>
#include <utility>
#include <vector>

namespace szego {

// N(k) / prod_a (k + a)^(m_a) with integer shifts a >= 0. The closure of
// the operator algebra under products lives here rather than in RhoExpr.
struct FactoredRational {
    Polynomial numer;
    std::map<unsigned, int> denom; // shift -> multiplicity (>= 1)

    Polynomial denominator_expanded() const;
    Rational eval(const Rational& k) const;
    AsymptoticSeries expand_at_infinity(int order) const;
    // Expansion in the variable kappa = k + delta (used for regulator
    // weights (rho+delta)^-s; the k^-1 coefficient is invariant).
    AsymptoticSeries expand_at_infinity_shifted(const Rational& delta, int order) const;
};

struct PartialFractionTerm {
    unsigned shift = 0;
    int multiplicity = 1; // the (k + shift)^-multiplicity part
    Rational coeff;
};

struct PartialFractions {
    Polynomial poly;
    std::vector<PartialFractionTerm> terms;

    // Exact recombination N/D = poly + sum coeff/(k+shift)^mult, returned
    // as the numerator over the given denominator.
    Polynomial recombined_numer(const std::vector<std::pair<unsigned, int>>& denom_factors) const;
};

// Exact decomposition of numer / prod (k+a)^m. Multiplicities beyond the
// actual pole order come back with zero coefficients dropped.
PartialFractions partial_fractions(const Polynomial& numer,
                                   const std::vector<std::pair<unsigned, int>>& denom_factors);

} // namespace szego

#endif
