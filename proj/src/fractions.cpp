#include "szego/fractions.hpp"

#include <stdexcept>

namespace szego {

namespace {

// Truncated Taylor coefficients of 1/(eps + c)^m around eps = 0, c != 0.
std::vector<Rational> inverse_factor_taylor(const Rational& c, int m, unsigned count)
{
    std::vector<Rational> out(count, Rational(0));
    Rational c_pow = pow_rational(c, -m); // c^(-m)
    for (unsigned i = 0; i < count; ++i) {
        out[i] = binomial_general(Rational(-m), i) * c_pow;
        c_pow /= c;
    }
    return out;
}

std::vector<Rational> truncated_product(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b, unsigned count)
{
    std::vector<Rational> out(count, Rational(0));
    for (unsigned i = 0; i < count && i < a.size(); ++i)
        for (unsigned j = 0; i + j < count && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

Polynomial FactoredRational::denominator_expanded() const
{
    Polynomial d = Polynomial::constant(Rational(1));
    for (const auto& [shift, mult] : denom)
        for (int i = 0; i < mult; ++i)
            d *= Polynomial(std::vector<Rational>{Rational(static_cast<long>(shift)), Rational(1)});
    return d;
}

Rational FactoredRational::eval(const Rational& k) const
{
    Rational value = numer.eval(k);
    for (const auto& [shift, mult] : denom) {
        Rational base = k + static_cast<long>(shift);
        value /= pow_rational(base, mult);
    }
    return value;
}

AsymptoticSeries FactoredRational::expand_at_infinity(int order) const
{
    return expand_at_infinity_shifted(Rational(0), order);
}

AsymptoticSeries FactoredRational::expand_at_infinity_shifted(const Rational& delta,
                                                              int order) const
{
    int working = order + std::max(0, numer.degree());
    Polynomial shifted_numer = delta == 0 ? numer : numer.shifted_argument(-delta);
    AsymptoticSeries acc = AsymptoticSeries::from_polynomial(shifted_numer);
    for (const auto& [shift, mult] : denom) {
        Rational c = Rational(static_cast<long>(shift)) - delta;
        acc = acc * AsymptoticSeries::expand_term(Rational(1), c, -mult, working);
    }
    return acc.truncated(order);
}

Polynomial PartialFractions::recombined_numer(
    const std::vector<std::pair<unsigned, int>>& denom_factors) const
{
    Polynomial full = Polynomial::constant(Rational(1));
    for (const auto& [shift, mult] : denom_factors)
        for (int i = 0; i < mult; ++i)
            full *= Polynomial(std::vector<Rational>{Rational(static_cast<long>(shift)), Rational(1)});

    Polynomial total = poly * full;
    for (const auto& term : terms) {
        // full / (k+shift)^multiplicity, reconstructed by factor list.
        Polynomial rest = Polynomial::constant(term.coeff);
        for (const auto& [shift, mult] : denom_factors) {
            int reduced = shift == term.shift ? mult - term.multiplicity : mult;
            if (reduced < 0)
                throw std::invalid_argument("partial fraction term exceeds factor multiplicity");
            for (int i = 0; i < reduced; ++i)
                rest *= Polynomial(std::vector<Rational>{Rational(static_cast<long>(shift)), Rational(1)});
        }
        total += rest;
    }
    return total;
}

PartialFractions partial_fractions(const Polynomial& numer,
                                   const std::vector<std::pair<unsigned, int>>& denom_factors)
{
    for (const auto& [shift, mult] : denom_factors) {
        (void)shift;
        if (mult < 1)
            throw std::invalid_argument("denominator factor with multiplicity < 1");
    }
    for (size_t i = 0; i < denom_factors.size(); ++i)
        for (size_t j = i + 1; j < denom_factors.size(); ++j)
            if (denom_factors[i].first == denom_factors[j].first)
                throw std::invalid_argument("duplicate denominator shift");

    Polynomial full = Polynomial::constant(Rational(1));
    for (const auto& [shift, mult] : denom_factors)
        for (int i = 0; i < mult; ++i)
            full *= Polynomial(std::vector<Rational>{Rational(static_cast<long>(shift)), Rational(1)});

    PartialFractions result;
    auto [quot, rem] = numer.divmod(full);
    result.poly = quot;
    if (rem.is_zero())
        return result;

    // Heaviside at each pole -a: Taylor-expand rem / prod_{b != a} (k+b)^(m_b)
    // around k = -a to order m_a - 1; coefficient i gives the weight of
    // (k+a)^-(m_a - i).
    for (const auto& [shift, mult] : denom_factors) {
        unsigned count = static_cast<unsigned>(mult);
        Rational minus_a = Rational(-static_cast<long>(shift));
        Polynomial local = rem.shifted_argument(minus_a);
        std::vector<Rational> taylor(count, Rational(0));
        for (unsigned i = 0; i < count; ++i)
            taylor[i] = local.coeff(i);
        for (const auto& [other, other_mult] : denom_factors) {
            if (other == shift)
                continue;
            Rational c = Rational(static_cast<long>(other)) - Rational(static_cast<long>(shift));
            taylor = truncated_product(taylor, inverse_factor_taylor(c, other_mult, count), count);
        }
        for (unsigned i = 0; i < count; ++i) {
            if (taylor[i] == 0)
                continue;
            result.terms.push_back({shift, static_cast<int>(count - i), taylor[i]});
        }
    }
    return result;
}

} // namespace szego
