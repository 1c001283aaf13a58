#include "szego/trace.hpp"

#include <stdexcept>

namespace szego {

FactoredRational spectral_function(const RhoExpr& a, const SphereModel& sphere)
{
    // Common denominator: for each shift present with a negative power,
    // (k+a)^(d_a) with d_a the deepest inverse power at that shift.
    FactoredRational f;
    std::map<unsigned, int> depth;
    for (const auto& t : a.terms())
        if (t.power < 0) {
            int need = -t.power;
            auto [it, inserted] = depth.try_emplace(t.shift, need);
            if (!inserted && it->second < need)
                it->second = need;
        }
    f.denom = depth;

    Polynomial numer;
    for (const auto& t : a.terms()) {
        Polynomial part = Polynomial::constant(t.coeff);
        bool own_shift_cleared = false;
        for (const auto& [shift, d] : depth) {
            int exponent = d;
            if (shift == t.shift) {
                exponent = d + t.power;
                own_shift_cleared = true;
            }
            if (exponent < 0)
                throw std::logic_error("negative exponent while clearing denominators");
            for (int i = 0; i < exponent; ++i)
                part *= Polynomial(std::vector<Rational>{Rational(static_cast<long>(shift)), Rational(1)});
        }
        if (!own_shift_cleared && t.power > 0)
            for (int i = 0; i < t.power; ++i)
                part *= Polynomial(std::vector<Rational>{Rational(static_cast<long>(t.shift)), Rational(1)});
        numer += part;
    }
    f.numer = numer * sphere.hilbert;
    return f;
}

Rational residual_trace(const RhoExpr& a, const SphereModel& sphere)
{
    FactoredRational f = spectral_function(a, sphere);
    std::vector<std::pair<unsigned, int>> factors(f.denom.begin(), f.denom.end());
    PartialFractions pf = partial_fractions(f.numer, factors);
    // Only first-order terms b/(k+a) contribute to the k^-1 coefficient at
    // infinity; the polynomial part and higher multiplicities are O(1) up
    // or O(k^-2) down.
    Rational res = 0;
    for (const auto& term : pf.terms)
        if (term.multiplicity == 1)
            res += term.coeff;
    return res;
}

std::vector<PoleData> poles_and_residues(const RhoExpr& a, const SphereModel& sphere, int depth)
{
    if (depth < 1)
        throw std::invalid_argument("pole depth must be >= 1");
    FactoredRational f = spectral_function(a, sphere);
    AsymptoticSeries series = f.expand_at_infinity(depth);
    std::vector<PoleData> poles;
    for (const auto& [power, coeff] : series.coeffs()) {
        if (power < -depth)
            continue;
        poles.push_back({power + 1, coeff});
    }
    return poles;
}

HolonomicDecomposition decompose_holonomic(const RhoExpr& a, const SphereModel& sphere)
{
    return decompose_holonomic(a, sphere, static_cast<int>(sphere.n) + 4);
}

HolonomicDecomposition decompose_holonomic(const RhoExpr& a, const SphereModel& sphere, int order)
{
    FactoredRational f = spectral_function(a, sphere);
    auto [poly_part, rem_numer] = f.numer.divmod(f.denominator_expanded());

    HolonomicDecomposition dec;
    // Match the polynomial part against Hilbert polynomials
    // C(k+N-1, N-1), highest degree first; the system is triangular since
    // deg C(k+N-1, N-1) = N-1 with leading coefficient 1/(N-1)!.
    Polynomial residual_poly = poly_part;
    while (!residual_poly.is_zero()) {
        unsigned N = static_cast<unsigned>(residual_poly.degree()) + 1;
        Rational f_N = residual_poly.leading() * Rational(factorial(N - 1));
        dec.power_parts[N] = f_N;
        residual_poly -= f_N * hilbert_polynomial(N);
    }

    // Proper rational part: isolate the k^-1 coefficient, the rest is the
    // O(k^-2) remainder.
    FactoredRational proper{rem_numer, f.denom};
    AsymptoticSeries tail = proper.expand_at_infinity(order);
    dec.log_coefficient = tail.coeff(-1);
    dec.remainder = tail - AsymptoticSeries::expand_term(dec.log_coefficient, Rational(0), -1, order);
    if (!dec.remainder.is_zero() && dec.remainder.lead_power() > -2)
        throw std::logic_error("holonomic remainder not O(k^-2)");
    return dec;
}

Rational log_trace(const RhoExpr& a, const SphereModel& sphere)
{
    // The Log 1/(1-t) coefficient of the kernel carries 1/vol; integrating
    // over the sphere cancels the unit, leaving g itself.
    return decompose_holonomic(a, sphere).log_coefficient;
}

} // namespace szego
