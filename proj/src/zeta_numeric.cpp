#include "szego/zeta_numeric.hpp"

#include "szego/hurwitz.hpp"

#include <cmath>

namespace szego {

namespace {

using cplx = std::complex<long double>;

cplx pow_real_base(long double base, cplx e)
{
    return std::exp(e * std::log(base));
}

constexpr int kBracketSpan = 64;

} // namespace

ZetaEvaluator::ZetaEvaluator(const RhoExpr& a, const SphereModel& sphere,
                             unsigned regulator_shift, int subtraction_order)
    : shift_(regulator_shift), order_(std::max(subtraction_order, 24))
{
    FactoredRational f = spectral_function(a, sphere);
    Rational delta(static_cast<long>(shift_));
    AsymptoticSeries expansion = f.expand_at_infinity_shifted(delta, order_);

    lead_ = expansion.is_zero() ? 0 : std::max(expansion.lead_power(), 0);
    coeff_.assign(static_cast<size_t>(lead_ + order_) + 1, cplx(0));
    for (const auto& [power, c] : expansion.coeffs()) {
        if (power > lead_ || power < -order_)
            continue;
        coeff_[static_cast<size_t>(lead_ - power)] = cplx(to_long_double(c));
        if (c != 0)
            pole_locations_.push_back(power + 1);
    }

    // Switch from exact summation to the continued tail far enough out
    // that the kappa = k + shift expansion converges geometrically.
    unsigned reach = std::max(a.max_shift(), regulator_shift);
    k0_ = static_cast<int>(4 * reach) + 10;

    // Exact nonnegative-power part P(kappa); proper(k) = m f(k) - P(k+a)
    // decays like 1/kappa and carries all the pole structure below s = 1.
    Polynomial p_plus;
    for (int j = 0; j <= lead_; ++j)
        p_plus += Polynomial::monomial(expansion.coeff(j), static_cast<unsigned>(j));

    proper_vals_.reserve(static_cast<size_t>(k0_) - 1);
    for (int k = 1; k < k0_; ++k) {
        Rational kappa = Rational(k) + delta;
        Rational value = f.eval(Rational(k)) - p_plus.eval(kappa);
        proper_vals_.push_back(to_long_double(value));
    }

    // Brackets: proper(k) minus its truncated expansion, exact rationals,
    // O(kappa^(-order-1)).
    bracket_vals_.reserve(kBracketSpan);
    for (int k = k0_; k < k0_ + kBracketSpan; ++k) {
        Rational kappa = Rational(k) + delta;
        Rational asym = 0;
        for (int j = -1; j >= -order_; --j)
            asym += expansion.coeff(j) * pow_rational(kappa, j);
        Rational value = f.eval(Rational(k)) - p_plus.eval(kappa) - asym;
        bracket_vals_.push_back(to_long_double(value));
    }
}

std::complex<double> ZetaEvaluator::operator()(std::complex<double> s_in) const
{
    for (int p : pole_locations_)
        if (std::abs(s_in - std::complex<double>(p, 0)) < 1e-6)
            throw PoleProximity("zeta evaluation within 1e-6 of the pole at s = " +
                                    std::to_string(p),
                                static_cast<double>(p));

    cplx s(s_in.real(), s_in.imag());
    cplx acc = 0;
    long double a = static_cast<long double>(shift_);

    // Nonnegative powers: sum_k P(k+a) (k+a)^-s = sum_j r_j zeta_H(s-j, 1+a).
    for (int j = lead_; j >= 0; --j) {
        cplx r = coeff_[static_cast<size_t>(lead_ - j)];
        if (r == cplx(0))
            continue;
        std::complex<double> w(s_in.real() - j, s_in.imag());
        std::complex<double> z = hurwitz_zeta(w, 1.0 + static_cast<double>(shift_));
        acc += r * cplx(z.real(), z.imag());
    }

    // Proper part, exact values for k < k0.
    for (int k = 1; k < k0_; ++k)
        acc += proper_vals_[static_cast<size_t>(k - 1)] * pow_real_base(k + a, -s);

    // Continued asymptotic tail from k0 on.
    long double tail_offset = static_cast<long double>(k0_) + a;
    for (int j = -1; j >= -order_; --j) {
        cplx r = coeff_[static_cast<size_t>(lead_ - j)];
        if (r == cplx(0))
            continue;
        // Skip terms whose pole-free magnitude cannot reach the budget.
        if (std::abs(r) * std::pow(static_cast<double>(tail_offset), j + 8) < 1e-26)
            continue;
        std::complex<double> w(s_in.real() - j, s_in.imag());
        std::complex<double> z = hurwitz_zeta(w, static_cast<double>(tail_offset));
        acc += r * cplx(z.real(), z.imag());
    }

    // Remainder of the proper part past the subtraction order.
    for (int i = 0; i < kBracketSpan; ++i) {
        long double b = bracket_vals_[static_cast<size_t>(i)];
        if (b == 0.0L)
            continue;
        acc += b * pow_real_base(k0_ + i + a, -s);
    }

    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::complex<double> zeta_numeric(const RhoExpr& a, const SphereModel& sphere,
                                  std::complex<double> s, int subtraction_order,
                                  unsigned regulator_shift)
{
    return ZetaEvaluator(a, sphere, regulator_shift, subtraction_order)(s);
}

double residue_numeric(const RhoExpr& a, const SphereModel& sphere, unsigned regulator_shift,
                       double center, double radius, int nodes)
{
    ZetaEvaluator eval(a, sphere, regulator_shift);
    for (int p : eval.pole_locations())
        if (std::abs(p - center) > 1e-9 && std::abs(p - center) < 0.6)
            throw PoleProximity("pole at s = " + std::to_string(p) +
                                    " lies within 0.6 of the contour center",
                                static_cast<double>(p));

    // Trapezoid rule on the circle: spectrally accurate for the Laurent
    // coefficient since the nearest other pole sits a full unit away.
    std::complex<long double> acc = 0;
    for (int m = 0; m < nodes; ++m) {
        long double theta = 2.0L * 3.141592653589793238462643383279502884L * m / nodes;
        std::complex<long double> dir(std::cos(theta), std::sin(theta));
        std::complex<double> s(center + radius * static_cast<double>(dir.real()),
                               radius * static_cast<double>(dir.imag()));
        std::complex<double> z = eval(s);
        acc += std::complex<long double>(z.real(), z.imag()) * dir;
    }
    acc *= static_cast<long double>(radius) / nodes;
    return static_cast<double>(acc.real());
}

} // namespace szego
