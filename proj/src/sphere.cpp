#include "szego/sphere.hpp"

#include <stdexcept>

namespace szego {

SphereModel SphereModel::make(unsigned n)
{
    if (n < 1)
        throw std::invalid_argument("sphere parameter n must be >= 1");
    return SphereModel{n, hilbert_polynomial(n)};
}

Polynomial hilbert_polynomial(unsigned n)
{
    if (n < 1)
        throw std::invalid_argument("sphere parameter n must be >= 1");
    // C(k+n-1, n-1) = (k+1)(k+2)...(k+n-1) / (n-1)!
    std::vector<Rational> shifts;
    for (unsigned i = 1; i < n; ++i)
        shifts.push_back(Rational(static_cast<long>(i)));
    Polynomial p = Polynomial::from_shifted_linear_factors(shifts);
    p *= rat(Integer(1), factorial(n - 1));
    return p;
}

KernelSeries szego_kernel_series(unsigned n, size_t order)
{
    if (order < 1)
        throw std::invalid_argument("kernel series order must be >= 1");
    KernelSeries s;
    s.coeffs.reserve(order + 1);
    for (size_t k = 0; k <= order; ++k)
        s.coeffs.push_back(Rational(binomial(k + n - 1, n - 1)));
    return s;
}

KernelSeries apply_rho_poly_to_log(const RhoExpr& p, size_t order)
{
    if (!p.is_polynomial())
        throw std::invalid_argument("apply_rho_poly_to_log requires a polynomial in rho");
    KernelSeries s;
    s.coeffs.assign(order + 1, Rational(0));
    for (size_t k = 1; k <= order; ++k) {
        Rational kk(static_cast<long>(k));
        s.coeffs[k] = p.eval(kk) / kk;
    }
    return s;
}

KernelSeries kernel_of_operator(const RhoExpr& a, const SphereModel& sphere, size_t order)
{
    KernelSeries s;
    s.coeffs.assign(order + 1, Rational(0));
    for (size_t k = 1; k <= order; ++k) {
        Rational kk(static_cast<long>(k));
        s.coeffs[k] = sphere.hilbert.eval(kk) * a.eval(kk);
    }
    return s;
}

} // namespace szego
