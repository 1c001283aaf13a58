#ifndef SZEGO_SPHERE_HPP
#define SZEGO_SPHERE_HPP

#include "szego/polynomial.hpp"
#include "szego/rho_expr.hpp"

#include <vector>

namespace szego {

// Hardy space of the unit sphere S^(2n-1) in C^n. The degree operator has
// eigenvalue k on homogeneous polynomials of degree k, with multiplicity
// the Hilbert polynomial m(k) = C(k+n-1, n-1).
struct SphereModel {
    unsigned n = 1;
    Polynomial hilbert;

    static SphereModel make(unsigned n);
    Rational multiplicity(long k) const { return hilbert.eval(Rational(k)); }
};

// Exact coefficients of C(k+n-1, n-1) as a polynomial in k (degree n-1,
// leading coefficient 1/(n-1)!).
Polynomial hilbert_polynomial(unsigned n);

// Formal power series in t = z.wbar carrying a symbolic 1/vol(S^(2n-1))
// unit. The tag is never evaluated; every trace-type output cancels it
// against integration over the sphere.
struct KernelSeries {
    std::vector<Rational> coeffs; // a_0 .. a_order
    bool vol_tagged = true;

    size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// vol * S = sum_k C(k+n-1, n-1) t^k, the expansion of (1 - t)^-n.
KernelSeries szego_kernel_series(unsigned n, size_t order);

// Applies a polynomial p(rho) termwise to Log 1/(1-t) = sum_{k>=1} t^k / k,
// using rho t^k = k t^k.
KernelSeries apply_rho_poly_to_log(const RhoExpr& p, size_t order);

// Kernel of the Toeplitz operator with spectral function f: coefficients
// m(k) f(k) for k >= 1 and 0 at k = 0 (rho^sigma kills constants, so the
// spectral sum starts at k = 1).
KernelSeries kernel_of_operator(const RhoExpr& a, const SphereModel& sphere, size_t order);

} // namespace szego

#endif
