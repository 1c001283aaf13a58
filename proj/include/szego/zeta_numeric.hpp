#ifndef SZEGO_ZETA_NUMERIC_HPP
#define SZEGO_ZETA_NUMERIC_HPP

#include "szego/rho_expr.hpp"
#include "szego/sphere.hpp"
#include "szego/trace.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace szego {

struct PoleProximity : std::runtime_error {
    PoleProximity(const std::string& what, double pole_) : std::runtime_error(what), pole(pole_) {}
    double pole;
};

// Numerical realization of the regularized trace s -> tr(A (rho+a)^-s)
// for a sphere model: analytic continuation by exact asymptotic
// subtraction plus Euler-Maclaurin Hurwitz zeta values. Deliberately
// independent of the exact residue path (no partial fractions here).
class ZetaEvaluator {
public:
    ZetaEvaluator(const RhoExpr& a, const SphereModel& sphere, unsigned regulator_shift = 0,
                  int subtraction_order = 40);

    std::complex<double> operator()(std::complex<double> s) const;

    // Pole locations of the continued trace (exact: s = j+1 for each
    // nonzero expansion coefficient r_j).
    const std::vector<int>& pole_locations() const { return pole_locations_; }

    unsigned regulator_shift() const { return shift_; }

private:
    unsigned shift_;
    int lead_ = 0;
    int order_;
    std::vector<std::complex<long double>> coeff_; // r'_j, j = lead_ .. -order_
    std::vector<long double> proper_vals_;         // k = 1 .. k0-1
    std::vector<long double> bracket_vals_;        // k = k0 .. k1
    int k0_ = 10;
    std::vector<int> pole_locations_;
};

// tr(A (rho+regulator_shift)^-s) at a non-pole point s; relative accuracy
// target 1e-10. Throws PoleProximity within 1e-6 of a pole.
std::complex<double> zeta_numeric(const RhoExpr& a, const SphereModel& sphere,
                                  std::complex<double> s, int subtraction_order = 40,
                                  unsigned regulator_shift = 0);

// Residue of the regularized trace at `center` by trapezoid contour
// integration over |s - center| = radius (64 nodes by default). Matches
// residual_trace within 1e-8 relative at center 0. Throws PoleProximity
// if a different pole lies within 0.6 of the contour center.
double residue_numeric(const RhoExpr& a, const SphereModel& sphere, unsigned regulator_shift = 0,
                       double center = 0.0, double radius = 0.5, int nodes = 64);

} // namespace szego

#endif
