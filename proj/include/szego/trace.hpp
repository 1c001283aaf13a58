#ifndef SZEGO_TRACE_HPP
#define SZEGO_TRACE_HPP

#include "szego/fractions.hpp"
#include "szego/laurent.hpp"
#include "szego/rho_expr.hpp"
#include "szego/sphere.hpp"

#include <map>
#include <vector>

namespace szego {

// Simple pole of the regularized trace s -> tr(A rho^-s).
struct PoleData {
    int location = 0; // position in s
    Rational residue;
};

// m(k) f(k) split against the kernel singularity scale: power parts are
// the coefficients of (1-t)^-N, the log coefficient multiplies
// Log 1/(1-t), and the remainder sums to a continuous function.
struct HolonomicDecomposition {
    std::map<unsigned, Rational> power_parts; // N >= 1 -> f_N
    Rational log_coefficient;
    AsymptoticSeries remainder; // lead power <= -2
};

// m(k) f_A(k) as an exact rational function of k over the factored
// denominator prod (k+a)^m.
FactoredRational spectral_function(const RhoExpr& a, const SphereModel& sphere);

// Residue at s = 0 of tr(A rho^-s): the k^-1 coefficient of the expansion
// of m(k) f_A(k) at infinity, extracted by polynomial division and partial
// fractions. Calibrated so that the trace of rho^-n on S^(2n-1) is
// +1/(n-1)!.
Rational residual_trace(const RhoExpr& a, const SphereModel& sphere);

// All poles of the regularized trace down to s = -depth+1: the expansion
// coefficient r_j of k^j produces a simple pole at s = j+1 with residue
// r_j (zeta(s-j) has its only pole, residue 1, at s = j+1).
std::vector<PoleData> poles_and_residues(const RhoExpr& a, const SphereModel& sphere, int depth);

// Exact holonomic split of m(k) f_A(k); the truncation order defaults to
// n + 4, deep enough for every pole down to s = -3.
HolonomicDecomposition decompose_holonomic(const RhoExpr& a, const SphereModel& sphere);
HolonomicDecomposition decompose_holonomic(const RhoExpr& a, const SphereModel& sphere, int order);

// The trace of the logarithmic coefficient; always equals residual_trace
// (the module's central cross-check, via an independent extraction path).
Rational log_trace(const RhoExpr& a, const SphereModel& sphere);

} // namespace szego

#endif
