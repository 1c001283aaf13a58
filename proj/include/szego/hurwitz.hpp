#ifndef SZEGO_HURWITZ_HPP
#define SZEGO_HURWITZ_HPP

#include "szego/rational.hpp"

#include <complex>
#include <vector>

namespace szego {

// Exact Bernoulli numbers B_0 .. B_{count-1} (B_1 = -1/2 convention).
std::vector<Rational> bernoulli_numbers(unsigned count);

// Double-double style conversion; keeps ~30 significant digits when the
// target is the x87 long double.
long double to_long_double(const Rational& q);

// Hurwitz zeta sum_{k>=0} (k+a)^-w, meromorphically continued, evaluated
// by Euler-Maclaurin summation with rigorous term truncation. For
// Re w < -1/2 the offset must be a positive integer (the only case the
// trace engine produces); there the value is assembled from the Riemann
// zeta functional equation.
std::complex<double> hurwitz_zeta(std::complex<double> w, double a);

std::complex<double> riemann_zeta(std::complex<double> w);

// Lanczos-approximated Gamma for Re z >= 1/2 (no reflection needed by the
// callers here).
std::complex<double> gamma_right_half(std::complex<double> z);

} // namespace szego

#endif
