#ifndef SZEGO_KOSZUL_HPP
#define SZEGO_KOSZUL_HPP

#include "szego/rho_expr.hpp"
#include "szego/sphere.hpp"

#include <vector>

namespace szego {

// One exterior degree of an endomorphism lifted to a Koszul resolution:
// weight (-1)^j C(d, j) on the operator with rho replaced by rho + j
// (lifting across one resolution step uses d_i p(rho) = p(rho+1) d_i).
struct KoszulComponent {
    int sign = 1;            // (-1)^j
    Integer multiplicity;    // C(d, j)
    RhoExpr op;              // shift(p, j)
};

struct KoszulLift {
    unsigned codim = 0;
    std::vector<KoszulComponent> components; // j = 0 .. codim
};

KoszulLift lift(const RhoExpr& p, unsigned codim);

// sum_j (-1)^j C(d, j) tr_res(component_j) on the ambient sphere, exact.
Rational supertrace_res(const KoszulLift& l, const SphereModel& ambient);

struct C1Report {
    Rational lhs; // supertrace of the lift on S^(2(base_n+d)-1)
    Rational rhs; // residual trace of p on S^(2 base_n - 1)
    bool equal = false;
};

// The lifted supertrace on the larger sphere against the plain residual
// trace on the small one; the two agree exactly for every operator here.
C1Report verify_c_equals_one(const RhoExpr& p, unsigned base_n, unsigned d);

} // namespace szego

#endif
