#include "szego/koszul.hpp"

#include "szego/trace.hpp"

#include <stdexcept>

namespace szego {

KoszulLift lift(const RhoExpr& p, unsigned codim)
{
    KoszulLift l;
    l.codim = codim;
    l.components.reserve(codim + 1);
    for (unsigned j = 0; j <= codim; ++j)
        l.components.push_back({j % 2 == 0 ? 1 : -1, binomial(codim, j), p.shifted(j)});
    return l;
}

Rational supertrace_res(const KoszulLift& l, const SphereModel& ambient)
{
    if (ambient.n < l.codim)
        throw std::invalid_argument("ambient sphere too small for the lift codimension");
    Rational acc = 0;
    for (const auto& comp : l.components) {
        Rational term = Rational(comp.multiplicity) * residual_trace(comp.op, ambient);
        acc += comp.sign > 0 ? term : -term;
    }
    return acc;
}

C1Report verify_c_equals_one(const RhoExpr& p, unsigned base_n, unsigned d)
{
    if (base_n < 1 || d < 1)
        throw std::invalid_argument("verify_c_equals_one requires base_n >= 1 and d >= 1");
    C1Report report;
    report.lhs = supertrace_res(lift(p, d), SphereModel::make(base_n + d));
    report.rhs = residual_trace(p, SphereModel::make(base_n));
    report.equal = report.lhs == report.rhs;
    return report;
}

} // namespace szego
