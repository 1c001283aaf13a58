// Acceptance harness: one pass/fail line per criterion, exit 0 only if
// every criterion holds at its stated tolerance.

#include "szego/suites.hpp"
#include "szego/trace.hpp"
#include "szego/zeta_numeric.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <vector>

using namespace szego;

namespace {

int criteria_failed = 0;

void report(int index, bool pass, const char* text)
{
    std::printf("[%d/9] %s %s\n", index, pass ? "PASS" : "FAIL", text);
    if (!pass)
        ++criteria_failed;
}

bool suite_passes(const char* name, const SuiteOptions& opts, size_t* failures = nullptr)
{
    SuiteReport r = run_suite(name, opts);
    if (failures)
        *failures = r.failures();
    for (const auto& c : r.cases)
        if (!c.pass)
            std::printf("      failed case %s: %s\n", c.key.c_str(), c.detail.c_str());
    return r.all_pass();
}

// ---- criterion 1: the closed trace table --------------------------------

bool lemma_table()
{
    const std::vector<Rational> expected = {
        Rational(1), Rational(1), rat(1, 2),   rat(1, 6),
        rat(1, 24),  rat(1, 120), rat(1, 720), rat(1, 5040),
    };
    for (unsigned n = 1; n <= 8; ++n) {
        SphereModel sphere = SphereModel::make(n);
        RhoExpr op = RhoExpr::power_of(0, -static_cast<int>(n));
        Rational exact = residual_trace(op, sphere);
        if (exact != expected[n - 1]) {
            std::printf("      n=%u: exact %s, expected %s\n", n, to_string(exact).c_str(),
                        to_string(expected[n - 1]).c_str());
            return false;
        }
        double numeric = residue_numeric(op, sphere);
        double want = to_double(exact);
        if (std::abs(numeric - want) > 1e-8 * std::max(1.0, std::abs(want))) {
            std::printf("      n=%u: numeric %.15g vs %.15g\n", n, numeric, want);
            return false;
        }
    }
    return true;
}

// ---- criterion 6: pole structure against an independent oracle ----------

// Exact Laurent coefficients of numer/denom at infinity, by series
// division on the coefficient maps (test-side; the engine itself expands
// factor by factor and never divides).
std::map<int, Rational> laurent_divide(const Polynomial& numer, const Polynomial& denom,
                                       int depth)
{
    std::map<int, Rational> out;
    if (numer.is_zero())
        return out;
    int lead = numer.degree() - denom.degree();
    Rational dlead = denom.leading();
    std::map<int, Rational> rem; // remainder coefficients by power of k
    for (int i = 0; i <= numer.degree(); ++i)
        rem[i] = numer.coeff(static_cast<unsigned>(i));
    for (int j = lead; j >= -depth; --j) {
        Rational c = rem.count(j + denom.degree()) ? rem[j + denom.degree()] : Rational(0);
        c /= dlead;
        if (c != 0) {
            out[j] = c;
            for (int i = 0; i <= denom.degree(); ++i) {
                rem[i + j] -= c * denom.coeff(static_cast<unsigned>(i));
            }
        }
    }
    return out;
}

bool pole_structure_oracle()
{
    std::mt19937_64 rng(20240601 + 1); // same stream as the poles suite
    const int depth = 4;
    for (size_t i = 0; i < 100; ++i) {
        RhoExpr op = random_rho_expr(rng);
        unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        SphereModel sphere = SphereModel::make(n);

        // Structural denominator of m(k) f(k).
        std::map<unsigned, int> depth_by_shift;
        for (const auto& t : op.terms())
            if (t.power < 0) {
                int need = -t.power;
                auto [it, inserted] = depth_by_shift.try_emplace(t.shift, need);
                if (!inserted && it->second < need)
                    it->second = need;
            }
        Polynomial denom = Polynomial::constant(Rational(1));
        int denom_deg = 0;
        for (const auto& [shift, mult] : depth_by_shift) {
            denom_deg += mult;
            for (int rep = 0; rep < mult; ++rep)
                denom *= Polynomial({Rational(static_cast<long>(shift)), Rational(1)});
        }
        int numer_deg = static_cast<int>(n) - 1 + denom_deg + std::max(0, op.max_power());

        // Recover the numerator by Newton interpolation at k = 1000, 1001, ...
        // from exact spectral values.
        size_t points = static_cast<size_t>(numer_deg) + 1;
        std::vector<Rational> xs(points), divided(points);
        for (size_t p = 0; p < points; ++p) {
            Rational k(1000 + static_cast<long>(p));
            xs[p] = k;
            divided[p] = op.eval(k) * sphere.hilbert.eval(k) * denom.eval(k);
        }
        for (size_t level = 1; level < points; ++level)
            for (size_t p = points - 1; p >= level; --p)
                divided[p] = (divided[p] - divided[p - 1]) / (xs[p] - xs[p - level]);
        Polynomial numer = Polynomial::constant(divided[points - 1]);
        for (size_t p = points - 1; p-- > 0;) {
            numer = numer * Polynomial({-xs[p], Rational(1)});
            numer += Polynomial::constant(divided[p]);
        }

        // Held-out checks across the sampling range, up to k = 10^6.
        for (long k : {4321L, 999983L, 1000000L}) {
            Rational kk(k);
            if (numer.eval(kk) != op.eval(kk) * sphere.hilbert.eval(kk) * denom.eval(kk)) {
                std::printf("      case %zu: interpolation failed held-out check at k=%ld\n", i,
                            k);
                return false;
            }
        }

        auto oracle_coeffs = laurent_divide(numer, denom, depth);
        auto engine_poles = poles_and_residues(op, sphere, depth);
        std::map<int, Rational> engine;
        for (const auto& p : engine_poles)
            engine[p.location - 1] = p.residue;
        std::map<int, Rational> oracle;
        for (const auto& [j, c] : oracle_coeffs)
            if (j >= -depth)
                oracle[j] = c;
        if (engine != oracle) {
            std::printf("      case %zu: pole table mismatch (%zu vs %zu entries)\n", i,
                        engine.size(), oracle.size());
            return false;
        }

        for (const auto& p : engine_poles) {
            double numeric = residue_numeric(op, sphere, 0, p.location);
            double want = to_double(p.residue);
            if (std::abs(numeric - want) > 1e-8 * std::max(1.0, std::abs(want))) {
                std::printf("      case %zu: numeric residue at s=%d off by %.3g\n", i,
                            p.location, std::abs(numeric - want));
                return false;
            }
        }
    }
    return true;
}

} // namespace

int main()
{
    SuiteOptions opts;
    opts.n_lo = 1;
    opts.n_hi = 6;
    opts.d_lo = 1;
    opts.d_hi = 3;
    opts.order = 50;
    opts.seed = 20240601;
    opts.count = 200;
    opts.jobs = 4;
    opts.tol = 1e-8;

    report(1, lemma_table(),
           "residual trace of rho^-n equals 1/(n-1)! for n=1..8, numeric within 1e-8");
    report(2, suite_passes("vanishing", opts),
           "identity operator traces vanish exactly (n=1..8, lifted codim 1..3)");
    report(3, suite_passes("c1", opts),
           "lifted supertraces equal base traces over the operator grid (n=1..6, d=1..3)");
    report(4, suite_passes("logtrace", opts),
           "log trace equals residual trace on 200 seeded operators, numeric within 1e-8");
    report(5, suite_passes("identity", opts),
           "rho-log identity holds coefficientwise to order 50 for n=1..6");
    report(6, pole_structure_oracle(),
           "pole tables match the interpolation oracle, contour residues within 1e-8");
    report(7, suite_passes("regulator", opts),
           "residues invariant under regulator weight shifts 0..2 (exact and numeric)");
    report(8, suite_passes("gaussian", opts),
           "gaussian closed form vs quadrature < 1e-6, composition positive, -d/2 scaling");
    report(9, suite_passes("embedding", opts),
           "sphere chart exact, padded two_xdy chart certified at 1000 samples, corruption "
           "detected");

    if (criteria_failed == 0) {
        std::printf("ACCEPTANCE: 9/9 criteria passed\n");
        return 0;
    }
    std::printf("ACCEPTANCE: %d/9 criteria FAILED\n", criteria_failed);
    return 1;
}
