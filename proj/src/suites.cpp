#include "szego/suites.hpp"

#include "szego/contact_embed.hpp"
#include "szego/gaussian.hpp"
#include "szego/koszul.hpp"
#include "szego/sphere.hpp"
#include "szego/trace.hpp"
#include "szego/zeta_numeric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace szego {

namespace {

using CaseFn = std::function<CaseResult()>;

std::string pad2(unsigned v)
{
    return v < 10 ? "0" + std::to_string(v) : std::to_string(v);
}

std::string pad3(size_t v)
{
    std::string s = std::to_string(v);
    while (s.size() < 3)
        s.insert(s.begin(), '0');
    return s;
}

CaseResult exact_equal_case(std::string key, const Rational& got, const Rational& want)
{
    CaseResult r{std::move(key), got == want, {}};
    r.detail = "value " + to_string(got) + (r.pass ? "" : ", expected " + to_string(want));
    return r;
}

CaseResult close_case(std::string key, double got, double want, double tol)
{
    double scale = std::max(1.0, std::abs(want));
    CaseResult r{std::move(key), std::abs(got - want) <= tol * scale, {}};
    std::ostringstream os;
    os.precision(15);
    os << "numeric " << got << " vs " << want;
    r.detail = os.str();
    return r;
}

CaseResult guarded(const CaseFn& fn)
{
    try {
        return fn();
    } catch (const std::exception& e) {
        return {"exception", false, e.what()};
    }
}

std::vector<CaseResult> run_cases(std::vector<CaseFn> fns, unsigned jobs)
{
    std::vector<CaseResult> out(fns.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < fns.size(); ++i)
            out[i] = guarded(fns[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= fns.size())
                    return;
                out[i] = guarded(fns[i]);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
    return out;
}

Rational lemma_value(unsigned n)
{
    return rat(Integer(1), factorial(n - 1));
}

// ---- operator suites ----------------------------------------------------

SuiteReport suite_lemma(const SuiteOptions& opts)
{
    SuiteReport report{"lemma", {}};
    std::vector<CaseFn> fns;
    for (unsigned n = 1; n <= std::max(8u, opts.n_hi); ++n) {
        fns.push_back([n, &opts]() {
            SphereModel sphere = SphereModel::make(n);
            RhoExpr op = RhoExpr::power_of(0, -static_cast<int>(n));
            Rational exact = residual_trace(op, sphere);
            CaseResult r = exact_equal_case("lemma/n=" + pad2(n), exact, lemma_value(n));
            if (r.pass) {
                double numeric = residue_numeric(op, sphere);
                CaseResult num =
                    close_case(r.key, numeric, to_double(exact), opts.tol);
                r.pass = num.pass;
                r.detail += "; " + num.detail;
            }
            return r;
        });
    }
    report.cases = run_cases(std::move(fns), opts.jobs);
    return report;
}

SuiteReport suite_vanishing(const SuiteOptions& opts)
{
    SuiteReport report{"vanishing", {}};
    std::vector<CaseFn> fns;
    for (unsigned n = 1; n <= std::max(8u, opts.n_hi); ++n) {
        fns.push_back([n]() {
            SphereModel sphere = SphereModel::make(n);
            return exact_equal_case("vanishing/id/n=" + pad2(n),
                                    residual_trace(RhoExpr::identity(), sphere), Rational(0));
        });
        for (unsigned d = 1; d <= 3; ++d) {
            fns.push_back([n, d]() {
                SphereModel ambient = SphereModel::make(n + d);
                Rational st = supertrace_res(lift(RhoExpr::identity(), d), ambient);
                return exact_equal_case(
                    "vanishing/lift/n=" + pad2(n) + "/d=" + std::to_string(d), st, Rational(0));
            });
        }
        fns.push_back([n]() {
            SphereModel sphere = SphereModel::make(n);
            double numeric = residue_numeric(RhoExpr::identity(), sphere);
            CaseResult r{"vanishing/numeric/n=" + pad2(n), std::abs(numeric) <= 1e-10, {}};
            std::ostringstream os;
            os.precision(15);
            os << "residue " << numeric;
            r.detail = os.str();
            return r;
        });
    }
    report.cases = run_cases(std::move(fns), opts.jobs);
    return report;
}

std::vector<std::pair<std::string, RhoExpr>> c1_operator_set(unsigned n)
{
    std::vector<std::pair<std::string, RhoExpr>> ops;
    for (unsigned m = 1; m <= n + 2; ++m)
        ops.emplace_back("rho^-" + std::to_string(m), RhoExpr::power_of(0, -static_cast<int>(m)));
    ops.emplace_back("(rho+1)^-" + std::to_string(n),
                     RhoExpr::power_of(1, -static_cast<int>(n)));
    // Mixed three-term combinations, one with a positive power.
    ops.emplace_back("mix1", RhoExpr::power_of(0, -1) +
                                 Rational(3) * RhoExpr::power_of(1, -3));
    ops.emplace_back("mix2", RhoExpr::power_of(0, -static_cast<int>(n)) -
                                 rat(1, 2) * RhoExpr::power_of(1, -2) +
                                 rat(1, 3) * RhoExpr::power_of(2, -static_cast<int>(n) - 1));
    ops.emplace_back("mix3", Rational(2) * RhoExpr::rho() + RhoExpr::power_of(1, -1) -
                                 RhoExpr::power_of(3, -2));
    return ops;
}

SuiteReport suite_c1(const SuiteOptions& opts)
{
    SuiteReport report{"c1", {}};
    std::vector<CaseFn> fns;
    for (unsigned n = opts.n_lo; n <= opts.n_hi; ++n) {
        for (unsigned d = opts.d_lo; d <= opts.d_hi; ++d) {
            for (auto& [label, op] : c1_operator_set(n)) {
                fns.push_back([n, d, label = label, op = op]() {
                    C1Report c1 = verify_c_equals_one(op, n, d);
                    CaseResult r{"c1/n=" + pad2(n) + "/d=" + std::to_string(d) + "/" + label,
                                 c1.equal, {}};
                    r.detail = "supertrace " + to_string(c1.lhs) + ", trace " + to_string(c1.rhs);
                    return r;
                });
            }
        }
        // The codimension-one pair (rho^-n, (rho+1)^-n) on the next sphere
        // sums to n/n!.
        fns.push_back([n]() {
            RhoExpr op = RhoExpr::power_of(0, -static_cast<int>(n));
            Rational st = supertrace_res(lift(op, 1), SphereModel::make(n + 1));
            Rational want = rat(Integer(static_cast<long>(n)), factorial(n));
            return exact_equal_case("c1/pair-value/n=" + pad2(n), st, want);
        });
    }
    report.cases = run_cases(std::move(fns), opts.jobs);
    return report;
}

SuiteReport suite_identity(const SuiteOptions& opts)
{
    SuiteReport report{"identity", {}};
    std::vector<CaseFn> fns;
    for (unsigned n = opts.n_lo; n <= opts.n_hi; ++n) {
        fns.push_back([n, order = opts.order]() {
            RhoExpr prod = RhoExpr::identity();
            for (unsigned i = 0; i < n; ++i)
                prod = prod * RhoExpr::power_of(i, 1);
            KernelSeries lhs = apply_rho_poly_to_log(prod, order);
            KernelSeries rhs = szego_kernel_series(n, order);
            Rational scale = Rational(factorial(n - 1));
            bool pass = lhs.coeffs[0] == 0;
            size_t bad = 0;
            for (size_t k = 1; k <= order && pass; ++k) {
                if (lhs.coeffs[k] != scale * rhs.coeffs[k]) {
                    pass = false;
                    bad = k;
                }
            }
            CaseResult r{"identity/n=" + pad2(n), pass, {}};
            r.detail = pass ? "orders 0.." + std::to_string(order) + " equal"
                            : "first mismatch at t^" + std::to_string(bad);
            return r;
        });
    }
    report.cases = run_cases(std::move(fns), opts.jobs);
    return report;
}

SuiteReport suite_logtrace(const SuiteOptions& opts)
{
    SuiteReport report{"logtrace", {}};
    std::vector<CaseFn> fns;
    std::mt19937_64 rng(opts.seed);
    for (size_t i = 0; i < opts.count; ++i) {
        RhoExpr op = random_rho_expr(rng);
        unsigned n = 1 + static_cast<unsigned>(rng() % 5);
        fns.push_back([i, n, op, tol = opts.tol]() {
            SphereModel sphere = SphereModel::make(n);
            Rational exact = residual_trace(op, sphere);
            Rational log = log_trace(op, sphere);
            CaseResult r{"logtrace/case=" + pad3(i), exact == log, {}};
            if (!r.pass) {
                r.detail = "residual " + to_string(exact) + " vs log " + to_string(log);
                return r;
            }
            double numeric = residue_numeric(op, sphere);
            double want = to_double(exact);
            double scale = std::max(1.0, std::abs(want));
            r.pass = std::abs(numeric - want) <= tol * scale;
            std::ostringstream os;
            os.precision(15);
            os << "exact " << to_string(exact) << ", numeric " << numeric;
            r.detail = os.str();
            return r;
        });
    }
    report.cases = run_cases(std::move(fns), opts.jobs);
    return report;
}

SuiteReport suite_poles(const SuiteOptions& opts)
{
    SuiteReport report{"poles", {}};
    std::vector<CaseFn> fns;
    std::mt19937_64 rng(opts.seed + 1);
    size_t count = std::min<size_t>(opts.count, 100);
    for (size_t i = 0; i < count; ++i) {
        RhoExpr op = random_rho_expr(rng);
        unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        fns.push_back([i, n, op, tol = opts.tol]() {
            SphereModel sphere = SphereModel::make(n);
            auto poles = poles_and_residues(op, sphere, 4);
            CaseResult r{"poles/case=" + pad3(i), true, {}};
            int bound = static_cast<int>(n) + op.max_power();
            for (const auto& pole : poles) {
                if (pole.location > bound) {
                    r.pass = false;
                    r.detail = "pole above degree bound at s = " + std::to_string(pole.location);
                    return r;
                }
                double numeric = residue_numeric(op, sphere, 0, pole.location);
                double want = to_double(pole.residue);
                if (std::abs(numeric - want) > tol * std::max(1.0, std::abs(want))) {
                    r.pass = false;
                    std::ostringstream os;
                    os.precision(15);
                    os << "residue at s = " << pole.location << ": contour " << numeric
                       << " vs exact " << want;
                    r.detail = os.str();
                    return r;
                }
            }
            r.detail = std::to_string(poles.size()) + " poles cross-checked";
            return r;
        });
    }
    report.cases = run_cases(std::move(fns), opts.jobs);
    return report;
}

SuiteReport suite_regulator(const SuiteOptions& opts)
{
    SuiteReport report{"regulator", {}};
    std::vector<CaseFn> fns;
    std::vector<std::pair<std::string, std::pair<RhoExpr, unsigned>>> cases;
    for (unsigned n = 1; n <= 4; ++n) {
        cases.emplace_back("rho^-" + std::to_string(n) + "/n=" + pad2(n),
                           std::make_pair(RhoExpr::power_of(0, -static_cast<int>(n)), n));
        cases.emplace_back("(rho+1)^-2/n=" + pad2(n),
                           std::make_pair(RhoExpr::power_of(1, -2), n));
    }
    std::mt19937_64 rng(opts.seed + 2);
    for (size_t i = 0; i < 12; ++i) {
        RhoExpr op = random_rho_expr(rng);
        unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        cases.emplace_back("random/case=" + pad3(i) + "/n=" + pad2(n), std::make_pair(op, n));
    }
    for (auto& [label, payload] : cases) {
        fns.push_back([label = label, op = payload.first, n = payload.second,
                       tol = opts.tol]() {
            SphereModel sphere = SphereModel::make(n);
            Rational base = residual_trace(op, sphere);
            FactoredRational f = spectral_function(op, sphere);
            CaseResult r{"regulator/" + label, true, {}};
            for (unsigned a = 0; a <= 2; ++a) {
                Rational shifted =
                    f.expand_at_infinity_shifted(Rational(static_cast<long>(a)),
                                                 static_cast<int>(n) + 4)
                        .coeff(-1);
                if (shifted != base) {
                    r.pass = false;
                    r.detail = "exact residue moved under weight shift " + std::to_string(a) +
                               ": " + to_string(shifted) + " vs " + to_string(base);
                    return r;
                }
                double numeric = residue_numeric(op, sphere, a);
                double want = to_double(base);
                if (std::abs(numeric - want) > tol * std::max(1.0, std::abs(want))) {
                    r.pass = false;
                    std::ostringstream os;
                    os.precision(15);
                    os << "numeric residue with shift " << a << ": " << numeric << " vs "
                       << want;
                    r.detail = os.str();
                    return r;
                }
            }
            r.detail = "residue " + to_string(base) + " stable for shifts 0..2";
            return r;
        });
    }
    report.cases = run_cases(std::move(fns), opts.jobs);
    return report;
}

SuiteReport suite_embed_independence(const SuiteOptions& opts)
{
    SuiteReport report{"embed-independence", {}};
    std::vector<CaseFn> fns;
    std::mt19937_64 rng(opts.seed + 3);
    size_t count = std::min<size_t>(opts.count, 40);
    for (size_t i = 0; i < count; ++i) {
        RhoExpr op = random_rho_expr(rng);
        unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        fns.push_back([i, n, op]() {
            Rational base = residual_trace(op, SphereModel::make(n));
            CaseResult r{"embed-independence/case=" + pad3(i), true, {}};
            for (unsigned d = 1; d <= 3; ++d) {
                Rational st = supertrace_res(lift(op, d), SphereModel::make(n + d));
                if (st != base) {
                    r.pass = false;
                    r.detail = "codim " + std::to_string(d) + " gives " + to_string(st) +
                               ", base " + to_string(base);
                    return r;
                }
            }
            r.detail = "codim 1..3 all equal " + to_string(base);
            return r;
        });
    }
    report.cases = run_cases(std::move(fns), opts.jobs);
    return report;
}

// ---- gaussian suite ------------------------------------------------------

double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Eigen::MatrixXd random_orthogonal(std::mt19937_64& rng, int d)
{
    // QR of a Box-Muller Gaussian matrix; explicit transforms keep the
    // stream portable.
    Eigen::MatrixXd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double u1 = std::max(uniform01(rng), 1e-300);
            double u2 = uniform01(rng);
            g(i, j) = std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * std::numbers::pi * u2);
        }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    return qr.householderQ();
}

Eigen::MatrixXcd random_positive_form(std::mt19937_64& rng, int d, double lo, double hi)
{
    Eigen::MatrixXd q = random_orthogonal(rng, d);
    Eigen::VectorXd eigs(d);
    for (int i = 0; i < d; ++i)
        eigs[i] = lo + (hi - lo) * uniform01(rng);
    Eigen::MatrixXd re = q * eigs.asDiagonal() * q.transpose();
    re = 0.5 * (re + re.transpose());
    Eigen::MatrixXd im(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j) {
            double v = 2.0 * uniform01(rng) - 1.0;
            im(i, j) = v;
            im(j, i) = v;
        }
    return re.cast<std::complex<double>>() +
           std::complex<double>(0, 1) * im.cast<std::complex<double>>();
}

SuiteReport suite_gaussian(const SuiteOptions& opts)
{
    using namespace szego::gauss;
    SuiteReport report{"gaussian", {}};
    std::vector<CaseFn> fns;

    std::mt19937_64 rng(opts.seed + 4);
    for (size_t i = 0; i < 100; ++i) {
        int d = 1 + static_cast<int>(rng() % 3);
        Eigen::MatrixXcd m = random_positive_form(rng, d, 0.2, 5.0);
        fns.push_back([i, m]() {
            auto form = ComplexQuadraticForm::from_matrix(m);
            std::complex<double> closed = gaussian_integral_closed(form);
            std::complex<double> numeric = gaussian_integral_numeric(form, 1e-8);
            double diff = std::abs(closed - numeric);
            CaseResult r{"gaussian/closed-vs-quadrature/case=" + pad3(i), diff < 1e-6, {}};
            std::ostringstream os;
            os.precision(15);
            os << "difference " << diff;
            r.detail = os.str();
            return r;
        });
    }

    std::mt19937_64 rng2(opts.seed + 5);
    for (size_t i = 0; i < 50; ++i) {
        int p = 1 + static_cast<int>(rng2() % 2);
        int s = 1 + static_cast<int>(rng2() % 2);
        int rr = 1 + static_cast<int>(rng2() % 2);
        Eigen::MatrixXcd left = random_positive_form(rng2, p + s, 0.2, 5.0);
        Eigen::MatrixXcd right = random_positive_form(rng2, s + rr, 0.2, 5.0);
        fns.push_back([i, left, right, s]() {
            auto composed = compose_phases(left, right, s);
            CaseResult r{"gaussian/composition-positivity/case=" + pad3(i),
                         composed.report.min_re_eigenvalue >= -1e-12, {}};
            std::ostringstream os;
            os.precision(15);
            os << "min Re eigenvalue " << composed.report.min_re_eigenvalue;
            r.detail = os.str();
            return r;
        });
    }

    std::mt19937_64 rng3(opts.seed + 6);
    for (size_t i = 0; i < 10; ++i) {
        int d = 1 + static_cast<int>(rng3() % 3);
        Eigen::MatrixXcd m = random_positive_form(rng3, d, 0.2, 5.0);
        fns.push_back([i, m, d]() {
            auto base = gaussian_integral_closed(ComplexQuadraticForm::from_matrix(m));
            CaseResult r{"gaussian/scaling/case=" + pad3(i), true, {}};
            for (double xi : {1.0, 2.0, 10.0}) {
                auto scaled = gaussian_integral_closed(
                    ComplexQuadraticForm::from_matrix(xi * m));
                std::complex<double> want = base * std::pow(xi, -0.5 * d);
                if (std::abs(scaled - want) > 1e-9 * std::abs(want)) {
                    r.pass = false;
                    std::ostringstream os;
                    os.precision(15);
                    os << "scale " << xi << ": " << std::abs(scaled - want) / std::abs(want)
                       << " relative";
                    r.detail = os.str();
                    return r;
                }
            }
            r.detail = "xi in {1,2,10} follow the -d/2 exponent";
            return r;
        });
    }

    std::mt19937_64 rng4(opts.seed + 7);
    for (size_t i = 0; i < 10; ++i) {
        Eigen::MatrixXcd a = random_positive_form(rng4, 2, 0.3, 3.0);
        Eigen::MatrixXcd b = random_positive_form(rng4, 2, 0.3, 3.0);
        Eigen::MatrixXcd c = random_positive_form(rng4, 2, 0.3, 3.0);
        fns.push_back([i, a, b, c]() {
            auto ab = compose_phases(a, b, 1);
            auto ab_c = compose_phases(ab.q, c, 1);
            auto bc = compose_phases(b, c, 1);
            auto a_bc = compose_phases(a, bc.q, 1);
            double q_diff = (ab_c.q - a_bc.q).cwiseAbs().maxCoeff();
            std::complex<double> left = ab.prefactor * ab_c.prefactor;
            std::complex<double> right = bc.prefactor * a_bc.prefactor;
            double pref_diff = std::abs(left - right) / std::abs(left);
            CaseResult r{"gaussian/associativity/case=" + pad3(i),
                         q_diff < 1e-12 && pref_diff < 1e-12, {}};
            std::ostringstream os;
            os.precision(15);
            os << "phase diff " << q_diff << ", prefactor rel diff " << pref_diff;
            r.detail = os.str();
            return r;
        });
    }

    report.cases = run_cases(std::move(fns), opts.jobs);
    return report;
}

// ---- embedding suite -------------------------------------------------------

SuiteReport suite_embedding(const SuiteOptions& opts)
{
    using namespace szego::contact;
    SuiteReport report{"embedding", {}};
    std::vector<CaseFn> fns;

    fns.push_back([]() {
        // Standard S^3 chart: (x1,y1) = (cos u, sin u) cos v scaled onto
        // the 2-sphere-like parametrization; pairs already satisfy
        // sum x^2+y^2 = 1, so padding must be the identity.
        std::vector<std::string> params{"u", "v"};
        ContactPresentation p;
        p.params = params;
        p.form = FormKind::antisymmetric;
        auto e = [&params](const std::string& s) { return Expr::parse(s, params); };
        p.pairs.emplace_back(e("cos(u)*cos(v)"), e("sin(u)*cos(v)"));
        p.pairs.emplace_back(e("sin(v)"), e("0"));
        auto samples = grid_samples(2, 21);
        Embedding emb = pad_to_sphere(p, 1, samples);
        CaseResult r{"embedding/standard-s3", emb.target_pairs.size() == 2, {}};
        if (!r.pass) {
            r.detail = "padding added a pair to an exact sphere chart";
            return r;
        }
        auto rep = verify_embedding(emb, p, samples, 1e-12);
        r.pass = rep.pass;
        std::ostringstream os;
        os.precision(6);
        os << "max deviations " << rep.max_form_deviation << " / " << rep.max_sphere_deviation;
        r.detail = os.str();
        return r;
    });

    fns.push_back([seed = opts.seed]() {
        // Worked two_xdy chart: pairs [(u, v)] with form 2 u dv.
        std::vector<std::string> params{"u", "v"};
        ContactPresentation p;
        p.params = params;
        p.form = FormKind::two_xdy;
        p.pairs.emplace_back(Expr::parse("u", params), Expr::parse("v", params));
        ContactPresentation anti = antisymmetrize(p);
        auto grid = grid_samples(2, 101);
        Embedding emb = pad_to_sphere(anti, std::nullopt, grid);
        CaseResult r{"embedding/two-xdy-worked", emb.radius == Rational(3), {}};
        if (!r.pass) {
            r.detail = "auto radius " + to_string(emb.radius) + ", expected 3";
            return r;
        }
        auto samples = random_samples(2, 1000, seed);
        auto rep = verify_embedding(emb, p, samples, 1e-9);
        r.pass = rep.pass;
        std::ostringstream os;
        os.precision(6);
        os << "R = 3, max deviations " << rep.max_form_deviation << " / "
           << rep.max_sphere_deviation;
        r.detail = os.str();
        return r;
    });

    fns.push_back([seed = opts.seed]() {
        std::vector<std::string> params{"u", "v"};
        ContactPresentation p;
        p.params = params;
        p.form = FormKind::two_xdy;
        p.pairs.emplace_back(Expr::parse("u", params), Expr::parse("v", params));
        ContactPresentation anti = antisymmetrize(p);
        auto grid = grid_samples(2, 101);
        Embedding emb = pad_to_sphere(anti, std::nullopt, grid);
        // Corrupt one target coordinate: the pullback must now fail.
        emb.target_pairs[1].second =
            Expr::parse("1.0001*v", params);
        auto samples = random_samples(2, 1000, seed);
        CaseResult r{"embedding/corrupted-pair", false, {}};
        try {
            verify_embedding(emb, p, samples, 1e-9);
            r.detail = "corrupted embedding passed verification";
        } catch (const ToleranceExceeded&) {
            r.pass = true;
            r.detail = "corruption detected";
        }
        return r;
    });

    report.cases = run_cases(std::move(fns), opts.jobs);
    return report;
}

} // namespace

bool SuiteReport::all_pass() const
{
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

size_t SuiteReport::failures() const
{
    size_t n = 0;
    for (const auto& c : cases)
        if (!c.pass)
            ++n;
    return n;
}

RhoExpr random_rho_expr(std::mt19937_64& rng)
{
    std::vector<RhoTerm> terms;
    size_t n_terms = 1 + rng() % 4;
    for (size_t t = 0; t < n_terms; ++t) {
        long num = static_cast<long>(rng() % 11) - 5; // -5 .. 5
        long den = 1 + static_cast<long>(rng() % 3);
        unsigned shift = static_cast<unsigned>(rng() % 4);
        int power = static_cast<int>(rng() % 9) - 6; // -6 .. 2
        if (num == 0)
            num = 1;
        terms.push_back({rat(num, den), shift, power});
    }
    return RhoExpr(std::move(terms));
}

std::vector<std::string> suite_names()
{
    return {"lemma",     "vanishing", "c1",       "identity",  "logtrace",
            "poles",     "regulator", "embed-independence", "gaussian", "embedding"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts)
{
    if (name == "lemma")
        return suite_lemma(opts);
    if (name == "vanishing")
        return suite_vanishing(opts);
    if (name == "c1")
        return suite_c1(opts);
    if (name == "identity")
        return suite_identity(opts);
    if (name == "logtrace")
        return suite_logtrace(opts);
    if (name == "poles")
        return suite_poles(opts);
    if (name == "regulator")
        return suite_regulator(opts);
    if (name == "embed-independence")
        return suite_embed_independence(opts);
    if (name == "gaussian")
        return suite_gaussian(opts);
    if (name == "embedding")
        return suite_embedding(opts);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_all_suites(const SuiteOptions& opts)
{
    std::vector<SuiteReport> reports;
    for (const auto& name : suite_names())
        reports.push_back(run_suite(name, opts));
    return reports;
}

} // namespace szego
