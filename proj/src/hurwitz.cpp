#include "szego/hurwitz.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace szego {

namespace {

using cplx = std::complex<long double>;

constexpr long double kPi = 3.141592653589793238462643383279502884L;

// B_{2i}/(2i)! for the Euler-Maclaurin corrections.
const std::vector<long double>& em_weights()
{
    static std::vector<long double> weights;
    static std::once_flag once;
    std::call_once(once, [] {
        auto bern = bernoulli_numbers(64);
        for (unsigned i = 1; 2 * i < bern.size(); ++i) {
            Rational w = bern[2 * i] / Rational(factorial(2 * i));
            weights.push_back(to_long_double(w));
        }
    });
    return weights;
}

cplx pow_real_base(long double base, cplx e)
{
    // base > 0
    return std::exp(e * std::log(base));
}

// One Euler-Maclaurin pass for sum_{k>=0} (a+k)^-w: direct terms up to
// a+m, then the integral and correction tail at that offset. Fails (sets
// ok = false) if the correction terms stop decreasing before reaching the
// accuracy floor.
cplx hurwitz_em_once(cplx w, long double a, long double target, bool& ok)
{
    unsigned m = 0;
    if (a < target)
        m = static_cast<unsigned>(std::ceil(target - a));
    cplx acc = 0;
    for (unsigned k = 0; k < m; ++k)
        acc += pow_real_base(a + k, -w);
    long double am = a + m;
    cplx am_mw = pow_real_base(am, -w);
    acc += am_mw * am / (w - cplx(1)); // am^(1-w)/(w-1)
    acc += am_mw / 2.0L;

    const auto& weights = em_weights();
    cplx poch = w;            // (w)_1
    cplx am_pow = am_mw / am; // am^(-w-1)
    long double scale = std::abs(acc) + 1.0L;
    long double prev_mag = 0;
    ok = false;
    for (size_t i = 0; i < weights.size(); ++i) {
        cplx term = weights[i] * poch * am_pow;
        acc += term;
        long double mag = std::abs(term);
        if (mag < 1e-24L * scale) {
            ok = true;
            break;
        }
        if (i > 2 && mag > prev_mag)
            break; // diverging; retry with a larger offset
        prev_mag = mag;
        poch *= (w + cplx(2.0L * i + 1.0L)) * (w + cplx(2.0L * i + 2.0L));
        am_pow /= am * am;
    }
    return acc;
}

cplx hurwitz_em(cplx w, long double a)
{
    long double target = std::max<long double>(16.0L, 0.85L * std::abs(w) + 8.0L);
    for (int attempt = 0; attempt < 4; ++attempt) {
        bool ok = true;
        cplx value = hurwitz_em_once(w, a, target, ok);
        if (ok)
            return value;
        target *= 1.7L;
    }
    throw std::runtime_error("Euler-Maclaurin summation failed to converge");
}

// Lanczos approximation (g = 607/128, 15 terms), valid for Re z >= 1/2.
cplx gamma_lanczos(cplx z)
{
    static const long double g = 4.7421875L;
    static const long double coeff[15] = {
        0.99999999999999709182L,
        57.156235665862923517L,
        -59.597960355475491248L,
        14.136097974741747174L,
        -0.49191381609762019978L,
        0.33994649984811888699e-4L,
        0.46523628927048575665e-4L,
        -0.98374475304879564677e-4L,
        0.15808870322491248884e-3L,
        -0.21026444172410488319e-3L,
        0.21743961811521264320e-3L,
        -0.16431810653676389022e-3L,
        0.84418223983852743293e-4L,
        -0.26190838401581408670e-4L,
        0.36899182659531622704e-5L,
    };
    cplx sum = coeff[0];
    for (int i = 1; i < 15; ++i)
        sum += coeff[i] / (z - cplx(1) + cplx(static_cast<long double>(i)));
    cplx base = z - cplx(1) + g + cplx(0.5L);
    static const long double sqrt_two_pi = 2.506628274631000502415765284811L;
    return sqrt_two_pi * std::exp((z - cplx(0.5L)) * std::log(base) - base) * sum;
}

cplx riemann_zeta_ld(cplx w)
{
    if (std::abs(w - cplx(1)) < 1e-12L)
        throw std::domain_error("zeta evaluated at its pole w = 1");
    if (w.real() >= -0.5L)
        return hurwitz_em(w, 1.0L);
    // zeta(w) = 2^w pi^(w-1) sin(pi w / 2) Gamma(1-w) zeta(1-w)
    cplx one_minus = cplx(1) - w;
    cplx value = std::exp(w * std::log(2.0L)) * std::exp((w - cplx(1)) * std::log(kPi));
    value *= std::sin(kPi * w / 2.0L);
    value *= gamma_lanczos(one_minus);
    value *= hurwitz_em(one_minus, 1.0L);
    return value;
}

cplx hurwitz_zeta_ld(cplx w, long double a)
{
    if (a <= 0)
        throw std::domain_error("hurwitz zeta offset must be positive");
    if (std::abs(w - cplx(1)) < 1e-12L)
        throw std::domain_error("hurwitz zeta evaluated at its pole w = 1");
    if (w.real() >= -0.5L)
        return hurwitz_em(w, a);
    long double rounded = std::floor(a + 0.5L);
    if (std::abs(a - rounded) > 1e-9L || rounded < 1)
        throw std::domain_error("hurwitz zeta at Re w < -1/2 requires a positive integer offset");
    cplx value = riemann_zeta_ld(w);
    for (long double u = 1; u < rounded - 0.5L; u += 1)
        value -= pow_real_base(u, -w);
    return value;
}

} // namespace

std::vector<Rational> bernoulli_numbers(unsigned count)
{
    std::vector<Rational> b;
    b.reserve(count);
    for (unsigned m = 0; m < count; ++m) {
        if (m == 0) {
            b.push_back(Rational(1));
            continue;
        }
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * b[j];
        b.push_back(-acc / Rational(binomial(m + 1, m)));
    }
    return b;
}

long double to_long_double(const Rational& q)
{
    double head = q.get_d();
    Rational residual = q - Rational(head);
    return static_cast<long double>(head) + static_cast<long double>(residual.get_d());
}

std::complex<double> hurwitz_zeta(std::complex<double> w, double a)
{
    cplx v = hurwitz_zeta_ld(cplx(w.real(), w.imag()), a);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::complex<double> riemann_zeta(std::complex<double> w)
{
    cplx v = riemann_zeta_ld(cplx(w.real(), w.imag()));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::complex<double> gamma_right_half(std::complex<double> z)
{
    if (z.real() < 0.5)
        throw std::domain_error("gamma_right_half requires Re z >= 1/2");
    cplx v = gamma_lanczos(cplx(z.real(), z.imag()));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

} // namespace szego
