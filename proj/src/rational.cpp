#include "szego/rational.hpp"

#include <stdexcept>

namespace szego {

Rational rat(long num, long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

double to_double(const Rational& q)
{
    return q.get_d();
}

Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational binomial_general(const Rational& alpha, unsigned k)
{
    Rational result = 1;
    for (unsigned i = 0; i < k; ++i) {
        Rational num = alpha - i;
        result *= num;
        result /= Rational(static_cast<long>(i) + 1);
    }
    return result;
}

Rational pow_rational(const Rational& base, long e)
{
    if (e == 0)
        return Rational(1);
    if (base == 0) {
        if (e < 0)
            throw std::domain_error("inverse power of zero");
        return Rational(0);
    }
    unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num().get_mpz_t(), mag);
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den().get_mpz_t(), mag);
    p.canonicalize();
    if (e < 0)
        p = 1 / p;
    return p;
}

} // namespace szego
