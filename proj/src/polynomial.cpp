#include "szego/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace szego {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational& c, unsigned power)
{
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_shifted_linear_factors(const std::vector<Rational>& shifts)
{
    Polynomial p = constant(Rational(1));
    for (const Rational& a : shifts)
        p *= Polynomial(std::vector<Rational>{a, Rational(1)});
    return p;
}

const Rational& Polynomial::leading() const
{
    if (c_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Polynomial::coeff(unsigned i) const
{
    return i < c_.size() ? c_[i] : Rational(0);
}

Rational Polynomial::eval(const Rational& x) const
{
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

Polynomial Polynomial::shifted_argument(const Rational& delta) const
{
    // Horner form of p(x + delta).
    Polynomial result;
    for (size_t i = c_.size(); i-- > 0;) {
        result *= Polynomial(std::vector<Rational>{delta, Rational(1)});
        result += constant(c_[i]);
    }
    return result;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            prod[i + j] += c_[i] * o.c_[j];
    c_ = std::move(prod);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    Polynomial rem = *this;
    if (rem.degree() < divisor.degree())
        return {Polynomial(), rem};
    std::vector<Rational> q(static_cast<size_t>(rem.degree() - divisor.degree()) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        unsigned shift = static_cast<unsigned>(rem.degree() - divisor.degree());
        Rational factor = rem.leading() / divisor.leading();
        q[shift] = factor;
        rem -= Polynomial::monomial(factor, shift) * divisor;
    }
    return {Polynomial(std::move(q)), rem};
}

std::string Polynomial::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        Rational c = c_[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        if (i == 0 || c != 1)
            os << to_string(c);
        if (i > 0) {
            if (c != 1)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

} // namespace szego
