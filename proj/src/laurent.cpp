#include "szego/laurent.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace szego {

namespace {
constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;
}

AsymptoticSeries AsymptoticSeries::zero(int order)
{
    AsymptoticSeries s;
    s.order_ = order;
    s.exact_ = true;
    return s;
}

AsymptoticSeries AsymptoticSeries::from_polynomial(const Polynomial& p)
{
    AsymptoticSeries s;
    s.order_ = kExactOrder;
    s.exact_ = true;
    for (int i = 0; i <= p.degree(); ++i)
        s.set(i, p.coeff(static_cast<unsigned>(i)));
    return s;
}

AsymptoticSeries AsymptoticSeries::expand_term(const Rational& c, const Rational& shift,
                                               int power, int order)
{
    AsymptoticSeries s;
    if (c == 0) {
        s.order_ = power >= 0 ? kExactOrder : order;
        return s;
    }
    if (power >= 0) {
        // Finite binomial expansion, exact.
        s.order_ = kExactOrder;
        s.exact_ = true;
        Rational shift_pow = 1;
        for (int i = power; i >= 0; --i) {
            Rational w = c * Rational(binomial(static_cast<unsigned long>(power),
                                               static_cast<unsigned long>(i))) *
                         shift_pow;
            s.set(i, w);
            shift_pow *= shift;
        }
        return s;
    }
    // (k + a)^m = k^m (1 + a/k)^m = sum_i C(m, i) a^i k^(m-i), m < 0.
    s.order_ = order;
    s.exact_ = shift == 0;
    Rational shift_pow = 1;
    for (int i = 0; power - i >= -order; ++i) {
        Rational w = c * binomial_general(Rational(power), static_cast<unsigned>(i)) * shift_pow;
        s.set(power - i, w);
        if (shift == 0)
            break;
        shift_pow *= shift;
    }
    return s;
}

AsymptoticSeries AsymptoticSeries::expand_rho(const RhoExpr& a, int order)
{
    AsymptoticSeries acc = zero(order);
    for (const auto& t : a.terms())
        acc = acc + expand_term(t.coeff, Rational(static_cast<long>(t.shift)), t.power, order);
    return acc;
}

int AsymptoticSeries::lead_power() const
{
    if (c_.empty())
        throw std::logic_error("lead power of zero series");
    return c_.begin()->first;
}

Rational AsymptoticSeries::coeff(int power) const
{
    auto it = c_.find(power);
    return it == c_.end() ? Rational(0) : it->second;
}

Rational AsymptoticSeries::eval_truncated(const Rational& k) const
{
    Rational acc = 0;
    for (const auto& [power, c] : c_)
        acc += c * pow_rational(k, power);
    return acc;
}

AsymptoticSeries AsymptoticSeries::truncated(int order) const
{
    AsymptoticSeries s;
    s.order_ = order;
    s.exact_ = exact_;
    for (const auto& [power, c] : c_) {
        if (power >= -order)
            s.c_[power] = c;
        else
            s.exact_ = false; // a nonzero coefficient was discarded
    }
    if (exact_ && s.exact_)
        s.order_ = kExactOrder;
    return s;
}

AsymptoticSeries AsymptoticSeries::operator-() const
{
    AsymptoticSeries s = *this;
    for (auto& [power, c] : s.c_)
        c = -c;
    return s;
}

AsymptoticSeries operator+(const AsymptoticSeries& a, const AsymptoticSeries& b)
{
    AsymptoticSeries s;
    s.order_ = std::min(a.order_, b.order_);
    s.exact_ = a.exact_ && b.exact_;
    s.c_ = a.c_;
    for (const auto& [power, c] : b.c_) {
        auto [it, inserted] = s.c_.try_emplace(power, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                s.c_.erase(it);
        }
    }
    s.drop_below_order();
    return s;
}

AsymptoticSeries operator-(const AsymptoticSeries& a, const AsymptoticSeries& b)
{
    return a + (-b);
}

AsymptoticSeries operator*(const AsymptoticSeries& a, const AsymptoticSeries& b)
{
    AsymptoticSeries s;
    if (a.is_zero() && a.exact_) {
        s.order_ = kExactOrder;
        return s;
    }
    if (b.is_zero() && b.exact_) {
        s.order_ = kExactOrder;
        return s;
    }
    // Guaranteed order of the product: each operand's omitted tail
    // O(k^(-order-1)) multiplies the other operand's leading power.
    int order = kExactOrder;
    if (!b.exact_)
        order = std::min(order, b.order_ - (a.is_zero() ? 0 : a.lead_power()));
    if (!a.exact_)
        order = std::min(order, a.order_ - (b.is_zero() ? 0 : b.lead_power()));
    if (!a.exact_ && !b.exact_)
        order = std::min(order, a.order_ + b.order_ + 1);
    s.order_ = order;
    s.exact_ = a.exact_ && b.exact_;
    for (const auto& [pa, ca] : a.c_) {
        for (const auto& [pb, cb] : b.c_) {
            int p = pa + pb;
            if (!s.exact_ && p < -order)
                continue;
            Rational prod = ca * cb;
            auto [it, inserted] = s.c_.try_emplace(p, prod);
            if (!inserted)
                it->second += prod;
        }
    }
    for (auto it = s.c_.begin(); it != s.c_.end();) {
        if (it->second == 0)
            it = s.c_.erase(it);
        else
            ++it;
    }
    return s;
}

AsymptoticSeries operator*(const Rational& r, const AsymptoticSeries& a)
{
    AsymptoticSeries s = a;
    if (r == 0) {
        s.c_.clear();
        s.exact_ = true;
        s.order_ = kExactOrder;
        return s;
    }
    for (auto& [power, c] : s.c_)
        c *= r;
    return s;
}

std::string AsymptoticSeries::str() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [power, c] : c_) {
        Rational v = c;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0)
                v = -v;
        }
        if (power == 0 || v != 1)
            os << to_string(v);
        if (power != 0) {
            if (v != 1)
                os << "*";
            os << "k";
            if (power != 1)
                os << "^" << power;
        }
    }
    if (!exact_)
        os << " + O(k^" << (-order_ - 1) << ")";
    return os.str();
}

void AsymptoticSeries::set(int power, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = c_.try_emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            c_.erase(it);
    }
}

void AsymptoticSeries::drop_below_order()
{
    if (exact_)
        return;
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->first < -order_)
            it = c_.erase(it);
        else
            ++it;
    }
}

AsymptoticSeries expand_at_infinity(const RhoExpr& a, int order)
{
    return AsymptoticSeries::expand_rho(a, order);
}

} // namespace szego
