#include "szego/rho_expr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace szego {

namespace {

std::vector<RhoTerm> canonicalize(std::vector<RhoTerm> raw)
{
    std::map<std::pair<unsigned, int>, Rational> merged;
    for (auto& t : raw) {
        if (t.coeff == 0)
            continue;
        unsigned shift = t.power == 0 ? 0u : t.shift;
        merged[{shift, t.power}] += t.coeff;
    }
    std::vector<RhoTerm> out;
    out.reserve(merged.size());
    for (auto& [key, c] : merged)
        if (c != 0)
            out.push_back({c, key.first, key.second});
    return out;
}

} // namespace

RhoExpr::RhoExpr(std::vector<RhoTerm> raw_terms) : terms_(canonicalize(std::move(raw_terms))) {}

RhoExpr RhoExpr::identity()
{
    return term(Rational(1), 0, 0);
}

RhoExpr RhoExpr::rho()
{
    return term(Rational(1), 0, 1);
}

RhoExpr RhoExpr::term(const Rational& c, unsigned shift, int power)
{
    return RhoExpr(std::vector<RhoTerm>{{c, shift, power}});
}

RhoExpr RhoExpr::power_of(unsigned shift, int power)
{
    return term(Rational(1), shift, power);
}

bool RhoExpr::is_polynomial() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const RhoTerm& t) { return t.power >= 0; });
}

int RhoExpr::min_power() const
{
    int m = 0;
    for (const auto& t : terms_)
        m = std::min(m, t.power);
    return m;
}

int RhoExpr::max_power() const
{
    int m = 0;
    for (const auto& t : terms_)
        m = std::max(m, t.power);
    return m;
}

unsigned RhoExpr::max_shift() const
{
    unsigned m = 0;
    for (const auto& t : terms_)
        m = std::max(m, t.shift);
    return m;
}

Rational RhoExpr::eval(const Rational& k) const
{
    Rational acc = 0;
    for (const auto& t : terms_) {
        Rational base = k + static_cast<long>(t.shift);
        acc += t.coeff * pow_rational(base, t.power);
    }
    return acc;
}

RhoExpr RhoExpr::shifted(unsigned j) const
{
    std::vector<RhoTerm> out = terms_;
    for (auto& t : out)
        t.shift += j;
    return RhoExpr(std::move(out));
}

RhoExpr RhoExpr::operator-() const
{
    std::vector<RhoTerm> out = terms_;
    for (auto& t : out)
        t.coeff = -t.coeff;
    return RhoExpr(std::move(out));
}

RhoExpr operator+(const RhoExpr& a, const RhoExpr& b)
{
    std::vector<RhoTerm> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return RhoExpr(std::move(all));
}

RhoExpr operator-(const RhoExpr& a, const RhoExpr& b)
{
    return a + (-b);
}

RhoExpr operator*(const RhoExpr& a, const RhoExpr& b)
{
    std::vector<RhoTerm> out;
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            Rational c = s.coeff * t.coeff;
            if (s.power == 0) {
                out.push_back({c, t.shift, t.power});
            } else if (t.power == 0) {
                out.push_back({c, s.shift, s.power});
            } else if (s.shift == t.shift) {
                out.push_back({c, s.shift, s.power + t.power});
            } else if (s.power > 0 || t.power > 0) {
                // Expand the polynomial factor around the other term's
                // shift: (k+a)^m = sum_i C(m,i) (a-b)^(m-i) (k+b)^i.
                const RhoTerm& poly = s.power > 0 ? s : t;
                const RhoTerm& other = s.power > 0 ? t : s;
                long diff = static_cast<long>(poly.shift) - static_cast<long>(other.shift);
                Rational diff_pow = 1;
                for (int i = poly.power; i >= 0; --i) {
                    // i runs down so diff_pow accumulates (a-b)^(m-i)
                    Rational w = c * Rational(binomial(static_cast<unsigned long>(poly.power),
                                                       static_cast<unsigned long>(i))) *
                                 diff_pow;
                    out.push_back({w, other.shift, other.power + i});
                    diff_pow *= Rational(diff);
                }
            } else {
                std::ostringstream os;
                os << "product (rho+" << s.shift << ")^" << s.power << " * (rho+" << t.shift
                   << ")^" << t.power
                   << " is not a finite term list; use the partial-fraction route";
                throw NonClosedProduct(os.str());
            }
        }
    }
    return RhoExpr(std::move(out));
}

RhoExpr operator*(const Rational& s, const RhoExpr& a)
{
    std::vector<RhoTerm> out = a.terms_;
    for (auto& t : out)
        t.coeff *= s;
    return RhoExpr(std::move(out));
}

std::string RhoExpr::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
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
        if (t.power == 0) {
            os << to_string(c);
            continue;
        }
        if (c != 1)
            os << to_string(c) << "*";
        if (t.shift == 0)
            os << "(rho)";
        else
            os << "(rho+" << t.shift << ")";
        if (t.power != 1)
            os << "^" << t.power;
    }
    return os.str();
}

} // namespace szego
