#include "szego/op_grammar.hpp"

#include <cctype>
#include <vector>

namespace szego {

namespace {

class OpParser {
public:
    explicit OpParser(const std::string& text) : text_(text) {}

    RhoExpr parse()
    {
        std::vector<RhoTerm> terms;
        skip_ws();
        if (at_end())
            fail("empty operator spec");
        bool negative = consume_sign();
        parse_term(terms, negative);
        skip_ws();
        while (!at_end()) {
            char c = text_[pos_];
            if (c != '+' && c != '-')
                fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            parse_term(terms, c == '-');
            skip_ws();
        }
        return RhoExpr(std::move(terms));
    }

private:
    void parse_term(std::vector<RhoTerm>& terms, bool negative)
    {
        Rational coeff = 1;
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = parse_rational();
            have_coeff = true;
            skip_ws();
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
            } else {
                // bare constant: c * identity
                terms.push_back({negative ? -coeff : coeff, 0, 0});
                return;
            }
        }
        auto [shift, power] = parse_factor();
        (void)have_coeff;
        terms.push_back({negative ? -coeff : coeff, shift, power});
    }

    // '(' 'rho' ['+' nat] ')' ['^' int]  |  'rho' ['^' int]  |  '1'
    std::pair<unsigned, int> parse_factor()
    {
        skip_ws();
        if (at_end())
            fail("expected operator factor");
        if (text_[pos_] == '1') {
            ++pos_;
            return {0u, 0};
        }
        unsigned shift = 0;
        if (text_[pos_] == '(') {
            ++pos_;
            skip_ws();
            expect_keyword("rho");
            skip_ws();
            if (!at_end() && text_[pos_] == '+') {
                ++pos_;
                skip_ws();
                shift = static_cast<unsigned>(parse_natural());
                skip_ws();
            }
            if (at_end() || text_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
        } else {
            expect_keyword("rho");
        }
        int power = 1;
        skip_ws();
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            power = parse_integer();
        }
        return {shift, power};
    }

    Rational parse_rational()
    {
        long num = parse_natural();
        skip_ws();
        if (!at_end() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            long den = parse_natural();
            if (den == 0)
                fail("zero denominator");
            return rat(num, den);
        }
        return Rational(num);
    }

    int parse_integer()
    {
        bool neg = false;
        if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        long v = parse_natural();
        return static_cast<int>(neg ? -v : v);
    }

    long parse_natural()
    {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected number");
        long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000)
                fail("number out of range");
            ++pos_;
        }
        return v;
    }

    void expect_keyword(const char* kw)
    {
        size_t start = pos_;
        for (const char* p = kw; *p; ++p, ++pos_) {
            if (at_end() || text_[pos_] != *p) {
                pos_ = start;
                fail("expected 'rho'");
            }
        }
    }

    bool consume_sign()
    {
        if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg + " at column " + std::to_string(pos_ + 1), pos_ + 1);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

RhoExpr parse_op_spec(const std::string& spec)
{
    return OpParser(spec).parse();
}

} // namespace szego
