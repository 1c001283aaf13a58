#include "szego/contact_expr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace szego::contact {

Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }

Dual operator/(Dual a, Dual b)
{
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

Dual pow(Dual a, int e)
{
    if (e == 0)
        return {1.0, 0.0};
    double ve = std::pow(a.v, e);
    return {ve, e * std::pow(a.v, e - 1) * a.d};
}

Dual sqrt(Dual a)
{
    double r = std::sqrt(a.v);
    return {r, a.d / (2.0 * r)};
}

Dual sin(Dual a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }
Dual cos(Dual a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }

enum class NodeKind { Const, Param, Add, Sub, Mul, Div, Pow, Sqrt, Sin, Cos, Neg };

struct Expr::Node {
    NodeKind kind;
    double value = 0;   // Const
    size_t param = 0;   // Param
    int exponent = 1;   // Pow
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

double eval_node(const Expr::Node& n, std::span<const double> p)
{
    switch (n.kind) {
    case NodeKind::Const: return n.value;
    case NodeKind::Param: return p[n.param];
    case NodeKind::Add: return eval_node(*n.lhs, p) + eval_node(*n.rhs, p);
    case NodeKind::Sub: return eval_node(*n.lhs, p) - eval_node(*n.rhs, p);
    case NodeKind::Mul: return eval_node(*n.lhs, p) * eval_node(*n.rhs, p);
    case NodeKind::Div: return eval_node(*n.lhs, p) / eval_node(*n.rhs, p);
    case NodeKind::Pow: return std::pow(eval_node(*n.lhs, p), n.exponent);
    case NodeKind::Sqrt: return std::sqrt(eval_node(*n.lhs, p));
    case NodeKind::Sin: return std::sin(eval_node(*n.lhs, p));
    case NodeKind::Cos: return std::cos(eval_node(*n.lhs, p));
    case NodeKind::Neg: return -eval_node(*n.lhs, p);
    }
    return 0;
}

Dual eval_dual_node(const Expr::Node& n, std::span<const double> p, size_t dir)
{
    switch (n.kind) {
    case NodeKind::Const: return {n.value, 0.0};
    case NodeKind::Param: return {p[n.param], n.param == dir ? 1.0 : 0.0};
    case NodeKind::Add: return eval_dual_node(*n.lhs, p, dir) + eval_dual_node(*n.rhs, p, dir);
    case NodeKind::Sub: return eval_dual_node(*n.lhs, p, dir) - eval_dual_node(*n.rhs, p, dir);
    case NodeKind::Mul: return eval_dual_node(*n.lhs, p, dir) * eval_dual_node(*n.rhs, p, dir);
    case NodeKind::Div: return eval_dual_node(*n.lhs, p, dir) / eval_dual_node(*n.rhs, p, dir);
    case NodeKind::Pow: return pow(eval_dual_node(*n.lhs, p, dir), n.exponent);
    case NodeKind::Sqrt: return sqrt(eval_dual_node(*n.lhs, p, dir));
    case NodeKind::Sin: return sin(eval_dual_node(*n.lhs, p, dir));
    case NodeKind::Cos: return cos(eval_dual_node(*n.lhs, p, dir));
    case NodeKind::Neg: {
        Dual a = eval_dual_node(*n.lhs, p, dir);
        return {-a.v, -a.d};
    }
    }
    return {};
}

void print_node(const Expr::Node& n, std::ostream& os)
{
    switch (n.kind) {
    case NodeKind::Const: os << n.value; return;
    case NodeKind::Param: os << "p" << n.param; return;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
        const char* op = n.kind == NodeKind::Add   ? " + "
                         : n.kind == NodeKind::Sub ? " - "
                         : n.kind == NodeKind::Mul ? "*"
                                                   : "/";
        os << "(";
        print_node(*n.lhs, os);
        os << op;
        print_node(*n.rhs, os);
        os << ")";
        return;
    }
    case NodeKind::Pow:
        os << "(";
        print_node(*n.lhs, os);
        os << ")^" << n.exponent;
        return;
    case NodeKind::Sqrt:
    case NodeKind::Sin:
    case NodeKind::Cos:
        os << (n.kind == NodeKind::Sqrt ? "sqrt(" : n.kind == NodeKind::Sin ? "sin(" : "cos(");
        print_node(*n.lhs, os);
        os << ")";
        return;
    case NodeKind::Neg:
        os << "-(";
        print_node(*n.lhs, os);
        os << ")";
        return;
    }
}

std::shared_ptr<Expr::Node> make_node(NodeKind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr)
{
    auto n = std::make_shared<Expr::Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& params)
        : text_(text), params_(params)
    {
    }

    NodePtr parse()
    {
        NodePtr e = parse_sum();
        skip_ws();
        if (!at_end())
            fail("unexpected trailing input");
        return e;
    }

private:
    NodePtr parse_sum()
    {
        NodePtr lhs = parse_product();
        for (;;) {
            skip_ws();
            if (at_end() || (text_[pos_] != '+' && text_[pos_] != '-'))
                return lhs;
            char op = text_[pos_++];
            NodePtr rhs = parse_product();
            lhs = make_node(op == '+' ? NodeKind::Add : NodeKind::Sub, lhs, rhs);
        }
    }

    NodePtr parse_product()
    {
        NodePtr lhs = parse_unary();
        for (;;) {
            skip_ws();
            if (at_end() || (text_[pos_] != '*' && text_[pos_] != '/'))
                return lhs;
            char op = text_[pos_++];
            NodePtr rhs = parse_unary();
            lhs = make_node(op == '*' ? NodeKind::Mul : NodeKind::Div, lhs, rhs);
        }
    }

    NodePtr parse_unary()
    {
        skip_ws();
        if (!at_end() && text_[pos_] == '-') {
            ++pos_;
            return make_node(NodeKind::Neg, parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power()
    {
        NodePtr base = parse_atom();
        skip_ws();
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            bool neg = false;
            if (!at_end() && text_[pos_] == '-') {
                neg = true;
                ++pos_;
            }
            if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected integer exponent");
            int e = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > 64)
                    fail("exponent out of range");
                ++pos_;
            }
            auto n = make_node(NodeKind::Pow, base);
            n->exponent = neg ? -e : e;
            return n;
        }
        return base;
    }

    NodePtr parse_atom()
    {
        skip_ws();
        if (at_end())
            fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_sum();
            skip_ws();
            if (at_end() || text_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_name();
        fail("unexpected character");
    }

    NodePtr parse_number()
    {
        size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                             text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
                             ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
                              (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
            ++pos_;
        try {
            size_t used = 0;
            double v = std::stod(text_.substr(start, pos_ - start), &used);
            if (used != pos_ - start)
                fail("malformed number");
            auto n = make_node(NodeKind::Const);
            n->value = v;
            return n;
        } catch (const std::exception&) {
            pos_ = start;
            fail("malformed number");
        }
    }

    NodePtr parse_name()
    {
        size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                             text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "sqrt" || name == "sin" || name == "cos") {
            skip_ws();
            if (at_end() || text_[pos_] != '(') {
                pos_ = start;
                fail("expected '(' after function name");
            }
            ++pos_;
            NodePtr inner = parse_sum();
            skip_ws();
            if (at_end() || text_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
            NodeKind kind = name == "sqrt"  ? NodeKind::Sqrt
                            : name == "sin" ? NodeKind::Sin
                                            : NodeKind::Cos;
            return make_node(kind, inner);
        }
        for (size_t i = 0; i < params_.size(); ++i) {
            if (params_[i] == name) {
                auto n = make_node(NodeKind::Param);
                n->param = i;
                return n;
            }
        }
        pos_ = start;
        fail("unknown parameter '" + name + "'");
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ExprParseError(msg + " at column " + std::to_string(pos_ + 1), pos_ + 1);
    }

    const std::string& text_;
    const std::vector<std::string>& params_;
    size_t pos_ = 0;
};

} // namespace

Expr Expr::parse(const std::string& text, const std::vector<std::string>& params)
{
    return Expr(ExprParser(text, params).parse());
}

Expr Expr::constant(double v)
{
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Const;
    n->value = v;
    return Expr(std::move(n));
}

Expr Expr::parameter(size_t index)
{
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Param;
    n->param = index;
    return Expr(std::move(n));
}

double Expr::eval(std::span<const double> point) const
{
    return eval_node(*node_, point);
}

Dual Expr::eval_dual(std::span<const double> point, size_t dir) const
{
    return eval_dual_node(*node_, point, dir);
}

Expr operator+(const Expr& a, const Expr& b)
{
    return Expr(make_node(NodeKind::Add, a.node_, b.node_));
}

Expr operator-(const Expr& a, const Expr& b)
{
    return Expr(make_node(NodeKind::Sub, a.node_, b.node_));
}

Expr operator*(const Expr& a, const Expr& b)
{
    return Expr(make_node(NodeKind::Mul, a.node_, b.node_));
}

Expr Expr::sqrt_of(const Expr& a)
{
    return Expr(make_node(NodeKind::Sqrt, a.node_));
}

std::string Expr::str() const
{
    std::ostringstream os;
    print_node(*node_, os);
    return os.str();
}

} // namespace szego::contact
