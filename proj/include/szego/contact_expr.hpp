#ifndef SZEGO_CONTACT_EXPR_HPP
#define SZEGO_CONTACT_EXPR_HPP

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace szego::contact {

// Forward-mode dual number: value and one directional derivative.
struct Dual {
    double v = 0;
    double d = 0;
};

Dual operator+(Dual a, Dual b);
Dual operator-(Dual a, Dual b);
Dual operator*(Dual a, Dual b);
Dual operator/(Dual a, Dual b);
Dual pow(Dual a, int e);
Dual sqrt(Dual a);
Dual sin(Dual a);
Dual cos(Dual a);

struct ExprParseError : std::runtime_error {
    ExprParseError(const std::string& what, size_t column_)
        : std::runtime_error(what), column(column_)
    {
    }
    size_t column;
};

// Tiny pure expression language over named parameters: literals,
// + - * /, integer powers, sqrt, sin, cos. Closed under forward-mode
// differentiation.
class Expr {
public:
    Expr() = default;

    static Expr parse(const std::string& text, const std::vector<std::string>& params);
    static Expr constant(double v);
    static Expr parameter(size_t index);

    bool valid() const { return node_ != nullptr; }

    double eval(std::span<const double> point) const;
    // Value and derivative along coordinate direction `dir`.
    Dual eval_dual(std::span<const double> point, size_t dir) const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    static Expr sqrt_of(const Expr& a);

    std::string str() const;

    struct Node; // defined in contact_expr.cpp

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

} // namespace szego::contact

#endif
