#ifndef SZEGO_OP_GRAMMAR_HPP
#define SZEGO_OP_GRAMMAR_HPP

#include "szego/rho_expr.hpp"

#include <stdexcept>
#include <string>

namespace szego {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t column_)
        : std::runtime_error(what), column(column_)
    {
    }
    size_t column; // 1-based position in the operator spec
};

// Operator-spec mini-grammar: terms `c*(rho+a)^m` joined by `+`/`-`;
// `c` is `p` or `p/q`; `rho^m` is `(rho+0)^m`; `1` is the identity.
//   "(rho)^-3"
//   "(rho+1)^-2 - 2*(rho+2)^-2"
//   "1/2*(rho)^-1 + 3"
RhoExpr parse_op_spec(const std::string& spec);

} // namespace szego

#endif
