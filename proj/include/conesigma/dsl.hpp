#pragma once

#include "conesigma/cone.hpp"

#include <memory>
#include <tuple>

namespace conesigma {

struct SourcePos {
    std::size_t line = 1, column = 1;
};

struct ParseError : std::runtime_error {
    SourcePos pos;
    ParseError(const std::string& msg, SourcePos p)
        : std::runtime_error(msg + " at " + std::to_string(p.line) + ":" +
                             std::to_string(p.column)),
          pos(p) {}
};

// Expression AST for the matrix DSL. Grammar, 0-based indices:
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := 'alpha' | 'beta' | 'I' | 'Ibar' '(' nat ')' | 'In' '(' nat ')'
//           | 'E' '(' nat ',' nat ')' | 'phi' '(' expr ')' | 'T' '(' expr ')'
//           | scalar | finite-literal | '(' expr ')'
//   scalar := ['-'] nat ['/' nat]       (evaluates to scalar * I)
//   finite-literal := '{' [ '(' nat ',' nat ')' ':' scalar {',' ...} ] '}'
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        Alpha, Beta, Identity, IBar, In, Unit, FiniteLit, Phi, Transpose, Scalar, Add, Mul
    };

    Kind kind;
    SourcePos pos;
    Index arg0 = 0, arg1 = 0;                              // IBar/In/Unit
    Rational scalar;                                       // Scalar
    std::vector<std::tuple<Index, Index, Rational>> lit;   // FiniteLit
    ExprPtr lhs, rhs;                                      // Phi/Transpose use lhs
};

ExprPtr parseExpr(const std::string& src);

std::string prettyPrint(const ExprPtr& expr);

ConeMat evalExpr(const ExprPtr& expr, const CoeffPtr& coeff);

} // namespace conesigma
