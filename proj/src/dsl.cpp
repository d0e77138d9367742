#include "conesigma/dsl.hpp"

#include <cctype>

namespace conesigma {

namespace {

struct Lexer {
    const std::string& src;
    std::size_t i = 0;
    SourcePos pos;

    explicit Lexer(const std::string& s) : src(s) {}

    void skipSpace() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) advance();
    }
    char peek() {
        skipSpace();
        return i < src.size() ? src[i] : '\0';
    }
    void advance() {
        if (src[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
        ++i;
    }
    char take() {
        char c = peek();
        if (i < src.size()) advance();
        return c;
    }
    void expect(char c) {
        SourcePos p = here();
        if (take() != c) throw ParseError(std::string("expected '") + c + "'", p);
    }
    SourcePos here() {
        skipSpace();
        return pos;
    }
    bool atEnd() { return peek() == '\0'; }

    Index natural() {
        SourcePos p = here();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", p);
        Index v = 0;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
            v = v * 10 + static_cast<Index>(src[i] - '0');
            advance();
        }
        return v;
    }
    std::string ident() {
        SourcePos p = here();
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError("expected an identifier", p);
        std::string out;
        while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) {
            out += src[i];
            advance();
        }
        return out;
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& s) : lex(s) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (!lex.atEnd()) throw ParseError("unexpected trailing input", lex.here());
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (lex.peek() == '+') {
            SourcePos p = lex.here();
            lex.take();
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Add;
            node->pos = p;
            node->lhs = e;
            node->rhs = term();
            e = node;
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (lex.peek() == '*') {
            SourcePos p = lex.here();
            lex.take();
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Mul;
            node->pos = p;
            node->lhs = e;
            node->rhs = factor();
            e = node;
        }
        return e;
    }

    Rational scalarLit() {
        bool negative = false;
        if (lex.peek() == '-') {
            lex.take();
            negative = true;
        }
        Int num(lex.natural());
        Int den = 1;
        if (lex.peek() == '/') {
            lex.take();
            SourcePos p = lex.here();
            den = Int(lex.natural());
            if (den == 0) throw ParseError("zero denominator", p);
        }
        Rational r(num, den);
        return negative ? -r : r;
    }

    ExprPtr factor() {
        SourcePos p = lex.here();
        char c = lex.peek();
        auto node = std::make_shared<Expr>();
        node->pos = p;

        if (c == '(') {
            lex.take();
            ExprPtr inner = expr();
            lex.expect(')');
            return inner;
        }
        if (c == '{') {
            lex.take();
            node->kind = Expr::Kind::FiniteLit;
            if (lex.peek() != '}') {
                while (true) {
                    lex.expect('(');
                    Index i = lex.natural();
                    lex.expect(',');
                    Index j = lex.natural();
                    lex.expect(')');
                    lex.expect(':');
                    node->lit.emplace_back(i, j, scalarLit());
                    if (lex.peek() != ',') break;
                    lex.take();
                }
            }
            lex.expect('}');
            return node;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            node->kind = Expr::Kind::Scalar;
            node->scalar = scalarLit();
            return node;
        }

        std::string name = lex.ident();
        if (name == "alpha") {
            node->kind = Expr::Kind::Alpha;
        } else if (name == "beta") {
            node->kind = Expr::Kind::Beta;
        } else if (name == "I") {
            node->kind = Expr::Kind::Identity;
        } else if (name == "Ibar" || name == "In") {
            node->kind = name == "Ibar" ? Expr::Kind::IBar : Expr::Kind::In;
            lex.expect('(');
            node->arg0 = lex.natural();
            lex.expect(')');
        } else if (name == "E") {
            node->kind = Expr::Kind::Unit;
            lex.expect('(');
            node->arg0 = lex.natural();
            lex.expect(',');
            node->arg1 = lex.natural();
            lex.expect(')');
        } else if (name == "phi" || name == "T") {
            node->kind = name == "phi" ? Expr::Kind::Phi : Expr::Kind::Transpose;
            lex.expect('(');
            node->lhs = expr();
            lex.expect(')');
        } else {
            throw ParseError("unknown identifier '" + name + "'", p);
        }
        return node;
    }
};

void print(const ExprPtr& e, std::string& out, int parentPrec) {
    auto paren = [&](int prec, auto&& body) {
        if (prec < parentPrec) out += "(";
        body();
        if (prec < parentPrec) out += ")";
    };
    switch (e->kind) {
        case Expr::Kind::Alpha: out += "alpha"; break;
        case Expr::Kind::Beta: out += "beta"; break;
        case Expr::Kind::Identity: out += "I"; break;
        case Expr::Kind::IBar: out += "Ibar(" + std::to_string(e->arg0) + ")"; break;
        case Expr::Kind::In: out += "In(" + std::to_string(e->arg0) + ")"; break;
        case Expr::Kind::Unit:
            out += "E(" + std::to_string(e->arg0) + "," + std::to_string(e->arg1) + ")";
            break;
        case Expr::Kind::Scalar: out += showRational(e->scalar); break;
        case Expr::Kind::FiniteLit: {
            out += "{";
            bool first = true;
            for (const auto& [i, j, v] : e->lit) {
                if (!first) out += ", ";
                first = false;
                out += "(" + std::to_string(i) + "," + std::to_string(j) + "):" + showRational(v);
            }
            out += "}";
            break;
        }
        case Expr::Kind::Phi:
            out += "phi(";
            print(e->lhs, out, 0);
            out += ")";
            break;
        case Expr::Kind::Transpose:
            out += "T(";
            print(e->lhs, out, 0);
            out += ")";
            break;
        case Expr::Kind::Add:
            paren(1, [&] {
                print(e->lhs, out, 1);
                out += " + ";
                print(e->rhs, out, 2);
            });
            break;
        case Expr::Kind::Mul:
            paren(2, [&] {
                print(e->lhs, out, 2);
                out += " * ";
                print(e->rhs, out, 3);
            });
            break;
    }
}

} // namespace

ExprPtr parseExpr(const std::string& src) { return Parser(src).run(); }

std::string prettyPrint(const ExprPtr& expr) {
    std::string out;
    print(expr, out, 0);
    return out;
}

ConeMat evalExpr(const ExprPtr& expr, const CoeffPtr& coeff) {
    switch (expr->kind) {
        case Expr::Kind::Alpha: return pairingShifts(coeff).first;
        case Expr::Kind::Beta: return pairingShifts(coeff).second;
        case Expr::Kind::Identity: return coneIdentity(coeff);
        case Expr::Kind::IBar: return iBar(coeff, expr->arg0);
        case Expr::Kind::In: return coneFromFinite(FinMat::diagonal(coeff, expr->arg0));
        case Expr::Kind::Unit:
            return coneFromFinite(FinMat::unit(coeff, expr->arg0, expr->arg1));
        case Expr::Kind::Scalar:
            return coneScalarIdentity(coeff, coeff->fromRational(expr->scalar));
        case Expr::Kind::FiniteLit: {
            FinMat m(coeff);
            for (const auto& [i, j, v] : expr->lit)
                m.set(i, j, coeff->add(m.get(i, j), coeff->fromRational(v)));
            return coneFromFinite(m);
        }
        case Expr::Kind::Phi: return phiMap(evalExpr(expr->lhs, coeff));
        case Expr::Kind::Transpose: return coneTranspose(evalExpr(expr->lhs, coeff));
        case Expr::Kind::Add:
            return coneAdd(evalExpr(expr->lhs, coeff), evalExpr(expr->rhs, coeff));
        case Expr::Kind::Mul:
            return coneMul(evalExpr(expr->lhs, coeff), evalExpr(expr->rhs, coeff));
    }
    throw std::logic_error("unreachable");
}

} // namespace conesigma
