#ifndef PLECTIC_SRC_EXPR_PARSER_HPP
#define PLECTIC_SRC_EXPR_PARSER_HPP

#include "lexer.hpp"

#include <vector>

namespace plectic::detail {

// Recursive descent over
//   expr  := [+|-] term {(+|-) term}
//   term  := power {[*] power}            (juxtaposition multiplies)
//   power := atom [^ int]
//   atom  := int [/ int] | xK | (expr) | basis {^ basis}
// The value algebra is supplied by Ops, so the same grammar serves polynomials
// and (co)tensors; for the latter, products are wedge products.
template <class V, class Ops>
class ExprParser {
public:
    ExprParser(std::string_view text, const Ops& ops) : lex_(text), ops_(ops) {}

    V parse() {
        V v = expr();
        if (lex_.peek().kind != Tok::End) lex_.fail("unexpected '" + lex_.peek().text + "'");
        return v;
    }

private:
    static bool starts_atom(Tok t) {
        return t == Tok::Number || t == Tok::Var || t == Tok::Tangent || t == Tok::Form || t == Tok::LParen;
    }

    V expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus)
            neg = lex_.next().kind == Tok::Minus;
        V acc = term();
        if (neg) acc = ops_.neg(acc);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.next().kind == Tok::Minus;
            V t = term();
            acc = ops_.add(acc, minus ? ops_.neg(t) : t);
        }
        return acc;
    }

    V term() {
        V acc = power();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.next();
                acc = ops_.mul(acc, power());
            } else if (starts_atom(k)) {
                acc = ops_.mul(acc, power());
            } else {
                return acc;
            }
        }
    }

    V power() {
        bool basis = lex_.peek().kind == Tok::Tangent || lex_.peek().kind == Tok::Form;
        V a = atom();
        if (!basis && lex_.peek().kind == Tok::Caret) {
            lex_.next();
            if (lex_.peek().kind != Tok::Number) lex_.fail("expected integer exponent after '^'");
            Token e = lex_.next();
            a = ops_.pow(a, std::stoi(e.text));
        }
        return a;
    }

    V atom() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: {
                lex_.next();
                Rational r(t.text);
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.next();
                    if (lex_.peek().kind != Tok::Number) lex_.fail("expected integer denominator");
                    Rational den(lex_.next().text);
                    if (den == 0) lex_.fail("zero denominator");
                    r /= den;
                }
                return ops_.constant(r);
            }
            case Tok::Var:
                lex_.next();
                return ops_.var(t.index, t.column);
            case Tok::LParen: {
                lex_.next();
                V v = expr();
                if (lex_.peek().kind != Tok::RParen) lex_.fail("expected ')'");
                lex_.next();
                return v;
            }
            case Tok::Tangent:
            case Tok::Form: {
                std::vector<long> idx;
                Tok kind = t.kind;
                idx.push_back(lex_.next().index);
                while (lex_.peek().kind == Tok::Caret) {
                    lex_.next();
                    if (lex_.peek().kind != kind) lex_.fail("expected basis symbol after '^'");
                    idx.push_back(lex_.next().index);
                }
                return ops_.basis(kind, idx, t.column);
            }
            default:
                lex_.fail(t.kind == Tok::End ? std::string("unexpected end of input")
                                             : "unexpected '" + t.text + "'");
        }
    }

    Lexer lex_;
    const Ops& ops_;
};

}  // namespace plectic::detail

#endif
