#ifndef PLECTIC_SRC_LEXER_HPP
#define PLECTIC_SRC_LEXER_HPP

#include "plectic/polynomial.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace plectic::detail {

enum class Tok { End, Number, Var, Tangent, Form, Plus, Minus, Star, Slash, Caret, LParen, RParen };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long index = 0;  // variable / basis index, or integer value
    int column = 1;
};

// x<K> variables, d<K> tangent basis, dx<K> form basis, integers, + - * / ^ ( ).
class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }
    Token next() {
        Token t = cur_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(cur_.column, "column " + std::to_string(cur_.column) + ": " + msg);
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        cur_ = Token{};
        cur_.column = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size()) return;
        char c = s_[pos_];
        auto digits = [&](std::size_t from) {
            std::size_t e = from;
            while (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) ++e;
            return e;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t e = digits(pos_);
            cur_.kind = Tok::Number;
            cur_.text = std::string(s_.substr(pos_, e - pos_));
            pos_ = e;
            return;
        }
        if (c == 'x' || c == 'd') {
            std::size_t start = pos_;
            std::size_t p = pos_ + 1;
            Tok kind = (c == 'x') ? Tok::Var : Tok::Tangent;
            if (c == 'd' && p < s_.size() && s_[p] == 'x') {
                kind = Tok::Form;
                ++p;
            }
            std::size_t e = digits(p);
            if (e == p) {
                pos_ = start;
                throw ParseError(cur_.column, "column " + std::to_string(cur_.column) +
                                                  ": expected index after '" + std::string(s_.substr(start, p - start)) + "'");
            }
            cur_.kind = kind;
            cur_.text = std::string(s_.substr(start, e - start));
            cur_.index = std::stol(std::string(s_.substr(p, e - p)));
            pos_ = e;
            return;
        }
        ++pos_;
        switch (c) {
            case '+': cur_.kind = Tok::Plus; break;
            case '-': cur_.kind = Tok::Minus; break;
            case '*': cur_.kind = Tok::Star; break;
            case '/': cur_.kind = Tok::Slash; break;
            case '^': cur_.kind = Tok::Caret; break;
            case '(': cur_.kind = Tok::LParen; break;
            case ')': cur_.kind = Tok::RParen; break;
            default:
                throw ParseError(cur_.column, "column " + std::to_string(cur_.column) +
                                                  ": unexpected character '" + std::string(1, c) + "'");
        }
        cur_.text = std::string(1, c);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Token cur_;
};

}  // namespace plectic::detail

#endif
