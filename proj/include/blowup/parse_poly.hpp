#ifndef BLOWUP_PARSE_POLY_HPP
#define BLOWUP_PARSE_POLY_HPP

#include "blowup/ring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace blowup {

/// Parse failure with position and the tokens that would have been
/// accepted. Mapped to exit code 2 by the CLI.
class ParseError : public std::runtime_error {
public:
    int line, col;
    std::string expected;
    ParseError(int l, int c, const std::string& exp, const std::string& got)
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) +
                             ": expected " + exp + ", got " + got),
          line(l), col(c), expected(exp) {}
};

/// Line/column tracking tokenizer shared by the polynomial syntax and the
/// problem-file grammar. Tokens: identifiers, integer literals, and single
/// punctuation characters; '#' starts a comment to end of line.
class Lexer {
public:
    struct Token {
        enum class Kind { Ident, Number, Punct, End };
        Kind kind = Kind::End;
        std::string text;
        int line = 1, col = 1;
    };

    explicit Lexer(std::string input) : s_(std::move(input)) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at_end() const { return tok_.kind == Token::Kind::End; }

    bool is_punct(char c) const {
        return tok_.kind == Token::Kind::Punct && tok_.text[0] == c;
    }
    bool is_ident(const std::string& w) const {
        return tok_.kind == Token::Kind::Ident && tok_.text == w;
    }
    /// Consumes the punctuation character or raises a positioned error.
    void expect(char c) {
        if (!is_punct(c)) fail(std::string("'") + c + "'");
        advance();
    }
    std::string expect_ident(const std::string& what) {
        if (tok_.kind != Token::Kind::Ident) fail(what);
        std::string w = tok_.text;
        advance();
        return w;
    }
    long expect_number(const std::string& what) {
        bool neg = false;
        if (is_punct('-')) {
            neg = true;
            advance();
        }
        if (tok_.kind != Token::Kind::Number) fail(what);
        long v = std::stol(tok_.text);
        advance();
        return neg ? -v : v;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = tok_.kind == Token::Kind::End ? "end of input" : "'" + tok_.text + "'";
        throw ParseError(tok_.line, tok_.col, expected, got);
    }

private:
    void advance() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
                continue;
            }
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
                continue;
            }
            break;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_.kind = Token::Kind::Ident;
            tok_.text = s_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            tok_.kind = Token::Kind::Number;
            tok_.text = s_.substr(start, pos_ - start);
        } else {
            tok_.kind = Token::Kind::Punct;
            tok_.text = std::string(1, c);
            ++pos_;
        }
        col_ += static_cast<int>(tok_.text.size());
    }

    std::string s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

namespace detail {

// polynomial grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' number]
//   atom   := number ['/' number] | variable | '(' expr ')'
inline Polynomial parse_expr(Lexer& lx, const Ring& r);

inline Polynomial parse_atom(Lexer& lx, const Ring& r) {
    using K = Lexer::Token::Kind;
    const auto& t = lx.peek();
    if (t.kind == K::Number) {
        std::string num = lx.next().text;
        if (lx.is_punct('/')) {
            lx.next();
            if (lx.peek().kind != K::Number) lx.fail("denominator");
            num += "/" + lx.next().text;
        }
        return Polynomial::constant(r.nvars(), Scalar::parse(r.field, num));
    }
    if (t.kind == K::Ident) {
        auto idx = r.var_index(t.text);
        if (!idx) lx.fail("variable of ring (unknown identifier '" + t.text + "')");
        lx.next();
        return r.var_poly(*idx);
    }
    if (lx.is_punct('(')) {
        lx.next();
        Polynomial p = parse_expr(lx, r);
        lx.expect(')');
        return p;
    }
    lx.fail("number, variable or '('");
}

inline Polynomial parse_factor(Lexer& lx, const Ring& r) {
    Polynomial base = parse_atom(lx, r);
    if (lx.is_punct('^')) {
        lx.next();
        long e = lx.expect_number("exponent");
        if (e < 0) throw ParseError(lx.peek().line, lx.peek().col, "non-negative exponent", std::to_string(e));
        Polynomial out = r.one();
        for (long i = 0; i < e; ++i) out = mul(out, base, r.order);
        return out;
    }
    return base;
}

inline Polynomial parse_term(Lexer& lx, const Ring& r) {
    Polynomial p = parse_factor(lx, r);
    while (lx.is_punct('*')) {
        lx.next();
        p = mul(p, parse_factor(lx, r), r.order);
    }
    return p;
}

inline Polynomial parse_expr(Lexer& lx, const Ring& r) {
    bool neg = false;
    if (lx.is_punct('-')) {
        lx.next();
        neg = true;
    } else if (lx.is_punct('+')) {
        lx.next();
    }
    Polynomial p = parse_term(lx, r);
    if (neg) p = p.negated();
    for (;;) {
        if (lx.is_punct('+')) {
            lx.next();
            p = add(p, parse_term(lx, r), r.order);
        } else if (lx.is_punct('-')) {
            lx.next();
            p = sub(p, parse_term(lx, r), r.order);
        } else {
            break;
        }
    }
    return p;
}

} // namespace detail

/// Parses the shared polynomial syntax, e.g. "3/2*x^2*y - u".
inline Polynomial parse_polynomial(const Ring& r, const std::string& text) {
    Lexer lx(text);
    Polynomial p = detail::parse_expr(lx, r);
    if (!lx.at_end()) lx.fail("end of polynomial");
    return p;
}

} // namespace blowup

#endif
