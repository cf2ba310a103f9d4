#include "yforge/parse.hpp"

#include <cctype>

namespace yforge {

bool ParseContext::declared(const std::string& name) const {
    return name == "h1" || name == "h2" || name == "h3" || params_.count(name) > 0;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip();
        return pos < s.size() ? s[pos++] : '\0';
    }
};

struct Parser {
    Lexer lex;
    const ParseContext& ctx;

    Scalar expr() {
        Scalar r = term();
        while (true) {
            char c = lex.peek();
            if (c == '+') {
                lex.get();
                r += term();
            } else if (c == '-') {
                lex.get();
                r -= term();
            } else {
                return r;
            }
        }
    }

    Scalar term() {
        Scalar r = factor();
        while (true) {
            char c = lex.peek();
            if (c == '*') {
                lex.get();
                r *= factor();
            } else if (c == '/') {
                lex.get();
                Scalar d = factor();
                if (d.is_zero()) throw DivisionByZero();
                r /= d;
            } else {
                return r;
            }
        }
    }

    Scalar factor() {
        char c = lex.peek();
        if (c == '-') {
            lex.get();
            return -factor();
        }
        Scalar base = atom();
        if (lex.peek() == '^') {
            lex.get();
            std::uint32_t e = integer();
            return base.pow(e);
        }
        return base;
    }

    std::uint32_t integer() {
        lex.skip();
        if (lex.pos >= lex.s.size() || !std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
            throw ParseError("expected integer exponent");
        std::uint32_t v = 0;
        while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
            v = v * 10 + static_cast<std::uint32_t>(lex.s[lex.pos++] - '0');
        return v;
    }

    Scalar atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            Scalar r = expr();
            if (lex.peek() != ')') throw ParseError("expected ')'");
            lex.get();
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex.skip();
            std::string digits;
            while (lex.pos < lex.s.size() &&
                   std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
                digits += lex.s[lex.pos++];
            return Scalar(Rat(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            lex.skip();
            std::string name;
            while (lex.pos < lex.s.size() &&
                   (std::isalnum(static_cast<unsigned char>(lex.s[lex.pos])) ||
                    lex.s[lex.pos] == '_'))
                name += lex.s[lex.pos++];
            if (!ctx.declared(name)) throw ParseError("undeclared symbol '" + name + "'");
            if (name == "h3") return hbar(3);
            return Scalar::var(sym(name));
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Scalar ParseContext::parse(const std::string& text) const {
    Parser p{Lexer{text}, *this};
    Scalar r = p.expr();
    p.lex.skip();
    if (p.lex.pos != text.size()) throw ParseError("trailing input");
    return r;
}

}  // namespace yforge
