#include "weyl/expr.hpp"

#include "weyl/error.hpp"

#include <cctype>
#include <optional>

namespace weyl {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;

    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
        tok_.line = line_;
        tok_.col = col_;
        tok_.text.clear();
        if (pos_ >= s_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Number;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                tok_.text += take_char();
            if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                tok_.text += take_char();
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    tok_.text += take_char();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Token::Ident;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                tok_.text += take_char();
            return;
        }
        switch (c) {
        case '+': tok_.kind = Token::Plus; break;
        case '-': tok_.kind = Token::Minus; break;
        case '*': tok_.kind = Token::Star; break;
        case '^': tok_.kind = Token::Caret; break;
        case '(': tok_.kind = Token::LParen; break;
        case ')': tok_.kind = Token::RParen; break;
        default:
            fail(Err::SyntaxError, "syntax error at " + std::to_string(line_) + ":" +
                                       std::to_string(col_) + ": unexpected character '" +
                                       std::string(1, c) + "'");
        }
        tok_.text = std::string(1, c);
        bump();
    }

    char take_char() {
        char c = s_[pos_];
        bump();
        return c;
    }
    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
};

[[noreturn]] void syntax_error(const Token& t, const std::string& what) {
    fail(Err::SyntaxError, "syntax error at " + std::to_string(t.line) + ":" +
                               std::to_string(t.col) + ": " + what);
}

template <typename V, typename Hooks>
class Parser {
public:
    Parser(const std::string& text, Hooks hooks) : lex_(text), hooks_(hooks) {}

    V parse() {
        V v = expr();
        if (lex_.peek().kind != Token::End) syntax_error(lex_.peek(), "trailing input");
        return v;
    }

private:
    Lexer lex_;
    Hooks hooks_;

    V expr() {
        V v = term();
        for (;;) {
            if (lex_.peek().kind == Token::Plus) {
                lex_.take();
                v = hooks_.add(v, term());
            } else if (lex_.peek().kind == Token::Minus) {
                lex_.take();
                v = hooks_.sub(v, term());
            } else {
                return v;
            }
        }
    }

    V term() {
        V v = factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            v = hooks_.mul(v, factor());
        }
        return v;
    }

    V factor() {
        if (lex_.peek().kind == Token::Minus) {
            Token t = lex_.take();
            (void)t;
            return hooks_.neg(factor());
        }
        V v = primary();
        while (lex_.peek().kind == Token::Caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind == Token::Minus)
                fail(Err::NonIntegerExponent, "negative exponent at " + std::to_string(e.line) +
                                                  ":" + std::to_string(e.col));
            if (e.kind != Token::Number) syntax_error(e, "expected an integer exponent");
            if (e.text.find('/') != std::string::npos)
                fail(Err::NonIntegerExponent, "fractional exponent at " + std::to_string(e.line) +
                                                  ":" + std::to_string(e.col));
            unsigned long n = std::stoul(e.text);
            v = hooks_.pow(v, static_cast<unsigned>(n));
        }
        return v;
    }

    V primary() {
        Token t = lex_.take();
        switch (t.kind) {
        case Token::Number:
            return hooks_.number(rat_from_string(t.text));
        case Token::Ident:
            return hooks_.ident(t);
        case Token::LParen: {
            V v = expr();
            Token r = lex_.take();
            if (r.kind != Token::RParen) syntax_error(r, "expected ')'");
            return v;
        }
        default:
            syntax_error(t, "expected a number, identifier or '('");
        }
    }
};

struct OperatorHooks {
    PolyDiffOp number(const Rat& r) const { return PolyDiffOp::constant(MPoly::constant(GaussRat(r))); }
    PolyDiffOp ident(const Token& t) const {
        if (t.text == "x") return PolyDiffOp::constant(MPoly::variable("x"));
        if (t.text == "D") return PolyDiffOp::d();
        if (t.text == "i") return PolyDiffOp::constant(MPoly::constant(GaussRat::i()));
        syntax_error(t, "unknown identifier '" + t.text + "' (expected x, D or i)");
    }
    PolyDiffOp add(const PolyDiffOp& a, const PolyDiffOp& b) const { return a + b; }
    PolyDiffOp sub(const PolyDiffOp& a, const PolyDiffOp& b) const { return a - b; }
    PolyDiffOp neg(const PolyDiffOp& a) const { return -a; }
    PolyDiffOp mul(const PolyDiffOp& a, const PolyDiffOp& b) const { return a * b; }
    PolyDiffOp pow(const PolyDiffOp& a, unsigned e) const { return a.pow(e); }
};

struct PolyHooks {
    const std::vector<std::string>* vars;
    MPoly number(const Rat& r) const { return MPoly::constant(GaussRat(r)); }
    MPoly ident(const Token& t) const {
        if (t.text == "i") return MPoly::constant(GaussRat::i());
        for (const auto& v : *vars)
            if (v == t.text) return MPoly::variable(t.text);
        syntax_error(t, "unknown variable '" + t.text + "'");
    }
    MPoly add(const MPoly& a, const MPoly& b) const { return a + b; }
    MPoly sub(const MPoly& a, const MPoly& b) const { return a - b; }
    MPoly neg(const MPoly& a) const { return -a; }
    MPoly mul(const MPoly& a, const MPoly& b) const { return a * b; }
    MPoly pow(const MPoly& a, unsigned e) const { return a.pow(e); }
};

} // namespace

PolyDiffOp parse_operator(const std::string& text) {
    Parser<PolyDiffOp, OperatorHooks> p(text, OperatorHooks{});
    return p.parse();
}

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    Parser<MPoly, PolyHooks> p(text, PolyHooks{&vars});
    return p.parse();
}

GaussRat parse_gaussrat(const std::string& text) {
    MPoly p = parse_poly(text, {});
    return p.constant_value();
}

} // namespace weyl
