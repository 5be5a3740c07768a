#include "ogf/parser.hpp"

#include <cctype>

namespace ogf {

namespace {

struct Token {
    enum Kind { Number, Variable, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;   // Number: digit string
    unsigned var_index; // Variable
    std::size_t pos;    // 1-based character position
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void error_at(std::size_t pos, const std::string& message) const {
        fail(errc::parse_error, message + " at position " + std::to_string(pos));
    }

  private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t pos = i_ + 1;
        if (i_ >= text_.size()) {
            current_ = {Token::End, "", 0, pos};
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            current_ = {Token::Number, text_.substr(start, i_ - start), 0, pos};
            return;
        }
        if (c == 'x') {
            ++i_;
            std::size_t start = i_;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            std::string digits = text_.substr(start, i_ - start);
            if (digits.size() != 1 || digits[0] == '0')
                error_at(pos, "variable index must be a single digit 1..9");
            current_ = {Token::Variable, "", static_cast<unsigned>(digits[0] - '0'), pos};
            return;
        }
        ++i_;
        switch (c) {
            case '+': current_ = {Token::Plus, "", 0, pos}; return;
            case '-': current_ = {Token::Minus, "", 0, pos}; return;
            case '*': current_ = {Token::Star, "", 0, pos}; return;
            case '^': current_ = {Token::Caret, "", 0, pos}; return;
            case '/': current_ = {Token::Slash, "", 0, pos}; return;
            case '(': current_ = {Token::LParen, "", 0, pos}; return;
            case ')': current_ = {Token::RParen, "", 0, pos}; return;
            default: error_at(pos, std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& text_;
    std::size_t i_ = 0;
    Token current_{Token::End, "", 0, 0};
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Polynomial parse() {
        Polynomial p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::End) lex_.error_at(t.pos, "unexpected trailing input");
        return p;
    }

  private:
    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Plus) {
                lex_.take();
                acc += term();
            } else if (t.kind == Token::Minus) {
                lex_.take();
                acc -= term();
            } else {
                // Adjacent operands without an operator (e.g. "2x1", "2 3")
                // are rejected here with a targeted message.
                if (t.kind == Token::Number || t.kind == Token::Variable || t.kind == Token::LParen)
                    lex_.error_at(t.pos, "missing operator (implicit multiplication is not allowed)");
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            acc *= unary();
        }
        return acc;
    }

    Polynomial unary() {
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            return -unary();
        }
        return atom();
    }

    Polynomial atom() {
        Polynomial b = base();
        if (lex_.peek().kind == Token::Caret) {
            Token caret = lex_.take();
            Token e = lex_.peek();
            if (e.kind != Token::Number)
                lex_.error_at(caret.pos, "exponent must be a nonnegative integer literal");
            lex_.take();
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (const std::exception&) {
                lex_.error_at(e.pos, "exponent out of range");
            }
            b = b.pow(static_cast<unsigned>(exp));
        }
        return b;
    }

    Polynomial base() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Token::Number: {
                lex_.take();
                Int num(t.text);
                if (lex_.peek().kind == Token::Slash) {
                    lex_.take();
                    Token d = lex_.peek();
                    if (d.kind != Token::Number)
                        lex_.error_at(d.pos, "expected denominator digits after '/'");
                    lex_.take();
                    Int den(d.text);
                    if (sgn(den) == 0) lex_.error_at(d.pos, "zero denominator");
                    return Polynomial(Rational(num, den));
                }
                return Polynomial(Rational(num));
            }
            case Token::Variable:
                lex_.take();
                return Polynomial::variable(t.var_index);
            case Token::LParen: {
                lex_.take();
                Polynomial inner = expr();
                Token close = lex_.peek();
                if (close.kind != Token::RParen)
                    lex_.error_at(close.pos, "expected ')'");
                lex_.take();
                return inner;
            }
            case Token::End:
                lex_.error_at(t.pos, "unexpected end of input");
            default:
                lex_.error_at(t.pos, "expected a number, variable, or '('");
        }
    }

    Lexer lex_;
};

} // namespace

Polynomial parse_polynomial(const std::string& text) {
    return Parser(text).parse();
}

} // namespace ogf
