#include "duval/parser.hpp"

#include <cctype>

#include "duval/errors.hpp"

namespace duval {

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, caret, lparen, rparen, equals, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Token::Kind::end, "", start};
            return;
        }
        const char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            // "p/q" (no spaces) is a single rational literal.
            if (j + 1 < src_.size() && src_[j] == '/' &&
                std::isdigit(static_cast<unsigned char>(src_[j + 1]))) {
                ++j;
                while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            }
            tok_ = {Token::Kind::number, src_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = {Token::Kind::ident, src_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Kind::plus, "+", start}; return;
            case '-': tok_ = {Token::Kind::minus, "-", start}; return;
            case '*': tok_ = {Token::Kind::star, "*", start}; return;
            case '^': tok_ = {Token::Kind::caret, "^", start}; return;
            case '(': tok_ = {Token::Kind::lparen, "(", start}; return;
            case ')': tok_ = {Token::Kind::rparen, ")", start}; return;
            case '=': tok_ = {Token::Kind::equals, "=", start}; return;
            case '/':
                throw ParseError(start, "division is only allowed inside rational literals p/q");
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& src, const Ambient& ambient, const std::vector<std::string>& symbols)
        : lex_(src), ambient_(ambient), symbols_(symbols) {}

    Poly parse_input() {
        Poly lhs = parse_expr();
        if (lex_.peek().kind == Token::Kind::equals) {
            lex_.next();
            const Poly rhs = parse_expr();
            lhs = lhs - rhs;
            if (lex_.peek().kind == Token::Kind::equals)
                throw ParseError(lex_.peek().pos, "at most one '=' is allowed");
        }
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw ParseError(t.pos, "unexpected trailing input '" + t.text + "'");
        return lhs;
    }

private:
    std::size_t dim() const { return ambient_.dim(); }

    Poly parse_expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::minus) {
            lex_.next();
            neg = true;
        }
        Poly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            const Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::plus) {
                lex_.next();
                acc = acc + parse_term();
            } else if (k == Token::Kind::minus) {
                lex_.next();
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (lex_.peek().kind == Token::Kind::star) {
            lex_.next();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_primary();
        if (lex_.peek().kind != Token::Kind::caret) return base;
        lex_.next();
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::minus) {
            lex_.next();
            neg = true;
        }
        const Token t = lex_.next();
        if (t.kind != Token::Kind::number || t.text.find('/') != std::string::npos)
            throw ParseError(t.pos, "expected integer exponent");
        long e = 0;
        try {
            e = std::stol(t.text);
        } catch (const std::exception&) {
            throw ParseError(t.pos, "exponent out of range");
        }
        if (neg) e = -e;
        if (e >= 0) return base.pow(e);
        // Negative exponents require an invertible scalar factor.
        const Scalar s = as_scalar(base, t.pos);
        if (!s.is_monomial())
            throw ParseError(t.pos, "negative exponent on a non-invertible factor");
        return Poly::constant(dim(), s.pow(e));
    }

    Scalar as_scalar(const Poly& p, std::size_t pos) const {
        if (p.is_zero()) return Scalar::zero();
        if (p.term_count() != 1) throw ParseError(pos, "expected a scalar factor");
        const auto& [e, c] = *p.terms().begin();
        for (int x : e)
            if (x != 0)
                throw ParseError(pos, "coordinates cannot carry negative exponents");
        return c;
    }

    Poly parse_primary() {
        const Token t = lex_.next();
        switch (t.kind) {
            case Token::Kind::number:
                return Poly::constant(dim(), Scalar(rat_from_string(t.text)));
            case Token::Kind::ident:
                return resolve_identifier(t);
            case Token::Kind::lparen: {
                Poly inner = parse_expr();
                const Token close = lex_.next();
                if (close.kind != Token::Kind::rparen) throw ParseError(close.pos, "expected ')'");
                return inner;
            }
            case Token::Kind::minus:
                return -parse_primary();
            default:
                throw ParseError(t.pos, "expected a value, found '" + t.text + "'");
        }
    }

    Poly resolve_identifier(const Token& t) {
        for (std::size_t i = 0; i < ambient_.coords.size(); ++i)
            if (ambient_.coords[i] == t.text) return Poly::coordinate(dim(), i);
        for (const auto& s : symbols_)
            if (s == t.text) return Poly::constant(dim(), Scalar::symbol(intern_symbol(t.text)));
        if (t.text == "lambda")
            return Poly::constant(dim(), Scalar::symbol(lambda_symbol()));
        if (t.text == "eps2") return Poly::constant(dim(), Scalar(CycNum::i()));
        if (t.text == "eps3") return Poly::constant(dim(), Scalar(CycNum::omega()));
        if (t.text == "zeta") return Poly::constant(dim(), Scalar(CycNum::zeta_pow(1)));
        throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
    }

    Lexer lex_;
    const Ambient& ambient_;
    const std::vector<std::string>& symbols_;
};

}  // namespace

Poly parse_poly(const std::string& src, const Ambient& ambient,
                const std::vector<std::string>& symbols) {
    Parser p(src, ambient, symbols);
    return p.parse_input();
}

Scalar parse_scalar(const std::string& src, const std::vector<std::string>& symbols) {
    // Parse in a throwaway ambient whose names cannot collide, then require
    // the result to be coordinate-free.
    static const Ambient dummy({1, 1, 1}, {"__c0", "__c1", "__c2"});
    const Poly p = parse_poly(src, dummy, symbols);
    if (p.is_zero()) return Scalar::zero();
    if (p.term_count() == 1 && p.terms().begin()->first == Exponents({0, 0, 0}))
        return p.terms().begin()->second;
    throw Error("expected a coordinate-free expression: " + src);
}

}  // namespace duval
