#include "dqw/expr.hpp"

#include <cctype>

namespace dqw {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
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
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) { tok_ = {Token::End, "", start}; return; }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            tok_ = {Token::Number, s_.substr(start, i_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            tok_ = {Token::Ident, s_.substr(start, i_ - start), start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+", start}; return;
            case '-': tok_ = {Token::Minus, "-", start}; return;
            case '*': tok_ = {Token::Star, "*", start}; return;
            case '^': tok_ = {Token::Caret, "^", start}; return;
            case '/': tok_ = {Token::Slash, "/", start}; return;
            case '(': tok_ = {Token::LParen, "(", start}; return;
            case ')': tok_ = {Token::RParen, ")", start}; return;
            default: throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Token::End, "", 0};
};

// A value during parsing: either a polynomial or a potential. Scalars are
// polynomials with only the empty word.
struct Value {
    std::optional<NcPoly> poly;
    std::optional<Potential> pot;

    bool is_pot() const { return pot.has_value(); }

    static Value from_poly(NcPoly p) { return Value{std::move(p), std::nullopt}; }
    static Value from_pot(Potential p) { return Value{std::nullopt, std::move(p)}; }
};

// True for polynomials that are a scalar multiple of the unit word.
std::optional<Rational> as_scalar(const NcPoly& p) {
    if (p.is_zero()) return Rational(0);
    if (p.term_count() == 1 && p.terms().begin()->first.empty()) return p.terms().begin()->second;
    return std::nullopt;
}

class Parser {
  public:
    Parser(const std::string& text, const AlphabetPtr& alphabet,
           const std::map<std::string, Rational>& params)
        : lex_(text), alphabet_(alphabet), params_(params) {}

    Value parse_expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            neg = true;
        }
        Value v = parse_term();
        if (neg) v = negate(std::move(v));
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            Value rhs = parse_term();
            if (minus) rhs = negate(std::move(rhs));
            v = add(std::move(v), std::move(rhs), lex_.peek().pos);
        }
        return v;
    }

    void expect_end() {
        if (lex_.peek().kind != Token::End)
            throw ParseError(lex_.peek().pos, "trailing input");
    }

  private:
    Value negate(Value v) {
        if (v.is_pot()) return Value::from_pot(-*v.pot);
        return Value::from_poly(-*v.poly);
    }

    Value add(Value a, Value b, std::size_t pos) {
        if (a.is_pot() != b.is_pot()) {
            // Adding zero of either kind is fine.
            if (!a.is_pot() && a.poly->is_zero()) return b;
            if (!b.is_pot() && b.poly->is_zero()) return a;
            throw ParseError(pos, "cannot add a potential and a plain polynomial");
        }
        if (a.is_pot()) return Value::from_pot(*a.pot + *b.pot);
        return Value::from_poly(*a.poly + *b.poly);
    }

    Value parse_term() {
        Value v = parse_factor();
        while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
            bool divide = lex_.peek().kind == Token::Slash;
            std::size_t pos = lex_.take().pos;
            Value rhs = parse_factor();
            if (divide) {
                if (rhs.is_pot()) throw ParseError(pos, "cannot divide by a potential");
                auto s = as_scalar(*rhs.poly);
                if (!s) throw ParseError(pos, "division only by nonzero scalars");
                if (s->is_zero()) throw ParseError(pos, "division by zero");
                rhs = Value::from_poly(
                    NcPoly::monomial(alphabet_, Word{}, Rational(1) / *s));
            }
            v = mul(std::move(v), std::move(rhs), pos);
        }
        return v;
    }

    Value mul(Value a, Value b, std::size_t pos) {
        if (a.is_pot() && b.is_pot())
            throw ParseError(pos, "cannot multiply two potentials");
        if (a.is_pot() || b.is_pot()) {
            const Potential& pot = a.is_pot() ? *a.pot : *b.pot;
            const NcPoly& other = a.is_pot() ? *b.poly : *a.poly;
            auto s = as_scalar(other);
            if (!s) throw ParseError(pos, "potentials admit only scalar multiples");
            return Value::from_pot(*s * pot);
        }
        return Value::from_poly(*a.poly * *b.poly);
    }

    Value parse_factor() {
        Value v = parse_atom();
        if (lex_.peek().kind == Token::Caret) {
            std::size_t pos = lex_.take().pos;
            Token e = lex_.take();
            if (e.kind != Token::Number) throw ParseError(e.pos, "expected integer exponent");
            long long n = std::stoll(e.text);
            if (n <= 0) throw ParseError(e.pos, "exponent must be positive");
            if (v.is_pot()) throw ParseError(pos, "cannot exponentiate a potential");
            NcPoly r = NcPoly::one(alphabet_);
            for (long long i = 0; i < n; ++i) r = r * *v.poly;
            return Value::from_poly(std::move(r));
        }
        return v;
    }

    Value parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Number: {
                BigInt num(t.text);
                return Value::from_poly(NcPoly::monomial(alphabet_, Word{}, Rational(num)));
            }
            case Token::Ident: {
                if (t.text == "cyc") {
                    expect(Token::LParen, "expected '(' after cyc");
                    Value inner = parse_expr();
                    expect(Token::RParen, "expected ')'");
                    if (inner.is_pot())
                        throw ParseError(t.pos, "cyc(...) of a potential is not allowed");
                    return Value::from_pot(cyclify(*inner.poly));
                }
                if (t.text == "hbar")
                    throw ParseError(t.pos, "'hbar' is reserved and not valid here");
                std::size_t gi = alphabet_->find(t.text);
                if (gi != Alphabet::npos)
                    return Value::from_poly(NcPoly::generator(alphabet_, gi));
                auto it = params_.find(t.text);
                if (it != params_.end())
                    return Value::from_poly(NcPoly::monomial(alphabet_, Word{}, it->second));
                throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
            }
            case Token::LParen: {
                Value v = parse_expr();
                expect(Token::RParen, "expected ')'");
                return v;
            }
            default:
                throw ParseError(t.pos, "expected a number, identifier, or '('");
        }
    }

    void expect(Token::Kind k, const std::string& msg) {
        Token t = lex_.take();
        if (t.kind != k) throw ParseError(t.pos, msg);
    }

    Lexer lex_;
    const AlphabetPtr& alphabet_;
    const std::map<std::string, Rational>& params_;
};

} // namespace

NcPoly ExprParser::parse_poly(const std::string& text) const {
    Parser p(text, alphabet_, params_);
    Value v = p.parse_expr();
    p.expect_end();
    if (v.is_pot()) throw ParseError(0, "expected a polynomial, found a potential");
    return std::move(*v.poly);
}

Potential ExprParser::parse_potential(const std::string& text) const {
    Parser p(text, alphabet_, params_);
    Value v = p.parse_expr();
    p.expect_end();
    if (!v.is_pot()) {
        if (v.poly->is_zero()) return Potential(alphabet_);
        throw ParseError(0, "expected a potential (use cyc(...))");
    }
    return std::move(*v.pot);
}

ParsedExpr ExprParser::parse(const std::string& text) const {
    Parser p(text, alphabet_, params_);
    Value v = p.parse_expr();
    p.expect_end();
    return ParsedExpr{std::move(v.poly), std::move(v.pot)};
}

} // namespace dqw
