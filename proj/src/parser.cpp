#include "cvx/parser.hpp"

#include <cctype>

#include "cvx/error.hpp"

namespace cvx {

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({TokenKind::Number, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({TokenKind::Identifier, std::string(src.substr(start, i - start)), start});
            continue;
        }
        TokenKind kind;
        switch (c) {
        case '+': kind = TokenKind::Plus; break;
        case '-': kind = TokenKind::Minus; break;
        case '*': kind = TokenKind::Star; break;
        case '/': kind = TokenKind::Slash; break;
        case '^': kind = TokenKind::Caret; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({TokenKind::End, "", src.size()});
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprAst run() {
        ExprAst e = expr();
        expect(TokenKind::End, "trailing input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(TokenKind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(TokenKind k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().position);
    }

    static ExprAst node(ExprAst::Kind k, ExprAst a, ExprAst b) {
        ExprAst e;
        e.kind = k;
        e.children.push_back(std::move(a));
        e.children.push_back(std::move(b));
        return e;
    }

    ExprAst expr() {
        ExprAst e = term();
        while (true) {
            if (accept(TokenKind::Plus))
                e = node(ExprAst::Kind::Add, std::move(e), term());
            else if (accept(TokenKind::Minus))
                e = node(ExprAst::Kind::Sub, std::move(e), term());
            else
                return e;
        }
    }

    ExprAst term() {
        ExprAst e = factor();
        while (true) {
            if (accept(TokenKind::Star))
                e = node(ExprAst::Kind::Mul, std::move(e), factor());
            else if (accept(TokenKind::Slash))
                e = node(ExprAst::Kind::Div, std::move(e), factor());
            else
                return e;
        }
    }

    ExprAst factor() {
        if (accept(TokenKind::Minus)) {
            ExprAst e;
            e.kind = ExprAst::Kind::Neg;
            e.children.push_back(factor());
            return e;
        }
        ExprAst base = atom();
        if (accept(TokenKind::Caret)) {
            const Token& t = peek();
            if (t.kind != TokenKind::Number)
                throw ParseError("exponent must be a literal non-negative integer", t.position);
            advance();
            ExprAst e;
            e.kind = ExprAst::Kind::Pow;
            unsigned long v = 0;
            try {
                v = std::stoul(t.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", t.position);
            }
            if (v > 0xffffffffUL) throw ParseError("exponent out of range", t.position);
            e.exponent = static_cast<std::uint32_t>(v);
            e.children.push_back(std::move(base));
            return e;
        }
        return base;
    }

    ExprAst atom() {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::Number: {
            advance();
            ExprAst e;
            e.kind = ExprAst::Kind::Const;
            e.value = Rational::from_string(t.text);
            return e;
        }
        case TokenKind::Identifier: {
            advance();
            ExprAst e;
            e.kind = ExprAst::Kind::Variable;
            e.name = t.text;
            return e;
        }
        case TokenKind::LParen: {
            advance();
            ExprAst e = expr();
            expect(TokenKind::RParen, "')'");
            return e;
        }
        default:
            throw ParseError("expected number, identifier or '('", t.position);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

ExprAst parse_expr(std::string_view src) {
    return Parser(tokenize(src)).run();
}

RationalFunction lower(const ExprAst& ast) {
    switch (ast.kind) {
    case ExprAst::Kind::Const:
        return RationalFunction(ast.value);
    case ExprAst::Kind::Variable:
        return RationalFunction(Polynomial::variable(var(ast.name)));
    case ExprAst::Kind::Add:
        return lower(ast.children[0]) + lower(ast.children[1]);
    case ExprAst::Kind::Sub:
        return lower(ast.children[0]) - lower(ast.children[1]);
    case ExprAst::Kind::Mul:
        return lower(ast.children[0]) * lower(ast.children[1]);
    case ExprAst::Kind::Div: {
        RationalFunction d = lower(ast.children[1]);
        CVX_REQUIRE(!d.is_zero(), "division by zero polynomial");
        return lower(ast.children[0]) / d;
    }
    case ExprAst::Kind::Neg:
        return -lower(ast.children[0]);
    case ExprAst::Kind::Pow: {
        RationalFunction b = lower(ast.children[0]);
        return RationalFunction(b.num().pow(ast.exponent), b.den().pow(ast.exponent));
    }
    }
    throw InternalError("unhandled AST node");
}

Polynomial lower_polynomial(const ExprAst& ast) {
    RationalFunction r = lower(ast);
    CVX_REQUIRE(r.is_polynomial(), "expression is not a polynomial");
    // den is the constant 1 after normalization
    return r.num();
}

RationalFunction parse_rational_function(std::string_view src) {
    return lower(parse_expr(src));
}

Polynomial parse_polynomial(std::string_view src) {
    return lower_polynomial(parse_expr(src));
}

namespace {

void print_monomial(std::string& out, const Monomial& m) {
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) out += "*";
        first = false;
        out += var_name(v);
        if (e > 1) {
            out += "^";
            out += std::to_string(e);
        }
    }
}

void print_term(std::string& out, const Polynomial::Term& t, bool leading) {
    Rational c = t.coeff;
    if (leading) {
        if (c.sign() < 0) {
            out += "-";
            c = -c;
        }
    } else {
        out += c.sign() < 0 ? " - " : " + ";
        c = c.abs();
    }
    if (t.mono.is_one()) {
        out += c.str();
        return;
    }
    if (!c.is_one()) {
        out += c.str();
        out += "*";
    }
    print_monomial(out, t.mono);
}

} // namespace

std::string print_canonical(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& t : p.terms()) {
        print_term(out, t, leading);
        leading = false;
    }
    return out;
}

std::string print_canonical(const RationalFunction& r) {
    if (r.is_polynomial()) return print_canonical(r.num());
    return "(" + print_canonical(r.num()) + ")/(" + print_canonical(r.den()) + ")";
}

} // namespace cvx
