#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cvx/rational_function.hpp"

namespace cvx {

/// Parse failure with the byte offset of the offending input position.
class ParseError : public PreconditionError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : PreconditionError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

enum class TokenKind : std::uint8_t {
    Number, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, End
};

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t position; // byte offset
};

std::vector<Token> tokenize(std::string_view src);

/// Expression tree produced by the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' nat)?
///   atom   := number | ident | '(' expr ')'
/// '/' between two naturals is ordinary division; it folds to the same
/// rational constant, so "p/q" literals need no lexer special case.
struct ExprAst {
    enum class Kind : std::uint8_t { Const, Variable, Add, Sub, Mul, Div, Pow, Neg };

    Kind kind = Kind::Const;
    Rational value;                 // Const
    std::string name;               // Variable
    std::uint32_t exponent = 0;     // Pow
    std::vector<ExprAst> children;  // operands
};

ExprAst parse_expr(std::string_view src);

/// Constant-folds and builds the quotient; pure-polynomial expressions come
/// out with denominator 1.
RationalFunction lower(const ExprAst& ast);

/// lower() + check that the value is a polynomial.
Polynomial lower_polynomial(const ExprAst& ast);

/// parse + lower in one step.
RationalFunction parse_rational_function(std::string_view src);
Polynomial parse_polynomial(std::string_view src);

/// Canonical text: terms in descending graded-lex order, explicit '*',
/// coefficients printed "p" or "p/q". Round-trip law:
/// lower(parse_expr(print_canonical(v))) == v.
std::string print_canonical(const Polynomial& p);
std::string print_canonical(const RationalFunction& r);

} // namespace cvx
