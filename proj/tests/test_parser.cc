#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cvx/parser.hpp"
#include "test_support.hpp"

using namespace cvx;
using namespace cvxtest;

TEST_CASE("tokens carry increasing byte offsets") {
    auto toks = tokenize("4*x1 - (y/2)");
    for (std::size_t i = 1; i < toks.size(); ++i) CHECK(toks[i].position > toks[i - 1].position);
    CHECK(toks[0].kind == TokenKind::Number);
    CHECK(toks[2].kind == TokenKind::Identifier);
    CHECK(toks[2].text == "x1");
    CHECK_THROWS_AS(tokenize("x ? y"), ParseError);
}

TEST_CASE("grammar examples") {
    CHECK(parse_polynomial("4*x*z - 3*y^2 - x^4") ==
          parse_polynomial("-x^4 + 4*x*z - 3*y^2"));
    RationalFunction f = parse_rational_function("(3*y^2 + x^4)/(4*x)");
    CHECK(f.num() == parse_polynomial("3/4*y^2 + 1/4*x^4"));
    CHECK(f.den() == parse_polynomial("x"));
    // stored unreduced (no multivariate gcd), but equal in value to x^5 + 3xy^2
    RationalFunction fam3 = parse_rational_function("((x^2+y)^3 - (y-x^2)^3)/(2*x)");
    CHECK(fam3.den() == parse_polynomial("x"));
    CHECK(rf_equal(fam3, parse_rational_function("x^5 + 3*x*y^2")));
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_polynomial("1 - 2 - 3") == parse_polynomial("-4"));
    CHECK(parse_rational_function("2/3^2") == RationalFunction(Rational(2, 9)));
    CHECK(parse_polynomial("-x^2") == Polynomial{} - parse_polynomial("x^2"));
    CHECK(parse_polynomial("2*x^2") == parse_polynomial("2*(x^2)"));
    CHECK(parse_rational_function("1/2*x").num() == parse_polynomial("1/2*x"));
    CHECK(parse_polynomial("x^0") == parse_polynomial("1"));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_expr("x + ");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
    try {
        parse_expr("(x + y");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
    }
    CHECK_THROWS_AS(parse_expr("x^(-1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("x^y"), ParseError);
    CHECK_THROWS_AS(parse_expr("x x"), ParseError); // no implicit multiplication
}

TEST_CASE("lowering errors") {
    CHECK(parse_rational_function("x - x").is_zero());
    CHECK_THROWS_AS(parse_rational_function("1/(x - x)"), PreconditionError);
    CHECK_THROWS_AS(parse_polynomial("(x + 1)/(y + 1)"), PreconditionError);
}

TEST_CASE("printing examples") {
    CHECK(print_canonical(Polynomial{}) == "0");
    CHECK(print_canonical(parse_polynomial("x^2 - 1")) == "x^2 - 1");
    CHECK(print_canonical(parse_polynomial("y + x")) == "x + y");
    CHECK(print_canonical(parse_polynomial("-x^2 + 1/2")) == "-x^2 + 1/2");
    CHECK(print_canonical(parse_polynomial("3/4*x^4*y - 2*x")) == "3/4*x^4*y - 2*x");
    CHECK(print_canonical(parse_rational_function("(x^2-1)/(x-1)")) == "(x^2 - 1)/(x - 1)");
    CHECK(print_canonical(RationalFunction(Rational(-1, 2))) == "-1/2");
}

TEST_CASE("round trip on random polynomials") {
    SplitMix64 rng(101);
    std::vector<Var> pool{var("x"), var("y"), var("z"), var("w"), var("s0"),
                          var("t1"), var("long_name")};
    for (int i = 0; i < 120; ++i) {
        std::vector<Var> vars(pool.begin(), pool.begin() + 1 + rng.below(pool.size()));
        Polynomial p = random_polynomial(rng, vars, 8, 6, 1000000007L);
        Polynomial back = parse_polynomial(print_canonical(p));
        CHECK(back == p);
    }
}

TEST_CASE("round trip on random rational functions") {
    SplitMix64 rng(103);
    std::vector<Var> vars{var("x"), var("y")};
    for (int i = 0; i < 60; ++i) {
        Polynomial n = random_polynomial(rng, vars, 5, 4);
        Polynomial d = random_nonzero_polynomial(rng, vars, 5, 4);
        RationalFunction r(n, d);
        RationalFunction back = parse_rational_function(print_canonical(r));
        CHECK(back == r);
    }
}
