#include <array>

#include "cvx/algebra.hpp"
#include "cvx/parser.hpp"

// Fixed polynomials and rational functions of the studied systems, plus the
// closed forms the derivative test is checked against. The closed forms were
// derived and cross-verified with an independent computer algebra system
// before being frozen here; they are built from strings through the public
// parser so they exercise a different construction path than the test itself.

namespace cvx {

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

// pairwise products of parameter differences; P1 + P2 + P3 == 0
Polynomial diffprod_1() { return P("(s0 - s1)*(s2 - s3)"); }
Polynomial diffprod_2() { return P("(s2 - s0)*(s1 - s3)"); }
Polynomial diffprod_3() { return P("(s0 - s3)*(s1 - s2)"); }

} // namespace

Polynomial surface_F() { return P("4*x*z - 3*y^2 - x^4"); }

Polynomial surface_G() {
    return P("x*y^2*z + 1") * diffprod_1() + P("x*y*z + y") * diffprod_2() +
           P("y*z + x*y") * diffprod_3();
}

Polynomial surface_G_at(const Rational& s0, const Rational& s1, const Rational& s2,
                        const Rational& s3) {
    std::map<Var, Rational> bind{
        {var("s0"), s0}, {var("s1"), s1}, {var("s2"), s2}, {var("s3"), s3}};
    return surface_G().eval(bind);
}

RationalFunction surface_g_quotient() {
    Polynomial num = -(P("x*y") * diffprod_3()) - P("y") * diffprod_2() - diffprod_1();
    Polynomial den = P("x*y^2") * diffprod_1() + P("x*y") * diffprod_2() + P("y") * diffprod_3();
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction partial2g_closed_form() {
    Polynomial bracket = P("x^2*y^2 + 1") * diffprod_1() + P("x^2*y + y") * diffprod_2() +
                         P("2*x*y") * diffprod_3();
    Polynomial num = Rational(-2) * (P("s1 - s2") * P("s0 - s3") * bracket);
    Polynomial den_base = P("x^2*y^2 + 1") * diffprod_3() + P("x*y^2 + x") * diffprod_2() +
                          P("2*x*y") * diffprod_1();
    return RationalFunction(std::move(num), den_base * den_base);
}

std::array<Polynomial, 3> system_polynomials() {
    return {
        P("(s0*t1 + 1)*(s1*t0 + 1)*x - (s1*t1 + 1)*(s0*t0 + 1)"),
        P("(s1*t1 + 1)*(s2*t0 + 1)*y - (s2*t1 + 1)*(s1*t0 + 1)"),
        P("(s2*t1 + 1)*(s3*t0 + 1)*z - (s3*t1 + 1)*(s2*t0 + 1)"),
    };
}

std::map<Var, RationalFunction> system_parametrization() {
    std::map<Var, RationalFunction> m;
    m.emplace(var("x"), RationalFunction(P("(s1*t1 + 1)*(s0*t0 + 1)"), P("(s0*t1 + 1)*(s1*t0 + 1)")));
    m.emplace(var("y"), RationalFunction(P("(s2*t1 + 1)*(s1*t0 + 1)"), P("(s1*t1 + 1)*(s2*t0 + 1)")));
    m.emplace(var("z"), RationalFunction(P("(s3*t1 + 1)*(s2*t0 + 1)"), P("(s2*t1 + 1)*(s3*t0 + 1)")));
    return m;
}

RationalFunction xn_closed_form(std::uint32_t n) {
    CVX_REQUIRE(n >= 3, "family defined for n >= 3");
    const Rational N(static_cast<long>(n));
    const Polynomial u = P("x^2 + y").pow(n);
    const Polynomial v = P("y - x^2").pow(n);

    // numerator bracket, collected by powers of u and v
    const Polynomial c40 = P("x^12 - 4*x^10*y + 5*x^8*y^2 - 5*x^4*y^4 + 4*x^2*y^5 - y^6");
    const Polynomial c31 =
        (N * N * N * Rational(16)) * P("x^10*y - 2*x^8*y^2 + x^6*y^3") +
        (N * N) * P("-8*x^12 - 24*x^10*y + 56*x^8*y^2 - 8*x^6*y^3 - 16*x^4*y^4") +
        N * P("12*x^12 + 4*x^10*y - 16*x^8*y^2 - 16*x^6*y^3 + 4*x^4*y^4 + 12*x^2*y^5") +
        P("-2*x^12 - 10*x^8*y^2 + 16*x^6*y^3 + 10*x^4*y^4 - 16*x^2*y^5 + 2*y^6");
    const Polynomial c22 = (Rational(1) - N) * P("8*x^10*y - 32*x^6*y^3 + 24*x^2*y^5");
    const Polynomial c13 =
        (N * N * N * Rational(16)) * P("x^10*y + 2*x^8*y^2 + x^6*y^3") +
        (N * N) * P("8*x^12 - 24*x^10*y - 56*x^8*y^2 - 8*x^6*y^3 + 16*x^4*y^4") +
        N * P("-12*x^12 + 4*x^10*y + 16*x^8*y^2 - 16*x^6*y^3 - 4*x^4*y^4 + 12*x^2*y^5") +
        P("2*x^12 + 10*x^8*y^2 + 16*x^6*y^3 - 10*x^4*y^4 - 16*x^2*y^5 - 2*y^6");
    const Polynomial c04 = P("-x^12 - 4*x^10*y - 5*x^8*y^2 + 5*x^4*y^4 + 4*x^2*y^5 + y^6");

    const Polynomial u2 = u * u, v2 = v * v;
    Polynomial K = u2 * u2 * c40 + u2 * (u * v) * c31 + u2 * v2 * c22 + (u * v) * v2 * c13 +
                   v2 * v2 * c04;
    Polynomial num = (Rational(2) * (Rational(2) * N - Rational(1))) * (P("x") * K);

    Polynomial w = u * P("x^2 - y") + v * P("x^2 + y");
    Polynomial a = (Rational(2) * N) * P("x^2") * (u * P("x^2 - y") - v * P("x^2 + y")) -
                   P("x^4 - y^2") * (u - v);
    Polynomial den = P("x^4 - y^2") * (w * w) * (a * a);
    return RationalFunction(std::move(num), std::move(den));
}

XnFamilyReport xn_family_check(std::uint32_t n) {
    CVX_REQUIRE(n >= 3, "family defined for n >= 3");
    std::string expr = "((x^2 + y)^" + std::to_string(n) + " - (y - x^2)^" + std::to_string(n) +
                       ")/(2*x)";
    RationalFunction f = parse_rational_function(expr);
    XnFamilyReport out;
    out.report = degeneracy_test(f, var("x"), var("y"));
    out.closed_form_match = rf_equal(out.report.test_function, xn_closed_form(n));
    return out;
}

} // namespace cvx
