#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "cvx/rational_function.hpp"

namespace cvx {

/// Outcome of the second-derivative splitting test.
///
/// verdict == NonDegenerate  <=>  test_function.num is not identically zero:
/// the zero set of T has dimension <= 1, so it contains no open subset of the
/// plane and f cannot locally split as psi(phi1(x)+phi2(y)).
/// Inconclusive means T vanished identically; nothing follows.
enum class Verdict { NonDegenerate, Inconclusive };

struct DegeneracyReport {
    RationalFunction test_function; ///< T = d/dy (f_xx/f_x - f_xy/f_y)
    Verdict verdict = Verdict::Inconclusive;
    Polynomial excluded_locus;      ///< product whose zero set was removed
};

/// Sylvester resultant of p and q with respect to v, computed by
/// fraction-free (Bareiss) elimination over the polynomial ring.
/// Both inputs must have positive degree in v.
Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v);

/// Iterated-resultant elimination of u then v:
/// primitive part of Res_v(Res_u(p1,p2), Res_u(p1,p3)).
/// The output vanishes on every projection of a common zero but may carry
/// extraneous factors; strip known ones with divided_exactly.
Polynomial eliminate_two(const Polynomial& p1, const Polynomial& p2, const Polynomial& p3,
                         Var u, Var v);

/// The Elekes-Ronyai style derivative test on f(x, y); any further
/// variables in f are treated as symbolic parameters.
DegeneracyReport degeneracy_test(const RationalFunction& f, Var x, Var y);

/// True iff p becomes identically zero after substituting each mapped
/// variable by its rational function and clearing denominators.
bool verify_parametrization(const Polynomial& p, const std::map<Var, RationalFunction>& subst);

/// Builds f_n = ((x^2+y)^n - (y-x^2)^n)/(2x), runs the derivative test and
/// compares the outcome against the independently derived closed form.
struct XnFamilyReport {
    DegeneracyReport report;
    bool closed_form_match = false;
};
XnFamilyReport xn_family_check(std::uint32_t n);

// ---- fixed objects from the studied systems (see formulas.cpp) ----

/// F(x,y,z) = 4xz - 3y^2 - x^4.
Polynomial surface_F();
/// G(x,y,z) with coefficients in the four parameters (symbolic by default,
/// or bound to concrete values).
Polynomial surface_G();
Polynomial surface_G_at(const Rational& s0, const Rational& s1, const Rational& s2,
                        const Rational& s3);
/// The quotient g(x,y) solving G = 0 for z, with symbolic parameters.
RationalFunction surface_g_quotient();
/// Closed form of the derivative test for g (derived independently; the
/// published rendition of this formula does not reproduce).
RationalFunction partial2g_closed_form();
/// Closed form of the derivative test for the f_n family at concrete n.
RationalFunction xn_closed_form(std::uint32_t n);
/// The three cleared-denominator polynomials of the parametrized system in
/// variables x,y,z (values), s0..s3 (parameters) and t0,t1 (eliminated).
std::array<Polynomial, 3> system_polynomials();
/// The parametrization substitutions x,y,z -> rational functions of s0..s3,t0,t1.
std::map<Var, RationalFunction> system_parametrization();

} // namespace cvx
