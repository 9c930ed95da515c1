#include "cvx/algebra.hpp"

#include <array>
#include <vector>

#include "cvx/error.hpp"

namespace cvx {

namespace {

/// Bareiss fraction-free determinant over the polynomial ring.
Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(1);
    int sign = 1;
    Polynomial prev = Polynomial::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {}; // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = t.divided_exactly(prev);
                CVX_CHECK(q.has_value(), "Bareiss division not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, Var v) {
    auto pc = p.coefficients_in(v);
    auto qc = q.coefficients_in(v);
    const std::size_t dp = pc.size() - 1, dq = qc.size() - 1;
    const std::size_t n = dp + dq;
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t j = 0; j <= dp; ++j) m[r][r + j] = pc[dp - j];
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t j = 0; j <= dq; ++j) m[dq + r][r + j] = qc[dq - j];
    return determinant(std::move(m));
}

/// Resultant with the usual conventions for inputs constant in v; used by
/// elimination, where intermediate results may drop to degree zero.
Polynomial resultant_ext(const Polynomial& p, const Polynomial& q, Var v) {
    const std::uint32_t dp = p.degree_in(v), dq = q.degree_in(v);
    CVX_REQUIRE(dp > 0 || dq > 0, "variable absent");
    if (dp == 0) return p.pow(dq);
    if (dq == 0) return q.pow(dp);
    return sylvester_resultant(p, q, v);
}

} // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v) {
    CVX_REQUIRE(p.degree_in(v) > 0 && q.degree_in(v) > 0, "variable absent");
    return sylvester_resultant(p, q, v);
}

Polynomial eliminate_two(const Polynomial& p1, const Polynomial& p2, const Polynomial& p3,
                         Var u, Var v) {
    for (const Polynomial* p : {&p1, &p2, &p3})
        CVX_REQUIRE(p->uses(u) || p->uses(v), "input free of both elimination variables");
    Polynomial r12 = resultant_ext(p1, p2, u);
    Polynomial r13 = resultant_ext(p1, p3, u);
    CVX_REQUIRE(!r12.is_zero() && !r13.is_zero(),
                "elimination collapsed (shared factor among inputs)");
    r12 = r12.primitive();
    r13 = r13.primitive();
    Polynomial out = resultant_ext(r12, r13, v);
    CVX_REQUIRE(!out.is_zero(), "elimination collapsed (shared factor among resultants)");
    return out.primitive();
}

DegeneracyReport degeneracy_test(const RationalFunction& f, Var x, Var y) {
    const Polynomial& n = f.num();
    const Polynomial& d = f.den();
    // Numerators of f_x and f_y over the common denominator d^2; the test is
    // invariant under scaling, so d^2 itself never needs to be formed:
    //   d/dx ln|f_x/f_y| = A_x/A - B_x/B with A = n_x d - n d_x, B = n_y d - n d_y.
    Polynomial A = n.derivative(x) * d - n * d.derivative(x);
    Polynomial B = n.derivative(y) * d - n * d.derivative(y);
    CVX_REQUIRE(!A.is_zero() && !B.is_zero(), "test inapplicable (f_x or f_y vanishes identically)");

    Polynomial Ax = A.derivative(x);
    Polynomial Ay = A.derivative(y);
    Polynomial Axy = Ax.derivative(y);
    Polynomial Bx = B.derivative(x);
    Polynomial By = B.derivative(y);
    Polynomial Bxy = Bx.derivative(y);

    // T = d/dy(A_x/A) - d/dy(B_x/B)
    Polynomial Pa = Axy * A - Ax * Ay;
    Polynomial Pb = Bxy * B - Bx * By;
    Polynomial tn = Pa * (B * B) - Pb * (A * A);
    Polynomial td = (A * A) * (B * B);
    RationalFunction T(std::move(tn), std::move(td));

    DegeneracyReport rep;
    rep.verdict = T.is_zero() ? Verdict::Inconclusive : Verdict::NonDegenerate;
    rep.excluded_locus = (A * B * d).primitive();
    rep.test_function = std::move(T);
    return rep;
}

bool verify_parametrization(const Polynomial& p, const std::map<Var, RationalFunction>& subst) {
    for (const auto& [v, rf] : subst)
        CVX_REQUIRE(!rf.den().is_zero(), "substituted denominator identically zero");
    // Clear denominators once: multiply each term by den_v^(deg_v - e_v).
    std::vector<Var> mapped;
    std::vector<std::uint32_t> topdeg;
    for (const auto& [v, rf] : subst) {
        mapped.push_back(v);
        topdeg.push_back(p.degree_in(v));
    }
    Polynomial total;
    for (const auto& t : p.terms()) {
        Polynomial factor = Polynomial::constant(t.coeff);
        Monomial rest = t.mono;
        for (std::size_t k = 0; k < mapped.size(); ++k) {
            const Var v = mapped[k];
            const RationalFunction& rf = subst.at(v);
            const std::uint32_t e = t.mono.degree_in(v);
            rest = rest.without(v);
            if (e > 0) factor = factor * rf.num().pow(e);
            if (topdeg[k] > e) factor = factor * rf.den().pow(topdeg[k] - e);
        }
        total += factor * Polynomial::term(rest, Rational(1));
    }
    return total.is_zero();
}

} // namespace cvx
