#pragma once

#include "cvx/polynomial.hpp"

namespace cvx {

/// Quotient of polynomials. Not reduced to lowest terms (no multivariate
/// gcd anywhere); the denominator is normalized to integer coprime
/// coefficients with a positive leading coefficient, so a polynomial value
/// always has denominator exactly 1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num)
        : RationalFunction(std::move(num), Polynomial::constant(1)) {}
    explicit RationalFunction(Rational c)
        : RationalFunction(Polynomial::constant(std::move(c))) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    /// Quotient-rule derivative, (n'd - nd')/d^2, no reduction.
    RationalFunction derivative(Var v) const;

    /// Structural equality of the normalized pair (stronger than value
    /// equality; use rf_equal for the latter).
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

private:
    Polynomial num_, den_;
};

/// Value equality: cross-multiplication is identically zero.
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

} // namespace cvx
