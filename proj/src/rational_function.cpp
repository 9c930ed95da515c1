#include "cvx/rational_function.hpp"

#include <unordered_map>

#include "cvx/error.hpp"

namespace cvx {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    CVX_REQUIRE(!den_.is_zero(), "division by zero polynomial");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    Rational c = den_.content();
    if (den_.leading().coeff.sign() < 0) c = -c;
    if (!c.is_one()) {
        Rational inv = c.reciprocal();
        den_ = den_.times(inv);
        num_ = num_.times(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    CVX_REQUIRE(!b.is_zero(), "division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative(Var v) const {
    if (is_polynomial()) {
        // den is a positive integer constant; fold it into the numerator
        return RationalFunction(num_.derivative(v).times(den_.constant_value().reciprocal()));
    }
    Polynomial n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return RationalFunction(std::move(n), den_ * den_);
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
    // accumulate a.num*b.den - b.num*a.den into one map and test for zero
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    auto fold = [&acc](const Polynomial& p, const Polynomial& q, int sign) {
        for (const auto& tp : p.terms()) {
            for (const auto& tq : q.terms()) {
                Rational prod = tp.coeff * tq.coeff;
                if (sign < 0) prod = -prod;
                acc[tp.mono.times(tq.mono)] += prod;
            }
        }
    };
    fold(a.num(), b.den(), +1);
    fold(b.num(), a.den(), -1);
    for (const auto& [m, c] : acc)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace cvx
