#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cvx/monomial.hpp"
#include "cvx/rational.hpp"

namespace cvx {

/// Sparse multivariate polynomial over Rational. Terms are kept in strictly
/// descending graded-lex order with nonzero coefficients; the zero
/// polynomial has no terms, so equal polynomials have identical term lists.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    Polynomial() = default;
    static Polynomial constant(Rational c);
    static Polynomial variable(Var v);
    static Polynomial term(Monomial m, Rational c);
    /// From unsorted/duplicated terms (coalesces and drops zeros).
    static Polynomial collect(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;
    Rational coefficient(const Monomial& m) const;

    /// Total degree; nullopt encodes the zero polynomial's -infinity.
    std::optional<std::uint64_t> degree() const;
    std::uint32_t degree_in(Var v) const;
    /// Variables that actually occur, in name order.
    std::vector<Var> variables() const;
    bool uses(Var v) const { return degree_in(v) > 0; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial times(const Rational& c) const;
    Polynomial pow(std::uint32_t e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(Var v) const;

    /// Partial evaluation; unbound variables stay symbolic.
    Polynomial eval(const std::map<Var, Rational>& bindings) const;
    /// Full evaluation; throws if a variable is unbound.
    Rational eval_full(const std::map<Var, Rational>& bindings) const;
    /// Substitute a polynomial for a variable.
    Polynomial substitute(Var v, const Polynomial& value) const;

    /// Coefficient polynomials with respect to v; index = power of v.
    /// Empty vector for the zero polynomial.
    std::vector<Polynomial> coefficients_in(Var v) const;

    /// Scalar content: positive gcd of all coefficients (0 for zero poly).
    Rational content() const;
    /// p / content, optionally sign-normalized to a positive leading coefficient.
    Polynomial primitive(bool positive_leading = true) const;

    /// Exact division: returns r with *this == q*r, or nullopt. q must be nonzero.
    std::optional<Polynomial> divided_exactly(const Polynomial& q) const;

private:
    std::vector<Term> terms_; // descending grlex
};

Polynomial operator*(const Rational& c, const Polynomial& p);

} // namespace cvx
