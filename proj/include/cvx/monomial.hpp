#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cvx/vars.hpp"

namespace cvx {

/// Sparse power product. Exponents are > 0 (absent variable = 0), factors
/// kept sorted by variable-name order. The empty monomial is 1.
class Monomial {
public:
    using Factor = std::pair<Var, std::uint32_t>;

    Monomial() = default;
    /// Factors in any order; exponents may repeat a variable (added up).
    explicit Monomial(std::vector<Factor> factors);

    static Monomial one() { return Monomial(); }
    static Monomial of(Var v, std::uint32_t e = 1);

    bool is_one() const { return factors_.empty(); }
    std::uint64_t degree() const { return degree_; }
    std::uint32_t degree_in(Var v) const;
    const std::vector<Factor>& factors() const { return factors_; }

    Monomial times(const Monomial& o) const;
    /// Exact division; nullopt when o does not divide *this.
    std::optional<Monomial> divided_by(const Monomial& o) const;
    /// Monomial with v removed entirely.
    Monomial without(Var v) const;
    /// *this with the exponent of v replaced (0 removes it).
    Monomial with_exponent(Var v, std::uint32_t e) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    /// Graded lexicographic compare (variable significance = name order):
    /// returns <0, 0, >0 when a<b, a==b, a>b.
    static int cmp_grlex(const Monomial& a, const Monomial& b);

    std::size_t hash() const;

private:
    std::vector<Factor> factors_;
    std::uint64_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Descending graded-lex order, the storage/printing order of polynomials.
struct MonomialGrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_grlex(a, b) > 0;
    }
};

} // namespace cvx
