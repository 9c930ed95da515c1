#include "cvx/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "cvx/error.hpp"

namespace cvx {

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Polynomial::Term> drain_sorted(Accumulator& acc) {
    std::vector<Polynomial::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back({m, std::move(c)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return Monomial::cmp_grlex(a.mono, b.mono) > 0;
    });
    return out;
}

} // namespace

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(Var v) {
    Polynomial p;
    p.terms_.push_back({Monomial::of(v), Rational(1)});
    return p;
}

Polynomial Polynomial::term(Monomial m, Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::collect(std::vector<Term> terms) {
    Accumulator acc;
    acc.reserve(terms.size());
    for (auto& t : terms) acc[std::move(t.mono)] += t.coeff;
    Polynomial p;
    p.terms_ = drain_sorted(acc);
    return p;
}

Rational Polynomial::constant_value() const {
    CVX_CHECK(is_constant(), "constant_value on non-constant polynomial");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const Polynomial::Term& Polynomial::leading() const {
    CVX_CHECK(!terms_.empty(), "leading term of zero polynomial");
    return terms_.front();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rational(0);
}

std::optional<std::uint64_t> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mono.degree(); // descending grlex: front has max degree
}

std::uint32_t Polynomial::degree_in(Var v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
    return d;
}

std::vector<Var> Polynomial::variables() const {
    std::vector<Var> vars;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.factors()) vars.push_back(v);
    std::sort(vars.begin(), vars.end(), var_precedes);
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

Polynomial Polynomial::operator-() const {
    Polynomial p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
    return p;
}

namespace {

// merge two descending term lists; sign = +1 / -1 applied to b
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, int sign) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = Monomial::cmp_grlex(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, sign > 0 ? b[j].coeff : -b[j].coeff});
            ++j;
        } else {
            Rational s = sign > 0 ? a[i].coeff + b[j].coeff : a[i].coeff - b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, sign > 0 ? b[j].coeff : -b[j].coeff});
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    terms_ = merge(terms_, o.terms_, +1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r += b;
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r -= b;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Accumulator acc;
    acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 20));
    // iterate larger factor in the outer loop so monomial products reuse the
    // shorter inner list's locality
    const auto& outer = a.terms_.size() >= b.terms_.size() ? a.terms_ : b.terms_;
    const auto& inner = a.terms_.size() >= b.terms_.size() ? b.terms_ : a.terms_;
    for (const auto& ta : outer) {
        for (const auto& tb : inner) {
            acc[ta.mono.times(tb.mono)] += ta.coeff * tb.coeff;
        }
    }
    Polynomial p;
    p.terms_ = drain_sorted(acc);
    return p;
}

Polynomial Polynomial::times(const Rational& c) const {
    if (c.is_zero()) return {};
    Polynomial p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
    return p;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.times(c); }

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = constant(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::derivative(Var v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono.degree_in(v);
        if (e == 0) continue;
        out.push_back({t.mono.with_exponent(v, e - 1), t.coeff * Rational(static_cast<long>(e))});
    }
    return collect(std::move(out));
}

Polynomial Polynomial::eval(const std::map<Var, Rational>& bindings) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        Monomial rest = Monomial::one();
        for (const auto& [v, e] : t.mono.factors()) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                rest = rest.times(Monomial::of(v, e));
            } else {
                c *= it->second.pow(e);
            }
        }
        out.push_back({std::move(rest), std::move(c)});
    }
    return collect(std::move(out));
}

Rational Polynomial::eval_full(const std::map<Var, Rational>& bindings) const {
    Polynomial p = eval(bindings);
    CVX_REQUIRE(p.is_constant(), "eval_full with unbound variables");
    return p.constant_value();
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
    // Horner in v over the coefficient polynomials
    auto coeffs = coefficients_in(v);
    if (coeffs.empty()) return {};
    Polynomial r = coeffs.back();
    for (std::size_t i = coeffs.size(); i-- > 1;) {
        r = r * value + coeffs[i - 1];
    }
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
    if (terms_.empty()) return {};
    std::uint32_t d = degree_in(v);
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono.degree_in(v);
        buckets[e].push_back({t.mono.without(v), t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(d + 1);
    for (auto& b : buckets) out.push_back(collect(std::move(b)));
    return out;
}

Rational Polynomial::content() const {
    Rational g(0);
    for (const auto& t : terms_) {
        g = rational_gcd(g, t.coeff);
        if (g.is_one()) break;
    }
    return g;
}

Polynomial Polynomial::primitive(bool positive_leading) const {
    if (terms_.empty()) return {};
    Rational c = content();
    if (positive_leading && terms_.front().coeff.sign() < 0) c = -c;
    return times(c.reciprocal());
}

std::optional<Polynomial> Polynomial::divided_exactly(const Polynomial& q) const {
    CVX_REQUIRE(!q.is_zero(), "division by zero polynomial");
    if (is_zero()) return Polynomial{};
    std::map<Monomial, Rational, MonomialGrlexGreater> rem;
    for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
    const Monomial& qm = q.leading().mono;
    const Rational& qc = q.leading().coeff;
    std::vector<Term> quot;
    while (!rem.empty()) {
        const Monomial rm = rem.begin()->first; // copy: the node is erased below
        auto m = rm.divided_by(qm);
        if (!m) return std::nullopt;
        Rational c = rem.begin()->second / qc;
        quot.push_back({*m, c});
        for (const auto& t : q.terms_) {
            Monomial key = m->times(t.mono);
            auto it = rem.find(key);
            if (it == rem.end()) {
                rem.emplace(std::move(key), -(c * t.coeff));
            } else {
                it->second -= c * t.coeff;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return collect(std::move(quot));
}

} // namespace cvx
