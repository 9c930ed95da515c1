#include "cvx/monomial.hpp"

#include <algorithm>

#include "cvx/error.hpp"

namespace cvx {

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return var_precedes(a.first, b.first); });
    for (auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == v)
            factors_.back().second += e;
        else
            factors_.emplace_back(v, e);
        degree_ += e;
    }
}

Monomial Monomial::of(Var v, std::uint32_t e) {
    Monomial m;
    if (e > 0) {
        m.factors_.emplace_back(v, e);
        m.degree_ = e;
    }
    return m;
}

std::uint32_t Monomial::degree_in(Var v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
        if (factors_[i].first == o.factors_[j].first) {
            r.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
            ++i, ++j;
        } else if (var_precedes(factors_[i].first, o.factors_[j].first)) {
            r.factors_.push_back(factors_[i++]);
        } else {
            r.factors_.push_back(o.factors_[j++]);
        }
    }
    for (; i < factors_.size(); ++i) r.factors_.push_back(factors_[i]);
    for (; j < o.factors_.size(); ++j) r.factors_.push_back(o.factors_[j]);
    r.degree_ = degree_ + o.degree_;
    return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
    if (o.degree_ > degree_) return std::nullopt;
    Monomial r;
    std::size_t i = 0, j = 0;
    while (j < o.factors_.size()) {
        if (i == factors_.size()) return std::nullopt;
        if (factors_[i].first == o.factors_[j].first) {
            if (factors_[i].second < o.factors_[j].second) return std::nullopt;
            std::uint32_t e = factors_[i].second - o.factors_[j].second;
            if (e > 0) r.factors_.emplace_back(factors_[i].first, e);
            ++i, ++j;
        } else if (var_precedes(factors_[i].first, o.factors_[j].first)) {
            r.factors_.push_back(factors_[i++]);
        } else {
            return std::nullopt; // o has a variable *this lacks
        }
    }
    for (; i < factors_.size(); ++i) r.factors_.push_back(factors_[i]);
    r.degree_ = degree_ - o.degree_;
    return r;
}

Monomial Monomial::without(Var v) const {
    Monomial r;
    for (const auto& f : factors_) {
        if (f.first == v) continue;
        r.factors_.push_back(f);
        r.degree_ += f.second;
    }
    return r;
}

Monomial Monomial::with_exponent(Var v, std::uint32_t e) const {
    Monomial r = without(v);
    if (e == 0) return r;
    auto pos = std::find_if(r.factors_.begin(), r.factors_.end(),
                            [&](const Factor& f) { return var_precedes(v, f.first); });
    r.factors_.insert(pos, {v, e});
    r.degree_ += e;
    return r;
}

int Monomial::cmp_grlex(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
        Var va = a.factors_[i].first, vb = b.factors_[j].first;
        if (va == vb) {
            if (a.factors_[i].second != b.factors_[j].second) {
                // earlier variable with the larger exponent wins
                return a.factors_[i].second > b.factors_[j].second ? 1 : -1;
            }
            ++i, ++j;
        } else if (var_precedes(va, vb)) {
            return 1; // a has positive power of an earlier variable, b has zero
        } else {
            return -1;
        }
    }
    if (i < a.factors_.size()) return 1;
    if (j < b.factors_.size()) return -1;
    return 0;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL ^ degree_;
    for (const auto& [v, e] : factors_) {
        h ^= (static_cast<std::size_t>(v) * 0x100000001b3ULL) + e + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace cvx
