#include "cvx/rational.hpp"

#include <cctype>

namespace cvx {

Rational::Rational(long num, long den) {
    CVX_REQUIRE(den != 0, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    CVX_REQUIRE(sgn(den) != 0, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    // manual split so we control validation and error text
    std::string text(s);
    auto bad = [&]() -> Rational {
        throw PreconditionError("malformed rational '" + text + "'");
    };
    std::size_t slash = text.find('/');
    std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid_int(num_part, true) || !valid_int(den_part, false)) return bad();
    if (num_part[0] == '+') num_part.erase(0, 1); // mpz rejects a leading '+'
    mpz_class n(num_part), d(den_part);
    if (sgn(d) == 0) throw PreconditionError("rational with zero denominator ('" + text + "')");
    return Rational(n, d);
}

Rational Rational::reciprocal() const {
    CVX_REQUIRE(!is_zero(), "reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
    CVX_REQUIRE(!o.is_zero(), "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = *this;
    if (e < 0) {
        base = reciprocal();
        e = -e;
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(n, d); // already coprime because base is canonical
    return Rational(std::move(r));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {
std::size_t hash_mpz(const mpz_class& z, std::size_t seed) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = seed ^ (static_cast<std::size_t>(p->_mp_size) * 0x9e3779b97f4a7c15ULL);
    int n = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
    for (int i = 0; i < n; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(p, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}
} // namespace

std::size_t Rational::hash() const {
    return hash_mpz(v_.get_den(), hash_mpz(v_.get_num(), 0xcbf29ce484222325ULL));
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class g, l;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(g, l);
}

} // namespace cvx
