#include "cvx/numeric.hpp"

#include <cmath>
#include <cstdio>

#include "cvx/error.hpp"

namespace cvx {

Bracket power_bracket(const Rational& base, unsigned p, unsigned q, const Rational& eps) {
    CVX_REQUIRE(base.sign() >= 0, "power bracket of negative base");
    CVX_REQUIRE(p >= 1 && q >= 1 && eps.sign() > 0, "invalid power bracket request");
    if (base.is_zero()) return {Rational(0), Rational(0)};
    const Rational target = base.pow(static_cast<long>(p));
    // integer q-th root of floor(target) seeds a width-2 starting interval
    mpz_class ft = target.numerator() / target.denominator();
    mpz_class root;
    mpz_root(root.get_mpz_t(), ft.get_mpz_t(), q);
    Rational lo(root, mpz_class(1));
    Rational hi = lo + Rational(2);
    while (lo.pow(q) > target) lo -= Rational(1);
    while (hi.pow(q) < target) hi += Rational(1);
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / Rational(2);
        if (mid.pow(q) <= target)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

namespace {

std::string fixed_point(const mpz_class& scaled, unsigned places) {
    mpz_class v = scaled;
    bool neg = sgn(v) < 0;
    if (neg) v = -v;
    std::string digits = v.get_str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = neg ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += ".";
        out += digits.substr(digits.size() - places);
    }
    return out;
}

mpz_class pow10(unsigned places) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, places);
    return p;
}

} // namespace

std::string decimal_floor(const Rational& r, unsigned places) {
    mpz_class scaled;
    mpz_class num = r.numerator() * pow10(places);
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), r.denominator().get_mpz_t());
    return fixed_point(scaled, places);
}

std::string decimal_ceil(const Rational& r, unsigned places) {
    mpz_class scaled;
    mpz_class num = r.numerator() * pow10(places);
    mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), r.denominator().get_mpz_t());
    return fixed_point(scaled, places);
}

std::string log_ratio(std::uint64_t a, std::uint64_t b, unsigned places) {
    if (a < 1 || b < 2) return "";
    double v = std::log(static_cast<double>(a)) / std::log(static_cast<double>(b));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", static_cast<int>(places), v);
    return buf;
}

} // namespace cvx
