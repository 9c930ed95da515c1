#pragma once

#include <cstdint>
#include <string>

#include "cvx/rational.hpp"

namespace cvx {

/// Exact rational interval known to contain an (irrational) power value.
struct Bracket {
    Rational lo, hi;
};

/// lo <= base^(p/q) <= hi with hi - lo <= eps; base >= 0, p >= 1, q >= 1.
/// Computed by integer q-th root bracketing plus bisection with exact
/// comparisons; no floating point involved.
Bracket power_bracket(const Rational& base, unsigned p, unsigned q, const Rational& eps);

/// Fixed-point decimal renderings, rounded toward -inf / +inf so printed
/// bracket endpoints still bracket.
std::string decimal_floor(const Rational& r, unsigned places);
std::string decimal_ceil(const Rational& r, unsigned places);

/// "log(a)/log(b)" rendered with the given number of places; empty string
/// when undefined (a < 1 or b < 2). Display-only value.
std::string log_ratio(std::uint64_t a, std::uint64_t b, unsigned places = 6);

} // namespace cvx
