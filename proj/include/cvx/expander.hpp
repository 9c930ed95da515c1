#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvx/setops.hpp"

namespace cvx {

/// Result of the shifted-product ratio construction
/// (xX+lambda)^(2) (x'X+lambda)^(2) / ((xX+lambda)^(2) (x'X+lambda)).
struct ExpanderResult {
    Rational x, xprime;
    QSet set;
    std::size_t size = 0;
    std::string exponent_reading; ///< log(size)/log(|X|), display only
};

/// The ratio set for one ordered pair of shifts. Errors when any element of
/// xX+lambda or x'X+lambda is zero.
QSet expander_set(const QSet& X, const Rational& x, const Rational& xprime,
                  const Rational& lambda = Rational(1));

/// Exhaustive arg max over ordered pairs x != x'; ties break to the
/// lexicographically smallest (x, x'). Needs |X| >= 2.
ExpanderResult expander_best_pair(const QSet& X, const Rational& lambda = Rational(1));

struct ExpanderScanRow {
    std::size_t n = 0;
    Rational x, xprime;
    std::size_t size = 0;
    std::string exponent_reading;
    std::string millis;    ///< empty when timing is suppressed
    bool truncated = false; ///< budget marker; later rows were skipped
};

/// Per-n best pairs for a family; rows stop with a truncation marker when n
/// exceeds the exhaustive-search budget.
std::vector<ExpanderScanRow> expander_scan(Family fam, const FamilyParams& params,
                                           std::uint64_t seed, std::size_t n_min,
                                           std::size_t n_max, const Rational& lambda,
                                           bool with_timing, std::size_t budget = 10);

} // namespace cvx
