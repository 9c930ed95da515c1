#include "cvx/expander.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include "cvx/error.hpp"
#include "cvx/numeric.hpp"

namespace cvx {

namespace {

QSet shifted(const QSet& X, const Rational& s, const Rational& lambda) {
    std::vector<Rational> out;
    out.reserve(X.size());
    for (const auto& u : X) {
        Rational v = s * u + lambda;
        CVX_REQUIRE(!v.is_zero(), "zero in denominator factor (shift " + s.str() + ")");
        out.push_back(std::move(v));
    }
    return QSet::of(std::move(out));
}

unsigned thread_cap() {
    const char* env = std::getenv("CONVEXITY_LAB_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    return static_cast<unsigned>(std::min<long>(v, 64));
}

} // namespace

QSet expander_set(const QSet& X, const Rational& x, const Rational& xprime,
                  const Rational& lambda) {
    CVX_REQUIRE(!X.empty(), "empty input set");
    QSet base1 = shifted(X, x, lambda);
    QSet base2 = shifted(X, xprime, lambda);
    QSet P = combine(SetOp::Prod, base1, base1);
    QSet Q = combine(SetOp::Prod, base2, base2);
    QSet R = combine(SetOp::Prod, P, base2);
    QSet PQ = combine(SetOp::Prod, P, Q);
    return combine(SetOp::Ratio, PQ, R);
}

ExpanderResult expander_best_pair(const QSet& X, const Rational& lambda) {
    CVX_REQUIRE(X.size() >= 2, "need at least 2 elements");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < X.size(); ++j)
            if (i != j) pairs.emplace_back(i, j);

    struct Best {
        std::size_t size = 0;
        std::size_t pair_index = SIZE_MAX; // index into `pairs` = lexicographic rank
        QSet set;
    };
    const unsigned threads = std::min<unsigned>(thread_cap(), static_cast<unsigned>(pairs.size()));
    std::vector<Best> partial(threads);
    auto worker = [&](unsigned tid) {
        Best local;
        for (std::size_t k = tid; k < pairs.size(); k += threads) {
            QSet s = expander_set(X, X[pairs[k].first], X[pairs[k].second], lambda);
            if (s.size() > local.size || (s.size() == local.size && k < local.pair_index)) {
                local = {s.size(), k, std::move(s)};
            }
        }
        partial[tid] = std::move(local);
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
        for (auto& th : pool) th.join();
    }
    Best best;
    for (auto& cand : partial) {
        if (cand.pair_index == SIZE_MAX) continue;
        if (cand.size > best.size || (cand.size == best.size && cand.pair_index < best.pair_index))
            best = std::move(cand);
    }
    ExpanderResult res;
    res.x = X[pairs[best.pair_index].first];
    res.xprime = X[pairs[best.pair_index].second];
    res.set = std::move(best.set);
    res.size = best.size;
    res.exponent_reading = log_ratio(res.size, X.size());
    return res;
}

std::vector<ExpanderScanRow> expander_scan(Family fam, const FamilyParams& params,
                                           std::uint64_t seed, std::size_t n_min,
                                           std::size_t n_max, const Rational& lambda,
                                           bool with_timing, std::size_t budget) {
    CVX_REQUIRE(n_min >= 2 && n_min <= n_max, "bad scan range");
    std::vector<ExpanderScanRow> rows;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        ExpanderScanRow row;
        row.n = n;
        if (n > budget) {
            row.truncated = true;
            rows.push_back(std::move(row));
            break;
        }
        QSet X = family(fam, n, params, seed);
        auto t0 = std::chrono::steady_clock::now();
        ExpanderResult best = expander_best_pair(X, lambda);
        auto t1 = std::chrono::steady_clock::now();
        row.x = best.x;
        row.xprime = best.xprime;
        row.size = best.size;
        row.exponent_reading = best.exponent_reading;
        if (with_timing) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            row.millis = std::to_string(ms);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace cvx
