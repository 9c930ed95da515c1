#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cvx/algebra.hpp"
#include "cvx/surface.hpp"
#include "test_support.hpp"

using namespace cvx;
using namespace cvxtest;

namespace {
const Var X = var("x");
const Var Y = var("y");
const Var Z = var("z");

QSet qs(std::initializer_list<long> vs) {
    std::vector<Rational> r;
    for (long v : vs) r.emplace_back(v);
    return QSet::of(std::move(r));
}
QSet range1(long n) {
    std::vector<Rational> r;
    for (long v = 1; v <= n; ++v) r.emplace_back(v);
    return QSet::of(std::move(r));
}
} // namespace

TEST_CASE("surface spec validation") {
    CHECK_THROWS_AS(SurfaceSpec::of(Polynomial{}, X, Y, Z), PreconditionError);
    CHECK_THROWS_AS(SurfaceSpec::of(parse_polynomial("x + w"), X, Y, Z), PreconditionError);
    CHECK(SurfaceSpec::of(parse_polynomial("x + y"), X, Y, Z).missing_role_warning);
    CHECK(!SurfaceSpec::of(parse_polynomial("x*y*z"), X, Y, Z).missing_role_warning);
}

TEST_CASE("counting examples") {
    auto plane = SurfaceSpec::of(parse_polynomial("x + y - z"), X, Y, Z);
    QSet s = qs({1, 2, 3});
    CHECK(count_naive(plane, s, s, s).count == 3);
    CHECK(count_root_based(plane, s, s, s).count == 3);
    QSet ten = range1(10);
    CHECK(count_naive(plane, ten, ten, ten).count == 45);
    CHECK(count_root_based(plane, ten, ten, ten).count == 45);
    auto one = SurfaceSpec::of(parse_polynomial("1"), X, Y, Z);
    CHECK(count_naive(one, s, s, s).count == 0);
}

TEST_CASE("degenerate specialization contributes the whole fiber") {
    auto spec = SurfaceSpec::of(parse_polynomial("(x - 1)*z"), X, Y, Z);
    auto nv = count_naive(spec, qs({1, 2}), qs({1}), qs({1, 2, 3}));
    auto rb = count_root_based(spec, qs({1, 2}), qs({1}), qs({1, 2, 3}));
    CHECK(nv.count == 3);
    CHECK(rb.count == 3);
    CHECK(rb.degenerate_fiber);
    CHECK(!nv.degenerate_fiber); // only the specializing method can see it
}

TEST_CASE("the two counting methods agree on random instances") {
    SplitMix64 rng(41);
    for (int i = 0; i < 30; ++i) {
        Polynomial f = random_nonzero_polynomial(rng, {X, Y, Z}, 6, 4, 6);
        QSet a = random_qset(rng, 8), b = random_qset(rng, 8), c = random_qset(rng, 8);
        auto nv = count_naive(SurfaceSpec::of(f, X, Y, Z), a, b, c);
        auto rb = count_root_based(SurfaceSpec::of(f, X, Y, Z), a, b, c);
        CHECK(nv.count == rb.count);
    }
}

TEST_CASE("count is monotone in the sets") {
    SplitMix64 rng(43);
    for (int i = 0; i < 15; ++i) {
        Polynomial f = random_nonzero_polynomial(rng, {X, Y, Z}, 5, 3, 5);
        QSet a2 = random_qset(rng, 8), b2 = random_qset(rng, 8), c2 = random_qset(rng, 8);
        auto shrink = [&rng](const QSet& s) {
            std::vector<Rational> kept;
            for (const auto& v : s)
                if (rng.below(2) == 0) kept.push_back(v);
            return QSet::of(std::move(kept));
        };
        QSet a1 = shrink(a2), b1 = shrink(b2), c1 = shrink(c2);
        auto spec = SurfaceSpec::of(f, X, Y, Z);
        CHECK(count_naive(spec, a1, b1, c1).count <= count_naive(spec, a2, b2, c2).count);
    }
}

TEST_CASE("count is invariant under matched role permutation") {
    SplitMix64 rng(47);
    for (int i = 0; i < 10; ++i) {
        Polynomial f = random_nonzero_polynomial(rng, {X, Y, Z}, 5, 3, 5);
        QSet a = random_qset(rng, 6), b = random_qset(rng, 6), c = random_qset(rng, 6);
        auto base = count_naive(SurfaceSpec::of(f, X, Y, Z), a, b, c).count;
        CHECK(count_naive(SurfaceSpec::of(f, Y, X, Z), b, a, c).count == base);
        CHECK(count_naive(SurfaceSpec::of(f, Z, Y, X), c, b, a).count == base);
    }
}

TEST_CASE("lemma-main instance") {
    QSet a = qs({1, 2, 3});
    auto rep = lemma_main_check(a, PairGraph::consecutive(a));
    CHECK(rep.S == 2);
    CHECK(rep.C == qs({1}));
    CHECK(rep.D == qs({3, 5}));
    CHECK(rep.E == qs({7, 19}));
    CHECK(rep.zero_count >= 2);

    auto rep0 = lemma_main_check(a, PairGraph::of(a, a, {}));
    CHECK(rep0.S == 0);
    CHECK(rep0.zero_count == 0);
    CHECK_THROWS_AS(lemma_main_check(a, PairGraph::of(a, a, {{2, 2}})), PreconditionError);
    CHECK_THROWS_AS(lemma_main_check(a, PairGraph::consecutive(a), {1, 2}), PreconditionError);
}

TEST_CASE("lemma-main law on random graphs") {
    SplitMix64 rng(53);
    for (int i = 0; i < 25; ++i) {
        QSet a = random_qset(rng, 8);
        if (a.size() < 2) continue;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> ps;
        for (std::uint32_t p = 0; p < a.size(); ++p)
            for (std::uint32_t q = 0; q < a.size(); ++q)
                if (p != q && rng.below(3) == 0) ps.emplace_back(p, q);
        auto rep = lemma_main_check(a, PairGraph::of(a, a, std::move(ps)));
        CHECK(rep.S <= rep.zero_count); // re-proved instance-wise, plus asserted internally
    }
}

TEST_CASE("hyperplane scan") {
    auto plane = SurfaceSpec::of(parse_polynomial("x + y - z"), X, Y, Z);
    auto rows = es_scan(plane, Family::Ap, FamilyParams{}, 0, 4, 12);
    REQUIRE(rows.size() == 9);
    for (const auto& r : rows) {
        CHECK(r.count == static_cast<std::int64_t>(r.n * (r.n - 1) / 2));
        CHECK(r.comparator.hi - r.comparator.lo <= Rational(1, 1000000));
        CHECK(!r.log_ratio.empty());
    }
}

TEST_CASE("multiplicative hyperplane scan on a gp family") {
    auto spec = SurfaceSpec::of(parse_polynomial("x*y - z"), X, Y, Z);
    auto rows = es_scan(spec, Family::Gp, FamilyParams{}, 0, 3, 8);
    // xy = z on {2^0..2^(n-1)}: #{(i,j): i+j <= n-1} = n(n+1)/2 pairs, minus
    // those with i+j = 0 handled... direct check against the naive count
    FamilyParams p;
    for (const auto& r : rows) {
        QSet g = family(Family::Gp, r.n, p, 0);
        CHECK(r.count == count_naive(spec, g, g, g).count);
    }
}

TEST_CASE("cde scan runs on the studied surface") {
    auto spec = SurfaceSpec::of(surface_F(), X, Y, Z);
    auto rows = es_scan(spec, Family::Squares, FamilyParams{}, 0, 4, 8, EsScanMode::Cde);
    CHECK(rows.size() == 5);
    for (const auto& r : rows) CHECK(r.count >= 0);
}
