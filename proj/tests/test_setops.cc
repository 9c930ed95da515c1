#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "cvx/parser.hpp"
#include "test_support.hpp"

using namespace cvx;
using namespace cvxtest;

namespace {
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

TEST_CASE("make_set") {
    CHECK(make_set({Rational(3), Rational(1), Rational(2), Rational(2)}) == qs({1, 2, 3}));
    CHECK(make_set({}).empty());
    CHECK(make_set({Rational(1, 2), Rational(2, 4)}).size() == 1);
}

TEST_CASE("combine examples") {
    CHECK(combine(SetOp::Sum, qs({1, 2}), qs({10, 20})) == qs({11, 12, 21, 22}));
    CHECK(combine(SetOp::Sum, range1(10), range1(10)).size() == 19);
    CHECK(combine_kfold(SetOp::Prod, qs({2, 3}), 2) == qs({4, 6, 9}));
    CHECK(combine(SetOp::Diff, qs({5}), qs({2, 3})) == qs({2, 3}));
    CHECK(combine(SetOp::Ratio, qs({6}), qs({2, 3})) == qs({2, 3}));
    CHECK_THROWS_AS(combine(SetOp::Ratio, qs({1}), qs({0})), PreconditionError);
}

TEST_CASE("combine size bounds") {
    SplitMix64 rng(23);
    for (int i = 0; i < 50; ++i) {
        QSet a = random_qset(rng, 8);
        QSet b = random_qset(rng, 8);
        for (SetOp op : {SetOp::Sum, SetOp::Diff, SetOp::Prod, SetOp::Ratio}) {
            if (op == SetOp::Ratio && b.contains(Rational(0))) continue;
            if (op == SetOp::Prod && (a.contains(Rational(0)) || b.contains(Rational(0))))
                continue; // zero absorbs products; the lower bound needs 0-free sets
            QSet c = combine(op, a, b);
            CHECK(c.size() >= std::max(a.size(), b.size()));
            CHECK(c.size() <= a.size() * b.size());
        }
    }
}

TEST_CASE("restricted combination") {
    QSet a = qs({1, 2, 3});
    PairGraph diag = PairGraph::of(a, a, {{0, 0}, {1, 1}, {2, 2}});
    CHECK(combine_restricted(SetOp::Diff, diag) == qs({0}));
    CHECK(combine_restricted(SetOp::Diff, PairGraph::consecutive(qs({1, 2, 4}))) == qs({1, 2}));
    CHECK(combine_restricted(SetOp::Sum, PairGraph::of(a, a, {})).empty());
    CHECK_THROWS_AS(PairGraph::of(a, a, {{0, 3}}), PreconditionError);

    // full graph reproduces the unrestricted combine (A = B makes the
    // difference orientation immaterial)
    SplitMix64 rng(29);
    for (int i = 0; i < 20; ++i) {
        QSet s = random_qset(rng, 7);
        PairGraph full = PairGraph::full(s);
        for (SetOp op : {SetOp::Sum, SetOp::Diff, SetOp::Prod}) {
            if (op == SetOp::Prod && s.contains(Rational(0))) continue;
            CHECK(combine_restricted(op, full) == combine(op, s, s));
        }
        CHECK(combine_restricted(SetOp::Sum, full).size() <= full.pairs.size());
    }
}

TEST_CASE("image of a set under a univariate polynomial") {
    Var x = var("x");
    CHECK(image_poly(parse_polynomial("x^2"), x, qs({-1, 1})) == qs({1}));
    CHECK(image_poly(parse_polynomial("x^3"), x, qs({1, 2, 3})) == qs({1, 8, 27}));
    CHECK(image_poly(parse_polynomial("x^2"), x, range1(4)) == qs({1, 4, 9, 16}));
    CHECK_THROWS_AS(image_poly(parse_polynomial("x + y"), x, qs({1})), PreconditionError);
}

TEST_CASE("consecutive differences") {
    auto m = consecutive_differences(qs({1, 2, 3, 5, 7}));
    CHECK(m.count(Rational(1)) == 2);
    CHECK(m.count(Rational(2)) == 2);
    CHECK(m.total() == 4);
    CHECK(consecutive_differences(range1(12)).count(Rational(1)) == 11);
    auto sq = consecutive_differences(qs({1, 4, 9, 16}));
    CHECK(sq.count(Rational(3)) == 1);
    CHECK(sq.count(Rational(5)) == 1);
    CHECK(sq.count(Rational(7)) == 1);
    CHECK_THROWS_AS(consecutive_differences(qs({42})), PreconditionError);

    SplitMix64 rng(31);
    for (int i = 0; i < 30; ++i) {
        QSet s = random_qset(rng, 20);
        if (s.size() < 2) continue;
        CHECK(consecutive_differences(s).total() == static_cast<std::int64_t>(s.size()) - 1);
    }
}

TEST_CASE("dyadic pigeonhole examples") {
    MultiplicityMap m;
    m.add(Rational(10), 1);
    m.add(Rational(20), 1);
    m.add(Rational(30), 4);
    auto lvl = dyadic_pigeonhole(m);
    CHECK(lvl.level_set == qs({30}));
    CHECK(lvl.L == 2);
    CHECK(lvl.covered_mass == 4);

    MultiplicityMap single;
    single.add(Rational(1), 9);
    CHECK(dyadic_pigeonhole(single).covered_mass == 9);

    MultiplicityMap flat;
    for (long i = 1; i <= 8; ++i) flat.add(Rational(i));
    auto l3 = dyadic_pigeonhole(flat);
    CHECK(l3.level_set.size() == 8);
    CHECK(l3.covered_mass == 8);
    CHECK_THROWS_AS(dyadic_pigeonhole(MultiplicityMap{}), PreconditionError);
}

TEST_CASE("dyadic pigeonhole properties") {
    SplitMix64 rng(37);
    for (int i = 0; i < 60; ++i) {
        MultiplicityMap m;
        std::size_t keys = 1 + rng.below(10);
        for (std::size_t k = 0; k < keys; ++k)
            m.add(Rational(static_cast<long>(k)), static_cast<std::int64_t>(1 + rng.below(40)));
        auto lvl = dyadic_pigeonhole(m);
        // class bounds: L < count <= 2L, relaxed to L <= count at L = 1
        for (const auto& d : lvl.level_set) {
            auto c = m.count(d);
            CHECK(c <= 2 * lvl.L);
            if (lvl.L == 1)
                CHECK(c >= lvl.L);
            else
                CHECK(c > lvl.L);
        }
        std::int64_t total = m.total();
        std::int64_t bins = static_cast<std::int64_t>(
            std::bit_width(static_cast<std::uint64_t>(total)));
        CHECK(lvl.covered_mass >= (total + bins - 1) / bins);
        // the level set's own mass is what is reported
        std::int64_t mass = 0;
        for (const auto& d : lvl.level_set) mass += m.count(d);
        CHECK(mass == lvl.covered_mass);
        // classes partition the key set: every key belongs to exactly one
        // dyadic class, and the level set is exactly the keys of its class
        auto class_of = [](std::int64_t c) {
            return c == 1 ? 0 : static_cast<int>(std::bit_width(static_cast<std::uint64_t>(c - 1)));
        };
        int winner = class_of(m.count(lvl.level_set[0]));
        for (const auto& [key, c] : m.entries())
            CHECK(lvl.level_set.contains(key) == (class_of(c) == winner));
    }
}

TEST_CASE("min block gap") {
    auto [i1, g1] = min_block_gap(qs({1, 2, 3, 4, 10, 20}), 3);
    CHECK(i1 == 1);
    CHECK(g1 == Rational(3));
    auto [i2, g2] = min_block_gap(range1(10), 3);
    CHECK(i2 == 1);
    CHECK(g2 == Rational(3));
    auto [i3, g3] = min_block_gap(qs({0, 1, 10, 11, 12, 13}), 3);
    CHECK(i3 == 3);
    CHECK(g3 == Rational(3));
    CHECK_THROWS_AS(min_block_gap(qs({1, 2, 3}), 3), PreconditionError);
}

TEST_CASE("families") {
    CHECK(family(Family::Squares, 4, FamilyParams{}, 0) == qs({1, 4, 9, 16}));
    FamilyParams ap;
    ap.start = Rational(0);
    ap.step = Rational(2);
    CHECK(family(Family::Ap, 5, ap, 0) == qs({0, 2, 4, 6, 8}));
    FamilyParams gp;
    gp.start = Rational(1);
    gp.ratio = Rational(2);
    CHECK(family(Family::Gp, 4, gp, 0) == qs({1, 2, 4, 8}));
    CHECK(family(Family::Cubes, 3, FamilyParams{}, 0) == qs({1, 8, 27}));
    CHECK_THROWS_AS(family(Family::Gp, 3, FamilyParams{.start = Rational(0)}, 0),
                    PreconditionError);

    // AP: |A+A| = 2n-1 exactly
    for (std::size_t n : {2u, 5u, 9u}) {
        QSet a = family(Family::Ap, n, FamilyParams{}, 0);
        CHECK(combine(SetOp::Sum, a, a).size() == 2 * n - 1);
    }

    // deterministic for a fixed seed, convex for the perturbed family
    QSet c1 = family(Family::ConvexPerturbed, 12, FamilyParams{}, 5);
    QSet c2 = family(Family::ConvexPerturbed, 12, FamilyParams{}, 5);
    CHECK(c1 == c2);
    for (std::size_t i = 0; i + 2 < c1.size(); ++i)
        CHECK(c1[i + 1] - c1[i] < c1[i + 2] - c1[i + 1]);
    QSet r1 = family(Family::RandomRational, 15, FamilyParams{}, 9);
    CHECK(r1 == family(Family::RandomRational, 15, FamilyParams{}, 9));
    CHECK(r1.size() == 15);
}

TEST_CASE("set file io") {
    QSet s = make_set({Rational(-3), Rational(7), Rational(1, 2)});
    std::string text = write_set_text(s);
    CHECK(read_set_text(text) == s);
    CHECK(read_set_text("# comment\n1/2\n-3\n7 # trailing\n") == s);
    CHECK(read_set_text("[\"1/2\", \"-3\", \"7\"]") == s);
    CHECK_THROWS_AS(read_set_text("[1, 2]"), PreconditionError);
    CHECK_THROWS_AS(read_set_text("not-a-number"), PreconditionError);
}
