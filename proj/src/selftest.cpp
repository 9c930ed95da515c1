#include "cvx/selftest.hpp"

#include <functional>
#include <map>

#include "cvx/algebra.hpp"
#include "cvx/error.hpp"
#include "cvx/expander.hpp"
#include "cvx/parser.hpp"
#include "cvx/squeeze.hpp"
#include "cvx/surface.hpp"

namespace cvx {

namespace {

struct Corpus {
    std::vector<std::string> lines;

    void ok(bool cond, const std::string& what) {
        if (!cond) throw InternalError("selftest failed: " + what);
        lines.push_back("ok: " + what);
    }

    template <typename F> void throws(F&& f, const std::string& what) {
        bool threw = false;
        try {
            f();
        } catch (const PreconditionError&) {
            threw = true;
        }
        ok(threw, what);
    }
};

QSet qset(std::initializer_list<long> vs) {
    std::vector<Rational> r;
    for (long v : vs) r.emplace_back(v);
    return QSet::of(std::move(r));
}

QSet range1(long n) {
    std::vector<Rational> r;
    for (long v = 1; v <= n; ++v) r.emplace_back(v);
    return QSet::of(std::move(r));
}

void degen_test(Corpus& c) {
    Var x = var("x"), y = var("y");
    auto f = parse_rational_function("(3*y^2 + x^4)/(4*x)");
    auto rep = degeneracy_test(f, x, y);
    c.ok(rep.verdict == Verdict::NonDegenerate, "claim-proof f is non-degenerate");
    auto expected = parse_rational_function("(8*x^3*y)/((x^4 - y^2)^2)");
    c.ok(rf_equal(rep.test_function, expected), "T(f) = 8x^3y/(x^4-y^2)^2");
    // the published rendition of this value is exactly T with y -> y^2
    RationalFunction published = parse_rational_function("(8*x^3*y^2)/((x^4 - y^4)^2)");
    RationalFunction tsub(rep.test_function.num().substitute(y, parse_polynomial("y^2")),
                          rep.test_function.den().substitute(y, parse_polynomial("y^2")));
    c.ok(rf_equal(tsub, published), "published rendition equals T(x, y^2)");

    c.ok(degeneracy_test(parse_rational_function("x + y"), x, y).verdict == Verdict::Inconclusive,
         "x+y splits: T vanishes");
    c.ok(degeneracy_test(parse_rational_function("x*y"), x, y).verdict == Verdict::Inconclusive,
         "xy splits: T vanishes");
    c.throws([&] { degeneracy_test(parse_rational_function("y^2"), x, y); },
             "f_x identically zero is rejected");
}

void xn_check(Corpus& c) {
    for (std::uint32_t n : {3u, 4u}) {
        auto rep = xn_family_check(n);
        c.ok(rep.report.verdict == Verdict::NonDegenerate,
             "n=" + std::to_string(n) + " non-degenerate");
        c.ok(rep.closed_form_match, "n=" + std::to_string(n) + " closed form matches");
    }
    c.throws([] { xn_family_check(2); }, "n=2 rejected");
}

void eliminate(Corpus& c) {
    Var a = var("a"), b = var("b");
    auto p1 = parse_polynomial("a - b - x");
    auto p2 = parse_polynomial("a^2 - b^2 - y");
    auto p3 = parse_polynomial("a^3 - b^3 - z");
    Polynomial out = eliminate_two(p1, p2, p3, a, b);
    auto q = out.divided_exactly(surface_F());
    c.ok(q.has_value(), "lemma-main elimination divisible by F");
    c.ok(q->primitive() == parse_polynomial("x"), "cofactor is x up to scale");

    Var u = var("u"), v = var("v");
    Polynomial deg = eliminate_two(parse_polynomial("u - x"), parse_polynomial("u - y"),
                                   parse_polynomial("v - z"), u, v);
    c.ok(deg == parse_polynomial("x - y"), "degenerate input collapses to x - y");

    c.throws([&] { resultant(parse_polynomial("x^2 - 2"), parse_polynomial("y - 1"), var("x")); },
             "resultant rejects variable-free input");
    c.ok(resultant(parse_polynomial("x^2 - 2"), parse_polynomial("x - y"), var("x")) ==
             parse_polynomial("y^2 - 2"),
         "Res_x(x^2-2, x-y) = y^2 - 2");
}

void verify_param(Corpus& c) {
    c.ok(verify_parametrization(surface_G(), system_parametrization()),
         "G vanishes on the parametrized surface");
    std::map<Var, RationalFunction> sub;
    sub.emplace(var("x"), parse_rational_function("a - b"));
    sub.emplace(var("y"), parse_rational_function("a^2 - b^2"));
    sub.emplace(var("z"), parse_rational_function("a^3 - b^3"));
    c.ok(verify_parametrization(surface_F(), sub), "F vanishes on x=a-b, y=a^2-b^2, z=a^3-b^3");
    std::map<Var, RationalFunction> bad;
    bad.emplace(var("x"), parse_rational_function("t"));
    bad.emplace(var("y"), parse_rational_function("t"));
    c.ok(!verify_parametrization(parse_polynomial("x + y"), bad), "x+y does not vanish on x=y=t");
}

void count_surface(Corpus& c) {
    Var x = var("x"), y = var("y"), z = var("z");
    auto plane = SurfaceSpec::of(parse_polynomial("x + y - z"), x, y, z);
    QSet s123 = qset({1, 2, 3});
    c.ok(count_naive(plane, s123, s123, s123).count == 3, "plane on {1,2,3}^3 has 3 zeros");
    c.ok(count_root_based(plane, s123, s123, s123).count == 3, "root-based count agrees");
    QSet ten = range1(10);
    c.ok(count_naive(plane, ten, ten, ten).count == 45, "plane on [10]^3 has n(n-1)/2 zeros");
    auto unit = SurfaceSpec::of(parse_polynomial("1"), x, y, z);
    c.ok(count_naive(unit, s123, s123, s123).count == 0, "F=1 has empty zero set");
    auto fiber = SurfaceSpec::of(parse_polynomial("(x - 1)*z"), x, y, z);
    QSet a12 = qset({1, 2}), b1 = qset({1}), c123 = qset({1, 2, 3});
    auto nv = count_naive(fiber, a12, b1, c123);
    auto rb = count_root_based(fiber, a12, b1, c123);
    c.ok(nv.count == 3 && rb.count == 3 && rb.degenerate_fiber,
         "identically vanishing fiber contributes |C| in both methods");
}

void es_scan_cmd(Corpus& c) {
    Var x = var("x"), y = var("y"), z = var("z");
    auto plane = SurfaceSpec::of(parse_polynomial("x + y - z"), x, y, z);
    auto rows = es_scan(plane, Family::Ap, FamilyParams{}, 0, 4, 8);
    bool all = rows.size() == 5;
    for (const auto& r : rows)
        all = all && r.count == static_cast<std::int64_t>(r.n * (r.n - 1) / 2);
    c.ok(all, "hyperplane scan reproduces n(n-1)/2");
}

void sumset(Corpus& c) {
    c.ok(combine(SetOp::Sum, qset({1, 2}), qset({10, 20})) == qset({11, 12, 21, 22}),
         "sum {1,2}+{10,20}");
    c.ok(combine(SetOp::Sum, range1(10), range1(10)).size() == 19, "AP sumset has size 2n-1");
    c.ok(combine_kfold(SetOp::Prod, qset({2, 3}), 2) == qset({4, 6, 9}), "{2,3}^(2) = {4,6,9}");
    c.ok(make_set({Rational(3), Rational(1), Rational(2), Rational(2)}) == qset({1, 2, 3}),
         "make_set sorts and dedups");
    c.ok(make_set({Rational(1, 2), Rational(2, 4)}).size() == 1, "canonical rationals collide");
    c.throws([&] { combine(SetOp::Ratio, qset({1}), qset({0, 1})); }, "ratio rejects zero divisor");
}

void restricted(Corpus& c) {
    QSet a = qset({1, 2, 3});
    PairGraph diag = PairGraph::of(a, a, {{0, 0}, {1, 1}, {2, 2}});
    c.ok(combine_restricted(SetOp::Diff, diag) == qset({0}), "diagonal pairs give {0}");
    QSet b = qset({1, 2, 4});
    c.ok(combine_restricted(SetOp::Diff, PairGraph::consecutive(b)) == qset({1, 2}),
         "consecutive differences of {1,2,4}");
    PairGraph empty = PairGraph::of(a, a, {});
    c.ok(combine_restricted(SetOp::Diff, empty).empty(), "empty graph gives empty set");
}

void diffs(Corpus& c) {
    auto m = consecutive_differences(qset({1, 2, 3, 5, 7}));
    c.ok(m.count(Rational(1)) == 2 && m.count(Rational(2)) == 2 && m.total() == 4,
         "gaps of {1,2,3,5,7} are {1:2, 2:2}");
    c.ok(consecutive_differences(range1(10)).count(Rational(1)) == 9, "AP has a single gap");
    auto sq = consecutive_differences(qset({1, 4, 9, 16}));
    c.ok(sq.count(Rational(3)) == 1 && sq.count(Rational(5)) == 1 && sq.count(Rational(7)) == 1,
         "gaps of {1,4,9,16}");
    c.throws([&] { consecutive_differences(qset({1})); }, "singleton rejected");
}

void pigeonhole(Corpus& c) {
    MultiplicityMap m;
    m.add(Rational(10), 1);
    m.add(Rational(20), 1);
    m.add(Rational(30), 4);
    auto lvl = dyadic_pigeonhole(m);
    c.ok(lvl.level_set == qset({30}) && lvl.L == 2 && lvl.covered_mass == 4,
         "two classes, heavier one wins");
    MultiplicityMap single;
    single.add(Rational(5), 7);
    auto l2 = dyadic_pigeonhole(single);
    c.ok(l2.level_set == qset({5}) && l2.covered_mass == 7, "single key class");
    MultiplicityMap flat;
    for (long i = 1; i <= 8; ++i) flat.add(Rational(i), 1);
    auto l3 = dyadic_pigeonhole(flat);
    c.ok(l3.level_set.size() == 8 && l3.covered_mass == 8 && l3.L == 1,
         "uniform counts land in one class");
}

void squeeze_cmd(Corpus& c) {
    QSet a = qset({0, 1, 3, 6, 10});
    auto rep = squeeze_witnesses(a, qset({1, 2, 3, 4}), 1);
    c.ok(rep.claimed_floor == 10 && rep.witnesses.size() == 10, "floor L*t(t+1)/2 = 10");
    c.ok(witnesses_in_sumdiff(rep, a), "witnesses lie in A+A-A");
    auto rep2 = squeeze_witnesses(range1(10), qset({1}), 9);
    c.ok(rep2.claimed_floor == 9, "AP floor 9");
    auto rep3 = squeeze_witnesses(qset({1, 4, 9, 16}), qset({3, 5, 7}), 1);
    c.ok(rep3.claimed_floor == 6, "squares floor 6");
    c.throws([&] { squeeze_witnesses(range1(10), qset({1}), 10); },
             "multiplicity below L rejected");
}

void theorem1(Corpus& c) {
    auto rep = theorem1_pipeline(range1(10));
    c.ok(rep.H.pairs.size() == 9 && rep.H1.pairs.size() == 9 && rep.H2.pairs.size() == 9,
         "[10]: all consecutive pairs survive every stage");
    QSet odd = qset({3, 5, 7, 9, 11, 13, 15, 17, 19});
    c.ok(rep.stages[1].restricted_set == odd, "[10]: square differences are the odd numbers");
    auto rep2 = theorem1_pipeline(qset({0, 1, 3, 6, 10}));
    c.ok(rep2.H2.pairs == rep2.H.pairs, "convex example: H'' = H");
    c.throws([&] { theorem1_pipeline(qset({1})); }, "singleton rejected");
}

void squeeze2_cmd(Corpus& c) {
    // equal gap-of-gaps: witness family is empty
    QSet y1 = qset({0, 10, 20, 30, 40, 50});
    QSet z1 = qset({1, 12, 23, 34, 45, 56});
    auto r1 = squeeze2(y1, z1, {1, 2}, GroupMode::Additive);
    c.ok(r1.Iprime == std::vector<std::size_t>({1, 2}) && r1.Gamma_prime == qset({1}) &&
             r1.report.claimed_floor == 0,
         "equal gaps give empty strict witness family");

    // strictly increasing gap-of-gaps
    std::vector<Rational> yv, zv;
    Rational gaps[8] = {Rational(1), Rational(2), Rational(4), Rational(8),
                        Rational(17, 2), Rational(9), Rational(19, 2), Rational(39, 4)};
    for (int i = 0; i < 8; ++i) {
        yv.emplace_back(10 * i);
        zv.push_back(Rational(10 * i) + gaps[i]);
    }
    auto r2 = squeeze2(QSet::of(yv), QSet::of(zv), {1, 2, 3}, GroupMode::Additive);
    c.ok(r2.report.claimed_floor == 9 && r2.report.witnesses.size() == 9,
         "n=8 family yields 9 witnesses");
    c.ok(r2.report.witnesses.subset_of(
             squeeze2_container(QSet::of(yv), QSet::of(zv), GroupMode::Additive)),
         "witnesses lie in 2Y+2Z-2Y-Z");

    auto r3 = squeeze2(qset({1, 100, 10000}), qset({2, 300, 80000}), {},
                       GroupMode::Multiplicative);
    c.ok(r3.Iprime.empty() && r3.report.claimed_floor == 0, "empty index set handled");
}

void main22(Corpus& c) {
    auto rep = main22_pipeline(range1(12));
    c.ok(rep.S == static_cast<std::int64_t>(rep.I3.size()), "S = |I3|");
    c.ok(rep.S <= rep.surface_count, "S bounded by surface count");
    c.throws([&] { main22_pipeline(range1(11)); }, "eleven elements rejected");
    c.throws([&] { main22_pipeline(qset({-1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})); },
             "non-positive element rejected");
}

void expander_cmd(Corpus& c) {
    QSet x12 = qset({1, 2});
    QSet result = expander_set(x12, Rational(1), Rational(2), Rational(1));
    // independent enumeration of the same quantity
    std::vector<Rational> base1{Rational(2), Rational(3)}, base2{Rational(3), Rational(5)};
    std::vector<Rational> naive;
    for (const auto& p1 : base1)
        for (const auto& p2 : base1)
            for (const auto& q1 : base2)
                for (const auto& q2 : base2)
                    for (const auto& r1 : base1)
                        for (const auto& r2 : base1)
                            for (const auto& r3 : base2)
                                naive.push_back(p1 * p2 * q1 * q2 / (r1 * r2 * r3));
    c.ok(result == QSet::of(naive), "ratio set matches 7-fold enumeration");
    c.ok(result.size() == 20, "ratio set size 20");
    c.ok(expander_set(qset({1}), Rational(1), Rational(1), Rational(1)) == qset({2}),
         "singleton X gives {2}");
    c.throws([&] { expander_set(qset({0, 1}), Rational(1), Rational(1), Rational(0)); },
             "lambda = 0 with 0 in X rejected");
}

void expander_scan_cmd(Corpus& c) {
    auto rows = expander_scan(Family::Ap, FamilyParams{}, 0, 3, 5, Rational(1), false);
    bool mono = rows.size() == 3;
    for (std::size_t i = 1; i < rows.size(); ++i) mono = mono && rows[i].size >= rows[i - 1].size;
    c.ok(mono, "ap scan sizes are nondecreasing");
    auto row2 = expander_scan(Family::Ap, FamilyParams{}, 0, 2, 2, Rational(1), false);
    c.ok(row2.size() == 1 && !row2[0].exponent_reading.empty(), "n=2 row present");
    auto trunc = expander_scan(Family::Ap, FamilyParams{}, 0, 3, 30, Rational(1), false, 4);
    c.ok(trunc.back().truncated, "budget overflow leaves a truncation marker");
}

void lemma_main(Corpus& c) {
    QSet a = qset({1, 2, 3});
    auto rep = lemma_main_check(a, PairGraph::consecutive(a));
    c.ok(rep.S == 2 && rep.C == qset({1}) && rep.D == qset({3, 5}) && rep.E == qset({7, 19}),
         "S=2 with C={1}, D={3,5}, E={7,19}");
    c.ok(rep.zero_count >= rep.S, "zero count dominates S");
    auto rep0 = lemma_main_check(a, PairGraph::of(a, a, {}));
    c.ok(rep0.S == 0 && rep0.zero_count == 0, "empty graph counts zero");
    c.throws([&] { lemma_main_check(a, PairGraph::of(a, a, {{1, 1}})); },
             "diagonal pair rejected");
}

const std::map<std::string, std::function<void(Corpus&)>>& registry() {
    static const std::map<std::string, std::function<void(Corpus&)>> r = {
        {"degen-test", degen_test},
        {"xn-check", xn_check},
        {"eliminate", eliminate},
        {"verify-param", verify_param},
        {"count-surface", count_surface},
        {"es-scan", es_scan_cmd},
        {"sumset", sumset},
        {"restricted", restricted},
        {"diffs", diffs},
        {"pigeonhole", pigeonhole},
        {"squeeze", squeeze_cmd},
        {"theorem1", theorem1},
        {"squeeze2", squeeze2_cmd},
        {"main22", main22},
        {"expander", expander_cmd},
        {"expander-scan", expander_scan_cmd},
        {"lemma-main", lemma_main},
    };
    return r;
}

} // namespace

std::vector<std::string> selftest(const std::string& command) {
    auto it = registry().find(command);
    CVX_REQUIRE(it != registry().end(), "no selftest for command '" + command + "'");
    Corpus c;
    it->second(c);
    return c.lines;
}

std::vector<std::string> selftest_commands() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

} // namespace cvx
