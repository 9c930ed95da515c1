#include "cvx/squeeze.hpp"

#include <algorithm>
#include <bit>

#include "cvx/algebra.hpp"
#include "cvx/error.hpp"
#include "cvx/surface.hpp"

namespace cvx {

namespace {

constexpr std::size_t kDeskScale = 24; // brute-force containment checks up to here

std::int64_t pigeonhole_floor(std::int64_t total) {
    if (total <= 0) return 0;
    const std::int64_t bins =
        static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(total)));
    return (total + bins - 1) / bins;
}

} // namespace

WitnessReport squeeze_witnesses(const QSet& A, const QSet& Dprime, std::int64_t L) {
    CVX_REQUIRE(L >= 1, "L must be positive");
    CVX_REQUIRE(A.size() >= 2, "need at least two elements");
    MultiplicityMap diffs = consecutive_differences(A);
    for (const auto& d : Dprime)
        CVX_REQUIRE(diffs.count(d) >= L,
                    "difference " + d.str() + " has multiplicity below L");

    const std::size_t t = Dprime.size();
    std::vector<Rational> wits;
    wits.reserve(static_cast<std::size_t>(L) * t * (t + 1) / 2);
    for (std::size_t j = 0; j < t; ++j) {
        // the first L gaps of length d_j, each holding witnesses a_i + d_k, k <= j
        std::int64_t used = 0;
        for (std::size_t i = 0; i + 1 < A.size() && used < L; ++i) {
            if (A[i + 1] - A[i] != Dprime[j]) continue;
            ++used;
            for (std::size_t k = 0; k <= j; ++k) wits.push_back(A[i] + Dprime[k]);
        }
        CVX_CHECK(used == L, "multiplicity precondition was checked");
    }
    WitnessReport rep;
    rep.witnesses = QSet::of(std::move(wits));
    rep.claimed_floor = L * static_cast<std::int64_t>(t) * static_cast<std::int64_t>(t + 1) / 2;
    rep.container_description = "A+A-A";
    // distinctness is a theorem of the construction: gaps are disjoint and
    // within a gap the d_k are distinct
    CVX_CHECK(static_cast<std::int64_t>(rep.witnesses.size()) == rep.claimed_floor,
              "squeeze witnesses collided");
    if (A.size() <= kDeskScale)
        CVX_CHECK(witnesses_in_sumdiff(rep, A), "witness outside A+A-A");
    return rep;
}

bool witnesses_in_sumdiff(const WitnessReport& rep, const QSet& A) {
    QSet container = combine(SetOp::Diff, combine(SetOp::Sum, A, A), A);
    return rep.witnesses.subset_of(container);
}

namespace {

PairGraph restrict_pairs(const PairGraph& G, const QSet& keep, unsigned power) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ps;
    for (const auto& [i, j] : G.pairs) {
        Rational d = G.right[j].pow(power) - G.left[i].pow(power);
        if (keep.contains(d)) ps.emplace_back(i, j);
    }
    return PairGraph{G.left, G.right, std::move(ps)};
}

MultiplicityMap power_diffs(const PairGraph& G, unsigned power) {
    MultiplicityMap m;
    for (const auto& [i, j] : G.pairs) m.add(G.right[j].pow(power) - G.left[i].pow(power));
    return m;
}

} // namespace

ChainReport theorem1_pipeline(const QSet& A) {
    CVX_REQUIRE(A.size() >= 2, "need at least two elements");
    const std::int64_t N = static_cast<std::int64_t>(A.size());
    ChainReport rep;

    // stage 1: consecutive gaps
    DyadicLevel lvl1 = dyadic_pigeonhole(consecutive_differences(A));
    PairGraph all_consecutive = PairGraph::consecutive(A);
    rep.H = restrict_pairs(all_consecutive, lvl1.level_set, 1);
    rep.stages[0] = {lvl1, combine_restricted(SetOp::Diff, rep.H), pigeonhole_floor(N - 1),
                     static_cast<std::int64_t>(rep.H.pairs.size())};

    // stage 2: square differences over H
    DyadicLevel lvl2 = dyadic_pigeonhole(power_diffs(rep.H, 2));
    rep.H1 = restrict_pairs(rep.H, lvl2.level_set, 2);
    rep.stages[1] = {lvl2, lvl2.level_set, pigeonhole_floor(rep.stages[0].mass),
                     static_cast<std::int64_t>(rep.H1.pairs.size())};

    // stage 3: cube differences over H'
    DyadicLevel lvl3 = dyadic_pigeonhole(power_diffs(rep.H1, 3));
    rep.H2 = restrict_pairs(rep.H1, lvl3.level_set, 3);
    rep.stages[2] = {lvl3, lvl3.level_set, pigeonhole_floor(rep.stages[1].mass),
                     static_cast<std::int64_t>(rep.H2.pairs.size())};

    for (int k = 0; k < 3; ++k)
        CVX_CHECK(rep.stages[k].mass >= rep.stages[k].floor, "pigeonhole floor violated");

    for (unsigned p = 1; p <= 3; ++p) {
        QSet powers = image_poly(Polynomial::variable(var("x")).pow(p), var("x"), A);
        rep.full_sizes[p - 1] = static_cast<std::int64_t>(
            combine(SetOp::Diff, combine(SetOp::Sum, powers, powers), powers).size());
    }
    rep.final_max = *std::max_element(rep.full_sizes, rep.full_sizes + 3);
    rep.comparison = power_bracket(Rational(N), 19, 12, Rational(1, 2000000));
    return rep;
}

namespace {

Rational group_gap(const Rational& hi, const Rational& lo, GroupMode mode) {
    return mode == GroupMode::Additive ? hi - lo : hi / lo;
}

Rational group_compose(const Rational& a, const Rational& b, GroupMode mode) {
    return mode == GroupMode::Additive ? a + b : a * b;
}

} // namespace

Squeeze2Result squeeze2(const QSet& Y, const QSet& Z, const std::vector<std::size_t>& I,
                        GroupMode mode) {
    const std::size_t n = Y.size();
    CVX_REQUIRE(n == Z.size(), "Y and Z must have equal size");
    CVX_REQUIRE(n >= 1, "empty input");
    if (mode == GroupMode::Multiplicative)
        CVX_REQUIRE(Y[0].sign() > 0 && Z[0].sign() > 0,
                    "multiplicative mode requires positive elements");
    for (std::size_t i = 0; i < n; ++i)
        CVX_REQUIRE(Y[i] < Z[i], "alternation violated at index " + std::to_string(i + 1));
    for (std::size_t i = 0; i + 1 < n; ++i)
        CVX_REQUIRE(Z[i] < Y[i + 1], "alternation violated at index " + std::to_string(i + 1));

    std::vector<Rational> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.push_back(group_gap(Z[i], Y[i], mode));
    for (std::size_t i = 0; i + 1 < n; ++i)
        CVX_REQUIRE(x[i] < x[i + 1], "gap monotonicity violated at index " + std::to_string(i + 1));

    const std::size_t m = n / 2 >= 1 ? n / 2 - 1 : 0;
    for (std::size_t j : I)
        CVX_REQUIRE(j >= 1 && j <= m, "index " + std::to_string(j) + " outside [floor(n/2)-1]");

    Squeeze2Result res;
    res.report.container_description =
        mode == GroupMode::Additive ? "2Y+2Z-2Y-Z" : "Y^(2)Z^(2)/(Y^(2)Z)";
    if (m == 0) {
        res.report.claimed_floor = 0;
        return res;
    }

    res.gammas.reserve(m);
    for (std::size_t j = 1; j <= m; ++j) res.gammas.push_back(group_gap(x[j], x[j - 1], mode));

    MultiplicityMap counts;
    for (const auto& g : res.gammas) counts.add(g);
    DyadicLevel lvl = dyadic_pigeonhole(counts);

    std::vector<Rational> gp;
    for (std::size_t j : I) {
        if (lvl.level_set.contains(res.gammas[j - 1])) {
            res.Iprime.push_back(j);
            gp.push_back(res.gammas[j - 1]);
        }
    }
    res.Gamma_prime = QSet::of(std::move(gp));

    std::vector<Rational> wits;
    for (std::size_t k = n / 2 + 1; k + 1 <= n; ++k) { // n/2 < k <= n-1, 1-based
        for (std::size_t j : res.Iprime) {
            for (std::size_t l : res.Iprime) {
                if (!(res.gammas[l - 1] < res.gammas[j - 1])) continue;
                Rational w =
                    group_compose(group_compose(Y[k - 1], x[j - 1], mode), res.gammas[l - 1], mode);
                CVX_CHECK(Y[k - 1] < w && w < Z[k - 1], "witness escaped its interval");
                wits.push_back(std::move(w));
            }
        }
    }
    res.report.witnesses = QSet::of(std::move(wits));
    res.report.claimed_floor = static_cast<std::int64_t>(res.report.witnesses.size());
    if (n <= 8) { // container has up to n^7 tuples; only sane at desk scale
        QSet container = squeeze2_container(Y, Z, mode);
        CVX_CHECK(res.report.witnesses.subset_of(container), "witness outside container");
    }
    return res;
}

QSet squeeze2_container(const QSet& Y, const QSet& Z, GroupMode mode) {
    if (mode == GroupMode::Additive) {
        QSet yy = combine(SetOp::Sum, Y, Y);
        QSet zz = combine(SetOp::Sum, Z, Z);
        QSet num = combine(SetOp::Sum, yy, zz);                  // 2Y+2Z
        QSet den = combine(SetOp::Sum, yy, Z);                   // 2Y+Z
        return combine(SetOp::Diff, num, den);                   // (2Y+2Z)-(2Y+Z)
    }
    QSet yy = combine(SetOp::Prod, Y, Y);
    QSet zz = combine(SetOp::Prod, Z, Z);
    QSet num = combine(SetOp::Prod, yy, zz);
    QSet den = combine(SetOp::Prod, yy, Z);
    return combine(SetOp::Ratio, num, den);
}

Main22Report main22_pipeline(const QSet& X) {
    const std::size_t n = X.size();
    CVX_REQUIRE(n >= 12, "need at least 12 elements");
    CVX_REQUIRE(X[0].sign() > 0, "elements must be positive");

    Main22Report rep;
    // i minimizing s_{i+3}/s_i: the min-gap block on the ln scale, exact
    std::size_t best_i = 0;
    Rational best_ratio = X[3] / X[0];
    for (std::size_t i = 1; i + 3 < n; ++i) {
        Rational r = X[i + 3] / X[i];
        if (r < best_ratio) {
            best_i = i;
            best_ratio = r;
        }
    }
    rep.chosen_index = best_i + 1;
    for (int k = 0; k < 4; ++k) rep.block[k] = X[best_i + k];

    const std::size_t m = n / 3;
    std::vector<Rational> t;
    t.reserve(m);
    for (std::size_t j = 1; j <= m; ++j) t.push_back(X[3 * j - 1]); // every third element

    auto shifted = [&](int k) {
        std::vector<Rational> v;
        v.reserve(m);
        for (const auto& tj : t) v.push_back(rep.block[k] * tj + Rational(1));
        return QSet::of(std::move(v));
    };
    QSet rows[4] = {shifted(0), shifted(1), shifted(2), shifted(3)};
    for (int k = 0; k < 4; ++k)
        CVX_CHECK(rows[k].size() == m, "shifted row collided"); // strictly increasing in j

    std::vector<std::size_t> I0;
    for (std::size_t j = 1; j + 1 <= n / 6; ++j) I0.push_back(j); // [floor(n/6) - 1]
    CVX_REQUIRE(!I0.empty(), "need at least 12 elements");

    Squeeze2Result stages[3];
    const std::vector<std::size_t>* current = &I0;
    for (int k = 0; k < 3; ++k) {
        stages[k] = squeeze2(rows[k], rows[k + 1], *current, GroupMode::Multiplicative);
        current = &stages[k].Iprime;
        rep.stage_reports[k] = stages[k].report;
    }
    rep.I1 = stages[0].Iprime;
    rep.I2 = stages[1].Iprime;
    rep.I3 = stages[2].Iprime;

    auto gather = [&](const Squeeze2Result& st) {
        std::vector<Rational> vals;
        for (std::size_t j : rep.I3) {
            const Rational& g = st.gammas[j - 1];
            CVX_CHECK(g > Rational(1), "gap-of-gap hit the group identity");
            vals.push_back(g);
        }
        return QSet::of(std::move(vals));
    };
    rep.exp_gamma = gather(stages[0]);
    rep.exp_delta = gather(stages[1]);
    rep.exp_epsilon = gather(stages[2]);

    rep.S = static_cast<std::int64_t>(rep.I3.size());

    Polynomial G = surface_G_at(rep.block[0], rep.block[1], rep.block[2], rep.block[3]);
    SurfaceSpec spec = SurfaceSpec::of(G, var("x"), var("y"), var("z"));
    rep.surface_count = count_naive(spec, rep.exp_gamma, rep.exp_delta, rep.exp_epsilon).count;
    CVX_CHECK(rep.S <= rep.surface_count, "double count upper bound violated");

    std::size_t sizes[3] = {rep.exp_gamma.size(), rep.exp_delta.size(), rep.exp_epsilon.size()};
    rep.best_stage = 0;
    for (int k = 1; k < 3; ++k)
        if (sizes[k] > sizes[rep.best_stage]) rep.best_stage = k;
    rep.pair_a = rep.block[rep.best_stage];
    rep.pair_aprime = rep.block[rep.best_stage + 1];
    return rep;
}

} // namespace cvx
