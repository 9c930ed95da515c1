#include "cvx/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "cvx/algebra.hpp"
#include "cvx/error.hpp"

namespace cvx {

SurfaceSpec SurfaceSpec::of(Polynomial F, Var x, Var y, Var z) {
    CVX_REQUIRE(!F.is_zero(), "surface polynomial must be nonzero");
    SurfaceSpec s{std::move(F), x, y, z};
    for (Var v : s.F.variables())
        CVX_REQUIRE(v == x || v == y || v == z,
                    "surface polynomial uses undesignated variable '" + var_name(v) +
                        "' (bind parameters first)");
    s.missing_role_warning = !s.F.uses(x) || !s.F.uses(y) || !s.F.uses(z);
    return s;
}

namespace {

Bracket es_bound(std::size_t na, std::size_t nb, std::size_t nc) {
    std::size_t s[3] = {na, nb, nc};
    std::sort(s, s + 3);
    const Rational eps(1, 2000000); // two half-brackets, total width < 1e-6
    Rational prod = Rational(static_cast<long>(s[0])) * Rational(static_cast<long>(s[1])) *
                    Rational(static_cast<long>(s[2]));
    Bracket first = power_bracket(prod, 4, 7, eps);
    Rational b(static_cast<long>(std::max<std::size_t>(s[1], 1)));
    // the sqrt bracket is scaled by |B|, so request width eps / |B|
    Bracket second = power_bracket(Rational(static_cast<long>(s[2])), 1, 2, eps / b);
    return {first.lo + b * second.lo, first.hi + b * second.hi};
}

/// Per-element power tables up to degree d, exact.
std::vector<std::vector<Rational>> pow_table(const QSet& S, std::uint32_t d) {
    std::vector<std::vector<Rational>> t(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        t[i].resize(d + 1);
        t[i][0] = Rational(1);
        for (std::uint32_t e = 1; e <= d; ++e) t[i][e] = t[i][e - 1] * S[i];
    }
    return t;
}

unsigned surface_thread_cap() {
    const char* env = std::getenv("CONVEXITY_LAB_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    return static_cast<unsigned>(std::min<long>(v, 64));
}

struct FlatTerm {
    std::uint32_t ex, ey, ez;
    Rational coeff;
};

std::vector<FlatTerm> flatten(const SurfaceSpec& S) {
    std::vector<FlatTerm> out;
    out.reserve(S.F.term_count());
    for (const auto& t : S.F.terms())
        out.push_back({t.mono.degree_in(S.x), t.mono.degree_in(S.y), t.mono.degree_in(S.z),
                       t.coeff});
    return out;
}

} // namespace

CountReport count_naive(const SurfaceSpec& S, const QSet& A, const QSet& B, const QSet& C) {
    const auto terms = flatten(S);
    const auto pa = pow_table(A, S.F.degree_in(S.x));
    const auto pb = pow_table(B, S.F.degree_in(S.y));
    const auto pc = pow_table(C, S.F.degree_in(S.z));
    CountReport rep;
    rep.method = "naive";
    // rows of the (a,b) grid are independent; the count is an associative
    // sum, so any partition gives the identical total
    auto count_rows = [&](std::size_t lo, std::size_t hi) {
        std::int64_t local = 0;
        std::vector<Rational> partial(terms.size());
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = 0; j < B.size(); ++j) {
                for (std::size_t t = 0; t < terms.size(); ++t)
                    partial[t] = terms[t].coeff * pa[i][terms[t].ex] * pb[j][terms[t].ey];
                for (std::size_t k = 0; k < C.size(); ++k) {
                    Rational v(0);
                    for (std::size_t t = 0; t < terms.size(); ++t)
                        v += partial[t] * pc[k][terms[t].ez];
                    if (v.is_zero()) ++local;
                }
            }
        }
        return local;
    };
    const unsigned threads =
        std::min<unsigned>(surface_thread_cap(), static_cast<unsigned>(A.size()));
    if (threads <= 1) {
        rep.count = count_rows(0, A.size());
    } else {
        std::vector<std::int64_t> partial_counts(threads, 0);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t lo = A.size() * t / threads;
            std::size_t hi = A.size() * (t + 1) / threads;
            pool.emplace_back([&, t, lo, hi] { partial_counts[t] = count_rows(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (std::int64_t c : partial_counts) rep.count += c;
    }
    rep.bound = es_bound(A.size(), B.size(), C.size());
    return rep;
}

CountReport count_root_based(const SurfaceSpec& S, const QSet& A, const QSet& B, const QSet& C) {
    CountReport rep;
    rep.method = "root_based";
    const std::uint32_t dz = S.F.degree_in(S.z);
    // coefficients of z^e as polynomials in x,y
    auto zcoeffs = S.F.coefficients_in(S.z);
    if (zcoeffs.empty()) zcoeffs.push_back(Polynomial{});
    for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = 0; j < B.size(); ++j) {
            std::map<Var, Rational> bind{{S.x, A[i]}, {S.y, B[j]}};
            std::vector<Rational> cs(zcoeffs.size());
            bool all_zero = true;
            for (std::size_t e = 0; e < zcoeffs.size(); ++e) {
                cs[e] = zcoeffs[e].eval_full(bind);
                if (!cs[e].is_zero()) all_zero = false;
            }
            if (all_zero) {
                rep.count += static_cast<std::int64_t>(C.size());
                rep.degenerate_fiber = true;
                continue;
            }
            std::uint32_t hits = 0;
            for (const auto& c : C) {
                // Horner
                Rational v = cs.back();
                for (std::size_t e = cs.size(); e-- > 1;) v = v * c + cs[e - 1];
                if (v.is_zero()) {
                    ++rep.count;
                    if (++hits == dz && dz > 0) break; // at most deg_z roots exist
                }
            }
        }
    }
    rep.bound = es_bound(A.size(), B.size(), C.size());
    return rep;
}

LemmaMainReport lemma_main_check(const QSet& A, const PairGraph& G,
                                 const std::vector<std::uint32_t>& powers) {
    CVX_REQUIRE(powers == std::vector<std::uint32_t>({1, 2, 3}),
                "only powers {1,2,3} have an eliminated surface here");
    CVX_REQUIRE(G.left == A && G.right == A, "G must be a pair graph over A x A");
    CVX_REQUIRE(!G.has_diagonal_pair(), "diagonal pair in G (all difference sets would be {0})");
    LemmaMainReport rep;
    std::vector<Rational> c, d, e;
    c.reserve(G.pairs.size());
    d.reserve(G.pairs.size());
    e.reserve(G.pairs.size());
    for (const auto& [i, j] : G.pairs) {
        const Rational& l = G.left[i];
        const Rational& r = G.right[j];
        c.push_back(r - l);
        d.push_back(r * r - l * l);
        e.push_back(r.pow(3) - l.pow(3));
    }
    rep.C = QSet::of(std::move(c));
    rep.D = QSet::of(std::move(d));
    rep.E = QSet::of(std::move(e));
    rep.S = static_cast<std::int64_t>(G.pairs.size());
    SurfaceSpec spec = SurfaceSpec::of(surface_F(), var("x"), var("y"), var("z"));
    rep.zero_count = count_naive(spec, rep.C, rep.D, rep.E).count;
    CVX_CHECK(rep.S <= rep.zero_count, "double count upper bound violated");
    rep.max_set_size = static_cast<std::int64_t>(
        std::max({rep.C.size(), rep.D.size(), rep.E.size()}));
    rep.g_exponent_bound = power_bracket(Rational(static_cast<long>(G.pairs.size())), 7, 12,
                                         Rational(1, 2000000));
    return rep;
}

std::vector<EsScanRow> es_scan(const SurfaceSpec& S, Family fam, const FamilyParams& params,
                               std::uint64_t seed, std::size_t n_min, std::size_t n_max,
                               EsScanMode mode) {
    CVX_REQUIRE(n_min >= 1 && n_min <= n_max, "bad scan range");
    std::vector<EsScanRow> rows;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        QSet base = family(fam, n, params, seed);
        EsScanRow row;
        row.n = n;
        if (mode == EsScanMode::Direct) {
            CountReport rep = count_naive(S, base, base, base);
            row.size_a = row.size_b = row.size_c = base.size();
            row.count = rep.count;
            row.comparator = rep.bound;
        } else {
            if (base.size() < 2) continue;
            LemmaMainReport lm = lemma_main_check(base, PairGraph::consecutive(base));
            CountReport rep = count_naive(S, lm.C, lm.D, lm.E);
            row.size_a = lm.C.size();
            row.size_b = lm.D.size();
            row.size_c = lm.E.size();
            row.count = rep.count;
            row.comparator = rep.bound;
        }
        row.log_ratio = log_ratio(static_cast<std::uint64_t>(row.count > 0 ? row.count : 0),
                                  static_cast<std::uint64_t>(n));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace cvx
