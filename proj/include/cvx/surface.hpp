#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvx/numeric.hpp"
#include "cvx/polynomial.hpp"
#include "cvx/setops.hpp"

namespace cvx {

/// A surface Z(F) with designated coordinate roles. F must be nonzero and
/// use no variables beyond the three roles (bind parameters first).
struct SurfaceSpec {
    Polynomial F;
    Var x, y, z;
    bool missing_role_warning = false; ///< some designated variable is absent

    static SurfaceSpec of(Polynomial F, Var x, Var y, Var z);
};

struct CountReport {
    std::int64_t count = 0;
    std::string method;            ///< "naive" | "root_based"
    Bracket bound;                 ///< (|A||B||C|)^(4/7) + |B||C|^(1/2), sizes sorted
    bool degenerate_fiber = false; ///< some F(a,b,.) vanished identically
};

/// Exact |Z(F) cap (A x B x C)| by full enumeration.
CountReport count_naive(const SurfaceSpec& S, const QSet& A, const QSet& B, const QSet& C);

/// Same quantity; per (a,b) the z-specialization is scanned with early
/// termination once deg_z many roots are found. An identically vanishing
/// specialization contributes |C| (both methods agree on this by design).
CountReport count_root_based(const SurfaceSpec& S, const QSet& A, const QSet& B, const QSet& C);

struct LemmaMainReport {
    QSet C, D, E;
    std::int64_t S = 0;          ///< |G.pairs|, the direct solution count
    std::int64_t zero_count = 0; ///< |Z(F) cap C x D x E| for F = 4xz - 3y^2 - x^4
    std::int64_t max_set_size = 0;
    Bracket g_exponent_bound;    ///< |G|^(7/12) bracket, context only
};

/// Re-proves the double-count instance-wise: S = |G| and S <= zero count.
/// G may not contain diagonal pairs.
LemmaMainReport lemma_main_check(const QSet& A, const PairGraph& G,
                                 const std::vector<std::uint32_t>& powers = {1, 2, 3});

enum class EsScanMode {
    Direct, ///< A = B = C = family(n)
    Cde     ///< C, D, E derived from consecutive pairs of family(n)
};

struct EsScanRow {
    std::size_t n = 0;
    std::size_t size_a = 0, size_b = 0, size_c = 0;
    std::int64_t count = 0;
    Bracket comparator;
    std::string log_ratio; ///< log(count)/log(n), 6 places, display only
};

std::vector<EsScanRow> es_scan(const SurfaceSpec& S, Family fam, const FamilyParams& params,
                               std::uint64_t seed, std::size_t n_min, std::size_t n_max,
                               EsScanMode mode = EsScanMode::Direct);

} // namespace cvx
