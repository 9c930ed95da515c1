#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvx/numeric.hpp"
#include "cvx/setops.hpp"

namespace cvx {

enum class GroupMode { Additive, Multiplicative };

/// Explicit elements certifying a lower bound on a combination set.
struct WitnessReport {
    QSet witnesses;
    std::int64_t claimed_floor = 0;
    std::string container_description;
};

/// The gap-squeezing construction: for the j-th smallest d in Dprime, L
/// disjoint consecutive gaps of A of length d each receive the j witnesses
/// a_i + d_1, ..., a_i + d_j. All witnesses are distinct members of A+A-A
/// and exactly L*t(t+1)/2 of them are produced (t = |Dprime|).
/// Every d in Dprime must occur as a consecutive difference of A with
/// multiplicity >= L.
WitnessReport squeeze_witnesses(const QSet& A, const QSet& Dprime, std::int64_t L);

/// Brute-force container membership check (test/desk-scale helper).
bool witnesses_in_sumdiff(const WitnessReport& rep, const QSet& A);

/// One dyadic stage of the three-stage chain.
struct ChainStage {
    DyadicLevel level;
    QSet restricted_set;      ///< k-th power differences over the stage graph
    std::int64_t floor = 0;   ///< pigeonhole guarantee for the graph size
    std::int64_t mass = 0;    ///< actual graph size (covered mass)
};

/// Chained restriction H >= H' >= H'' with per-stage squeeze data.
struct ChainReport {
    PairGraph H, H1, H2;
    ChainStage stages[3];
    std::int64_t full_sizes[3] = {0, 0, 0}; ///< |A+A-A|, |A^2+A^2-A^2|, |A^3+A^3-A^3|
    std::int64_t final_max = 0;
    Bracket comparison; ///< |A|^(19/12), context only
};

ChainReport theorem1_pipeline(const QSet& A);

/// Two-fold squeeze on interleaved Y, Z with strictly increasing gaps.
struct Squeeze2Result {
    std::vector<std::size_t> Iprime; ///< 1-based indices, subset of the input I
    QSet Gamma_prime;                ///< gap-of-gap values over Iprime
    std::vector<Rational> gammas;    ///< gamma_j for j = 1..floor(n/2)-1
    WitnessReport report;
};

/// I contains 1-based indices within [floor(n/2) - 1]. In multiplicative
/// mode all elements must be positive and gaps are ratios.
Squeeze2Result squeeze2(const QSet& Y, const QSet& Z, const std::vector<std::size_t>& I,
                        GroupMode mode);

/// Brute-force container 2Y+2Z-2Y-Z (or its multiplicative analog).
QSet squeeze2_container(const QSet& Y, const QSet& Z, GroupMode mode);

/// The full multiplicative pipeline on a positive set X (|X| >= 12):
/// closest i+3 block, every-third-element shifts, three chained squeeze2
/// stages, and the surface count of G on the resulting triple product.
struct Main22Report {
    std::size_t chosen_index = 0;       ///< 1-based i of the minimizing block
    Rational block[4];                  ///< s_i .. s_{i+3}
    std::vector<std::size_t> I1, I2, I3;
    QSet exp_gamma, exp_delta, exp_epsilon;
    WitnessReport stage_reports[3];
    std::int64_t S = 0;                 ///< = |I3| by construction
    std::int64_t surface_count = 0;     ///< |Z(G) cap (e^Gamma x e^Delta x e^Eps)|
    int best_stage = 0;                 ///< 0,1,2: arg max of the three set sizes
    Rational pair_a, pair_aprime;       ///< multiplicative shifts of the best stage
};

Main22Report main22_pipeline(const QSet& X);

} // namespace cvx
