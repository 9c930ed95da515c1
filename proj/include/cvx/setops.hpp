#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cvx/polynomial.hpp"
#include "cvx/rational.hpp"

namespace cvx {

/// Finite set of exact rationals, kept strictly increasing.
class QSet {
public:
    QSet() = default;
    /// Sorts and deduplicates.
    static QSet of(std::vector<Rational> values);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    /// 0-based access into the sorted order.
    const Rational& operator[](std::size_t i) const { return elems_[i]; }
    bool contains(const Rational& v) const;
    const std::vector<Rational>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    bool operator==(const QSet& o) const { return elems_ == o.elems_; }
    bool subset_of(const QSet& o) const;

private:
    std::vector<Rational> elems_;
};

enum class SetOp { Sum, Diff, Prod, Ratio };

QSet make_set(std::vector<Rational> values);

/// All pairwise results a op b; Ratio requires 0 not in B.
QSet combine(SetOp op, const QSet& A, const QSet& B);

/// k-fold iterated combine of A with itself (k >= 1), e.g. the k-fold
/// product set for SetOp::Prod.
QSet combine_kfold(SetOp op, const QSet& A, unsigned k);

/// Ordered index pairs into two ground sets; set semantics.
struct PairGraph {
    QSet left, right;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs; // sorted, unique

    static PairGraph of(QSet left, QSet right,
                        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);
    static PairGraph full(const QSet& A);
    static PairGraph consecutive(const QSet& A);
    bool has_diagonal_pair() const;
};

/// Restricted combination over the pairs of G. Orientation for the
/// non-commutative ops is right-minus-left (resp. right/left), matching
/// consecutive-pair usage where pairs are (smaller, larger).
QSet combine_restricted(SetOp op, const PairGraph& G);

/// {f(a) : a in A} for univariate f in variable v.
QSet image_poly(const Polynomial& f, Var v, const QSet& A);

/// Multiset of values with positive counts.
class MultiplicityMap {
public:
    void add(const Rational& key, std::int64_t count = 1);
    std::int64_t count(const Rational& key) const;
    std::int64_t total() const;
    bool empty() const { return m_.empty(); }
    const std::map<Rational, std::int64_t>& entries() const { return m_; }

private:
    std::map<Rational, std::int64_t> m_;
};

/// Counts of consecutive gaps a_{i+1} - a_i; total mass is |A| - 1.
MultiplicityMap consecutive_differences(const QSet& A);

/// Heaviest dyadic multiplicity class.
struct DyadicLevel {
    QSet level_set;            ///< keys with L < count <= 2L (L <= count <= 2L for L = 1)
    std::int64_t L = 1;
    std::int64_t covered_mass = 0;
};

/// Splits keys into classes 2^(j-1) < count <= 2^j and returns the class of
/// maximal mass; ties break toward smaller L. Guarantees
/// covered_mass >= ceil(total / (floor(log2(total)) + 1)).
DyadicLevel dyadic_pigeonhole(const MultiplicityMap& m);

/// Smallest a_{i+span} - a_i; returns (1-based index, gap), ties to smallest i.
std::pair<std::size_t, Rational> min_block_gap(const QSet& A, std::size_t span);

enum class Family { Ap, Gp, Squares, Cubes, ConvexPerturbed, RandomRational };

struct FamilyParams {
    Rational start = Rational(1);
    Rational step = Rational(1);  // Ap
    Rational ratio = Rational(2); // Gp
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

/// Deterministic n-element families; |result| == n exactly.
QSet family(Family kind, std::size_t n, const FamilyParams& params, std::uint64_t seed);

/// Set-file I/O: one rational per line ('#' comments), or a JSON array of
/// strings when the first non-space byte is '['.
QSet read_set_text(const std::string& text);
QSet read_set_file(const std::string& path);
std::string write_set_text(const QSet& s);

} // namespace cvx
