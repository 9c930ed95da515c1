#include "cvx/setops.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cvx/error.hpp"
#include "cvx/prng.hpp"

namespace cvx {

QSet QSet::of(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    QSet s;
    s.elems_ = std::move(values);
    return s;
}

bool QSet::contains(const Rational& v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool QSet::subset_of(const QSet& o) const {
    return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
}

QSet make_set(std::vector<Rational> values) { return QSet::of(std::move(values)); }

namespace {

Rational apply(SetOp op, const Rational& a, const Rational& b) {
    switch (op) {
    case SetOp::Sum: return a + b;
    case SetOp::Diff: return a - b;
    case SetOp::Prod: return a * b;
    case SetOp::Ratio: return a / b;
    }
    throw InternalError("unhandled set op");
}

} // namespace

QSet combine(SetOp op, const QSet& A, const QSet& B) {
    if (op == SetOp::Ratio)
        CVX_REQUIRE(!B.contains(Rational(0)), "ratio set with zero divisor element");
    std::vector<Rational> out;
    out.reserve(A.size() * B.size());
    for (const auto& a : A)
        for (const auto& b : B) out.push_back(apply(op, a, b));
    return QSet::of(std::move(out));
}

QSet combine_kfold(SetOp op, const QSet& A, unsigned k) {
    CVX_REQUIRE(k >= 1, "k-fold combine needs k >= 1");
    QSet acc = A;
    for (unsigned i = 1; i < k; ++i) acc = combine(op, acc, A);
    return acc;
}

PairGraph PairGraph::of(QSet left, QSet right,
                        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs) {
    for (const auto& [i, j] : pairs)
        CVX_REQUIRE(i < left.size() && j < right.size(), "pair index out of range");
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return PairGraph{std::move(left), std::move(right), std::move(pairs)};
}

PairGraph PairGraph::full(const QSet& A) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ps;
    ps.reserve(A.size() * A.size());
    for (std::uint32_t i = 0; i < A.size(); ++i)
        for (std::uint32_t j = 0; j < A.size(); ++j) ps.emplace_back(i, j);
    return PairGraph{A, A, std::move(ps)};
}

PairGraph PairGraph::consecutive(const QSet& A) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ps;
    for (std::uint32_t i = 0; i + 1 < A.size(); ++i) ps.emplace_back(i, i + 1);
    return PairGraph{A, A, std::move(ps)};
}

bool PairGraph::has_diagonal_pair() const {
    for (const auto& [i, j] : pairs)
        if (left[i] == right[j]) return true;
    return false;
}

QSet combine_restricted(SetOp op, const PairGraph& G) {
    std::vector<Rational> out;
    out.reserve(G.pairs.size());
    for (const auto& [i, j] : G.pairs) {
        const Rational& l = G.left[i];
        const Rational& r = G.right[j];
        switch (op) {
        case SetOp::Sum: out.push_back(l + r); break;
        case SetOp::Prod: out.push_back(l * r); break;
        case SetOp::Diff: out.push_back(r - l); break; // right-minus-left
        case SetOp::Ratio:
            CVX_REQUIRE(!l.is_zero(), "restricted ratio with zero element");
            out.push_back(r / l);
            break;
        }
    }
    return QSet::of(std::move(out));
}

QSet image_poly(const Polynomial& f, Var v, const QSet& A) {
    for (Var w : f.variables())
        CVX_REQUIRE(w == v, "image_poly requires a univariate polynomial");
    std::vector<Rational> out;
    out.reserve(A.size());
    for (const auto& a : A) out.push_back(f.eval_full({{v, a}}));
    return QSet::of(std::move(out));
}

void MultiplicityMap::add(const Rational& key, std::int64_t count) {
    CVX_REQUIRE(count >= 1, "multiplicity counts are positive");
    m_[key] += count;
}

std::int64_t MultiplicityMap::count(const Rational& key) const {
    auto it = m_.find(key);
    return it == m_.end() ? 0 : it->second;
}

std::int64_t MultiplicityMap::total() const {
    std::int64_t t = 0;
    for (const auto& [k, c] : m_) t += c;
    return t;
}

MultiplicityMap consecutive_differences(const QSet& A) {
    CVX_REQUIRE(A.size() >= 2, "need at least two elements for consecutive differences");
    MultiplicityMap m;
    for (std::size_t i = 0; i + 1 < A.size(); ++i) m.add(A[i + 1] - A[i]);
    return m;
}

DyadicLevel dyadic_pigeonhole(const MultiplicityMap& m) {
    CVX_REQUIRE(!m.empty(), "empty multiplicity map");
    // class index j: 2^(j-1) < count <= 2^j, with the count-1 class at j = 0
    std::map<int, std::pair<std::vector<Rational>, std::int64_t>> classes;
    for (const auto& [key, count] : m.entries()) {
        int j = count == 1 ? 0 : static_cast<int>(std::bit_width(static_cast<std::uint64_t>(count - 1)));
        auto& cls = classes[j];
        cls.first.push_back(key);
        cls.second += count;
    }
    int best_j = -1;
    std::int64_t best_mass = -1;
    for (const auto& [j, cls] : classes) {
        if (cls.second > best_mass) { // ties break to smaller j (smaller L)
            best_j = j;
            best_mass = cls.second;
        }
    }
    DyadicLevel lvl;
    lvl.level_set = QSet::of(classes[best_j].first);
    lvl.L = best_j == 0 ? 1 : (std::int64_t{1} << (best_j - 1));
    lvl.covered_mass = best_mass;

    const std::int64_t total = m.total();
    const std::int64_t bins =
        static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(total)));
    CVX_CHECK(lvl.covered_mass >= (total + bins - 1) / bins, "dyadic pigeonhole mass guarantee");
    return lvl;
}

std::pair<std::size_t, Rational> min_block_gap(const QSet& A, std::size_t span) {
    CVX_REQUIRE(span >= 1, "span must be positive");
    CVX_REQUIRE(A.size() >= span + 1, "set too small for span");
    std::size_t best = 0;
    Rational best_gap = A[span] - A[0];
    for (std::size_t i = 1; i + span < A.size(); ++i) {
        Rational gap = A[i + span] - A[i];
        if (gap < best_gap) {
            best = i;
            best_gap = gap;
        }
    }
    return {best + 1, best_gap}; // 1-based
}

Family family_from_name(const std::string& name) {
    if (name == "ap") return Family::Ap;
    if (name == "gp") return Family::Gp;
    if (name == "squares") return Family::Squares;
    if (name == "cubes") return Family::Cubes;
    if (name == "convex_perturbed") return Family::ConvexPerturbed;
    if (name == "random_rational") return Family::RandomRational;
    throw PreconditionError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
    case Family::Ap: return "ap";
    case Family::Gp: return "gp";
    case Family::Squares: return "squares";
    case Family::Cubes: return "cubes";
    case Family::ConvexPerturbed: return "convex_perturbed";
    case Family::RandomRational: return "random_rational";
    }
    throw InternalError("unhandled family");
}

QSet family(Family kind, std::size_t n, const FamilyParams& params, std::uint64_t seed) {
    CVX_REQUIRE(n >= 1, "family size must be >= 1");
    std::vector<Rational> out;
    out.reserve(n);
    switch (kind) {
    case Family::Ap: {
        CVX_REQUIRE(params.step.sign() > 0, "ap needs positive step");
        Rational v = params.start;
        for (std::size_t k = 0; k < n; ++k, v += params.step) out.push_back(v);
        break;
    }
    case Family::Gp: {
        CVX_REQUIRE(params.start.sign() > 0 && params.ratio > Rational(1),
                    "gp needs positive start and ratio > 1");
        Rational v = params.start;
        for (std::size_t k = 0; k < n; ++k, v *= params.ratio) out.push_back(v);
        break;
    }
    case Family::Squares:
        for (std::size_t k = 1; k <= n; ++k)
            out.push_back(Rational(static_cast<long>(k)) * Rational(static_cast<long>(k)));
        break;
    case Family::Cubes:
        for (std::size_t k = 1; k <= n; ++k) out.push_back(Rational(static_cast<long>(k)).pow(3));
        break;
    case Family::ConvexPerturbed: {
        // squares with a jittered gap sequence; gaps stay strictly increasing
        SplitMix64 rng(seed);
        Rational a(1);
        out.push_back(a);
        for (std::size_t k = 1; k < n; ++k) {
            Rational eps(static_cast<long>(rng.below(1u << 16)), 1L << 17); // [0, 1/2)
            a += Rational(static_cast<long>(2 * k + 1)) + eps;
            out.push_back(a);
        }
        break;
    }
    case Family::RandomRational: {
        SplitMix64 rng(seed);
        std::vector<Rational> vals;
        const std::int64_t mag = static_cast<std::int64_t>(4 * n);
        while (vals.size() < n) {
            Rational cand(rng.spread(mag), static_cast<long>(1 + rng.below(8)));
            if (std::find(vals.begin(), vals.end(), cand) == vals.end()) vals.push_back(cand);
        }
        out = std::move(vals);
        break;
    }
    }
    QSet s = QSet::of(std::move(out));
    CVX_CHECK(s.size() == n, "family produced duplicate elements");
    return s;
}

QSet read_set_text(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    std::vector<Rational> vals;
    if (first != std::string::npos && text[first] == '[') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        CVX_REQUIRE(!j.is_discarded() && j.is_array(), "malformed JSON set file");
        for (const auto& e : j) {
            CVX_REQUIRE(e.is_string(), "JSON set entries must be strings");
            vals.push_back(Rational::from_string(e.get<std::string>()));
        }
        return QSet::of(std::move(vals));
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) vals.push_back(Rational::from_string(tok));
    }
    return QSet::of(std::move(vals));
}

QSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    CVX_REQUIRE(in.good(), "cannot open set file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_set_text(ss.str());
}

std::string write_set_text(const QSet& s) {
    std::string out;
    for (const auto& v : s) {
        out += v.str();
        out += "\n";
    }
    return out;
}

} // namespace cvx
