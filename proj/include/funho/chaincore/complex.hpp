#pragma once

// Truncated chain complexes and the constructions built from them.

#include "funho/exactlin/homology.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace funho {

/// C_0 <- C_1 <- ... <- C_top. d(n): C_n -> C_{n-1} for 1 <= n <= top.
/// Homology is exact for n < top; at n = top only if the complex is
/// declared complete (C_n = 0 beyond top).
template <class K>
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(const K& k, std::vector<Index> ranks, std::vector<SparseMatrix<K>> boundaries, bool complete = false)
        : k_(std::make_shared<K>(k)), ranks_(std::move(ranks)), d_(std::move(boundaries)), complete_(complete) {
        if (ranks_.empty()) throw Error("chain complex needs at least degree 0");
        if (d_.size() + 1 != ranks_.size()) throw Error("chain complex: expected one boundary per positive degree");
        for (std::size_t n = 1; n < ranks_.size(); ++n) {
            const auto& d = d_[n - 1];
            if (d.cols() != ranks_[n] || d.rows() != ranks_[n - 1])
                throw Error("chain complex: d_" + std::to_string(n) + " has shape " + std::to_string(d.rows()) + "x" +
                            std::to_string(d.cols()));
        }
        for (std::size_t n = 2; n < ranks_.size(); ++n)
            if (auto bad = first_nonzero_composite(k, d_[n - 2], d_[n - 1]))
                throw CompositionError("d_" + std::to_string(n - 1) + "·d_" + std::to_string(n) + " ≠ 0 at column " +
                                           std::to_string(*bad),
                                       *bad);
        cache_ = std::make_shared<Cache>();
    }

    const K& field() const { return *k_; }
    int top() const { return static_cast<int>(ranks_.size()) - 1; }
    bool complete() const { return complete_; }
    Index rank(int n) const { return n < 0 || n > top() ? 0 : ranks_[static_cast<std::size_t>(n)]; }
    const std::vector<Index>& ranks() const { return ranks_; }

    /// d_n; for n = 0 or n = top+1 of a complete complex, the zero map.
    SparseMatrix<K> d(int n) const {
        if (n >= 1 && n <= top()) return d_[static_cast<std::size_t>(n - 1)];
        if (n == 0) return SparseMatrix<K>(0, rank(0));
        if (n == top() + 1 && complete_) return SparseMatrix<K>(rank(top()), 0);
        throw Error("boundary d_" + std::to_string(n) + " is beyond the truncation");
    }

    /// Largest degree with exact homology.
    int exact_top() const { return complete_ ? top() : top() - 1; }

    std::shared_ptr<const HomologyResult<K>> homology(int n) const {
        if (n < 0 || n > exact_top())
            throw Error("homology in degree " + std::to_string(n) + " needs chains beyond the truncation");
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->homology.find(n);
        if (it != cache_->homology.end()) return it->second;
        auto h = std::make_shared<const HomologyResult<K>>(homology_at(*k_, d(n + 1), d(n)));
        return cache_->homology.emplace(n, h).first->second;
    }

    std::vector<Index> homology_dims(int upto) const {
        std::vector<Index> out;
        for (int n = 0; n <= upto; ++n) out.push_back(homology(n)->dim());
        return out;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<int, std::shared_ptr<const HomologyResult<K>>> homology;
    };
    std::shared_ptr<K> k_;
    std::vector<Index> ranks_;
    std::vector<SparseMatrix<K>> d_;
    bool complete_ = false;
    std::shared_ptr<Cache> cache_;
};

/// First-quadrant bicomplex with entries E(p,q), vertical v: (p,q) -> (p,q-1)
/// and horizontal h: (p,q) -> (p-1,q). Total differential is v + h; sign
/// conventions are the caller's and are validated on totalization.
template <class K>
struct Bicomplex {
    std::function<Index(int p, int q)> dim;
    std::function<SparseMatrix<K>(int p, int q)> vertical;
    std::function<SparseMatrix<K>(int p, int q)> horizontal;
};

/// Placement of E(p, n-p) inside Tot_n.
struct TotalBlock {
    int p;
    int q;
    Index offset;
    Index size;
};

template <class K>
struct TotalComplex {
    ChainComplex<K> complex;
    std::vector<std::vector<TotalBlock>> blocks;  // per degree, p ascending

    const TotalBlock* block(int n, int p) const {
        for (const auto& b : blocks[static_cast<std::size_t>(n)])
            if (b.p == p) return &b;
        return nullptr;
    }
    /// Restriction of a Tot_n vector to column p (in E(p, n-p) coordinates).
    SparseVector<K> component(int n, int p, const SparseVector<K>& v) const {
        SparseVector<K> out;
        const TotalBlock* b = block(n, p);
        if (!b) return out;
        for (const auto& e : v)
            if (e.index >= b->offset && e.index < b->offset + b->size)
                out.push_back(Entry<K>{e.index - b->offset, e.value});
        return out;
    }
    /// Embedding of an E(p, n-p) vector into Tot_n.
    SparseVector<K> embed(int n, int p, const SparseVector<K>& v) const {
        const TotalBlock* b = block(n, p);
        if (!b) throw Error("total complex has no column " + std::to_string(p) + " in degree " + std::to_string(n));
        SparseVector<K> out = v;
        for (auto& e : out) e.index += b->offset;
        return out;
    }
};

/// Tot_n = ⊕_{p} E(p, n-p) for n <= top. Throws naming the bidegree if the
/// total differential does not square to zero.
template <class K>
TotalComplex<K> total_complex(const K& k, const Bicomplex<K>& bc, int top) {
    TotalComplex<K> out;
    std::vector<Index> ranks;
    for (int n = 0; n <= top; ++n) {
        std::vector<TotalBlock> blocks;
        Index off = 0;
        for (int p = 0; p <= n; ++p) {
            Index s = bc.dim(p, n - p);
            if (s == 0) continue;
            blocks.push_back(TotalBlock{p, n - p, off, s});
            off += s;
        }
        out.blocks.push_back(std::move(blocks));
        ranks.push_back(off);
    }
    std::vector<SparseMatrix<K>> ds;
    for (int n = 1; n <= top; ++n) {
        std::vector<Triplet<K>> trips;
        for (const auto& src : out.blocks[static_cast<std::size_t>(n)]) {
            auto put = [&](const SparseMatrix<K>& m, int tp) {
                const TotalBlock* dst = out.block(n - 1, tp);
                if (!dst) {
                    if (!m.is_zero()) throw Error("total complex: nonzero map into an empty entry");
                    return;
                }
                for (auto t : m.triplets()) {
                    t.row += dst->offset;
                    t.col += src.offset;
                    trips.push_back(std::move(t));
                }
            };
            if (src.q > 0) put(bc.vertical(src.p, src.q), src.p);
            if (src.p > 0) put(bc.horizontal(src.p, src.q), src.p - 1);
        }
        ds.push_back(SparseMatrix<K>::from_triplets(k, ranks[static_cast<std::size_t>(n - 1)],
                                                    ranks[static_cast<std::size_t>(n)], std::move(trips)));
    }
    for (int n = 2; n <= top; ++n) {
        auto bad = first_nonzero_composite(k, ds[static_cast<std::size_t>(n - 2)], ds[static_cast<std::size_t>(n - 1)]);
        if (bad) {
            for (const auto& b : out.blocks[static_cast<std::size_t>(n)])
                if (*bad >= b.offset && *bad < b.offset + b.size)
                    throw CompositionError("total differential squares to a nonzero map at bidegree (" +
                                               std::to_string(b.p) + "," + std::to_string(b.q) + ")",
                                           *bad);
        }
    }
    out.complex = ChainComplex<K>(k, std::move(ranks), std::move(ds));
    return out;
}

/// Quotient of a complex by a subcomplex given as spanning sets per degree.
template <class K>
struct QuotientComplex {
    ChainComplex<K> complex;
    std::vector<QuotientPresentation<K>> presentations;

    SparseVector<K> project(int n, const SparseVector<K>& v) const {
        return presentations[static_cast<std::size_t>(n)].project(v);
    }
};

/// Raised when the spans do not form a subcomplex; carries a witness.
template <class K>
class NotSubcomplexError : public Error {
public:
    NotSubcomplexError(int degree, SparseVector<K> witness)
        : Error("boundary of span_" + std::to_string(degree) + " leaves span_" + std::to_string(degree - 1)),
          degree_(degree), witness_(std::move(witness)) {}
    int degree() const { return degree_; }
    const SparseVector<K>& witness() const { return witness_; }

private:
    int degree_;
    SparseVector<K> witness_;
};

/// Quotient of C_n = K^{ranks[n]} with boundaries d_1..d_top (d² need not
/// vanish upstairs) by spans forming a subcomplex.
template <class K>
QuotientComplex<K> quotient_complex(const K& k, const std::vector<Index>& ranks,
                                    const std::vector<SparseMatrix<K>>& boundaries,
                                    const std::vector<SubspacePresentation<K>>& spans, bool complete = false) {
    if (spans.size() != ranks.size() || boundaries.size() + 1 != ranks.size())
        throw Error("quotient_complex: one span per degree and one boundary per positive degree");
    QuotientComplex<K> out;
    std::vector<Index> qranks;
    for (std::size_t n = 0; n < ranks.size(); ++n) {
        out.presentations.push_back(quotient_presentation(k, ranks[n], spans[n]));
        qranks.push_back(out.presentations.back().dim());
    }
    std::vector<SparseMatrix<K>> ds;
    for (std::size_t n = 1; n < ranks.size(); ++n) {
        const auto& d = boundaries[n - 1];
        const auto& below = out.presentations[n - 1];
        for (const auto& v : spans[n].reduced_basis().vectors())
            if (!below.span_basis().contains(apply(k, d, v))) throw NotSubcomplexError<K>(static_cast<int>(n), v);
        const auto& here = out.presentations[n];
        std::vector<SparseVector<K>> cols;
        cols.reserve(here.dim());
        for (Index free : here.free_coordinates()) cols.push_back(below.project(d.column(free)));
        ds.push_back(SparseMatrix<K>::from_columns(below.dim(), std::move(cols)));
    }
    out.complex = ChainComplex<K>(k, std::move(qranks), std::move(ds), complete);
    return out;
}

template <class K>
QuotientComplex<K> quotient_complex(const ChainComplex<K>& c, const std::vector<SubspacePresentation<K>>& spans) {
    std::vector<SparseMatrix<K>> ds;
    for (int n = 1; n <= c.top(); ++n) ds.push_back(c.d(n));
    return quotient_complex(c.field(), c.ranks(), ds, spans, c.complete());
}

/// Cone of φ: X -> Y with X concentrated in degree 0. Cone_0 = Y_0,
/// Cone_1 = X_0 ⊕ Y_1 (X first), Cone_n = Y_n otherwise;
/// d(x, y) = d_Y y - φ x.
template <class K>
ChainComplex<K> mapping_cone(const SparseMatrix<K>& phi, const ChainComplex<K>& y) {
    const K& k = y.field();
    if (phi.rows() != y.rank(0)) throw Error("mapping_cone: φ lands in a space of the wrong dimension");
    if (y.top() < 1) throw Error("mapping_cone: target complex must reach degree 1");
    const Index x0 = phi.cols();
    std::vector<Index> ranks = y.ranks();
    ranks[1] += x0;
    std::vector<SparseMatrix<K>> ds;
    ds.push_back(hstack(scaled(k, k.neg(k.one()), phi), y.d(1)));
    if (y.top() >= 2) ds.push_back(embed_rows(y.d(2), ranks[1], x0));
    for (int n = 3; n <= y.top(); ++n) ds.push_back(y.d(n));
    return ChainComplex<K>(k, std::move(ranks), std::move(ds), y.complete());
}

/// φ_n: C_n -> D_{n+shift} for n = first .. first+components-1.
template <class K>
struct ChainMap {
    int shift = 0;
    int first = 0;
    std::vector<SparseMatrix<K>> components;

    int last() const { return first + static_cast<int>(components.size()) - 1; }
    const SparseMatrix<K>& at(int n) const {
        if (n < first || n > last()) throw Error("chain map has no component in degree " + std::to_string(n));
        return components[static_cast<std::size_t>(n - first)];
    }
};

/// The sign ε with φ_{n-1}·d^C_n = ε·d^D_{n+shift}·φ_n for every n where both
/// components exist, or nullopt if no single sign works.
template <class K>
std::optional<int> chain_map_sign(const ChainComplex<K>& c, const ChainComplex<K>& d, const ChainMap<K>& phi) {
    const K& k = c.field();
    bool plus = true, minus = true;
    for (int n = phi.first + 1; n <= phi.last(); ++n) {
        auto lhs = multiply(k, phi.at(n - 1), c.d(n));
        auto rhs = multiply(k, d.d(n + phi.shift), phi.at(n));
        plus = plus && lhs == rhs;
        minus = minus && lhs == scaled(k, k.neg(k.one()), rhs);
    }
    if (plus) return 1;
    if (minus) return -1;
    return std::nullopt;
}

/// φ_{n-1}·d^C_n = eps·d^D_{n+shift}·φ_n for every n where both components
/// exist; returns the first failing source degree.
template <class K>
std::optional<int> chain_map_violation(const ChainComplex<K>& c, const ChainComplex<K>& d, const ChainMap<K>& phi,
                                       int eps) {
    const K& k = c.field();
    for (int n = phi.first + 1; n <= phi.last(); ++n) {
        auto lhs = multiply(k, phi.at(n - 1), c.d(n));
        auto rhs = scaled(k, k.from_int(eps), multiply(k, d.d(n + phi.shift), phi.at(n)));
        if (!(lhs == rhs)) return n;
    }
    return std::nullopt;
}

/// Matrix of the induced map H_n(C) -> H_{n+shift}(D) in representative bases.
template <class K>
SparseMatrix<K> homology_map(const K& k, const SparseMatrix<K>& component, const HomologyResult<K>& source,
                             const HomologyResult<K>& target) {
    std::vector<SparseVector<K>> images;
    for (const auto& z : source.representatives()) images.push_back(apply(k, component, z));
    return classify_images(target, images);
}

enum class Theory { HH, HC, HGamma, HGammaC };

std::string theory_name(Theory t);
Theory parse_theory(std::string_view s);

/// What must be materialized for exact homology through degree n.
struct DegreeRequirements {
    int chain_top = 0;         // highest chain degree assembled
    int columns = 1;           // bicomplex columns (HC only)
    std::uint64_t largest = 0; // largest single chain space
};

/// algebra_dim is d; throws ResourceError when the largest space exceeds cap.
DegreeRequirements degree_requirements(Theory t, int n, int algebra_dim, std::uint64_t cap);

/// Largest degree n whose requirements fit under cap (-1 if none).
int max_feasible_degree(Theory t, int algebra_dim, std::uint64_t cap, int limit = 16);

inline constexpr std::uint64_t kDefaultAmbientCap = std::uint64_t{1} << 18;

}  // namespace funho
