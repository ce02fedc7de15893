#pragma once

// Exact Gaussian elimination.
//
// Two engines share one output type, the reduced row echelon basis of a
// subspace (which is unique, so every route yields identical bits):
//
//  * eliminate(): batch elimination in the Markowitz style. Vectors are
//    bucketed by leading index; buckets are processed in increasing index
//    order and the sparsest vector of a bucket becomes its pivot (ties go to
//    the lowest input position). Over Q the update is fraction-free and each
//    row is divided by its content afterwards. Optionally tracks, for every
//    vector, the combination of inputs producing it, which yields kernels.
//  * EchelonBasis::insert(): streaming insertion against a reduced basis.
//    Used for very wide spans where only the span itself is needed.

#include "funho/exactlin/sparse.hpp"

#include <map>
#include <numeric>
#include <optional>

namespace funho {

namespace detail {

/// Rescales v (and hist alongside it) so that v has coprime integer entries
/// and a positive leading entry.
inline void make_primitive(const Rationals&, SparseVector<Rationals>& v, SparseVector<Rationals>* hist) {
    if (v.empty()) return;
    mpz_class l = 1, g = 0;
    for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
    for (const auto& e : v) {
        mpz_class num = e.value.get_num() * (l / e.value.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    mpq_class s(l, g);
    s.canonicalize();
    if (sgn(v.front().value) < 0) s = -s;
    if (s == 1) return;
    for (auto& e : v) e.value *= s;
    if (hist)
        for (auto& e : *hist) e.value *= s;
}

/// Scales v (and hist) so the leading entry is one.
inline void make_primitive(const PrimeField& k, SparseVector<PrimeField>& v, SparseVector<PrimeField>* hist) {
    if (v.empty() || v.front().value == 1) return;
    auto s = k.inv(v.front().value);
    for (auto& e : v) e.value = k.mul(s, e.value);
    if (hist)
        for (auto& e : *hist) e.value = k.mul(s, e.value);
}

}  // namespace detail

/// Reduced row echelon basis of a subspace of K^dim: each vector has leading
/// coefficient one, the leading indices (pivots) are distinct, and every
/// vector vanishes at the pivots of the others. Vectors are kept sorted by
/// pivot.
template <class K>
class EchelonBasis {
public:
    EchelonBasis(const K& k, Index dim) : k_(k), dim_(dim), slot_(dim, kNone) {}

    Index dim() const { return dim_; }
    Index rank() const { return static_cast<Index>(vectors_.size()); }
    const std::vector<SparseVector<K>>& vectors() const { return vectors_; }

    std::vector<Index> pivots() const { return pivot_; }

    bool is_pivot(Index i) const { return slot_[i] != kNone; }

    /// Normal form of v modulo the span: the unique representative with zero
    /// entries at every pivot.
    SparseVector<K> reduce(const SparseVector<K>& v) const {
        if (vectors_.empty()) return v;
        bool hits = false;
        for (const auto& e : v)
            if (slot_[e.index] != kNone) {
                hits = true;
                break;
            }
        if (!hits) return v;
        SparseVector<K> out = v;
        for (const auto& e : v) {
            std::int64_t s = slot_[e.index];
            if (s == kNone) continue;
            out = axpy(k_, out, k_.neg(e.value), vectors_[s]);
        }
        return out;
    }

    bool contains(const SparseVector<K>& v) const { return reduce(v).empty(); }

    /// Coordinates of v (assumed in the span) w.r.t. vectors(): its entries at the pivots.
    SparseVector<K> coordinates(const SparseVector<K>& v) const {
        SparseVector<K> out;
        for (const auto& e : v)
            if (slot_[e.index] != kNone) out.push_back(Entry<K>{static_cast<Index>(slot_[e.index]), e.value});
        canonicalize(k_, out);
        return out;
    }

    /// Adds v to the span. Returns false if v was already in it.
    bool insert(const SparseVector<K>& v) {
        if (!v.empty() && v.back().index >= dim_) throw Error("vector exceeds ambient dimension");
        SparseVector<K> r = reduce(v);
        if (r.empty()) return false;
        detail::make_primitive(k_, r, nullptr);
        normalize_leading(r);
        Index p = r.front().index;
        for (auto& b : vectors_) {
            auto c = value_at(k_, b, p);
            if (!k_.is_zero(c)) b = axpy(k_, b, k_.neg(c), r);
        }
        auto pos = std::lower_bound(pivot_.begin(), pivot_.end(), p) - pivot_.begin();
        vectors_.insert(vectors_.begin() + pos, std::move(r));
        pivot_.insert(pivot_.begin() + pos, p);
        reindex();
        return true;
    }

    /// Builds from vectors already in reduced echelon form (as produced by eliminate()).
    static EchelonBasis from_reduced(const K& k, Index dim, std::vector<SparseVector<K>> vectors) {
        std::vector<Index> pivots;
        for (const auto& v : vectors) pivots.push_back(v.front().index);
        return from_reduced(k, dim, std::move(vectors), std::move(pivots));
    }

    /// Vectors with entry 1 at their pivot and 0 at every other pivot; the
    /// pivot need not be the leading entry. Sorted by pivot.
    static EchelonBasis from_reduced(const K& k, Index dim, std::vector<SparseVector<K>> vectors,
                                     std::vector<Index> pivots) {
        if (pivots.size() != vectors.size()) throw Error("internal: pivot count mismatch");
        std::vector<std::size_t> order(vectors.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
        EchelonBasis b(k, dim);
        for (auto i : order) {
            b.vectors_.push_back(std::move(vectors[i]));
            b.pivot_.push_back(pivots[i]);
        }
        b.reindex();
        return b;
    }

private:
    static constexpr std::int64_t kNone = -1;

    void normalize_leading(SparseVector<K>& r) const {
        const auto& lead = r.front().value;
        if (k_.equal(lead, k_.one())) return;
        auto s = k_.inv(lead);
        for (auto& e : r) e.value = k_.mul(s, e.value);
    }

    void reindex() {
        std::fill(slot_.begin(), slot_.end(), kNone);
        for (std::size_t i = 0; i < vectors_.size(); ++i) slot_[pivot_[i]] = static_cast<std::int64_t>(i);
    }

    K k_;
    Index dim_;
    std::vector<SparseVector<K>> vectors_;
    std::vector<Index> pivot_;
    std::vector<std::int64_t> slot_;
};

template <class K>
struct EliminationResult {
    EchelonBasis<K> basis;
    /// history[i]: combination of inputs equal to basis.vectors()[i] (if tracked).
    std::vector<SparseVector<K>> history;
    /// Combinations of inputs summing to zero; a basis of all relations (if tracked).
    std::vector<SparseVector<K>> relations;
};

/// Markowitz-ordered batch elimination of `vectors` (each in K^dim).
template <class K>
EliminationResult<K> eliminate(const K& k, Index dim, const std::vector<SparseVector<K>>& vectors, bool track) {
    struct Row {
        SparseVector<K> v;
        SparseVector<K> hist;
        Index origin;
    };
    std::map<Index, std::vector<Row>> buckets;
    std::vector<SparseVector<K>> relations;
    for (Index i = 0; i < vectors.size(); ++i) {
        Row r{vectors[i], track ? unit_vector(k, i) : SparseVector<K>{}, i};
        if (!r.v.empty() && r.v.back().index >= dim) throw Error("vector exceeds ambient dimension");
        if (r.v.empty()) {
            if (track) relations.push_back(std::move(r.hist));
            continue;
        }
        detail::make_primitive(k, r.v, track ? &r.hist : nullptr);
        Index lead = r.v.front().index;
        buckets[lead].push_back(std::move(r));
    }

    std::vector<Row> pivots;
    while (!buckets.empty()) {
        auto node = buckets.extract(buckets.begin());
        Index lead = node.key();
        auto& rows = node.mapped();
        auto best = std::min_element(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
            return a.v.size() != b.v.size() ? a.v.size() < b.v.size() : a.origin < b.origin;
        });
        Row pivot = std::move(*best);
        rows.erase(best);
        const auto& pl = pivot.v.front().value;
        for (auto& r : rows) {
            auto rl = r.v.front().value;
            // r <- pl*r - rl*pivot, fraction-free
            r.v = axpy(k, scaled(k, pl, r.v), k.neg(rl), pivot.v);
            if (track) r.hist = axpy(k, scaled(k, pl, r.hist), k.neg(rl), pivot.hist);
            if (r.v.empty()) {
                if (track) relations.push_back(std::move(r.hist));
                continue;
            }
            detail::make_primitive(k, r.v, track ? &r.hist : nullptr);
            Index nl = r.v.front().index;
            buckets[nl].push_back(std::move(r));
        }
        (void)lead;
        pivots.push_back(std::move(pivot));
    }

    // pivots are in increasing lead order; back-substitute to reduced form.
    for (auto& p : pivots) {
        auto s = k.inv(p.v.front().value);
        p.v = scaled(k, s, p.v);
        if (track) p.hist = scaled(k, s, p.hist);
    }
    std::vector<std::int64_t> slot(dim, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) slot[pivots[i].v.front().index] = static_cast<std::int64_t>(i);
    for (std::size_t ii = pivots.size(); ii-- > 0;) {
        auto& p = pivots[ii];
        // Clear entries at later pivots (already reduced) from p.
        SparseVector<K> snapshot = p.v;
        for (const auto& e : snapshot) {
            if (e.index == p.v.front().index) continue;
            std::int64_t s = slot[e.index];
            if (s < 0) continue;
            auto c = value_at(k, p.v, e.index);
            if (k.is_zero(c)) continue;
            p.v = axpy(k, p.v, k.neg(c), pivots[s].v);
            if (track) p.hist = axpy(k, p.hist, k.neg(c), pivots[s].hist);
        }
    }

    std::vector<SparseVector<K>> basis_vectors;
    std::vector<SparseVector<K>> history;
    basis_vectors.reserve(pivots.size());
    for (auto& p : pivots) {
        basis_vectors.push_back(std::move(p.v));
        if (track) history.push_back(std::move(p.hist));
    }
    return EliminationResult<K>{EchelonBasis<K>::from_reduced(k, dim, std::move(basis_vectors)), std::move(history),
                                std::move(relations)};
}

/// Reduced echelon basis of the span of `vectors`.
template <class K>
EchelonBasis<K> span_basis(const K& k, Index dim, const std::vector<SparseVector<K>>& vectors) {
    return std::move(eliminate(k, dim, vectors, false).basis);
}

template <class K>
struct RankKernelImage {
    Index rank;
    /// Reduced basis of ker M, vectors in K^cols; kernel[i] has entry 1 at
    /// its last index kernel_pivots[i] and 0 at every other pivot.
    std::vector<SparseVector<K>> kernel;
    std::vector<Index> kernel_pivots;
    /// Reduced echelon basis of the column space, vectors in K^rows.
    std::vector<SparseVector<K>> image;
};

template <class K>
RankKernelImage<K> rank_kernel_image(const K& k, const SparseMatrix<K>& m) {
    auto res = eliminate(k, m.rows(), m.columns(), true);
    // Relations pair each dependent column with earlier pivot columns, so in
    // reversed coordinates their leads are mostly distinct already.
    const Index n = m.cols();
    auto reverse = [n](SparseVector<K> v) {
        for (auto& e : v) e.index = n - 1 - e.index;
        std::reverse(v.begin(), v.end());
        return v;
    };
    std::vector<SparseVector<K>> flipped;
    flipped.reserve(res.relations.size());
    for (auto& r : res.relations) flipped.push_back(reverse(std::move(r)));
    auto basis = span_basis(k, n, flipped);
    if (basis.rank() + res.basis.rank() != n) throw Error("internal: rank-nullity violated");
    RankKernelImage<K> out{res.basis.rank(), {}, {}, res.basis.vectors()};
    for (const auto& v : basis.vectors()) {
        out.kernel_pivots.push_back(n - 1 - v.front().index);
        out.kernel.push_back(reverse(v));
    }
    std::reverse(out.kernel.begin(), out.kernel.end());
    std::reverse(out.kernel_pivots.begin(), out.kernel_pivots.end());
    return out;
}

/// Column space of M by streaming insertion; stops early once the span is full.
template <class K>
EchelonBasis<K> image_basis(const K& k, const SparseMatrix<K>& m) {
    EchelonBasis<K> b(k, m.rows());
    for (Index j = 0; j < m.cols() && b.rank() < m.rows(); ++j) b.insert(m.column(j));
    return b;
}

template <class K>
Index rank(const K& k, const SparseMatrix<K>& m) {
    return image_basis(k, m).rank();
}

/// A subspace of K^ambient given by spanning vectors, with its reduced basis.
template <class K>
class SubspacePresentation {
public:
    SubspacePresentation(const K& k, Index ambient, std::vector<SparseVector<K>> spanning)
        : ambient_(ambient), spanning_(std::move(spanning)), basis_(span_basis(k, ambient, spanning_)) {}

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return basis_.rank(); }
    const std::vector<SparseVector<K>>& spanning_vectors() const { return spanning_; }
    const EchelonBasis<K>& reduced_basis() const { return basis_; }
    bool contains(const SparseVector<K>& v) const { return basis_.contains(v); }

private:
    Index ambient_;
    std::vector<SparseVector<K>> spanning_;
    EchelonBasis<K> basis_;
};

/// K^ambient / span, presented by a projection and a section. Quotient
/// coordinates are the non-pivot coordinates of the span's reduced basis.
template <class K>
class QuotientPresentation {
public:
    QuotientPresentation(const K& k, const SubspacePresentation<K>& span)
        : k_(k), ambient_(span.ambient_dim()), basis_(span.reduced_basis()), position_(span.ambient_dim(), kNone) {
        for (Index i = 0; i < ambient_; ++i)
            if (!basis_.is_pivot(i)) {
                position_[i] = static_cast<std::int64_t>(free_.size());
                free_.push_back(i);
            }
    }

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return static_cast<Index>(free_.size()); }
    const EchelonBasis<K>& span_basis() const { return basis_; }
    const std::vector<Index>& free_coordinates() const { return free_; }

    /// Image of an ambient vector in quotient coordinates.
    SparseVector<K> project(const SparseVector<K>& v) const {
        SparseVector<K> r = basis_.reduce(v);
        for (auto& e : r) e.index = static_cast<Index>(position_[e.index]);
        return r;
    }

    /// Ambient lift of a quotient vector.
    SparseVector<K> lift(const SparseVector<K>& q) const {
        SparseVector<K> r = q;
        for (auto& e : r) e.index = free_[e.index];
        return r;
    }

    /// dim × ambient
    SparseMatrix<K> projection() const {
        std::vector<SparseVector<K>> cols(ambient_);
        for (Index i = 0; i < ambient_; ++i) cols[i] = project(unit_vector(k_, i));
        return SparseMatrix<K>::from_columns(dim(), std::move(cols));
    }

    /// ambient × dim
    SparseMatrix<K> section() const {
        std::vector<SparseVector<K>> cols(dim());
        for (Index j = 0; j < dim(); ++j) cols[j] = unit_vector(k_, free_[j]);
        return SparseMatrix<K>::from_columns(ambient_, std::move(cols));
    }

private:
    static constexpr std::int64_t kNone = -1;
    K k_;
    Index ambient_;
    EchelonBasis<K> basis_;
    std::vector<Index> free_;
    std::vector<std::int64_t> position_;
};

template <class K>
QuotientPresentation<K> quotient_presentation(const K& k, Index ambient, const SubspacePresentation<K>& spans) {
    if (spans.ambient_dim() != ambient)
        throw Error("quotient: span lives in dimension " + std::to_string(spans.ambient_dim()) + ", expected " +
                    std::to_string(ambient));
    return QuotientPresentation<K>(k, spans);
}

}  // namespace funho
