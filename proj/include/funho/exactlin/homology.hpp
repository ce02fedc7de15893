#pragma once

#include "funho/exactlin/echelon.hpp"

namespace funho {

/// Homology of C' --d_in--> C --d_out--> C'' at the middle term.
///
/// Representatives are cycles reduced modulo the boundaries and brought into
/// reduced echelon form, so they are canonical for a given pair of maps.
template <class K>
class HomologyResult {
public:
    HomologyResult(const K& k, Index ambient, EchelonBasis<K> boundaries, EchelonBasis<K> classes)
        : k_(k), ambient_(ambient), boundaries_(std::move(boundaries)), classes_(std::move(classes)) {}

    const K& field() const { return k_; }
    Index dim() const { return classes_.rank(); }
    Index ambient_dim() const { return ambient_; }
    const std::vector<SparseVector<K>>& representatives() const { return classes_.vectors(); }
    const EchelonBasis<K>& boundaries() const { return boundaries_; }

    /// Coordinates of the class of the cycle z in the representative basis,
    /// or nullopt when z is not a cycle up to boundaries in the span of the
    /// representatives (i.e. not a cycle at all).
    std::optional<SparseVector<K>> classify(const SparseVector<K>& z) const {
        SparseVector<K> r = boundaries_.reduce(z);
        if (!classes_.reduce(r).empty()) return std::nullopt;
        return classes_.coordinates(r);
    }

    bool is_boundary(const SparseVector<K>& z) const { return boundaries_.contains(z); }

private:
    K k_;
    Index ambient_;
    EchelonBasis<K> boundaries_;
    EchelonBasis<K> classes_;
};

/// Raised by homology_at when d_out·d_in ≠ 0.
class CompositionError : public Error {
public:
    CompositionError(const std::string& what, Index column) : Error(what), column_(column) {}
    Index column() const { return column_; }

private:
    Index column_;
};

/// Checks d_out·d_in = 0; returns the first violating column of d_in, if any.
template <class K>
std::optional<Index> first_nonzero_composite(const K& k, const SparseMatrix<K>& d_out, const SparseMatrix<K>& d_in) {
    for (Index j = 0; j < d_in.cols(); ++j)
        if (!apply(k, d_out, d_in.column(j)).empty()) return j;
    return std::nullopt;
}

template <class K>
HomologyResult<K> homology_at(const K& k, const SparseMatrix<K>& d_in, const SparseMatrix<K>& d_out) {
    if (d_out.cols() != d_in.rows())
        throw Error("homology_at: d_out has " + std::to_string(d_out.cols()) + " columns but d_in has " +
                    std::to_string(d_in.rows()) + " rows");
    if (auto bad = first_nonzero_composite(k, d_out, d_in))
        throw CompositionError("homology_at: d_out·d_in ≠ 0 at column " + std::to_string(*bad), *bad);
    Index n = d_in.rows();
    auto boundaries = image_basis(k, d_in);
    auto rki = rank_kernel_image(k, d_out);
    EchelonBasis<K> classes(k, n);
    for (const auto& z : rki.kernel) {
        auto r = boundaries.reduce(z);
        if (!r.empty()) classes.insert(r);
    }
    Index expected = static_cast<Index>(rki.kernel.size()) - boundaries.rank();
    if (classes.rank() != expected) throw Error("internal: homology dimension mismatch");
    return HomologyResult<K>(k, n, std::move(boundaries), std::move(classes));
}

/// Matrix (target dim × source reps) of a map on homology given the images
/// of the source representatives as target-space vectors. Throws if an image
/// is not a cycle.
template <class K>
SparseMatrix<K> classify_images(const HomologyResult<K>& target, const std::vector<SparseVector<K>>& images) {
    std::vector<SparseVector<K>> cols;
    cols.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto c = target.classify(images[i]);
        if (!c) throw Error("map on homology is not well defined: image of representative " + std::to_string(i) +
                            " is not a cycle");
        cols.push_back(std::move(*c));
    }
    return SparseMatrix<K>::from_columns(target.dim(), std::move(cols));
}

}  // namespace funho
