#pragma once

// Sparse vectors and column-major sparse matrices over a field K.
//
// A SparseVector is a vector of (index, value) entries sorted by index with no
// zero values and no repeated indices. Every function that builds one
// restores that invariant before returning.

#include "funho/exactlin/field.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace funho {

using Index = std::uint32_t;

template <class K>
struct Entry {
    Index index;
    typename K::value_type value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

template <class K>
using SparseVector = std::vector<Entry<K>>;

template <class K>
using Dense = std::vector<typename K::value_type>;

/// Sorts, merges repeated indices and drops zeros.
template <class K>
void canonicalize(const K& k, SparseVector<K>& v) {
    std::sort(v.begin(), v.end(), [](const Entry<K>& a, const Entry<K>& b) { return a.index < b.index; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        Index idx = v[i].index;
        auto acc = v[i].value;
        std::size_t j = i + 1;
        for (; j < v.size() && v[j].index == idx; ++j) acc = k.add(acc, v[j].value);
        if (!k.is_zero(acc)) v[out++] = Entry<K>{idx, std::move(acc)};
        i = j;
    }
    v.resize(out);
}

template <class K>
SparseVector<K> unit_vector(const K& k, Index i) {
    return {Entry<K>{i, k.one()}};
}

/// Value at index i (zero if absent).
template <class K>
typename K::value_type value_at(const K& k, const SparseVector<K>& v, Index i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const Entry<K>& e, Index x) { return e.index < x; });
    return (it != v.end() && it->index == i) ? it->value : k.zero();
}

/// y + a·x
template <class K>
SparseVector<K> axpy(const K& k, const SparseVector<K>& y, const typename K::value_type& a, const SparseVector<K>& x) {
    SparseVector<K> out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].index < x[j].index)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].index < y[i].index) {
            out.push_back(Entry<K>{x[j].index, k.mul(a, x[j].value)});
            ++j;
        } else {
            auto s = k.add(y[i].value, k.mul(a, x[j].value));
            if (!k.is_zero(s)) out.push_back(Entry<K>{y[i].index, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

template <class K>
SparseVector<K> scaled(const K& k, const typename K::value_type& a, const SparseVector<K>& x) {
    if (k.is_zero(a)) return {};
    SparseVector<K> out;
    out.reserve(x.size());
    for (const auto& e : x) out.push_back(Entry<K>{e.index, k.mul(a, e.value)});
    return out;
}

template <class K>
SparseVector<K> add(const K& k, const SparseVector<K>& a, const SparseVector<K>& b) {
    return axpy(k, a, k.one(), b);
}

template <class K>
SparseVector<K> subtract(const K& k, const SparseVector<K>& a, const SparseVector<K>& b) {
    return axpy(k, a, k.neg(k.one()), b);
}

/// Dense scratch accumulator with a touched-index list, for summing many
/// sparse contributions into one vector.
template <class K>
class Accumulator {
public:
    Accumulator(const K& k, Index dim) : k_(k), values_(dim, k.zero()), flags_(dim, 0) {}

    void add(Index i, const typename K::value_type& v) {
        if (!flags_[i]) {
            flags_[i] = 1;
            touched_.push_back(i);
            values_[i] = v;
        } else {
            values_[i] = k_.add(values_[i], v);
        }
    }

    void add_scaled(const typename K::value_type& a, const SparseVector<K>& x) {
        for (const auto& e : x) add(e.index, k_.mul(a, e.value));
    }

    /// Extracts the accumulated vector and resets the scratch space.
    SparseVector<K> take() {
        std::sort(touched_.begin(), touched_.end());
        SparseVector<K> out;
        out.reserve(touched_.size());
        for (Index i : touched_) {
            if (!k_.is_zero(values_[i])) out.push_back(Entry<K>{i, values_[i]});
            values_[i] = k_.zero();
            flags_[i] = 0;
        }
        touched_.clear();
        return out;
    }

private:
    const K& k_;
    Dense<K> values_;
    std::vector<unsigned char> flags_;
    std::vector<Index> touched_;
};

template <class K>
struct Triplet {
    Index row;
    Index col;
    typename K::value_type value;
};

/// Immutable column-major sparse matrix.
template <class K>
class SparseMatrix {
public:
    SparseMatrix() = default;

    /// Zero matrix.
    SparseMatrix(Index rows, Index cols) : rows_(rows), columns_(cols) {}

    /// Columns must be canonical sparse vectors with indices below `rows`.
    static SparseMatrix from_columns(Index rows, std::vector<SparseVector<K>> columns) {
        SparseMatrix m;
        m.rows_ = rows;
        for (std::size_t j = 0; j < columns.size(); ++j) {
            const auto& c = columns[j];
            for (std::size_t t = 0; t < c.size(); ++t) {
                if (c[t].index >= rows)
                    throw Error("column " + std::to_string(j) + " has row index out of range");
                if (t > 0 && c[t].index <= c[t - 1].index)
                    throw Error("column " + std::to_string(j) + " is not sorted or has a duplicate row");
            }
        }
        m.columns_ = std::move(columns);
        return m;
    }

    /// Builds from (row, col, value) triplets; duplicates are rejected and
    /// zero values are dropped.
    static SparseMatrix from_triplets(const K& k, Index rows, Index cols, std::vector<Triplet<K>> entries) {
        std::vector<SparseVector<K>> columns(cols);
        for (auto& t : entries) {
            if (t.row >= rows || t.col >= cols) throw Error("triplet index out of range");
            if (!k.is_zero(t.value)) columns[t.col].push_back(Entry<K>{t.row, std::move(t.value)});
        }
        for (std::size_t j = 0; j < columns.size(); ++j) {
            auto& c = columns[j];
            std::sort(c.begin(), c.end(), [](const Entry<K>& a, const Entry<K>& b) { return a.index < b.index; });
            for (std::size_t t = 1; t < c.size(); ++t)
                if (c[t].index == c[t - 1].index)
                    throw Error("duplicate entry at (" + std::to_string(c[t].index) + ", " + std::to_string(j) + ")");
        }
        return from_columns(rows, std::move(columns));
    }

    static SparseMatrix identity(const K& k, Index n) {
        std::vector<SparseVector<K>> cols(n);
        for (Index i = 0; i < n; ++i) cols[i] = unit_vector(k, i);
        return from_columns(n, std::move(cols));
    }

    Index rows() const { return rows_; }
    Index cols() const { return static_cast<Index>(columns_.size()); }
    const SparseVector<K>& column(Index j) const { return columns_[j]; }
    const std::vector<SparseVector<K>>& columns() const { return columns_; }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    bool is_zero() const {
        return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
    }

    std::vector<Triplet<K>> triplets() const {
        std::vector<Triplet<K>> out;
        for (Index j = 0; j < cols(); ++j)
            for (const auto& e : columns_[j]) out.push_back(Triplet<K>{e.index, j, e.value});
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        return out;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    Index rows_ = 0;
    std::vector<SparseVector<K>> columns_;
};

/// M·v
template <class K>
SparseVector<K> apply(const K& k, const SparseMatrix<K>& m, const SparseVector<K>& v) {
    if (v.empty()) return {};
    if (v.back().index >= m.cols()) throw Error("vector length exceeds matrix columns");
    if (v.size() == 1) return scaled(k, v[0].value, m.column(v[0].index));
    Accumulator<K> acc(k, m.rows());
    for (const auto& e : v) acc.add_scaled(e.value, m.column(e.index));
    return acc.take();
}

/// A·B
template <class K>
SparseMatrix<K> multiply(const K& k, const SparseMatrix<K>& a, const SparseMatrix<K>& b) {
    if (a.cols() != b.rows())
        throw Error("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    std::vector<SparseVector<K>> cols(b.cols());
    Accumulator<K> acc(k, a.rows());
    for (Index j = 0; j < b.cols(); ++j) {
        for (const auto& e : b.column(j)) acc.add_scaled(e.value, a.column(e.index));
        cols[j] = acc.take();
    }
    return SparseMatrix<K>::from_columns(a.rows(), std::move(cols));
}

/// alpha·A + beta·B
template <class K>
SparseMatrix<K> combine(const K& k, const typename K::value_type& alpha, const SparseMatrix<K>& a,
                        const typename K::value_type& beta, const SparseMatrix<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum shape mismatch");
    std::vector<SparseVector<K>> cols(a.cols());
    for (Index j = 0; j < a.cols(); ++j) cols[j] = axpy(k, scaled(k, alpha, a.column(j)), beta, b.column(j));
    return SparseMatrix<K>::from_columns(a.rows(), std::move(cols));
}

/// Σ c_t·M_t over terms of equal shape.
template <class K>
SparseMatrix<K> linear_combination(const K& k, Index rows, Index cols,
                                   const std::vector<std::pair<typename K::value_type, const SparseMatrix<K>*>>& terms) {
    for (const auto& t : terms)
        if (t.second->rows() != rows || t.second->cols() != cols) throw Error("linear_combination shape mismatch");
    Accumulator<K> acc(k, rows);
    std::vector<SparseVector<K>> out(cols);
    for (Index j = 0; j < cols; ++j) {
        for (const auto& t : terms) acc.add_scaled(t.first, t.second->column(j));
        out[j] = acc.take();
    }
    return SparseMatrix<K>::from_columns(rows, std::move(out));
}

template <class K>
SparseMatrix<K> add(const K& k, const SparseMatrix<K>& a, const SparseMatrix<K>& b) {
    return combine(k, k.one(), a, k.one(), b);
}

template <class K>
SparseMatrix<K> subtract(const K& k, const SparseMatrix<K>& a, const SparseMatrix<K>& b) {
    return combine(k, k.one(), a, k.neg(k.one()), b);
}

template <class K>
SparseMatrix<K> scaled(const K& k, const typename K::value_type& a, const SparseMatrix<K>& m) {
    std::vector<SparseVector<K>> cols(m.cols());
    for (Index j = 0; j < m.cols(); ++j) cols[j] = scaled(k, a, m.column(j));
    return SparseMatrix<K>::from_columns(m.rows(), std::move(cols));
}

template <class K>
SparseMatrix<K> transpose(const SparseMatrix<K>& m) {
    std::vector<SparseVector<K>> cols(m.rows());
    for (Index j = 0; j < m.cols(); ++j)
        for (const auto& e : m.column(j)) cols[e.index].push_back(Entry<K>{j, e.value});
    return SparseMatrix<K>::from_columns(m.cols(), std::move(cols));
}

/// Columns given explicitly (e.g. a list of basis vectors) as a matrix.
template <class K>
SparseMatrix<K> matrix_of_columns(Index rows, const std::vector<SparseVector<K>>& vectors) {
    return SparseMatrix<K>::from_columns(rows, vectors);
}

/// [A | B]
template <class K>
SparseMatrix<K> hstack(const SparseMatrix<K>& a, const SparseMatrix<K>& b) {
    if (a.rows() != b.rows()) throw Error("hstack row mismatch");
    auto cols = a.columns();
    cols.insert(cols.end(), b.columns().begin(), b.columns().end());
    return SparseMatrix<K>::from_columns(a.rows(), std::move(cols));
}

/// Places `block` at row offset `row0` inside a matrix with `rows` rows.
template <class K>
SparseMatrix<K> embed_rows(const SparseMatrix<K>& block, Index rows, Index row0) {
    if (row0 + block.rows() > rows) throw Error("embed_rows out of range");
    std::vector<SparseVector<K>> cols(block.cols());
    for (Index j = 0; j < block.cols(); ++j) {
        cols[j] = block.column(j);
        for (auto& e : cols[j]) e.index += row0;
    }
    return SparseMatrix<K>::from_columns(rows, std::move(cols));
}

/// Sub-block rows [r0, r0+nr) × cols [c0, c0+nc).
template <class K>
SparseMatrix<K> block(const SparseMatrix<K>& m, Index r0, Index nr, Index c0, Index nc) {
    if (r0 + nr > m.rows() || c0 + nc > m.cols()) throw Error("block out of range");
    std::vector<SparseVector<K>> cols(nc);
    for (Index j = 0; j < nc; ++j)
        for (const auto& e : m.column(c0 + j))
            if (e.index >= r0 && e.index < r0 + nr) cols[j].push_back(Entry<K>{e.index - r0, e.value});
    return SparseMatrix<K>::from_columns(nr, std::move(cols));
}

}  // namespace funho
