#pragma once

// Independent reference implementations used only by tests.

#include "funho/exactlin/sparse.hpp"

#include <random>

namespace oracle {

/// Rank by dense row reduction over Q (gmp directly, no library code).
inline std::size_t dense_rank_q(std::vector<std::vector<mpq_class>> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Rank by dense row reduction mod p.
inline std::size_t dense_rank_p(std::vector<std::vector<long long>> a, long long p) {
    auto inv = [p](long long x) {
        long long r = 1, e = p - 2;
        x %= p;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& x : row) x = ((x % p) + p) % p;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t q = rank;
        while (q < rows && a[q][c] == 0) ++q;
        if (q == rows) continue;
        std::swap(a[q], a[rank]);
        long long s = inv(a[rank][c]);
        for (auto& x : a[rank]) x = x * s % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            long long f = a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Random integer matrix with the given density of nonzeros in [-3, 3].
inline std::vector<std::vector<long>> random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                        double density) {
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<long> v(-3, 3);
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols, 0));
    for (auto& row : a)
        for (auto& x : row)
            if (u(rng) < density) x = v(rng);
    return a;
}

template <class K>
funho::SparseMatrix<K> to_sparse(const K& k, const std::vector<std::vector<long>>& a) {
    std::vector<funho::Triplet<K>> t;
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[r].size(); ++c)
            if (a[r][c] != 0)
                t.push_back({static_cast<funho::Index>(r), static_cast<funho::Index>(c), k.from_int(a[r][c])});
    return funho::SparseMatrix<K>::from_triplets(k, static_cast<funho::Index>(a.size()),
                                                  static_cast<funho::Index>(a.empty() ? 0 : a[0].size()), std::move(t));
}

inline std::vector<std::vector<mpq_class>> to_dense(const funho::SparseMatrix<funho::Rationals>& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (funho::Index j = 0; j < m.cols(); ++j)
        for (const auto& e : m.column(j)) a[e.index][j] = e.value;
    return a;
}

}  // namespace oracle
