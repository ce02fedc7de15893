#include "funho/exactlin/homology.hpp"
#include "funho/exactlin/triplet_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace funho;

namespace {

template <class K>
SparseMatrix<K> dense(const K& k, std::vector<std::vector<long>> rows) {
    return oracle::to_sparse(k, rows);
}

template <class K>
SparseMatrix<K> permuted(const K& k, const SparseMatrix<K>& m, std::mt19937_64& rng) {
    std::vector<Index> rp(m.rows()), cp(m.cols());
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::vector<Triplet<K>> t;
    for (auto& x : m.triplets()) t.push_back({rp[x.row], cp[x.col], x.value});
    return SparseMatrix<K>::from_triplets(k, m.rows(), m.cols(), std::move(t));
}

}  // namespace

TEST_CASE("rational scalars parse and print exactly") {
    Rationals q;
    CHECK(q.to_exact_string(q.parse("6/4")) == "3/2");
    CHECK(q.to_exact_string(q.parse("-8/4")) == "-2");
    CHECK_THROWS_AS(q.parse("1/0"), Error);
    CHECK_THROWS_AS(q.parse("abc"), Error);
}

TEST_CASE("prime field arithmetic") {
    CHECK_THROWS_AS(PrimeField(4), Error);
    PrimeField f7(7);
    CHECK(f7.to_exact_string(f7.parse("3/2")) == "5 mod 7");
    CHECK(f7.parse("4 mod 7") == 4);
    CHECK_THROWS_AS(f7.parse("4 mod 5"), Error);
    CHECK(f7.mul(f7.inv(3), 3) == 1);
    CHECK(f7.from_int(-1) == 6);
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(f7.mul(a, f7.inv(a)) == 1);
}

TEST_CASE("field descriptors") {
    CHECK(ScalarField::parse("q").name() == "Q");
    CHECK(ScalarField::parse("f2").name() == "F_2");
    CHECK(ScalarField::parse("F_3") == ScalarField::prime(3));
    CHECK_THROWS_AS(ScalarField::parse("f4"), Error);
    CHECK_THROWS_AS(ScalarField::parse("r"), Error);
}

TEST_CASE("sparse matrices reject malformed input") {
    Rationals q;
    CHECK_THROWS_AS(SparseMatrix<Rationals>::from_triplets(q, 2, 2, {{0, 0, 1}, {0, 0, 2}}), Error);
    CHECK_THROWS_AS(SparseMatrix<Rationals>::from_triplets(q, 2, 2, {{2, 0, 1}}), Error);
    auto m = SparseMatrix<Rationals>::from_triplets(q, 2, 2, {{0, 0, 0}, {1, 1, 3}});
    CHECK(m.nnz() == 1);
}

TEST_CASE("rank_kernel_image examples") {
    Rationals q;
    PrimeField f2(2);
    auto id = rank_kernel_image(q, SparseMatrix<Rationals>::identity(q, 3));
    CHECK(id.rank == 3);
    CHECK(id.kernel.empty());
    CHECK(id.image.size() == 3);

    auto ones = rank_kernel_image(f2, dense(f2, {{1, 1}, {1, 1}}));
    CHECK(ones.rank == 1);
    REQUIRE(ones.kernel.size() == 1);
    CHECK(ones.kernel[0] == SparseVector<PrimeField>{{0, 1}, {1, 1}});

    auto two = rank_kernel_image(f2, dense(f2, {{2}}));
    CHECK(two.rank == 0);
    REQUIRE(two.kernel.size() == 1);
    CHECK(two.kernel[0] == unit_vector(f2, 0));
}

TEST_CASE("kernel vectors are annihilated and pivoted") {
    Rationals q;
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = oracle::random_int_matrix(rng, 6, 9, 0.35);
        auto m = oracle::to_sparse(q, a);
        auto r = rank_kernel_image(q, m);
        CHECK(r.rank + r.kernel.size() == m.cols());
        auto basis = EchelonBasis<Rationals>::from_reduced(q, m.cols(), r.kernel, r.kernel_pivots);
        for (std::size_t i = 0; i < r.kernel.size(); ++i) {
            CHECK(apply(q, m, r.kernel[i]).empty());
            CHECK(value_at(q, r.kernel[i], r.kernel_pivots[i]) == 1);
            for (std::size_t j = 0; j < r.kernel.size(); ++j)
                if (j != i) CHECK(value_at(q, r.kernel[i], r.kernel_pivots[j]) == 0);
            CHECK(basis.contains(r.kernel[i]));
        }
    }
}

TEST_CASE("rank agrees with a dense oracle over Q and F_p") {
    Rationals q;
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        auto a = oracle::random_int_matrix(rng, rows, cols, 0.4);
        std::vector<std::vector<mpq_class>> aq(rows, std::vector<mpq_class>(cols));
        std::vector<std::vector<long long>> ap(rows, std::vector<long long>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                aq[r][c] = a[r][c];
                ap[r][c] = a[r][c];
            }
        CHECK(rank(q, oracle::to_sparse(q, a)) == oracle::dense_rank_q(aq));
        for (std::uint32_t p : {2u, 3u, 5u}) {
            PrimeField f(p);
            auto m = oracle::to_sparse(f, a);
            CHECK(rank(f, m) == oracle::dense_rank_p(ap, p));
            CHECK(rank_kernel_image(f, m).rank == oracle::dense_rank_p(ap, p));
        }
    }
}

TEST_CASE("rank is invariant under permutations and elimination order") {
    Rationals q;
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = oracle::to_sparse(q, oracle::random_int_matrix(rng, 8, 7, 0.3));
        Index r = rank(q, m);
        CHECK(rank(q, permuted(q, m, rng)) == r);
        // streaming insertion vs Markowitz batch elimination
        CHECK(rank_kernel_image(q, m).rank == r);
        CHECK(span_basis(q, m.rows(), m.columns()).rank() == r);
    }
}

TEST_CASE("echelon basis is reduced with increasing pivots") {
    PrimeField f5(5);
    std::mt19937_64 rng(5);
    auto m = oracle::to_sparse(f5, oracle::random_int_matrix(rng, 10, 12, 0.3));
    auto b = span_basis(f5, m.rows(), m.columns());
    auto piv = b.pivots();
    CHECK(std::is_sorted(piv.begin(), piv.end()));
    for (std::size_t i = 0; i < b.vectors().size(); ++i) {
        CHECK(b.vectors()[i].front().index == piv[i]);
        CHECK(b.vectors()[i].front().value == 1);
        for (std::size_t j = 0; j < piv.size(); ++j)
            if (j != i) CHECK(value_at(f5, b.vectors()[i], piv[j]) == 0);
    }
    for (const auto& c : m.columns()) CHECK(b.contains(c));
}

TEST_CASE("homology_at examples") {
    Rationals q;
    PrimeField f2(2);
    CHECK(homology_at(q, SparseMatrix<Rationals>(1, 0), SparseMatrix<Rationals>(0, 1)).dim() == 1);
    CHECK(homology_at(q, dense(q, {{2}}), SparseMatrix<Rationals>(0, 1)).dim() == 0);
    CHECK(homology_at(f2, dense(f2, {{2}}), SparseMatrix<PrimeField>(0, 1)).dim() == 1);
    CHECK_THROWS_AS(homology_at(q, dense(q, {{1}}), dense(q, {{1}})), CompositionError);
}

TEST_CASE("homology classify recognizes boundaries") {
    Rationals q;
    // k --(1,1)^T--> k^2 --[1,-1]--> k
    auto d2 = dense(q, {{1}, {1}});
    auto d1 = dense(q, {{1, -1}});
    auto h = homology_at(q, d2, d1);
    CHECK(h.dim() == 0);
    CHECK(h.classify(SparseVector<Rationals>{{0, 3}, {1, 3}}).has_value());
    CHECK_FALSE(h.classify(unit_vector(q, 0)).has_value());
}

TEST_CASE("quotient presentations") {
    Rationals q;
    PrimeField f2(2);
    SubspacePresentation<Rationals> s1(q, 2, {unit_vector(q, 0)});
    auto p1 = quotient_presentation(q, 2, s1);
    CHECK(p1.dim() == 1);
    CHECK(p1.project(unit_vector(q, 0)).empty());

    SubspacePresentation<Rationals> s2(q, 4, {unit_vector(q, 0), unit_vector(q, 2)});
    CHECK(quotient_presentation(q, 4, s2).dim() == 2);

    SubspacePresentation<PrimeField> s3(f2, 2, {SparseVector<PrimeField>{{0, 1}, {1, 1}}});
    auto p3 = quotient_presentation(f2, 2, s3);
    CHECK(p3.dim() == 1);
    CHECK(p3.project(unit_vector(f2, 0)) == p3.project(unit_vector(f2, 1)));
    CHECK_FALSE(p3.project(unit_vector(f2, 0)).empty());
}

TEST_CASE("projection after section is the identity and kills the span") {
    Rationals q;
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = oracle::to_sparse(q, oracle::random_int_matrix(rng, 7, 4, 0.4));
        SubspacePresentation<Rationals> s(q, 7, m.columns());
        auto p = quotient_presentation(q, 7, s);
        for (Index i = 0; i < p.dim(); ++i) CHECK(p.project(p.lift(unit_vector(q, i))) == unit_vector(q, i));
        for (const auto& c : m.columns()) CHECK(p.project(c).empty());
        CHECK(p.dim() + s.dim() == 7);
    }
}

TEST_CASE("triplet dumps round-trip") {
    Rationals q;
    auto m = SparseMatrix<Rationals>::from_triplets(q, 2, 3, {{0, 1, mpq_class(3, 2)}, {1, 2, -4}});
    std::istringstream is(to_triplet_string(q, m));
    CHECK(read_triplets(is, q) == m);
    std::istringstream wrong(to_triplet_string(q, m));
    CHECK_THROWS_AS(read_triplets(wrong, PrimeField(3)), Error);
}
