#include "funho/chaincore/complex.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace funho;

namespace {

using Q = Rationals;

SparseMatrix<Q> mat(const Q& q, Index rows, Index cols, std::vector<std::vector<long>> dense) {
    std::vector<Triplet<Q>> t;
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            if (dense[i][j]) t.push_back(Triplet<Q>{i, j, q.from_int(dense[i][j])});
    return SparseMatrix<Q>::from_triplets(q, rows, cols, std::move(t));
}

// A random complete complex: d_{n+1} has columns drawn from ker d_n.
ChainComplex<Q> random_complex(const Q& q, std::mt19937_64& rng, const std::vector<Index>& ranks) {
    std::vector<SparseMatrix<Q>> ds;
    std::uniform_int_distribution<int> coef(-2, 2);
    for (std::size_t n = 1; n < ranks.size(); ++n) {
        std::vector<SparseVector<Q>> basis;
        if (n == 1) {
            for (Index i = 0; i < ranks[0]; ++i) basis.push_back(unit_vector(q, i));
        } else {
            basis = rank_kernel_image(q, ds.back()).kernel;
        }
        std::vector<SparseVector<Q>> cols;
        for (Index j = 0; j < ranks[n]; ++j) {
            Accumulator<Q> acc(q, ranks[n - 1]);
            for (const auto& b : basis) acc.add_scaled(q.from_int(coef(rng)), b);
            cols.push_back(acc.take());
        }
        ds.push_back(SparseMatrix<Q>::from_columns(ranks[n - 1], std::move(cols)));
    }
    return ChainComplex<Q>(q, ranks, std::move(ds), true);
}

}  // namespace

TEST_CASE("chain complexes validate shapes and d^2") {
    Q q;
    CHECK_THROWS_AS(ChainComplex<Q>(q, {}, {}), Error);
    CHECK_THROWS_AS(ChainComplex<Q>(q, {1, 1}, {}), Error);
    CHECK_THROWS_AS(ChainComplex<Q>(q, {1, 1}, {mat(q, 2, 1, {{1}, {0}})}), Error);
    auto d1 = mat(q, 1, 1, {{1}});
    CHECK_THROWS_AS(ChainComplex<Q>(q, {1, 1, 1}, {d1, d1}), CompositionError);

    ChainComplex<Q> c(q, {1, 1, 1}, {d1, mat(q, 1, 1, {{0}})});
    CHECK(c.exact_top() == 1);
    CHECK(c.homology(0)->dim() == 0);
    CHECK(c.homology(1)->dim() == 0);
    CHECK_THROWS_AS(c.homology(2), Error);
    CHECK_THROWS_AS(c.d(3), Error);
}

TEST_CASE("Euler characteristic matches homology") {
    Q q;
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        std::uniform_int_distribution<int> r(0, 4);
        std::vector<Index> ranks;
        for (int n = 0; n < 5; ++n) ranks.push_back(static_cast<Index>(r(rng)));
        auto c = random_complex(q, rng, ranks);
        long chi_chain = 0, chi_h = 0;
        auto h = c.homology_dims(c.top());
        for (int n = 0; n <= c.top(); ++n) {
            long sign = n % 2 ? -1 : 1;
            chi_chain += sign * static_cast<long>(c.rank(n));
            chi_h += sign * static_cast<long>(h[static_cast<std::size_t>(n)]);
        }
        CHECK(chi_chain == chi_h);
        // rank-nullity against the dense oracle
        for (int n = 0; n <= c.top(); ++n) {
            long rk_out = n ? static_cast<long>(oracle::dense_rank_q(oracle::to_dense(c.d(n)))) : 0;
            long rk_in = n < c.top() ? static_cast<long>(oracle::dense_rank_q(oracle::to_dense(c.d(n + 1)))) : 0;
            CHECK(static_cast<long>(h[static_cast<std::size_t>(n)]) == static_cast<long>(c.rank(n)) - rk_out - rk_in);
        }
    }
}

TEST_CASE("single-column bicomplex totalizes to its column") {
    Q q;
    std::mt19937_64 rng(5);
    auto col = random_complex(q, rng, {2, 3, 3, 1});
    Bicomplex<Q> bc;
    bc.dim = [&](int p, int qq) { return p == 0 ? col.rank(qq) : Index{0}; };
    bc.vertical = [&](int, int qq) { return col.d(qq); };
    bc.horizontal = [&](int, int) -> SparseMatrix<Q> { throw Error("unused"); };
    auto tot = total_complex(q, bc, 3);
    for (int n = 1; n <= 3; ++n) CHECK(tot.complex.d(n) == col.d(n));
    CHECK(tot.complex.homology_dims(2) == col.homology_dims(2));
    auto v = unit_vector(q, 1);
    CHECK(tot.component(2, 0, tot.embed(2, 0, v)) == v);
}

TEST_CASE("two-column bicomplex with anticommuting squares") {
    Q q;
    // E(p,q) = k for p,q in {0,1}; v = 1, h = 1 on column 0 row 1 and -1 on column 1
    Bicomplex<Q> bc;
    bc.dim = [](int p, int qq) { return p <= 1 && qq <= 1 ? Index{1} : Index{0}; };
    bc.vertical = [&](int p, int) { return mat(q, 1, 1, {{p == 1 ? -1 : 1}}); };
    bc.horizontal = [&](int, int) { return mat(q, 1, 1, {{1}}); };
    auto tot = total_complex(q, bc, 2);
    CHECK(tot.complex.ranks() == std::vector<Index>{1, 2, 1});
    CHECK(tot.complex.homology_dims(1) == std::vector<Index>{0, 0});

    Bicomplex<Q> bad = bc;
    bad.vertical = [&](int, int) { return mat(q, 1, 1, {{1}}); };
    CHECK_THROWS_AS(total_complex(q, bad, 2), CompositionError);
}

TEST_CASE("quotient complexes") {
    Q q;
    std::mt19937_64 rng(8);
    auto c = random_complex(q, rng, {3, 4, 4, 2});
    std::vector<SubspacePresentation<Q>> zero;
    for (int n = 0; n <= c.top(); ++n) zero.emplace_back(q, c.rank(n), std::vector<SparseVector<Q>>{});
    auto qc = quotient_complex(c, zero);
    CHECK(qc.complex.homology_dims(3) == c.homology_dims(3));

    // quotient by everything in degrees >= 2 and the boundaries below
    std::vector<SubspacePresentation<Q>> spans;
    for (int n = 0; n <= c.top(); ++n) {
        std::vector<SparseVector<Q>> vs;
        if (n >= 2)
            for (Index i = 0; i < c.rank(n); ++i) vs.push_back(unit_vector(q, i));
        else if (n == 1)
            vs = c.d(2).columns();
        spans.emplace_back(q, c.rank(n), std::move(vs));
    }
    auto trunc = quotient_complex(c, spans);
    CHECK(trunc.complex.rank(2) == 0);
    CHECK(trunc.complex.homology(0)->dim() == c.homology(0)->dim());

    // a span that is not a subcomplex
    std::vector<SubspacePresentation<Q>> broken;
    broken.emplace_back(q, 1, std::vector<SparseVector<Q>>{});
    broken.emplace_back(q, 1, std::vector<SparseVector<Q>>{unit_vector(q, 0)});
    ChainComplex<Q> small(q, {1, 1}, {mat(q, 1, 1, {{1}})}, true);
    try {
        quotient_complex(small, broken);
        FAIL("expected NotSubcomplexError");
    } catch (const NotSubcomplexError<Q>& e) {
        CHECK(e.degree() == 1);
        CHECK(e.witness() == unit_vector(q, 0));
    }
}

TEST_CASE("mapping cones") {
    Q q;
    ChainComplex<Q> y(q, {1, 0}, {SparseMatrix<Q>(1, 0)}, true);
    auto iso = mapping_cone(mat(q, 1, 1, {{1}}), y);
    CHECK(iso.ranks() == std::vector<Index>{1, 1});
    CHECK(iso.homology_dims(1) == std::vector<Index>{0, 0});
    auto zero = mapping_cone(mat(q, 1, 1, {{0}}), y);
    CHECK(zero.homology_dims(1) == std::vector<Index>{1, 1});
    CHECK_THROWS_AS(mapping_cone(mat(q, 2, 1, {{1}, {0}}), y), Error);

    // long exact sequence: dim H_0(cone) = dim coker φ_* on H_0
    std::mt19937_64 rng(13);
    auto big = random_complex(q, rng, {3, 3, 2});
    auto phi = oracle::to_sparse(q, oracle::random_int_matrix(rng, 3, 2, 0.5));
    auto cone = mapping_cone(phi, big);
    auto h0 = big.homology(0);
    std::vector<SparseVector<Q>> imgs(phi.columns());
    auto induced = classify_images(*h0, imgs);
    CHECK(cone.homology(0)->dim() == h0->dim() - rank_kernel_image(q, induced).rank);
}

TEST_CASE("chain maps and induced maps") {
    Q q;
    std::mt19937_64 rng(3);
    auto c = random_complex(q, rng, {2, 3, 2});
    ChainMap<Q> id{0, 0, {}};
    for (int n = 0; n <= 2; ++n) id.components.push_back(SparseMatrix<Q>::identity(q, c.rank(n)));
    CHECK(chain_map_sign(c, c, id) == 1);
    CHECK_FALSE(chain_map_violation(c, c, id, 1).has_value());

    ChainMap<Q> alt = id;
    alt.components[1] = scaled(q, q.from_int(-1), alt.components[1]);
    CHECK(chain_map_sign(c, c, alt) == -1);

    for (int n = 0; n <= 1; ++n) {
        auto h = c.homology(n);
        CHECK(homology_map(q, id.at(n), *h, *h) == SparseMatrix<Q>::identity(q, h->dim()));
        CHECK(homology_map(q, SparseMatrix<Q>(c.rank(n), c.rank(n)), *h, *h).is_zero());
    }
    CHECK_THROWS_AS(id.at(3), Error);
}

TEST_CASE("theory names") {
    CHECK(parse_theory("HGammaC") == Theory::HGammaC);
    CHECK(parse_theory("hh") == Theory::HH);
    for (auto t : {Theory::HH, Theory::HC, Theory::HGamma, Theory::HGammaC}) CHECK(parse_theory(theory_name(t)) == t);
    CHECK_THROWS_AS(parse_theory("hx"), Error);
}

TEST_CASE("degree requirements") {
    auto hh = degree_requirements(Theory::HH, 2, 2, kDefaultAmbientCap);
    CHECK(hh.chain_top == 3);
    CHECK(hh.largest == 16);
    CHECK(degree_requirements(Theory::HC, 3, 2, kDefaultAmbientCap).columns == 3);
    CHECK(degree_requirements(Theory::HGamma, 2, 2, kDefaultAmbientCap).largest == 512);
    CHECK(degree_requirements(Theory::HGamma, 0, 3, kDefaultAmbientCap).largest == 27);
    CHECK(degree_requirements(Theory::HGamma, 3, 2, kDefaultAmbientCap).largest == 131072);
    CHECK_THROWS_AS(degree_requirements(Theory::HGamma, 5, 2, kDefaultAmbientCap), ResourceError);
    CHECK_THROWS_AS(degree_requirements(Theory::HH, -1, 2, kDefaultAmbientCap), Error);
    CHECK_THROWS_AS(degree_requirements(Theory::HGamma, 70, 2, kDefaultAmbientCap), ResourceError);
    for (auto t : {Theory::HH, Theory::HC, Theory::HGamma, Theory::HGammaC})
        for (int d = 1; d <= 4; ++d) {
            int m = max_feasible_degree(t, d, kDefaultAmbientCap);
            if (m >= 0) CHECK_NOTHROW(degree_requirements(t, m, d, kDefaultAmbientCap));
            if (m < 16) CHECK_THROWS_AS(degree_requirements(t, m + 1, d, kDefaultAmbientCap), ResourceError);
        }
}
