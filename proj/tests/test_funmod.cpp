#include "funho/funmod/functor_module.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace funho;
using testing_helpers::random_map;

namespace {

template <class K>
void check_functorial(const FunctorModule<K>& m, int max_size, int pairs, std::uint64_t seed) {
    const K& k = m.field();
    const bool pointed = m.site() == Site::Gamma;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(pointed ? 1 : 0, max_size);
    for (int t = 0; t < pairs; ++t) {
        FinObj a{size(rng), pointed}, b{size(rng), pointed}, c{size(rng), pointed};
        SetMap f = random_map(rng, a, b), g = random_map(rng, b, c);
        CHECK(*m.matrix(compose(g, f)) == multiply(k, *m.matrix(g), *m.matrix(f)));
    }
    for (int n = pointed ? 0 : 0; n <= max_size; ++n)
        CHECK(*m.matrix(SetMap::identity({n, pointed})) == SparseMatrix<K>::identity(k, m.dim(n)));
}

}  // namespace

TEST_CASE("loday module on small maps") {
    Rationals q;
    auto t2 = truncated_polynomial(q, 2);
    auto l = loday(t2);
    CHECK(l->dim(0) == 2);
    CHECK(l->dim(2) == 8);

    // [1] -> [0] multiplies: x⊗x -> 0, 1⊗x -> x
    auto mult = l->matrix(SetMap(FinObj::unpointed(1), FinObj::unpointed(0), {0, 0}));
    CHECK(mult->column(3).empty());
    CHECK(mult->column(1) == unit_vector(q, 1));
    CHECK(mult->column(2) == unit_vector(q, 1));

    // [0] -> [1] with image 1: a -> 1⊗a
    auto ins = l->matrix(SetMap(FinObj::unpointed(0), FinObj::unpointed(1), {1}));
    CHECK(ins->column(0) == unit_vector(q, 0));
    CHECK(ins->column(1) == unit_vector(q, 1));

    auto g2 = loday(cyclic_group_algebra(q, 2));
    auto tau = g2->matrix(cyclic(1));
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) CHECK(tau->column(i * 2 + j) == unit_vector(q, j * 2 + i));
    CHECK(std::dynamic_pointer_cast<const LodayModule<Rationals>>(l)->label(2, 5) == "1|0|1");
}

TEST_CASE("module dimensions") {
    Rationals q;
    CHECK(representable(q, Site::F, 1)->dim(1) == 4);
    CHECK(representable(q, Site::Gamma, 2)->dim(2) == 9);
    CHECK(representable(q, Site::Gamma, 0)->dim(3) == 1);
    auto g3 = loday(cyclic_group_algebra(q, 3));
    auto pulled = mu_pullback(g3);
    for (int n = 0; n <= 3; ++n) CHECK(pulled->dim(n) == g3->dim(n));
    CHECK(pulled->descriptor() == "mu*loday(" + cyclic_group_algebra(q, 3).name() + ")");
}

TEST_CASE("site mismatches are rejected") {
    Rationals q;
    auto l = loday(truncated_polynomial(q, 2));
    CHECK_THROWS_AS(l->matrix(collapse(2)), Error);
    CHECK_THROWS_AS(mu_pullback(mu_pullback(l)), Error);
    CHECK_THROWS_AS(reduced_part(l), Error);
    CHECK_THROWS_AS(representable(q, Site::F, -1), Error);
}

TEST_CASE("functoriality on random composable pairs") {
    Rationals q;
    PrimeField f2(2), f3(3);
    check_functorial(*loday(truncated_polynomial(q, 2)), 3, 120, 1);
    check_functorial(*loday(cyclic_group_algebra(f3, 3)), 2, 120, 2);
    check_functorial(*loday(split_product(f2, 2)), 3, 120, 3);
    check_functorial(*representable(q, Site::F, 1), 3, 120, 4);
    check_functorial(*representable(f3, Site::Gamma, 2), 3, 120, 5);
    check_functorial(*mu_pullback(loday(truncated_polynomial(f2, 3))), 2, 120, 6);
    check_functorial(*reduced_part(mu_pullback(loday(unit_adapted(split_product(q, 2))))), 3, 120, 7);
    check_functorial(*reduced_part(representable(q, Site::Gamma, 2)), 3, 120, 8);
}

TEST_CASE("reduced part") {
    Rationals q;
    auto g = mu_pullback(loday(truncated_polynomial(q, 2)));
    auto r = reduced_part(g);
    // a0⊗a1 with a0 a1 = 0: span of 1⊗x - x⊗1 and x⊗x
    CHECK(r->dim(1) == 2);
    CHECK(r->dim(0) == 0);
    CHECK(reduced_part(representable(q, Site::Gamma, 1))->dim(0) == 0);

    // G[n] = G'[n] ⊕ G[0] through the basepoint inclusion
    auto rp = std::dynamic_pointer_cast<const ReducedPart<Rationals>>(r);
    for (int n = 1; n <= 3; ++n) {
        auto inc = rp->inclusion(n);
        CHECK(multiply(q, *g->matrix(collapse(n)), inc).is_zero());
        auto total = hstack(inc, *g->matrix(basepoint_inclusion(n)));
        CHECK(rank_kernel_image(q, total).rank == g->dim(n));
    }
}

TEST_CASE("representables pulled back along the forgetful functor") {
    Rationals q;
    for (int n = 0; n <= 2; ++n) {
        auto fn = mu_pullback(representable(q, Site::F, n));
        auto gn = representable(q, Site::Gamma, n + 1);
        std::mt19937_64 rng(static_cast<std::uint64_t>(n) + 11);
        for (int t = 0; t < 40; ++t) {
            std::uniform_int_distribution<int> size(0, 3);
            FinObj a = FinObj::pointed_set(size(rng)), b = FinObj::pointed_set(size(rng));
            SetMap f = random_map(rng, a, b);
            auto iso_a = representable_pullback_iso(q, n, a.size);
            auto iso_b = representable_pullback_iso(q, n, b.size);
            CHECK(rank_kernel_image(q, iso_a).rank == iso_a.cols());
            CHECK(iso_a.rows() == iso_a.cols());
            CHECK(multiply(q, iso_b, *fn->matrix(f)) == multiply(q, *gn->matrix(f), iso_a));
        }
    }
}
