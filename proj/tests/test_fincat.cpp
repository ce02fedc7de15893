#include "funho/fincat/fincat.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace funho;

using testing_helpers::random_map;

TEST_CASE("set maps validate their tables") {
    CHECK_THROWS_AS(SetMap(FinObj::unpointed(1), FinObj::unpointed(1), {0, 2}), Error);
    CHECK_THROWS_AS(SetMap(FinObj::pointed_set(1), FinObj::pointed_set(1), {1, 1}), Error);
    CHECK_THROWS_AS(SetMap(FinObj::unpointed(2), FinObj::unpointed(1), {0, 1}), Error);
}

TEST_CASE("composition") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        auto f = random_map(rng, FinObj::unpointed(3), FinObj::unpointed(2));
        CHECK(compose(SetMap::identity(f.tgt()), f) == f);
        CHECK(compose(f, SetMap::identity(f.src())) == f);
    }
    auto tau = cyclic(2);
    CHECK(compose(tau, compose(tau, tau)) == SetMap::identity(FinObj::unpointed(2)));
    CHECK_THROWS_AS(compose(tau, cyclic(3)), Error);

    // d_0 after the degeneracy injection s_1 on [1]: [1] -> [2] -> [1]
    auto s1 = degeneracy_injection(1, 2);
    CHECK(s1.images() == std::vector<int>{0, 2});
    auto d0 = face(0, 2);
    CHECK(d0.images() == std::vector<int>{0, 0, 1});
    CHECK(compose(d0, s1).images() == std::vector<int>{0, 1});
}

TEST_CASE("cyclic rotations have order n+1") {
    for (int n = 0; n <= 6; ++n) {
        SetMap p = SetMap::identity(FinObj::unpointed(n));
        for (int i = 0; i <= n; ++i) p = compose(cyclic(n), p);
        CHECK(p == SetMap::identity(FinObj::unpointed(n)));
    }
}

TEST_CASE("hom-set sizes") {
    for (int n = 0; n <= 4; ++n) {
        CHECK(count_maps(FinObj::unpointed(0), FinObj::unpointed(n)) == static_cast<std::uint64_t>(n + 1));
        CHECK(count_maps(FinObj::pointed_set(1), FinObj::pointed_set(n)) == static_cast<std::uint64_t>(n + 1));
    }
    CHECK(count_maps(FinObj::pointed_set(2), FinObj::pointed_set(2)) == 9);
    CHECK_THROWS_AS(count_maps(FinObj::unpointed(30), FinObj::unpointed(30)), ResourceError);
}

TEST_CASE("enumeration is complete, duplicate-free and ranked") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (bool pointed : {false, true}) {
                FinObj src{a, pointed}, tgt{b, pointed};
                auto maps = enumerate_maps(src, tgt);
                CHECK(maps.size() == count_maps(src, tgt));
                std::set<std::vector<int>> seen;
                for (std::size_t i = 0; i < maps.size(); ++i) {
                    seen.insert(maps[i].images());
                    CHECK(map_rank(maps[i]) == i);
                    CHECK(map_unrank(src, tgt, i) == maps[i]);
                }
                CHECK(seen.size() == maps.size());
            }
}

TEST_CASE("cube vertex coding") {
    CubeVertexCoding c{3};
    CHECK(c.index({0, 0, 0}) == 1);
    CHECK(c.index({1, 0, 0}) == 5);
    CHECK(c.index({0, 1, 1}) == 4);
    for (int i = 1; i <= c.vertex_count(); ++i) CHECK(c.index(c.bits(i)) == i);
}

TEST_CASE("cube maps") {
    auto p1 = cube_map(CubeMapKind::p, 1, 1);
    CHECK(p1.images() == std::vector<int>{0, 1, 1});
    auto r1 = cube_map(CubeMapKind::r, 1, 1);
    auto s1 = cube_map(CubeMapKind::s, 1, 1);
    CHECK(r1.images() == std::vector<int>{0, 1, 0});
    CHECK(s1.images() == std::vector<int>{0, 0, 1});
    // deleting coordinate 2 of (e1, e2)
    CHECK(cube_map(CubeMapKind::p, 2, 2).images() == std::vector<int>{0, 1, 1, 2, 2});
    CHECK(cube_map(CubeMapKind::s, 1, 2).images() == std::vector<int>{0, 0, 0, 1, 2});
}

TEST_CASE("staircase maps") {
    CHECK(staircase(0) == SetMap::identity(FinObj::pointed_set(1)));
    CHECK(staircase(2).images() == std::vector<int>{0, 1, 2, 4});
    for (int n = 1; n <= 5; ++n) {
        CubeVertexCoding c{n};
        auto s = staircase(n);
        for (int j = 1; j <= n + 1; ++j) {
            auto bits = c.bits(s(j));
            int trailing = 0;
            for (auto it = bits.rbegin(); it != bits.rend() && *it == 1; ++it) ++trailing;
            CHECK(trailing == j - 1);
            CHECK(std::count(bits.begin(), bits.end(), 1) == j - 1);
        }
    }
}

TEST_CASE("staircase on the worked example") {
    SetMap f(FinObj::pointed_set(6), FinObj::pointed_set(3), {0, 3, 1, 3, 1, 0, 2});
    CHECK(compose(staircase(2), f).images() == std::vector<int>{0, 4, 1, 4, 1, 0, 2});
}

TEST_CASE("degenerate families") {
    auto w0 = degenerate_family(0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].vertices.empty());

    auto w1 = degenerate_family(1);
    REQUIRE(w1.size() == 3);
    std::set<std::vector<int>> s1;
    for (const auto& w : w1) s1.insert(w.vertices);
    CHECK(s1 == std::set<std::vector<int>>{{}, {1}, {2}});

    auto w2 = degenerate_family(2);
    CHECK(w2.size() == 6);
    bool diag = false;
    for (const auto& w : w2)
        if (w.kind == VertexSubset::Kind::diagonal) diag = diag || w.vertices == std::vector<int>{1, 4};
    CHECK(diag);
    for (int n = 1; n <= 5; ++n) CHECK(degenerate_family(n).size() == static_cast<std::size_t>(3 * n));
}

TEST_CASE("subset inclusions are order preserving") {
    for (const auto& w : degenerate_family(3)) {
        auto inc = subset_inclusion(w, 3);
        CHECK(inc.src().size == static_cast<int>(w.vertices.size()));
        for (std::size_t i = 0; i < w.vertices.size(); ++i) CHECK(inc(static_cast<int>(i) + 1) == w.vertices[i]);
    }
}
