#include "funho/algkit/algebra.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace funho;

namespace {

template <class K>
Dense<K> vec(const K& k, std::vector<long> xs) {
    Dense<K> v;
    for (long x : xs) v.push_back(k.from_int(x));
    return v;
}

template <class K>
void check_axioms(const Algebra<K>& a) {
    const K& k = a.field();
    const int d = a.dim();
    for (int i = 0; i < d; ++i) {
        CHECK(a.multiply(a.unit(), a.basis_vector(i)) == a.basis_vector(i));
        for (int j = 0; j < d; ++j) {
            CHECK(a.product(i, j) == a.product(j, i));
            for (int l = 0; l < d; ++l)
                CHECK(a.multiply(a.product(i, j), a.basis_vector(l)) == a.multiply(a.basis_vector(i), a.product(j, l)));
        }
    }
    (void)k;
}

std::string write_temp(const std::string& text) {
    static int counter = 0;
    std::string path = "algkit_test_" + std::to_string(counter++) + ".json";
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("algebra specs parse and round-trip") {
    for (auto s : {"trunc:2", "trunc:5", "group:3", "prod:4", "tensor(trunc:2,group:2)"})
        CHECK(AlgebraSpec::parse(AlgebraSpec::parse(s).to_string()).to_string() == AlgebraSpec::parse(s).to_string());
    CHECK_THROWS_AS(AlgebraSpec::parse("trunc"), Error);
    CHECK_THROWS_AS(AlgebraSpec::parse("poly:2"), Error);
    CHECK_THROWS_AS(AlgebraSpec::parse("trunc:x"), Error);
}

TEST_CASE("built-in algebras") {
    Rationals q;
    auto t2 = build_algebra(AlgebraSpec::parse("trunc:2"), q);
    CHECK(t2.dim() == 2);
    CHECK(t2.product(1, 1) == vec(q, {0, 0}));
    auto g2 = build_algebra(AlgebraSpec::parse("group:2"), q);
    CHECK(g2.product(1, 1) == vec(q, {1, 0}));
    auto p2 = build_algebra(AlgebraSpec::parse("prod:2"), q);
    CHECK(p2.product(0, 1) == vec(q, {0, 0}));
    CHECK(p2.product(0, 0) == vec(q, {1, 0}));
    CHECK(p2.product(1, 1) == vec(q, {0, 1}));
    CHECK(p2.unit() == vec(q, {1, 1}));
}

TEST_CASE("multiplication examples") {
    Rationals q;
    PrimeField f2(2);
    auto t2 = truncated_polynomial(q, 2);
    CHECK(t2.multiply(vec(q, {0, 1}), vec(q, {0, 1})) == vec(q, {0, 0}));
    auto g3 = cyclic_group_algebra(q, 3);
    CHECK(g3.multiply(vec(q, {0, 1, 0}), vec(q, {0, 0, 1})) == vec(q, {1, 0, 0}));
    auto t3 = truncated_polynomial(f2, 3);
    CHECK(t3.multiply(vec(f2, {1, 1, 0}), vec(f2, {1, 1, 0})) == vec(f2, {1, 0, 1}));
}

TEST_CASE("multiset products") {
    Rationals q;
    auto t2 = truncated_polynomial(q, 2);
    CHECK(t2.multiset_product({}) == t2.unit());
    CHECK(t2.multiset_product({1, 1}) == vec(q, {0, 0}));
    auto g3 = cyclic_group_algebra(q, 3);
    CHECK(g3.multiset_product({1, 1, 1}) == vec(q, {1, 0, 0}));
}

TEST_CASE("axioms hold for every built algebra") {
    PrimeField f3(3);
    Rationals q;
    for (auto s : {"trunc:2", "trunc:3", "group:2", "group:3", "prod:2", "prod:3", "tensor(trunc:2,prod:2)"}) {
        check_axioms(build_algebra(AlgebraSpec::parse(s), q));
        check_axioms(build_algebra(AlgebraSpec::parse(s), f3));
    }
}

TEST_CASE("construction is deterministic") {
    Rationals q;
    CHECK(build_algebra(AlgebraSpec::parse("group:3"), q) == build_algebra(AlgebraSpec::parse("group:3"), q));
}

TEST_CASE("unit-adapted basis") {
    Rationals q;
    auto t2 = truncated_polynomial(q, 2);
    CHECK(unit_adapted(t2) == t2);
    auto p2 = split_product(q, 2);
    auto u = unit_adapted(p2);
    CHECK(u.unit() == vec(q, {1, 0}));
    // basis {1, e_2}: e_2 e_2 = e_2
    CHECK(u.product(1, 1) == vec(q, {0, 1}));
    CHECK(u.product(0, 1) == vec(q, {0, 1}));
    check_axioms(u);
    // every product of basis vectors is again a basis vector or zero
    auto p3 = unit_adapted(split_product(PrimeField(5), 3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int nz = 0;
            for (auto c : p3.product(i, j)) nz += c != 0;
            CHECK(nz <= 1);
        }
}

TEST_CASE("algebras from JSON") {
    Rationals q;
    auto ok = write_temp(R"({"name": "dual", "dim": 2, "unit": [1, 0],
        "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]})");
    auto a = build_algebra(AlgebraSpec::parse("file:" + ok), q);
    CHECK(a == truncated_polynomial(q, 2));

    auto extra_keys = write_temp(R"({"dim": 2, "unit": [1, 0],
        "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], "x": 0})");
    CHECK_NOTHROW(build_algebra(AlgebraSpec::parse("file:" + extra_keys), q));

    auto bad = write_temp(R"({"dim": 2, "unit": [1, 0],
        "table": [[[1, 0], [0, 1]], [[1, 0], [0, 0]]]})");
    CHECK_THROWS_AS(build_algebra(AlgebraSpec::parse("file:" + bad), q), Error);

    auto halves = write_temp(R"({"dim": 1, "unit": ["1/1"], "table": [[["1/1"]]]})");
    CHECK(build_algebra(AlgebraSpec::parse("file:" + halves), q).dim() == 1);

    CHECK_THROWS_AS(build_algebra(AlgebraSpec::parse("file:/nonexistent.json"), q), Error);
    auto garbage = write_temp("{not json");
    CHECK_THROWS_AS(build_algebra(AlgebraSpec::parse("file:" + garbage), q), Error);
    for (const auto& p : {ok, extra_keys, bad, halves, garbage}) std::remove(p.c_str());
}
