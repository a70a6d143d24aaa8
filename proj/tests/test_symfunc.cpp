#include <doctest.h>

#include "hopfact/symfunc.hpp"
#include "hopfact/verify.hpp"

using namespace hopfact;

TEST_CASE("partition utilities") {
    CHECK(parse_partition("2,1") == Partition{2, 1});
    CHECK(format_partition({2, 1}) == "2,1");
    CHECK(conjugate({2, 2}) == Partition{2, 2});
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4, 2).size() == 3);
    CHECK_THROWS_AS(normalize_partition({1, 2}), std::invalid_argument);
}

TEST_CASE("Pieri special case") {
    CHECK(lr_mult(schur({1}), schur({1})) == sp_add(schur({2}), schur({1, 1})));
}

TEST_CASE("LR coefficient by hand") {
    CHECK(lr_coefficient({3, 3}, {2, 2}, {1, 1}) == 1);
    CHECK(lr_coefficient({2, 2, 1, 1}, {2, 2}, {1, 1}) == 1);
    CHECK(lr_coefficient({4, 2}, {2, 2}, {1, 1}) == 0);
}

TEST_CASE("LR product ([1^4] + [2^2]) * [1^2]") {
    SchurPoly lhs = sp_add(schur({1, 1, 1, 1}), schur({2, 2}));
    SchurPoly got = lr_mult(lhs, schur({1, 1}));
    SchurPoly expect;
    expect.add({2, 1, 1, 1, 1}, 1);
    expect.add({2, 2, 1, 1}, 2);
    expect.add({1, 1, 1, 1, 1, 1}, 1);
    expect.add({3, 3}, 1);
    expect.add({3, 2, 1}, 1);
    CHECK(got == expect);
}

TEST_CASE("Sym^k of wedge^2") {
    CHECK(sym_of_wedge2(0) == schur({}));
    CHECK(sym_of_wedge2(1) == schur({1, 1}));
    CHECK(sym_of_wedge2(2) == sp_add(schur({2, 2}), schur({1, 1, 1, 1})));
}

TEST_CASE("Schur functors of wedge^2") {
    CHECK(schur_of_wedge2({1, 1}) == schur({2, 1, 1}));
    SchurPoly expect;
    expect.add({3, 2, 1}, 1);
    expect.add({2, 2, 1, 1}, 1);
    expect.add({2, 1, 1, 1, 1}, 1);
    CHECK(schur_of_wedge2({2, 1}) == expect);
    for (int k = 0; k <= 4; ++k) CHECK(schur_of_wedge2({k}) == sym_of_wedge2(k));
}

TEST_CASE("schur_of_sum") {
    // lambda = (n): pairs ((a), (n-a))
    auto triples = schur_of_sum({3});
    CHECK(triples.size() == 4);
    for (const auto& [mu, nu, c] : triples) CHECK(c == 1);
    // lambda = (2,1): six pairs, each with multiplicity one
    auto t21 = schur_of_sum({2, 1});
    CHECK(t21.size() == 6);
    auto has = [&](const Partition& mu, const Partition& nu) {
        for (const auto& [m, n, c] : t21)
            if (m == mu && n == nu) return c == 1;
        return false;
    };
    CHECK(has({1}, {2}));
    CHECK(has({1}, {1, 1}));
    CHECK(has({2}, {1}));
    CHECK(has({1, 1}, {1}));
    CHECK(has({2, 1}, {}));
    CHECK(has({}, {2, 1}));
    // dimension bookkeeping at d = 3: sum of products equals dim S_lambda(V + W)
    for (const Partition& lam :
         {Partition{2, 1}, Partition{3}, Partition{2, 2}, Partition{2, 1, 1}}) {
        int d = 3, dw = 2;
        mpz_class total = 0;
        for (const auto& [mu, nu, c] : schur_of_sum(lam))
            total += c * weyl_dim(mu, d) * weyl_dim(nu, dw);
        CHECK(total == weyl_dim(lam, d + dw));
    }
}

TEST_CASE("graded character of S_lambda(L2)") {
    GradedCharacter g1 = schur_of_L2({1});
    CHECK(g1.at(1) == schur({1}));
    CHECK(g1.at(2) == schur({1, 1}));

    GradedCharacter g21 = schur_of_L2({2, 1});
    CHECK(g21.at(3) == schur({2, 1})); // lowest degree piece is s_lambda
    SchurPoly d4;
    d4.add({3, 1}, 1);
    d4.add({2, 1, 1}, 2);
    d4.add({2, 2}, 1);
    d4.add({1, 1, 1, 1}, 1);
    CHECK(g21.at(4) == d4);
    SchurPoly d5;
    d5.add({1, 1, 1, 1, 1}, 1);
    d5.add({2, 1, 1, 1}, 2);
    d5.add({3, 2}, 1);
    d5.add({2, 2, 1}, 2);
    d5.add({3, 1, 1}, 1);
    CHECK(g21.at(5) == d5);
    SchurPoly d6;
    d6.add({3, 2, 1}, 1);
    d6.add({2, 2, 1, 1}, 1);
    d6.add({2, 1, 1, 1, 1}, 1);
    CHECK(g21.at(6) == d6);
    // the full 13-term decomposition with multiplicities
    SchurPoly total;
    for (const auto& [deg, poly] : g21) total = sp_add(total, poly);
    CHECK(total.terms.size() == 13);
    CHECK(total.coeff({2, 1, 1, 1}) == 2);
    CHECK(total.coeff({2, 2, 1}) == 2);
    CHECK(total.coeff({2, 1, 1}) == 2);
}

TEST_CASE("B_m enumeration") {
    CHECK(enumerate_Bm(1) == std::vector<Partition>{{1}});
    auto b2 = enumerate_Bm(2);
    CHECK(b2.size() == 2);
    CHECK(std::find(b2.begin(), b2.end(), Partition{2}) != b2.end());
    CHECK(std::find(b2.begin(), b2.end(), Partition{1, 1, 1}) != b2.end());
    for (int m = 1; m <= 5; ++m)
        for (const auto& lam : enumerate_Bm(m)) {
            CHECK(part_size(lam) >= m);
            CHECK(part_size(lam) <= 2 * m);
            CHECK(is_partition(lam));
        }
}

TEST_CASE("char_to_schur on explicit weight data") {
    // standard representation
    std::map<std::vector<int>, std::int64_t> v3;
    v3[{1, 0, 0}] = 1;
    v3[{0, 1, 0}] = 1;
    v3[{0, 0, 1}] = 1;
    CHECK(char_to_schur_full(v3, 3) == schur({1}));
    // V (x) V at rank 2
    std::map<std::vector<int>, std::int64_t> vv;
    vv[{2, 0}] = 1;
    vv[{0, 2}] = 1;
    vv[{1, 1}] = 2;
    CHECK(char_to_schur_full(vv, 2) == sp_add(schur({2}), schur({1, 1})));
    // wedge^2 of k^3
    std::map<std::vector<int>, std::int64_t> w2;
    w2[{1, 1, 0}] = 1;
    w2[{1, 0, 1}] = 1;
    w2[{0, 1, 1}] = 1;
    CHECK(char_to_schur_full(w2, 3) == schur({1, 1}));
    // negative multiplicity is an error signal
    std::map<std::vector<int>, std::int64_t> bad;
    bad[{1, 0}] = -1;
    bad[{0, 1}] = -1;
    CHECK_THROWS(char_to_schur(bad, 2));
    // non-symmetric weights are rejected
    std::map<std::vector<int>, std::int64_t> asym;
    asym[{1, 0}] = 1;
    asym[{0, 1}] = 2;
    CHECK_THROWS_AS(char_to_schur_full(asym, 2), std::invalid_argument);
}

TEST_CASE("kostka numbers") {
    CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka({2, 1}, {2, 1}) == 1);
    CHECK(kostka({2, 1}, {3}) == 0);
    CHECK(kostka({3}, {1, 1, 1}) == 1);
}

TEST_CASE("schur suite") {
    auto rep = run_suite("schur-consistency", {});
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
}
