#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hopfact/sparse.hpp"

using namespace hopfact;

namespace {

SparseMatrix from_rows(int rows, int cols, const std::vector<std::vector<long>>& data) {
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (data[r][c]) m.set(r, c, Rational(data[r][c]));
    return m;
}

SparseMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> vd(-3, 3);
    std::vector<std::vector<long>> data(rows, std::vector<long>(cols));
    for (auto& row : data)
        for (auto& v : row) v = vd(rng);
    return from_rows(rows, cols, data);
}

} // namespace

TEST_CASE("row echelon of the identity") {
    auto e = row_echelon(SparseMatrix::identity(2));
    CHECK(e.rank == 2);
    CHECK(e.pivots == std::vector<int>{0, 1});
    CHECK(e.rref == SparseMatrix::identity(2));
}

TEST_CASE("row echelon of the zero matrix") {
    auto e = row_echelon(SparseMatrix(3, 3));
    CHECK(e.rank == 0);
    CHECK(e.pivots.empty());
}

TEST_CASE("row echelon of a rank-1 matrix") {
    auto e = row_echelon(from_rows(2, 2, {{1, 2}, {2, 4}}));
    CHECK(e.rank == 1);
    CHECK(e.rref.get(0, 0) == 1);
    CHECK(e.rref.get(0, 1) == 2);
}

TEST_CASE("row echelon is idempotent") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(4, 5, rng);
        auto e1 = row_echelon(m);
        auto e2 = row_echelon(e1.rref);
        CHECK(e1.rref == e2.rref);
        CHECK(e1.pivots == e2.pivots);
    }
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(4, 6, rng);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(SparseMatrix::identity(3)).empty());
    CHECK(kernel_basis(SparseMatrix(1, 3)).size() == 3);
    auto k = kernel_basis(from_rows(1, 2, {{1, 1}}));
    REQUIRE(k.size() == 1);
    // spans (1, -1)
    CHECK(sv_get(k[0], 0) == -sv_get(k[0], 1));
    CHECK(sv_get(k[0], 0) != 0);
}

TEST_CASE("kernel vectors satisfy m v = 0 exactly") {
    std::mt19937 rng(13);
    for (int t = 0; t < 10; ++t) {
        auto m = random_matrix(3, 6, rng);
        auto ker = kernel_basis(m);
        CHECK((int)ker.size() == 6 - rank(m));
        for (const auto& v : ker) CHECK(m.apply(v).empty());
    }
}

TEST_CASE("reduce_modulo canonical representatives") {
    CHECK(reduce_modulo(std::vector<SparseVec>{}, SparseVec{{0, Rational(5)}}, 3) ==
          SparseVec{{0, Rational(5)}});
    CHECK(reduce_modulo({SparseVec{{0, Rational(1)}}}, SparseVec{{0, Rational(1)}}, 2).empty());
    // span {(1,1)}, v = (2,0) -> (0,-2) with the pivot at the first coordinate
    auto r = reduce_modulo({SparseVec{{0, Rational(1)}, {1, Rational(1)}}},
                           SparseVec{{0, Rational(2)}}, 2);
    CHECK(r == SparseVec{{1, Rational(-2)}});
}

TEST_CASE("reduce_modulo rejects dimension mismatches") {
    CHECK_THROWS_AS(reduce_modulo({SparseVec{{4, Rational(1)}}}, SparseVec{{0, Rational(1)}}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        reduce_modulo(std::vector<SparseVec>{}, SparseVec{{7, Rational(1)}}, 3),
        std::invalid_argument);
}

TEST_CASE("reduce_modulo zero iff in span, against a rank oracle") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> vd(-2, 2);
    for (int t = 0; t < 25; ++t) {
        std::vector<SparseVec> span;
        SparseMatrix m(3, 5);
        for (int r = 0; r < 3; ++r) {
            SparseVec row;
            for (int c = 0; c < 5; ++c) {
                int v = vd(rng);
                if (v) row.emplace_back(c, Rational(v));
            }
            span.push_back(row);
            m.row_data[r] = row;
        }
        SparseVec v;
        for (int c = 0; c < 5; ++c) {
            int val = vd(rng);
            if (val) v.emplace_back(c, Rational(val));
        }
        SparseVec red = reduce_modulo(span, v, 5);
        SparseMatrix ext(4, 5);
        for (int r = 0; r < 3; ++r) ext.row_data[r] = span[r];
        ext.row_data[3] = v;
        bool in_span = rank(ext) == rank(m);
        CHECK(red.empty() == in_span);
        // idempotent
        CHECK(reduce_modulo(span, red, 5) == red);
    }
}
