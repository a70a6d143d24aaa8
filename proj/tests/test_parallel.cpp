#include <doctest.h>

#include <random>
#include <thread>

#include "hopfact/action.hpp"
#include "hopfact/sparse.hpp"

using namespace hopfact;

// The OpenMP kernels must be bit-identical to the serial reference.

TEST_CASE("parallel and serial echelon agree") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> vd(-4, 4);
    std::uniform_int_distribution<int> sized(1, 40);
    for (int t = 0; t < 15; ++t) {
        int rows = sized(rng), cols = sized(rng);
        SparseMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                int v = vd(rng);
                if (v > 1 || v < -1) m.set(r, c, Rational(v));
            }
        auto par = row_echelon(m);
        auto ser = row_echelon_serial(m);
        CHECK(par.rank == ser.rank);
        CHECK(par.pivots == ser.pivots);
        CHECK(par.rref == ser.rref);
    }
}

TEST_CASE("quotient module cache is safe for concurrent readers") {
    HopfDescriptor desc{HopfKind::TensorAlgebra, 2, 5};
    QuotientModule qm(ActionContext{desc, 2});
    std::vector<int> dims(8, -1);
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&qm, &dims, i] { dims[i] = qm.quotient_dim(3 + (i % 2)); });
    for (auto& th : threads) th.join();
    for (int i = 0; i < 8; ++i) CHECK(dims[i] == dims[i % 2]);
    CHECK(dims[0] == qm.quotient_dim(3));
    CHECK(dims[1] == qm.quotient_dim(4));
}
