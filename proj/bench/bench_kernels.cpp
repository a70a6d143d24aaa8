// Compares the OpenMP kernels against the serial reference implementations:
// rational row echelon and tilde-basis assembly.  Correctness is asserted,
// timings printed.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hopfact/action.hpp"
#include "hopfact/sparse.hpp"

using namespace hopfact;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SparseMatrix random_matrix(int rows, int cols, double density, std::mt19937& rng) {
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    std::uniform_int_distribution<int> vd(-9, 9);
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (pd(rng) < density) {
                int v = vd(rng);
                if (v) m.row_data[r].emplace_back(c, Rational(v));
            }
        }
    }
    return m;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif

    {
        std::mt19937 rng(42);
        SparseMatrix m = random_matrix(150, 180, 0.10, rng);
        auto t0 = Clock::now();
        auto ser = row_echelon_serial(m);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto par = row_echelon(m);
        double tp = seconds_since(t0);
        if (!(ser.rref == par.rref) || ser.pivots != par.pivots) {
            std::printf("echelon MISMATCH between serial and parallel\n");
            return 1;
        }
        std::printf("row_echelon 150x180 (rank %d): serial %.3fs, omp %.3fs, speedup %.2fx\n",
                    ser.rank, ts, tp, ts / tp);
    }

    {
        // tilde-basis assembly: conjugation spans on T(V)^{(x)2}, degree 5
        HopfDescriptor desc{HopfKind::TensorAlgebra, 2, 6};
        auto t0 = Clock::now();
        QuotientModule qm(ActionContext{desc, 2});
        int dim5 = qm.quotient_dim(6);
        double t = seconds_since(t0);
        std::printf("tilde basis T(V)^2 degree 6 (quotient dim %d): %.3fs\n", dim5, t);
    }

    {
        HopfDescriptor desc{HopfKind::TensorAlgebra, 2, 6};
        auto basis = tensor_basis(desc, 2, 6);
        auto t0 = Clock::now();
        auto res = ef_defect(EfConvention::GrMatched);
        double t = seconds_since(t0);
        std::printf("ef-defect on the %zu-dim component: %.3fs (scalar %s)\n",
                    basis->tuples.size(), t, rat_str(res.scalar).c_str());
    }
    return 0;
}
