#ifndef HOPFACT_SPARSE_HPP
#define HOPFACT_SPARSE_HPP

#include <cstddef>
#include <vector>

#include "hopfact/rational.hpp"

namespace hopfact {

// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sv_add(const SparseVec& a, const SparseVec& b);
// a - c*b
SparseVec sv_axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec sv_scale(const SparseVec& a, const Rational& c);
Rational sv_get(const SparseVec& v, int idx);

// Row-major sparse matrix over the rationals. No stored zeros.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVec> row_data;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), row_data(r) {}

    static SparseMatrix identity(int n);

    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;
    bool is_zero() const;

    SparseMatrix transpose() const;
    SparseVec apply(const SparseVec& v) const;         // matrix * vector
    SparseMatrix multiply(const SparseMatrix& other) const;

    bool operator==(const SparseMatrix& o) const;
};

struct EchelonResult {
    SparseMatrix rref;          // reduced row-echelon form, zero rows dropped
    std::vector<int> pivots;    // pivot column of each surviving row
    int rank = 0;
};

// Reduced row echelon form by fraction-exact Gauss-Jordan, pivots leftmost.
// The parallel version eliminates independent rows with OpenMP; the serial
// one is the reference implementation and must produce identical output.
EchelonResult row_echelon(const SparseMatrix& m);
EchelonResult row_echelon_serial(const SparseMatrix& m);

int rank(const SparseMatrix& m);

// Basis of the right kernel {v : m v = 0}; size = cols - rank.
// Free variables in increasing column order, each basis vector has a 1
// at its free column.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);
std::vector<SparseVec> kernel_basis(const EchelonResult& e, int cols);

// Canonical representative of v modulo the row space of `span`:
// eliminates the pivot coordinates of the reduced echelon basis.
// Result is zero iff v lies in the span; idempotent.
SparseVec reduce_modulo(const std::vector<SparseVec>& span, const SparseVec& v, int dim);
SparseVec reduce_modulo(const EchelonResult& e, const SparseVec& v, int dim);

} // namespace hopfact

#endif
