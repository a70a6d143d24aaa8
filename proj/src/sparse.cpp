#include "hopfact/sparse.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfact {

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.push_back(b[j++]);
        } else {
            Rational s = a[i].second + b[j].second;
            if (s != 0) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

SparseVec sv_axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    if (c == 0) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.emplace_back(b[j].first, -c * b[j].second);
            ++j;
        } else {
            Rational s = a[i].second - c * b[j].second;
            if (s != 0) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(b[j].first, -c * b[j].second);
    return out;
}

SparseVec sv_scale(const SparseVec& a, const Rational& c) {
    if (c == 0) return {};
    SparseVec out = a;
    for (auto& e : out) e.second *= c;
    return out;
}

Rational sv_get(const SparseVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != v.end() && it->first == idx) return it->second;
    return Rational(0);
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.row_data[i].emplace_back(i, Rational(1));
    return m;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("SparseMatrix::set index");
    auto& row = row_data[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != row.end() && it->first == c) {
        if (v == 0) row.erase(it);
        else it->second = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
}

Rational SparseMatrix::get(int r, int c) const { return sv_get(row_data[r], c); }

bool SparseMatrix::is_zero() const {
    for (const auto& r : row_data)
        if (!r.empty()) return false;
    return true;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : row_data[r]) t.row_data[c].emplace_back(r, v);
    return t;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (int r = 0; r < rows; ++r) {
        Rational s(0);
        size_t i = 0, j = 0;
        const auto& row = row_data[r];
        while (i < row.size() && j < v.size()) {
            if (row[i].first < v[j].first) ++i;
            else if (row[i].first > v[j].first) ++j;
            else { s += row[i].second * v[j].second; ++i; ++j; }
        }
        if (s != 0) out.emplace_back(r, s);
    }
    return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols != other.rows) throw std::invalid_argument("matrix dimension mismatch");
    SparseMatrix out(rows, other.cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int r = 0; r < rows; ++r) {
        SparseVec acc;
        for (const auto& [k, v] : row_data[r])
            acc = sv_axpy(acc, -v, other.row_data[k]);
        out.row_data[r] = std::move(acc);
    }
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows == o.rows && cols == o.cols && row_data == o.row_data;
}

namespace {

template <bool Parallel>
EchelonResult echelon_impl(const SparseMatrix& m) {
    std::vector<SparseVec> work = m.row_data;
    std::vector<int> pivots;
    int next = 0; // rows [0, next) are finished pivot rows
    for (int col = 0; col < m.cols && next < (int)work.size(); ++col) {
        int piv = -1;
        for (int r = next; r < (int)work.size(); ++r) {
            if (!work[r].empty() && work[r][0].first == col) { piv = r; break; }
        }
        if (piv < 0) continue;
        std::swap(work[next], work[piv]);
        Rational lead = work[next][0].second;
        if (lead != 1) work[next] = sv_scale(work[next], Rational(1) / lead);
        const SparseVec& prow = work[next];
        const int nrows = (int)work.size();
        const int skip = next;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel)
#endif
        for (int r = 0; r < nrows; ++r) {
            if (r == skip) continue;
            Rational f = work[r].empty() ? Rational(0) : sv_get(work[r], col);
            if (f != 0) work[r] = sv_axpy(work[r], f, prow);
        }
        pivots.push_back(col);
        ++next;
    }
    EchelonResult out;
    out.rank = next;
    out.pivots = std::move(pivots);
    out.rref.rows = next;
    out.rref.cols = m.cols;
    out.rref.row_data.assign(work.begin(), work.begin() + next);
    return out;
}

} // namespace

EchelonResult row_echelon(const SparseMatrix& m) { return echelon_impl<true>(m); }
EchelonResult row_echelon_serial(const SparseMatrix& m) { return echelon_impl<false>(m); }

int rank(const SparseMatrix& m) { return row_echelon(m).rank; }

std::vector<SparseVec> kernel_basis(const EchelonResult& e, int cols) {
    std::vector<char> is_pivot(cols, 0);
    for (int p : e.pivots) is_pivot[p] = 1;
    std::vector<SparseVec> out;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        SparseVec v;
        for (int r = 0; r < e.rank; ++r) {
            Rational coeff = sv_get(e.rref.row_data[r], c);
            if (coeff != 0) v.emplace_back(e.pivots[r], -coeff);
        }
        v.emplace_back(c, Rational(1));
        std::sort(v.begin(), v.end());
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    return kernel_basis(row_echelon(m), m.cols);
}

SparseVec reduce_modulo(const EchelonResult& e, const SparseVec& v, int dim) {
    if (!v.empty() && v.back().first >= dim)
        throw std::invalid_argument("reduce_modulo: vector dimension mismatch");
    SparseVec out = v;
    for (int r = 0; r < e.rank; ++r) {
        Rational f = sv_get(out, e.pivots[r]);
        if (f != 0) out = sv_axpy(out, f, e.rref.row_data[r]);
    }
    return out;
}

SparseVec reduce_modulo(const std::vector<SparseVec>& span, const SparseVec& v, int dim) {
    SparseMatrix m((int)span.size(), dim);
    for (size_t i = 0; i < span.size(); ++i) {
        if (!span[i].empty() && span[i].back().first >= dim)
            throw std::invalid_argument("reduce_modulo: span dimension mismatch");
        m.row_data[i] = span[i];
    }
    return reduce_modulo(row_echelon(m), v, dim);
}

} // namespace hopfact
