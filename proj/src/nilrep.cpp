#include "hopfact/nilrep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfact {

L2Model::L2Model(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("L2Model: dim >= 1 required");
}

std::vector<int> L2Model::gen_weight(int g) const {
    std::vector<int> w(d_, 0);
    if (g < d_) {
        w[g] = 1;
        return w;
    }
    int idx = g - d_;
    for (int i = 0; i < d_; ++i) {
        int block = d_ - 1 - i;
        if (idx < block) {
            w[i] = 1;
            w[i + 1 + idx] = 1;
            return w;
        }
        idx -= block;
    }
    throw std::invalid_argument("bad generator id");
}

int L2Model::z_id(int i, int j) const {
    if (i < 0 || j <= i || j >= d_) throw std::invalid_argument("bad z pair");
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += d_ - 1 - a;
    return d_ + idx + (j - i - 1);
}

namespace {

// multisets of `size` generators with exactly the given weight
void enumerate_multisets(const L2Model& model, int size, std::vector<int> rem,
                         std::vector<L2Model::Monomial>& out) {
    L2Model::Monomial cur;
    std::function<void(int, int)> rec = [&](int g, int left) {
        if (left == 0) {
            if (std::all_of(rem.begin(), rem.end(), [](int v) { return v == 0; }))
                out.push_back(cur);
            return;
        }
        if (g == model.gen_count()) return;
        std::vector<int> gw = model.gen_weight(g);
        int maxmult = left;
        for (int i = 0; i < model.dim(); ++i)
            if (gw[i] > 0) maxmult = std::min(maxmult, rem[i]);
        for (int m = 0; m <= maxmult; ++m) {
            if (m > 0) {
                for (int i = 0; i < model.dim(); ++i) rem[i] -= gw[i];
                cur.push_back(g);
            }
            rec(g + 1, left - m);
        }
        for (int m = 0; m < maxmult; ++m) {
            for (int i = 0; i < model.dim(); ++i) rem[i] += gw[i];
            cur.pop_back();
        }
    };
    rec(0, size);
}

} // namespace

std::shared_ptr<const L2Model::Cell> L2Model::cell(int p, int q, const Weight& w) const {
    if ((int)w.size() != d_) throw std::invalid_argument("weight length mismatch");
    std::tuple<int, int, Weight> key(p, q, w);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cells_.find(key);
        if (it != cells_.end()) return it->second;
    }
    auto out = std::make_shared<Cell>();
    std::vector<int> w1(d_, 0);
    std::function<void(int)> split = [&](int i) {
        if (i == d_) {
            std::vector<Monomial> a;
            enumerate_multisets(*this, p, w1, a);
            if (a.empty()) return;
            std::vector<int> w2(d_);
            for (int t = 0; t < d_; ++t) w2[t] = w[t] - w1[t];
            std::vector<Monomial> b;
            enumerate_multisets(*this, q, w2, b);
            for (const auto& ma : a)
                for (const auto& mb : b) out->basis.emplace_back(ma, mb);
            return;
        }
        for (int v = 0; v <= w[i]; ++v) {
            w1[i] = v;
            split(i + 1);
        }
        w1[i] = 0;
    };
    split(0);
    std::sort(out->basis.begin(), out->basis.end());
    for (int i = 0; i < (int)out->basis.size(); ++i) out->index.emplace(out->basis[i], i);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cells_.emplace(key, std::move(out));
    return it->second;
}

std::shared_ptr<const std::vector<SparseVec>>
L2Model::schur_kernel(int p, int q, const Weight& w) const {
    std::tuple<int, int, Weight> key(p, q, w);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = kernels_.find(key);
        if (it != kernels_.end()) return it->second;
    }
    auto src = cell(p, q, w);
    auto out = std::make_shared<std::vector<SparseVec>>();
    if (q == 0) {
        for (int i = 0; i < (int)src->basis.size(); ++i)
            out->push_back(SparseVec{{i, Rational(1)}});
    } else {
        int degree = std::accumulate(w.begin(), w.end(), 0);
        *out = kernel_basis(pieri_map_matrix(p, q, degree, w));
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = kernels_.emplace(key, std::move(out));
    return it->second;
}

SparseMatrix L2Model::pieri_map_matrix(int p, int q, int degree, const Weight& w) const {
    if (q < 1) throw std::invalid_argument("pieri map needs q >= 1");
    if (std::accumulate(w.begin(), w.end(), 0) != degree)
        throw std::invalid_argument("degree must equal the weight size");
    auto src = cell(p, q, w);
    auto tgt = cell(p + 1, q - 1, w);
    SparseMatrix m((int)tgt->basis.size(), (int)src->basis.size());
    for (int c = 0; c < (int)src->basis.size(); ++c) {
        const auto& [m1, m2] = src->basis[c];
        for (size_t pos = 0; pos < m2.size(); ++pos) {
            if (pos > 0 && m2[pos] == m2[pos - 1]) continue;
            int g = m2[pos];
            int mult = (int)std::count(m2.begin(), m2.end(), g);
            Monomial a = m1;
            a.insert(std::lower_bound(a.begin(), a.end(), g), g);
            Monomial b = m2;
            b.erase(std::find(b.begin(), b.end(), g));
            m.row_data[tgt->index.at({a, b})].emplace_back(c, Rational(mult));
        }
    }
    for (auto& row : m.row_data) std::sort(row.begin(), row.end());
    return m;
}

SparseMatrix L2Model::adjoint_matrix(int p, int q, int degree, const Weight& w) const {
    if (std::accumulate(w.begin(), w.end(), 0) != degree + 1)
        throw std::invalid_argument("target weight size must be degree + 1");
    auto tgt = cell(p, q, w);
    std::vector<SparseVec> cols;
    for (int r = 0; r < d_; ++r) {
        if (w[r] == 0) continue;
        Weight wr = w;
        --wr[r];
        auto src = cell(p, q, wr);
        for (const auto& pm : src->basis) cols.push_back(ad_apply(r, pm, *tgt));
    }
    SparseMatrix m((int)tgt->basis.size(), (int)cols.size());
    for (int c = 0; c < (int)cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) m.row_data[r].emplace_back(c, v);
    for (auto& row : m.row_data) std::sort(row.begin(), row.end());
    return m;
}

SparseVec L2Model::ad_apply(int r, const PairMon& pm, const Cell& target) const {
    std::map<int, Rational> acc;
    auto derive = [&](const Monomial& m, const Monomial& other, bool first) {
        for (size_t pos = 0; pos < m.size(); ++pos) {
            if (pos > 0 && m[pos] == m[pos - 1]) continue; // each value once
            int g = m[pos];
            if (g >= d_ || g == r) continue; // z's and [x_r, x_r] die
            int mult = (int)std::count(m.begin(), m.end(), g);
            int sign = r < g ? 1 : -1;
            int zg = r < g ? z_id(r, g) : z_id(g, r);
            Monomial m2 = m;
            m2.erase(std::find(m2.begin(), m2.end(), g));
            m2.insert(std::lower_bound(m2.begin(), m2.end(), zg), zg);
            PairMon key = first ? PairMon(m2, other) : PairMon(other, m2);
            auto it = target.index.find(key);
            if (it == target.index.end())
                throw std::logic_error("adjoint image left the expected weight cell");
            acc[it->second] += Rational(sign * mult);
        }
    };
    derive(pm.first, pm.second, true);
    derive(pm.second, pm.first, false);
    SparseVec out;
    for (const auto& [i, c] : acc)
        if (c != 0) out.emplace_back(i, c);
    return out;
}

int required_rank(const Partition& lambda, int degree) {
    int rows = (int)lambda.size() + 2 * (degree - part_size(lambda));
    return std::min(degree, rows);
}

namespace {

std::map<std::vector<int>, std::int64_t>
dominant_scan(int degree, int d, const std::function<std::int64_t(const std::vector<int>&)>& fn) {
    std::vector<Partition> weights = partitions_of(degree, d);
    std::vector<std::int64_t> vals(weights.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < (int)weights.size(); ++i) {
        std::vector<int> w = weights[i];
        w.resize(d, 0);
        vals[i] = fn(w);
    }
    std::map<std::vector<int>, std::int64_t> out;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (vals[i] == 0) continue;
        std::vector<int> w = weights[i];
        w.resize(d, 0);
        out[w] = vals[i];
    }
    return out;
}

std::pair<int, int> two_row(const Partition& lambda) {
    if (lambda.size() > 2)
        throw std::invalid_argument("explicit L2 model handles at most two rows");
    int p = lambda.empty() ? 0 : lambda[0];
    int q = lambda.size() > 1 ? lambda[1] : 0;
    return {p, q};
}

void check_rank(const Partition& lambda, int degree, int d) {
    if (d < required_rank(lambda, degree))
        throw std::invalid_argument("rank " + std::to_string(d) +
                                    " too small for a faithful decomposition; need >= " +
                                    std::to_string(required_rank(lambda, degree)));
}

} // namespace

SchurPoly schur2_character(int p, int q, int degree, int d) {
    if (p < q || q < 0) throw std::invalid_argument("need p >= q >= 0");
    Partition lambda;
    if (p) lambda.push_back(p);
    if (q) lambda.push_back(q);
    check_rank(lambda, degree, d);
    L2Model model(d);
    auto dims = dominant_scan(degree, d, [&](const std::vector<int>& w) -> std::int64_t {
        return (std::int64_t)model.schur_kernel(p, q, w)->size();
    });
    return char_to_schur(dims, d);
}

SchurPoly quotient_character(const Partition& lambda, int degree, int d) {
    auto [p, q] = two_row(lambda);
    if (degree < part_size(lambda)) return {};
    check_rank(lambda, degree, d);
    L2Model model(d);
    auto dims = dominant_scan(degree, d, [&](const std::vector<int>& w) -> std::int64_t {
        auto tgt = model.cell(p, q, w);
        auto tgt_kernel = model.schur_kernel(p, q, w);
        if (tgt_kernel->empty()) return 0;
        // image of ad from one degree below, restricted to the Schur kernel
        std::vector<SparseVec> rows;
        for (int r = 0; r < d; ++r) {
            if (w[r] == 0) continue;
            std::vector<int> wr = w;
            --wr[r];
            auto src = model.cell(p, q, wr);
            auto src_kernel = model.schur_kernel(p, q, wr);
            for (const auto& kv : *src_kernel) {
                SparseVec img;
                for (const auto& [idx, c] : kv)
                    img = sv_axpy(img, -c, model.ad_apply(r, src->basis[idx], *tgt));
                if (!img.empty()) rows.push_back(std::move(img));
            }
        }
        SparseMatrix m((int)rows.size(), (int)tgt->basis.size());
        m.row_data = std::move(rows);
        std::int64_t img_rank = row_echelon_serial(m).rank;
        return (std::int64_t)tgt_kernel->size() - img_rank;
    });
    SchurPoly out = char_to_schur(dims, d);
    if (!out.nonnegative()) throw std::runtime_error("quotient character came out negative");
    return out;
}

SchurPoly ad_kernel_character(const Partition& lambda, int degree, int d) {
    auto [p, q] = two_row(lambda);
    L2Model model(d);
    auto dims = dominant_scan(degree + 1, d, [&](const std::vector<int>& w) -> std::int64_t {
        auto tgt = model.cell(p, q, w);
        std::vector<SparseVec> rows;
        std::int64_t source_dim = 0;
        for (int r = 0; r < d; ++r) {
            if (w[r] == 0) continue;
            std::vector<int> wr = w;
            --wr[r];
            auto src = model.cell(p, q, wr);
            auto src_kernel = model.schur_kernel(p, q, wr);
            source_dim += (std::int64_t)src_kernel->size();
            for (const auto& kv : *src_kernel) {
                SparseVec img;
                for (const auto& [idx, c] : kv)
                    img = sv_axpy(img, -c, model.ad_apply(r, src->basis[idx], *tgt));
                if (!img.empty()) rows.push_back(std::move(img));
            }
        }
        SparseMatrix m((int)rows.size(), (int)tgt->basis.size());
        m.row_data = std::move(rows);
        std::int64_t rk = row_echelon_serial(m).rank;
        return source_dim - rk; // dim ker = source - rank
    });
    return char_to_schur(dims, d);
}

} // namespace hopfact
