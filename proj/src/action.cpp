#include "hopfact/action.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hopfact/pbw.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfact {

namespace {

AlgebraElement single(const HopfDescriptor& desc, const BasisWord& w) {
    AlgebraElement e(desc);
    e.terms.emplace(w, Rational(1));
    return e;
}

} // namespace

TensorElement hom_extend(const TensorElement& h, const std::vector<GroupWord>& words) {
    const auto& desc = h.desc;
    const int n = h.arity;
    const int k = (int)words.size();
    if (k == 0) throw std::invalid_argument("hom_extend: need at least one word");

    // total occurrences of each generator across all words
    std::vector<int> occ(n, 0);
    for (int j = 0; j < k; ++j) {
        for (int letter : words[j]) {
            int g = std::abs(letter);
            if (g < 1 || g > n) throw std::invalid_argument("word generator exceeds tensor arity");
            ++occ[g - 1];
        }
    }

    TensorElement out(desc, k);
    for (const auto& [tuple, coeff] : h.terms) {
        // factors with no occurrence contribute their counit
        Rational c0 = coeff;
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i)
            if (occ[i] == 0 && !is_unit_word(desc, tuple[i])) dead = true;
        if (dead) continue;

        // One coproduct expansion per factor; Sweedler components are then
        // consumed in reading order.  Terms that outgrow the truncation die
        // inside mul, which bounds the blow-up.
        std::vector<std::vector<std::pair<std::vector<BasisWord>, Rational>>> expansions(n);
        for (int i = 0; i < n; ++i) {
            int K = occ[i];
            if (K == 0) continue;
            coproduct_terms(desc, tuple[i], K,
                            [&](const std::vector<BasisWord>& slots, const Rational& cc) {
                                expansions[i].emplace_back(slots, cc);
                            });
        }
        // choice of one expansion term per factor; assemble per-word products
        std::function<void(int, std::vector<const std::pair<std::vector<BasisWord>, Rational>*>&)>
            choose = [&](int i, std::vector<const std::pair<std::vector<BasisWord>, Rational>*>& picked) {
                if (i == n) {
                    Rational c = c0;
                    for (auto* p : picked)
                        if (p) c *= p->second;
                    // consume components in reading order per word
                    std::vector<int> used(n, 0);
                    std::vector<AlgebraElement> prods(k, unit(desc));
                    for (int j = 0; j < k; ++j) {
                        for (int letter : words[j]) {
                            int g = std::abs(letter) - 1;
                            const BasisWord& comp = picked[g]->first[used[g]++];
                            AlgebraElement e = single(desc, comp);
                            if (letter < 0) e = antipode(e);
                            prods[j] = mul(prods[j], e);
                            if (prods[j].is_zero()) return;
                        }
                    }
                    // distribute multi-term word products into pure tuples
                    std::vector<std::pair<std::vector<BasisWord>, Rational>> acc = {{{}, c}};
                    for (int j = 0; j < k; ++j) {
                        std::vector<std::pair<std::vector<BasisWord>, Rational>> next;
                        for (const auto& [ws, cc] : acc)
                            for (const auto& [w, cw] : prods[j].terms) {
                                auto ws2 = ws;
                                ws2.push_back(w);
                                next.emplace_back(std::move(ws2), cc * cw);
                            }
                        acc = std::move(next);
                        if (acc.empty()) return;
                    }
                    for (auto& [ws, cc] : acc) out.add_term(ws, cc);
                    return;
                }
                if (occ[i] == 0) {
                    picked.push_back(nullptr);
                    choose(i + 1, picked);
                    picked.pop_back();
                    return;
                }
                for (const auto& term : expansions[i]) {
                    picked.push_back(&term);
                    choose(i + 1, picked);
                    picked.pop_back();
                }
            };
        std::vector<const std::pair<std::vector<BasisWord>, Rational>*> picked;
        choose(0, picked);
    }
    return out;
}

TensorElement act(const ActionContext& ctx, const FreeGroupMap& aut_inverse, const TensorElement& t) {
    if (t.arity != ctx.n) throw std::invalid_argument("act: tensor arity mismatch");
    if (aut_inverse.n != ctx.n) throw std::invalid_argument("act: rank mismatch");
    return hom_extend(t, aut_inverse.images);
}

TensorElement act(const ActionContext& ctx, const NielsenSeq& aut, const TensorElement& t) {
    return act(ctx, nielsen_to_map(inverse_of_sequence(aut), ctx.n), t);
}

TensorElement conjugate(const AlgebraElement& h, const TensorElement& t) {
    if (h.desc != t.desc) throw std::invalid_argument("conjugate: descriptor mismatch");
    const auto& desc = h.desc;
    const int n = t.arity;
    TensorElement out(desc, n);
    for (const auto& [hw, hc] : h.terms) {
        coproduct_terms(desc, hw, 2 * n, [&](const std::vector<BasisWord>& slots, const Rational& cc) {
            for (const auto& [tuple, tc] : t.terms) {
                std::vector<std::pair<std::vector<BasisWord>, Rational>> acc = {{{}, hc * cc * tc}};
                for (int f = 0; f < n && !acc.empty(); ++f) {
                    AlgebraElement w =
                        mul(mul(single(desc, slots[2 * f]), single(desc, tuple[f])),
                            antipode(single(desc, slots[2 * f + 1])));
                    std::vector<std::pair<std::vector<BasisWord>, Rational>> next;
                    for (const auto& [ws, c] : acc)
                        for (const auto& [ww, cw] : w.terms) {
                            auto ws2 = ws;
                            ws2.push_back(ww);
                            next.emplace_back(std::move(ws2), c * cw);
                        }
                    acc = std::move(next);
                }
                for (auto& [ws, c] : acc) out.add_term(ws, c);
            }
        });
    }
    return out;
}

int filtration_degree(const TensorElement& t) {
    if (t.desc.kind != HopfKind::EnvelopingNil2)
        throw std::invalid_argument("filtration_degree is defined for EnvelopingNil2");
    int best = 0;
    for (const auto& [tuple, c] : t.terms) {
        int f = 0;
        for (const auto& w : tuple)
            for (int e : w.data) f += e;
        best = std::max(best, f);
    }
    return best;
}

std::shared_ptr<const TensorBasis> tensor_basis(const HopfDescriptor& desc, int n, int deg) {
    auto out = std::make_shared<TensorBasis>();
    // compositions of deg into n parts, lex order, times per-degree word lists
    std::vector<std::vector<BasisWord>> word_lists(deg + 1);
    for (int m = 0; m <= deg; ++m) word_lists[m] = words_of_degree(desc, m);
    std::vector<int> comp(n, 0);
    std::function<void(int, int)> rec = [&](int slot, int rem) {
        if (slot == n - 1) {
            comp[slot] = rem;
            std::vector<BasisWord> tuple(n);
            std::function<void(int)> fill = [&](int f) {
                if (f == n) {
                    out->index.emplace(tuple, (int)out->tuples.size());
                    out->tuples.push_back(tuple);
                    return;
                }
                for (const auto& w : word_lists[comp[f]]) {
                    tuple[f] = w;
                    fill(f + 1);
                }
            };
            fill(0);
            return;
        }
        for (int take = 0; take <= rem; ++take) {
            comp[slot] = take;
            rec(slot + 1, rem - take);
        }
    };
    rec(0, deg);
    return out;
}

SparseVec tensor_to_coords(const TensorElement& t, const TensorBasis& basis) {
    SparseVec v;
    for (const auto& [tuple, c] : t.terms) {
        auto it = basis.index.find(tuple);
        if (it == basis.index.end())
            throw std::invalid_argument("tensor term outside the degree basis");
        v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end());
    return v;
}

TensorElement coords_to_tensor(const SparseVec& v, const HopfDescriptor& desc,
                               const TensorBasis& basis, int arity) {
    TensorElement t(desc, arity);
    for (const auto& [i, c] : v) t.add_term(basis.tuples[i], c);
    return t;
}

std::shared_ptr<const QuotientModule::DegreeData> QuotientModule::degree_data(int degree) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(degree);
        if (it != cache_.end()) return it->second;
    }
    auto data = std::make_shared<DegreeData>();
    data->basis = tensor_basis(ctx_.desc, ctx_.n, degree);
    const auto prims = primitive_generators(ctx_.desc);

    // spanning set v (*) t over primitive generators and complementary-degree
    // basis tensors; each vector is an independent computation
    struct Job {
        const AlgebraElement* prim;
        std::shared_ptr<const TensorBasis> sub;
        int tuple_idx;
    };
    std::vector<Job> jobs;
    for (const auto& [prim, pdeg] : prims) {
        if (pdeg > degree) continue;
        auto sub = tensor_basis(ctx_.desc, ctx_.n, degree - pdeg);
        for (int ti = 0; ti < (int)sub->tuples.size(); ++ti)
            jobs.push_back({&prim, sub, ti});
    }
    SparseMatrix span((int)jobs.size(), (int)data->basis->tuples.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int j = 0; j < (int)jobs.size(); ++j) {
        TensorElement t(ctx_.desc, ctx_.n);
        t.add_term(jobs[j].sub->tuples[jobs[j].tuple_idx], Rational(1));
        span.row_data[j] = tensor_to_coords(conjugate(*jobs[j].prim, t), *data->basis);
    }
    data->tilde = row_echelon(span);

    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(degree, std::move(data));
    return it->second;
}

std::vector<TensorElement> QuotientModule::tilde_basis(int degree) const {
    auto data = degree_data(degree);
    std::vector<TensorElement> out;
    for (const auto& row : data->tilde.rref.row_data)
        out.push_back(coords_to_tensor(row, ctx_.desc, *data->basis, ctx_.n));
    return out;
}

TensorElement QuotientModule::quotient_reduce(const TensorElement& t) const {
    if (t.desc != ctx_.desc || t.arity != ctx_.n)
        throw std::invalid_argument("quotient_reduce: context mismatch");
    int deg = tensor_homogeneous_degree(t);
    if (deg < 0) throw std::invalid_argument("quotient_reduce: inhomogeneous input");
    if (t.terms.empty()) return t;
    auto data = degree_data(deg);
    SparseVec v = tensor_to_coords(t, *data->basis);
    SparseVec red = reduce_modulo(data->tilde, v, (int)data->basis->tuples.size());
    return coords_to_tensor(red, ctx_.desc, *data->basis, ctx_.n);
}

int QuotientModule::quotient_dim(int degree) const {
    auto data = degree_data(degree);
    return (int)data->basis->tuples.size() - data->tilde.rank;
}

// ------------------------------------------------------- associated graded

namespace {

// monomial in Sym^i(g (x) k^n): per-factor sorted generator lists
using SymMonomial = std::vector<std::vector<int>>;

struct SymBasis {
    std::vector<SymMonomial> monos;
    std::map<SymMonomial, int> index;
};

SymBasis sym_basis(int ngen, int n, int i) {
    SymBasis out;
    std::vector<int> comp(n, 0);
    SymMonomial mono(n);
    std::function<void(int)> fill_factor;
    std::function<void(int, int)> rec = [&](int slot, int rem) {
        if (slot == n) {
            if (rem == 0) {
                out.index.emplace(mono, (int)out.monos.size());
                out.monos.push_back(mono);
            }
            return;
        }
        // multisets of each size for this factor
        std::function<void(int, int, int)> pick = [&](int size, int min_gen, int depth) {
            if (depth == size) {
                rec(slot + 1, rem - size);
                return;
            }
            for (int g = min_gen; g < ngen; ++g) {
                mono[slot].push_back(g);
                pick(size, g, depth + 1);
                mono[slot].pop_back();
            }
        };
        for (int size = 0; size <= rem; ++size) pick(size, 0, 0);
    };
    rec(0, i);
    return out;
}

} // namespace

std::pair<SparseMatrix, SparseMatrix>
assoc_graded_matrix(const ActionContext& ctx, const NielsenSeq& aut, int i) {
    if (ctx.desc.kind != HopfKind::EnvelopingNil2)
        throw std::invalid_argument("assoc_graded_matrix needs EnvelopingNil2");
    const auto& desc = ctx.desc;
    const int d = desc.dim_v;
    const int ngen = d + desc.z_count();
    SymBasis basis = sym_basis(ngen, ctx.n, i);
    const int dim = (int)basis.monos.size();

    FreeGroupMap psi_inv = nielsen_to_map(inverse_of_sequence(aut), ctx.n);

    SparseMatrix left(dim, dim), right(dim, dim);
    std::vector<SparseVec> left_cols(dim), right_cols(dim);

    // gr(rho_H): sigma per factor, act, keep filtration-degree-i terms
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int col = 0; col < dim; ++col) {
        const SymMonomial& mono = basis.monos[col];
        std::vector<AlgebraElement> factors;
        for (int f = 0; f < ctx.n; ++f) {
            SymPoly p(desc);
            BasisWord m = unit_word(desc);
            for (int g : mono[f]) ++m.data[g];
            p.terms.emplace(m, Rational(1));
            factors.push_back(symmetrize(p));
        }
        TensorElement t = act(ctx, psi_inv, tensor_of(factors));
        std::map<int, Rational> colmap;
        for (const auto& [tuple, c] : t.terms) {
            int filt = 0;
            for (const auto& w : tuple)
                for (int e : w.data) filt += e;
            if (filt > i) throw std::logic_error("action raised the filtration degree");
            if (filt < i) continue;
            SymMonomial m(ctx.n);
            for (int f = 0; f < ctx.n; ++f)
                for (int g = 0; g < ngen; ++g)
                    for (int e = 0; e < tuple[f].data[g]; ++e) m[f].push_back(g);
            colmap[basis.index.at(m)] += c;
        }
        SparseVec cv;
        for (const auto& [r, c] : colmap)
            if (c != 0) cv.emplace_back(r, c);
        left_cols[col] = std::move(cv);
    }

    // natural GL_n(Z) action of M, M[f'][f] = signed count of x_f in psi^{-1}(x_{f'})
    std::vector<std::vector<long>> M(ctx.n, std::vector<long>(ctx.n, 0));
    for (int r = 0; r < ctx.n; ++r)
        for (int letter : psi_inv.images[r])
            M[r][std::abs(letter) - 1] += letter > 0 ? 1 : -1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int col = 0; col < dim; ++col) {
        const SymMonomial& mono = basis.monos[col];
        // expand prod over variables (g, f) of sum_{f'} M[f'][f] (g, f')
        std::map<SymMonomial, Rational> acc;
        acc.emplace(SymMonomial(ctx.n), Rational(1));
        for (int f = 0; f < ctx.n; ++f) {
            for (int g : mono[f]) {
                std::map<SymMonomial, Rational> next;
                for (const auto& [m, c] : acc)
                    for (int f2 = 0; f2 < ctx.n; ++f2) {
                        if (M[f2][f] == 0) continue;
                        SymMonomial m2 = m;
                        m2[f2].push_back(g);
                        std::sort(m2[f2].begin(), m2[f2].end());
                        next[m2] += c * Rational(M[f2][f]);
                    }
                acc = std::move(next);
            }
        }
        SparseVec cv;
        for (const auto& [m, c] : acc)
            if (c != 0) cv.emplace_back(basis.index.at(m), c);
        std::sort(cv.begin(), cv.end());
        right_cols[col] = std::move(cv);
    }

    for (int col = 0; col < dim; ++col) {
        for (const auto& [r, c] : left_cols[col]) left.row_data[r].emplace_back(col, c);
        for (const auto& [r, c] : right_cols[col]) right.row_data[r].emplace_back(col, c);
    }
    return {std::move(left), std::move(right)};
}

// ------------------------------------------------------------ E/F defect

namespace {

// apply a column-major sparse matrix to a sparse vector
SparseVec apply_cols(const std::vector<SparseVec>& cols, const SparseVec& v) {
    SparseVec out;
    for (const auto& [j, c] : v) out = sv_axpy(out, -c, cols[j]);
    return out;
}

// columns of rho(psi) - id on the degree-6 basis, plus nilpotency order
std::vector<SparseVec> action_minus_id(const TensorBasis& basis, const HopfDescriptor& desc,
                                       const std::vector<GroupWord>& inv_words) {
    const int dim = (int)basis.tuples.size();
    std::vector<SparseVec> cols(dim);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int j = 0; j < dim; ++j) {
        TensorElement t(desc, 2);
        t.add_term(basis.tuples[j], Rational(1));
        SparseVec v = tensor_to_coords(hom_extend(t, inv_words), basis);
        cols[j] = sv_axpy(v, Rational(1), SparseVec{{j, Rational(1)}});
    }
    return cols;
}

// log(id + N) column by column; records the largest power needed
std::vector<SparseVec> log_columns(const std::vector<SparseVec>& ncols, int* nilpotency) {
    const int dim = (int)ncols.size();
    std::vector<SparseVec> out(dim);
    int worst = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
#endif
    for (int j = 0; j < dim; ++j) {
        SparseVec acc;
        SparseVec cur{{j, Rational(1)}};
        int k = 0;
        while (true) {
            cur = apply_cols(ncols, cur);
            if (cur.empty()) break;
            ++k;
            if (k > dim) throw std::logic_error("rho - id is not nilpotent on the component");
            Rational f = Rational(k % 2 ? 1 : -1, k);
            acc = sv_axpy(acc, -f, cur);
        }
        worst = std::max(worst, k + 1);
        out[j] = std::move(acc);
    }
    if (nilpotency) *nilpotency = worst;
    return out;
}

} // namespace

EfDefectResult ef_defect(EfConvention conv) {
    HopfDescriptor desc{HopfKind::TensorAlgebra, 2, 6};
    ActionContext ctx{desc, 2};

    // inverse-image words defining rho(upper) and rho(lower)
    std::vector<GroupWord> up, lo;
    switch (conv) {
    case EfConvention::LiftA: // upper: x2 -> x2 x1, lower: x1 -> x1 x2
        up = {parse_word("x1"), parse_word("x2 x1^-1")};
        lo = {parse_word("x1 x2^-1"), parse_word("x2")};
        break;
    case EfConvention::LiftB:
        up = {parse_word("x1 x2^-1"), parse_word("x2")};
        lo = {parse_word("x1"), parse_word("x2 x1^-1")};
        break;
    case EfConvention::GrMatched: // gr(rho(upper)) = (1 1;0 1), gr(rho(lower)) = (1 0;1 1)
        up = {parse_word("x2 x1"), parse_word("x2")};
        lo = {parse_word("x1"), parse_word("x1 x2")};
        break;
    }

    auto basis = tensor_basis(desc, 2, 6);
    EfDefectResult res;
    auto nu = action_minus_id(*basis, desc, up);
    auto nl = action_minus_id(*basis, desc, lo);
    auto ecols = log_columns(nu, &res.nilpotency_upper);
    auto fcols = log_columns(nl, &res.nilpotency_lower);

    // x^3 (x) y^3
    std::vector<BasisWord> x3y3 = {BasisWord{{0, 0, 0}}, BasisWord{{1, 1, 1}}};
    SparseVec v0{{basis->index.at(x3y3), Rational(1)}};

    auto E = [&](const SparseVec& v) { return apply_cols(ecols, v); };
    auto F = [&](const SparseVec& v) { return apply_cols(fcols, v); };
    // [[E,F],E] = 2 EFE - FEE - EEF
    SparseVec w = sv_scale(E(F(E(v0))), Rational(2));
    w = sv_axpy(w, Rational(1), F(E(E(v0))));
    w = sv_axpy(w, Rational(1), E(E(F(v0))));
    w = sv_axpy(w, Rational(2), E(v0));

    // (id (x) eps): keep terms whose second slot is the unit word
    AlgebraElement u(desc);
    for (const auto& [idx, c] : w) {
        const auto& tuple = basis->tuples[idx];
        if (tuple[1].data.empty()) u.add_term(tuple[0], c);
    }
    res.u = u;

    AlgebraElement x = generator(desc, 0), y = generator(desc, 1);
    AlgebraElement base = mul(lie_bracket(lie_bracket(x, y), y), lie_bracket(lie_bracket(x, y), x));
    res.r = scale(base, Rational(24));

    QuotientModule qm(ActionContext{desc, 1});
    TensorElement qu = qm.quotient_reduce(as_tensor(u));
    TensorElement qb = qm.quotient_reduce(as_tensor(base));
    res.u_nonzero_in_quotient = !qu.is_zero();
    // u == scalar * base mod [H,H]?
    res.proportional = false;
    res.scalar = 0;
    if (qu.is_zero()) {
        res.proportional = true;
    } else if (!qb.is_zero()) {
        auto it = qb.terms.begin();
        Rational s = qu.terms.count(it->first) ? qu.terms.at(it->first) / it->second : Rational(0);
        if (s != 0 && qu == tensor_scale(qb, s)) {
            res.proportional = true;
            res.scalar = s;
        }
    }
    return res;
}

} // namespace hopfact
