#ifndef HOPFACT_NILREP_HPP
#define HOPFACT_NILREP_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hopfact/sparse.hpp"
#include "hopfact/symfunc.hpp"

namespace hopfact {

// Weight-space models of Sym^p(L2) (x) Sym^q(L2) for L2 = V + wedge^2 V,
// dim V = d.  Generators: ids 0..d-1 are x_i (degree 1, weight e_i), the
// rest are z_ij, i < j in lex order (degree 2, weight e_i + e_j, central,
// [x_i, x_j] = z_ij).  A monomial is a sorted multiset of generator ids; the
// two-factor model is spanned by monomial pairs.  Everything is torus
// equivariant, so ranks are computed cell by cell per weight.
class L2Model {
public:
    explicit L2Model(int d);

    int dim() const { return d_; }
    int gen_count() const { return d_ + d_ * (d_ - 1) / 2; }
    int gen_degree(int g) const { return g < d_ ? 1 : 2; }
    std::vector<int> gen_weight(int g) const;
    int z_id(int i, int j) const; // 0 <= i < j < d

    using Monomial = std::vector<int>;           // sorted generator ids
    using PairMon = std::pair<Monomial, Monomial>;
    using Weight = std::vector<int>;             // length d

    struct Cell {
        std::vector<PairMon> basis;
        std::map<PairMon, int> index;
    };

    // degree must equal sum(weight); the cell is empty otherwise anyway
    std::shared_ptr<const Cell> cell(int p, int q, const Weight& w) const;

    // basis of ker(Sym^p (x) Sym^q -> Sym^{p+1} (x) Sym^{q-1}) on the cell,
    // i.e. the weight cell of the Schur functor S_(p,q); the whole cell
    // when q = 0
    std::shared_ptr<const std::vector<SparseVec>> schur_kernel(int p, int q, const Weight& w) const;

    // the factor-moving map; rows = (p+1, q-1) cell of the same weight
    SparseMatrix pieri_map_matrix(int p, int q, int degree, const Weight& w) const;

    // ad = sum_r x_r acting by the Leibniz rule diagonally across the two
    // factors: V (x) [degree piece] -> [degree+1 piece] at the target
    // weight.  Source columns run over r then cell(p, q, w - e_r).
    SparseMatrix adjoint_matrix(int p, int q, int degree, const Weight& w) const;

    // ad(x_r) on a single basis pair, in target-cell coordinates
    SparseVec ad_apply(int r, const PairMon& pm, const Cell& target) const;

private:
    int d_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, int, Weight>, std::shared_ptr<const Cell>> cells_;
    mutable std::map<std::tuple<int, int, Weight>, std::shared_ptr<const std::vector<SparseVec>>> kernels_;
};

// Smallest rank that sees every candidate partition of S_lambda(L2) at this
// degree (row bound len(lambda) + 2 (degree - |lambda|), capped at degree).
int required_rank(const Partition& lambda, int degree);

// Character of the degree piece of S_(p,q)(L2) from explicit per-weight
// kernel dimensions; must agree with schur_of_L2 at that degree.
SchurPoly schur2_character(int p, int q, int degree, int d);

// Character of coker(ad) on S_lambda(L2) (lambda with at most two rows) in
// the given degree: the degree piece minus the image of ad from one degree
// below, by per-weight ranks.
SchurPoly quotient_character(const Partition& lambda, int degree, int d);

// Character of ker(ad: V (x) S_lambda(L2)[degree] -> S_lambda(L2)[degree+1]).
SchurPoly ad_kernel_character(const Partition& lambda, int degree, int d);

} // namespace hopfact

#endif
