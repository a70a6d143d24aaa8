#ifndef HOPFACT_ACTION_HPP
#define HOPFACT_ACTION_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hopfact/freegroup.hpp"
#include "hopfact/hopf.hpp"
#include "hopfact/sparse.hpp"

namespace hopfact {

struct ActionContext {
    HopfDescriptor desc;
    int n = 1; // rank of the free group
};

// The substitution formula behind the evaluation isomorphism
// Hom_H(F_n; H) ~ H^{(x)n}: given h in H^{(x)n} and k reduced words,
// returns phi_k(w_1,...,w_k).  The i-th tensor factor is expanded by
// Delta^{K_i - 1} (K_i = occurrences of x_i^{+-1} over all words,
// Delta^{-1} = counit), components are consumed in reading order with the
// antipode at inverse occurrences, and each word multiplies its components.
TensorElement hom_extend(const TensorElement& h, const std::vector<GroupWord>& words);

// Left action of Aut(F_n): act(psi, t) = hom_extend(t, psi^{-1}(x_1..x_n)),
// the inverse taken syntactically from the Nielsen sequence.
TensorElement act(const ActionContext& ctx, const NielsenSeq& aut, const TensorElement& t);
TensorElement act(const ActionContext& ctx, const FreeGroupMap& aut_inverse, const TensorElement& t);

// Conjugation h (*) t = h_(1) t_1 S(h_(2)) (x) ... (x) h_(2n-1) t_n S(h_(2n)).
TensorElement conjugate(const AlgebraElement& h, const TensorElement& t);

// EnvelopingNil2 filtration degree of a tensor: max over terms of the sum of
// per-factor PBW lengths (x exponents + z exponents).
int filtration_degree(const TensorElement& t);

// Ordered basis of the total-degree-d component of H^{(x)n}.
struct TensorBasis {
    std::vector<std::vector<BasisWord>> tuples;
    std::map<std::vector<BasisWord>, int> index;
};
std::shared_ptr<const TensorBasis> tensor_basis(const HopfDescriptor& desc, int n, int deg);

SparseVec tensor_to_coords(const TensorElement& t, const TensorBasis& basis);
TensorElement coords_to_tensor(const SparseVec& v, const HopfDescriptor& desc,
                               const TensorBasis& basis, int arity);

// Per-degree reduced echelon bases of the conjugation subspace
// ~H^{(x)n} = span{ v (*) t : v primitive generator, t basis tensor },
// computed lazily and cached (write-once, safe for concurrent readers).
class QuotientModule {
public:
    explicit QuotientModule(const ActionContext& ctx) : ctx_(ctx) {}

    const ActionContext& context() const { return ctx_; }

    // spanning set reduced to an echelon basis, as tensors
    std::vector<TensorElement> tilde_basis(int degree) const;
    // echelon data plus the ambient basis for the given degree
    struct DegreeData {
        std::shared_ptr<const TensorBasis> basis;
        EchelonResult tilde;
    };
    std::shared_ptr<const DegreeData> degree_data(int degree) const;

    // canonical representative mod ~H^{(x)n}; requires homogeneous input
    TensorElement quotient_reduce(const TensorElement& t) const;
    // dim of the degree-d component of the quotient
    int quotient_dim(int degree) const;

private:
    ActionContext ctx_;
    mutable std::mutex mu_;
    mutable std::map<int, std::shared_ptr<const DegreeData>> cache_;
};

// Matrices of gr(rho_H(aut)) on V_i/V_{i-1} and of the associated
// GL_n(Z) matrix acting on Sym^i(g (x) k^n), over the same ordered basis.
// EnvelopingNil2 only; equality of the two is the comparison test.
std::pair<SparseMatrix, SparseMatrix>
assoc_graded_matrix(const ActionContext& ctx, const NielsenSeq& aut, int i);

// which GL_2(Z) unipotent lift convention the E/F experiment uses
enum class EfConvention {
    LiftA,       // (1 1;0 1) -> x2 |-> x2 x1,  (1 0;1 1) -> x1 |-> x1 x2
    LiftB,       // transpose of LiftA
    GrMatched,   // lifts chosen so that gr(rho) equals the matrix itself
};

struct EfDefectResult {
    AlgebraElement u;           // (id (x) eps)(([[E,F],E] - 2E)(x^3 (x) y^3))
    AlgebraElement r;           // 24 [[x,y],y][[x,y],x] in T(V)
    bool u_nonzero_in_quotient = false;
    bool proportional = false;  // u == scalar * [[x,y],y][[x,y],x] mod [H,H]
    Rational scalar;            // that scalar (0 if not proportional)
    int nilpotency_upper = 0;   // least k with (rho(upper) - id)^k = 0
    int nilpotency_lower = 0;
};

// Builds rho_H of the two unipotent lifts on the total-degree-6 component of
// T(V)^{(x)2} (dim V = 2), takes matrix logs by the finite nilpotent series,
// and evaluates the sl2-defect [[E,F],E] - 2E on x^3 (x) y^3.
EfDefectResult ef_defect(EfConvention conv = EfConvention::LiftA);

} // namespace hopfact

#endif
