#ifndef HOPFACT_COKERTAB_HPP
#define HOPFACT_COKERTAB_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfact/rational.hpp"
#include "hopfact/symfunc.hpp"

namespace hopfact {

// dimensions of level-1 modular forms M_w and cusp forms S_w
std::pair<int, int> modular_dims(int weight);

// dim of the degree-k part of the free Lie algebra on d generators
std::int64_t witt_dim(int d, int k);

// Lyndon-word Hall basis of L_k(V); each element carries its expansion into
// tensor-algebra words (coefficients are integers).
struct HallElement {
    std::vector<int> lyndon;                         // 0-based letters
    std::map<std::vector<int>, std::int64_t> words;  // bracket expansion
};
std::vector<HallElement> hall_basis(int d, int k);

struct DSpaceResult {
    std::int64_t dim_formula;   // d * witt(d, s+1) - witt(d, s+2)
    std::int64_t dim_explicit;  // kernel rank of the bracketing matrix
    bool bracketing_surjective; // rank equals witt(d, s+2)
};
std::int64_t d_space_dim(int d, int s);
DSpaceResult d_space_check(int d, int s); // explicit kernel cross-check

struct CyclicWordDims {
    std::int64_t cyclic;        // necklace count = dim degree-k of T(V)/[.,.]
    std::int64_t cyclic_explicit; // same, from the conjugation quotient
    std::int64_t antisymmetric; // dim of the image of (id - S) on cyclic words
};
CyclicWordDims cyclic_word_dims(int d, int k);

struct ObstructionEntry {
    int cokernel_degree = 0;
    Partition lambda;
    std::string form_kind; // "modular" | "cusp"
    int weight = 0;
    std::int64_t multiplicity = 0;
    int module_degree = 0;
};

// H^1(GL_2(Z); quotient of Sym(L2 (x) k^2)) assembled degree by degree:
// pairs (2k, 2l) pick up cusp forms of weight 2k-2l+2, pairs (2k+1, 2l+1)
// modular forms of the same weight; cokernel degree = module degree + 4.
// Module degrees run from |lambda| to min(|lambda| + degree_span,
// 2|lambda|, max_module_degree); complete tabulation at all degrees is
// exponentially expensive in exact arithmetic, and the span covers every
// closed-form family reported here.
std::vector<ObstructionEntry> h1_table(int max_module_degree, int degree_span = 1);

std::string table_to_tsv(const std::vector<ObstructionEntry>& entries);
std::string table_to_json(const std::vector<ObstructionEntry>& entries, int indent = -1);

} // namespace hopfact

#endif
