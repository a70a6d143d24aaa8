#ifndef HOPFACT_HOPF_HPP
#define HOPFACT_HOPF_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hopfact/rational.hpp"

namespace hopfact {

// Two concrete cocommutative graded Hopf algebras:
//   TensorAlgebra   T(V), dim V generators of degree 1, basis = words in the
//                   generators.
//   EnvelopingNil2  U(L2) for the free class-2 nilpotent Lie algebra on
//                   x_1..x_d plus central z_ij = [x_i, x_j] (i < j) of
//                   degree 2.  Basis = PBW-normal monomials
//                   x_1^{a_1}..x_d^{a_d} z_ij^{c_ij}, z's in lex (i,j) order.
enum class HopfKind { TensorAlgebra, EnvelopingNil2 };

struct HopfDescriptor {
    HopfKind kind = HopfKind::TensorAlgebra;
    int dim_v = 1;
    int truncation = 8; // terms of degree > truncation are dropped

    bool operator==(const HopfDescriptor& o) const {
        return kind == o.kind && dim_v == o.dim_v && truncation == o.truncation;
    }
    bool operator!=(const HopfDescriptor& o) const { return !(*this == o); }

    int z_count() const { return dim_v * (dim_v - 1) / 2; }
    // lex position of the pair (i,j), 0 <= i < j < dim_v
    int z_index(int i, int j) const;
    std::pair<int, int> z_pair(int idx) const;
};

// For TensorAlgebra: data = sequence of 0-based generator indices.
// For EnvelopingNil2: data = x exponents followed by z exponents
// (size dim_v + z_count, constant per descriptor).
struct BasisWord {
    std::vector<int> data;

    bool operator<(const BasisWord& o) const {
        if (data.size() != o.data.size()) return data.size() < o.data.size();
        return data < o.data;
    }
    bool operator==(const BasisWord& o) const { return data == o.data; }
};

int degree(const HopfDescriptor& desc, const BasisWord& w);
bool is_unit_word(const HopfDescriptor& desc, const BasisWord& w);
BasisWord unit_word(const HopfDescriptor& desc);

// all basis words of the given total degree, in a fixed deterministic order
std::vector<BasisWord> words_of_degree(const HopfDescriptor& desc, int deg);

struct AlgebraElement {
    HopfDescriptor desc;
    std::map<BasisWord, Rational> terms;

    explicit AlgebraElement(const HopfDescriptor& d = {}) : desc(d) {}

    void add_term(const BasisWord& w, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const AlgebraElement& o) const {
        return desc == o.desc && terms == o.terms;
    }
};

AlgebraElement unit(const HopfDescriptor& desc, const Rational& c = Rational(1));
// x_i (0-based)
AlgebraElement generator(const HopfDescriptor& desc, int i);
// z_ij, EnvelopingNil2 only
AlgebraElement z_generator(const HopfDescriptor& desc, int i, int j);
// all primitive generators with their degrees (x's, then z's for nil2)
std::vector<std::pair<AlgebraElement, int>> primitive_generators(const HopfDescriptor& desc);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Rational& c);
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement antipode(const AlgebraElement& a);
Rational counit(const AlgebraElement& a);
AlgebraElement lie_bracket(const AlgebraElement& a, const AlgebraElement& b);

// -1 if inhomogeneous, else common total degree (unit word has degree 0)
int homogeneous_degree(const AlgebraElement& a);

struct TensorElement {
    HopfDescriptor desc;
    int arity = 1;
    std::map<std::vector<BasisWord>, Rational> terms;

    TensorElement() = default;
    TensorElement(const HopfDescriptor& d, int n) : desc(d), arity(n) {}

    void add_term(const std::vector<BasisWord>& ws, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const TensorElement& o) const {
        return desc == o.desc && arity == o.arity && terms == o.terms;
    }
};

TensorElement tensor_of(const std::vector<AlgebraElement>& factors);
TensorElement as_tensor(const AlgebraElement& a); // arity 1
TensorElement tensor_add(const TensorElement& a, const TensorElement& b);
TensorElement tensor_scale(const TensorElement& a, const Rational& c);
// componentwise product in H^{(x)n}
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);
// apply the antipode to one tensor slot
TensorElement tensor_antipode_slot(const TensorElement& t, int slot);
TensorElement tensor_swap(const TensorElement& t, int s1, int s2);
int tensor_total_degree(const std::vector<BasisWord>& ws, const HopfDescriptor& desc);
// -1 if inhomogeneous
int tensor_homogeneous_degree(const TensorElement& t);

// Delta^k, left-iterated, as an arity-(k+1) tensor.  k = 0 returns a itself.
TensorElement coproduct_iter(const AlgebraElement& a, int k);

// Streams the terms of Delta^{k-1}(w) as (k-tuple of words, coefficient)
// without materializing the tensor; k >= 1.
void coproduct_terms(
    const HopfDescriptor& desc, const BasisWord& w, int k,
    const std::function<void(const std::vector<BasisWord>&, const Rational&)>& emit);

// m^{k-1}: multiply all slots of an arity-k tensor together
AlgebraElement multiply_out(const TensorElement& t);

// JSON wire format (decimal-string rationals, 1-based generator indices)
std::string to_json(const AlgebraElement& a, int indent = -1);
std::string to_json(const TensorElement& t, int indent = -1);
AlgebraElement algebra_from_json(const std::string& text);
TensorElement tensor_from_json(const std::string& text);

} // namespace hopfact

#endif
