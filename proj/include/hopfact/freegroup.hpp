#ifndef HOPFACT_FREEGROUP_HPP
#define HOPFACT_FREEGROUP_HPP

#include <string>
#include <vector>

namespace hopfact {

// Freely reduced word in F_n: letters +g / -g for x_g / x_g^{-1}, g 1-based.
using GroupWord = std::vector<int>;

GroupWord free_reduce(const GroupWord& w);
GroupWord word_inverse(const GroupWord& w);
GroupWord word_concat(const GroupWord& a, const GroupWord& b); // reduced

// "x1 x2^-1 x1"; "1" or "" is the empty word
GroupWord parse_word(const std::string& s);
std::string format_word(const GroupWord& w);

// Endomorphism of F_n given by the images of the generators.
struct FreeGroupMap {
    int n = 0;
    std::vector<GroupWord> images;

    static FreeGroupMap identity(int n);
    bool operator==(const FreeGroupMap& o) const { return n == o.n && images == o.images; }
};

GroupWord apply(const FreeGroupMap& f, const GroupWord& w);
// (f o g)(x_i) = f(g(x_i))
FreeGroupMap compose(const FreeGroupMap& f, const FreeGroupMap& g);
// x_i -> g^{-1} x_i g
FreeGroupMap inner(const GroupWord& g, int n);

// Elementary Nielsen automorphisms (indices 1-based):
//   Swap(i,j)      x_i <-> x_j
//   Invert(i)      x_i -> x_i^{-1}
//   LeftMul(i,j)   x_i -> x_j^{-1} x_i
struct NielsenGen {
    enum Kind { Swap, Invert, LeftMul } kind;
    int i = 0, j = 0;

    static NielsenGen swap(int i, int j) { return {Swap, i, j}; }
    static NielsenGen invert(int i) { return {Invert, i, 0}; }
    static NielsenGen left_mul(int i, int j) { return {LeftMul, i, j}; }
};

using NielsenSeq = std::vector<NielsenGen>;

FreeGroupMap nielsen_gen_map(const NielsenGen& g, int n);
// [g1, g2, ..., gk] denotes g1 o g2 o ... o gk (gk applied first)
FreeGroupMap nielsen_to_map(const NielsenSeq& seq, int n);
// syntactic inverse: reverse the sequence, invert each generator
// (LeftMul(i,j)^{-1} = Invert(j) LeftMul(i,j) Invert(j))
NielsenSeq inverse_of_sequence(const NielsenSeq& seq);

// eta: x1 -> x2^{-1} x1, x2 -> x2^{-1}; an involution
NielsenSeq eta_sequence();

// "swap 1 2" / "invert 2" / "leftmul 1 2"
NielsenGen parse_nielsen_gen(const std::string& s);
NielsenSeq parse_nielsen_seq(const std::vector<std::string>& items);
std::string format_nielsen_gen(const NielsenGen& g);

} // namespace hopfact

#endif
