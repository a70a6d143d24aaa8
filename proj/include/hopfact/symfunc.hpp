#ifndef HOPFACT_SYMFUNC_HPP
#define HOPFACT_SYMFUNC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfact/rational.hpp"

namespace hopfact {

// weakly decreasing positive parts; {} is the empty partition
using Partition = std::vector<int>;

int part_size(const Partition& p);
Partition conjugate(const Partition& p);
bool is_partition(const Partition& p);
// drop trailing zeros; throws if the result is not weakly decreasing positive
Partition normalize_partition(std::vector<int> p);
std::vector<Partition> partitions_of(int n, int max_parts = -1);
Partition parse_partition(const std::string& s); // "2,1"
std::string format_partition(const Partition& p);

// Output order: larger |lambda| first, then lexicographically larger first.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        int sa = part_size(a), sb = part_size(b);
        if (sa != sb) return sa > sb;
        return a > b;
    }
};

// Integer combination of Schur functions (virtual characters allowed).
struct SchurPoly {
    std::map<Partition, std::int64_t, PartitionOrder> terms;

    void add(const Partition& p, std::int64_t mult);
    bool is_zero() const { return terms.empty(); }
    bool nonnegative() const;
    std::int64_t coeff(const Partition& p) const;
    bool operator==(const SchurPoly& o) const { return terms == o.terms; }
};

SchurPoly schur(const Partition& p, std::int64_t mult = 1);
SchurPoly sp_add(const SchurPoly& a, const SchurPoly& b);
SchurPoly sp_sub(const SchurPoly& a, const SchurPoly& b);
std::string format_schur(const SchurPoly& s);
std::string schur_to_json(const SchurPoly& s, int indent = -1);

// s_mu * h_k by the Pieri rule (horizontal strips)
SchurPoly pieri_h(const SchurPoly& a, int k);
// Littlewood-Richardson product via the Jacobi-Trudi h-expansion
SchurPoly lr_mult(const SchurPoly& a, const SchurPoly& b);
// c^lambda_{mu nu}
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Sym^k(wedge^2 V) = sum of s_lambda over |lambda| = 2k with all column
// lengths even (the set A_k).
SchurPoly sym_of_wedge2(int k);
std::vector<Partition> even_column_partitions(int k); // A_k
// S_nu(wedge^2 V): Jacobi-Trudi determinant with entries h_m[e_2]
SchurPoly schur_of_wedge2(const Partition& nu);

// all (mu, nu, c^lambda_{mu nu}) with |mu| + |nu| = |lambda|, c > 0
std::vector<std::tuple<Partition, Partition, std::int64_t>> schur_of_sum(const Partition& lambda);

// per-degree GL(V) content; degree(mu, nu) = |mu| + 2|nu|
using GradedCharacter = std::map<int, SchurPoly>;
GradedCharacter schur_of_L2(const Partition& lambda);

// B_m: rows (a), 1 <= a <= m, stacked over mu in A_{m-a} when legal
std::vector<Partition> enumerate_Bm(int m);

// dim of the irreducible GL_d module with highest weight lambda
mpz_class weyl_dim(const Partition& lambda, int d);

// number of SSYT of shape lambda and content mu (mu padded/truncated to fit)
std::int64_t kostka(const Partition& lambda, const std::vector<int>& mu);

// Decompose a torus character given by dominant-weight multiplicities
// (weights sorted weakly decreasing, length <= d) into Schur functions by
// iterated highest-weight subtraction.  Valid for partitions with <= d rows.
// Throws on a negative multiplicity.
SchurPoly char_to_schur(const std::map<std::vector<int>, std::int64_t>& dominant_weights, int d);
// Same, accepting arbitrary exponent vectors; checks permutation symmetry.
SchurPoly char_to_schur_full(const std::map<std::vector<int>, std::int64_t>& weights, int d);

} // namespace hopfact

#endif
