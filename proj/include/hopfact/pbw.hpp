#ifndef HOPFACT_PBW_HPP
#define HOPFACT_PBW_HPP

#include <map>
#include <vector>

#include "hopfact/hopf.hpp"

namespace hopfact {

// Element of Sym(g) for the primitive Lie algebra g of an EnvelopingNil2
// descriptor.  Monomials are commutative and share the exponent-vector
// layout of BasisWord (x exponents, then z exponents).
struct SymPoly {
    HopfDescriptor desc;
    std::map<BasisWord, Rational> terms;

    explicit SymPoly(const HopfDescriptor& d = {}) : desc(d) {}
    void add_term(const BasisWord& m, const Rational& c);
};

// sigma(X_1...X_i) = (1/i!) sum over orderings, straightened in U
AlgebraElement symmetrize(const SymPoly& p);

// pi_i: U_i -> Sym^i(g) via (id - unit.counit)^{(x)i} Delta^{i-1}, projected
// to g^{(x)i} and read as a symmetric tensor; normalized so pi_i o sigma_i = id.
// Throws if u does not lie in U_i.
SymPoly pbw_inverse(const AlgebraElement& u, int i);

// Straightening constants of the Heisenberg algebra (EnvelopingNil2, d = 2):
//   X^n Y^k = sigma(X^n Y^k) + sum_{i>0} c[i-1] sigma(X^{n-i} Y^{k-i} Z^i)
//   Y^k X^n = sigma(X^n Y^k) + sum_{i>0} d[i-1] sigma(X^{n-i} Y^{k-i} Z^i)
struct StraightenConstants {
    std::vector<Rational> c;
    std::vector<Rational> d;
    Rational leading_c; // coefficient of sigma(X^n Y^k) in X^n Y^k
    Rational leading_d;
};
StraightenConstants straighten_constants(int n, int k);

} // namespace hopfact

#endif
