#include "hopfact/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfact {

void SymPoly::add_term(const BasisWord& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) terms.emplace(m, c);
    else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

namespace {

void require_nil2(const HopfDescriptor& d, const char* who) {
    if (d.kind != HopfKind::EnvelopingNil2)
        throw std::invalid_argument(std::string(who) + " needs an EnvelopingNil2 descriptor");
}

// generator ids 0..d-1 are x's, d.. are z's
AlgebraElement gen_element(const HopfDescriptor& desc, int gid) {
    if (gid < desc.dim_v) return generator(desc, gid);
    auto [i, j] = desc.z_pair(gid - desc.dim_v);
    return z_generator(desc, i, j);
}

std::vector<int> monomial_letters(const HopfDescriptor& desc, const BasisWord& m) {
    std::vector<int> letters;
    for (int g = 0; g < (int)m.data.size(); ++g)
        for (int e = 0; e < m.data[g]; ++e) letters.push_back(g);
    return letters;
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace

AlgebraElement symmetrize(const SymPoly& p) {
    require_nil2(p.desc, "symmetrize");
    AlgebraElement out(p.desc);
    for (const auto& [m, c] : p.terms) {
        std::vector<int> letters = monomial_letters(p.desc, m);
        if (letters.empty()) {
            out = add(out, unit(p.desc, c));
            continue;
        }
        // distinct orderings, each weighted by (prod mult!)/i!
        mpz_class repeats(1);
        for (int g = 0; g < (int)m.data.size(); ++g)
            if (m.data[g] > 1) repeats *= factorial(m.data[g]);
        Rational w = c * Rational(repeats) / Rational(factorial((unsigned)letters.size()));
        std::sort(letters.begin(), letters.end());
        AlgebraElement sum(p.desc);
        do {
            AlgebraElement prod = unit(p.desc);
            for (int g : letters) prod = mul(prod, gen_element(p.desc, g));
            sum = add(sum, prod);
        } while (std::next_permutation(letters.begin(), letters.end()));
        out = add(out, scale(sum, w));
    }
    return out;
}

SymPoly pbw_inverse(const AlgebraElement& u, int i) {
    require_nil2(u.desc, "pbw_inverse");
    if (i < 1) throw std::invalid_argument("pbw_inverse: i must be >= 1");
    SymPoly out(u.desc);
    TensorElement dk = coproduct_iter(u, i - 1);
    for (const auto& [slots, c] : dk.terms) {
        bool has_unit = false;
        for (const auto& w : slots)
            if (is_unit_word(u.desc, w)) { has_unit = true; break; }
        if (has_unit) continue; // killed by (id - unit.counit)
        BasisWord mono = unit_word(u.desc);
        for (const auto& w : slots) {
            int len = 0;
            for (int e : w.data) len += e;
            if (len != 1)
                throw std::invalid_argument("pbw_inverse: element does not lie in U_i");
            for (int g = 0; g < (int)w.data.size(); ++g) mono.data[g] += w.data[g];
        }
        out.add_term(mono, c);
    }
    Rational norm = Rational(1) / Rational(factorial((unsigned)i));
    for (auto& [m, c] : out.terms) c *= norm;
    // drop exact zeros that may have cancelled before normalization
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = (it->second == 0) ? out.terms.erase(it) : std::next(it);
    return out;
}

StraightenConstants straighten_constants(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("straighten_constants: bad degrees");
    HopfDescriptor desc{HopfKind::EnvelopingNil2, 2, n + k + 2};
    const int zidx = desc.dim_v; // exponent slot of z12
    const int imax = std::min(n, k);

    // sigma(X^{n-i} Y^{k-i} Z^i) for i = 0..imax, expressed in the PBW words
    // x^{n-j} y^{k-j} z^j of the (n,k) multigraded component
    auto word_at = [&](int j) {
        BasisWord w = unit_word(desc);
        w.data[0] = n - j;
        w.data[1] = k - j;
        w.data[zidx] = j;
        return w;
    };
    std::vector<AlgebraElement> sig;
    for (int i = 0; i <= imax; ++i) {
        SymPoly p(desc);
        p.add_term(word_at(i), Rational(1));
        sig.push_back(symmetrize(p));
    }

    auto solve = [&](const AlgebraElement& target) {
        // solve sum_i coeff_i sig[i] = target in the (imax+1)-dim component
        std::vector<std::vector<Rational>> m(imax + 1, std::vector<Rational>(imax + 2, Rational(0)));
        for (int j = 0; j <= imax; ++j) {
            BasisWord w = word_at(j);
            for (int i = 0; i <= imax; ++i) {
                auto it = sig[i].terms.find(w);
                if (it != sig[i].terms.end()) m[j][i] = it->second;
            }
            auto it = target.terms.find(w);
            if (it != target.terms.end()) m[j][imax + 1] = it->second;
        }
        // little dense Gauss solve
        std::vector<Rational> sol(imax + 1, Rational(0));
        for (int col = 0; col <= imax; ++col) {
            int piv = -1;
            for (int r = col; r <= imax; ++r)
                if (m[r][col] != 0) { piv = r; break; }
            if (piv < 0) throw std::logic_error("sigma monomials are dependent");
            std::swap(m[col], m[piv]);
            Rational lead = m[col][col];
            for (auto& v : m[col]) v /= lead;
            for (int r = 0; r <= imax; ++r) {
                if (r == col || m[r][col] == 0) continue;
                Rational f = m[r][col];
                for (int cc = 0; cc <= imax + 1; ++cc) m[r][cc] -= f * m[col][cc];
            }
        }
        for (int i = 0; i <= imax; ++i) sol[i] = m[i][imax + 1];
        return sol;
    };

    AlgebraElement X = generator(desc, 0), Y = generator(desc, 1);
    AlgebraElement xn = unit(desc), yk = unit(desc);
    for (int t = 0; t < n; ++t) xn = mul(xn, X);
    for (int t = 0; t < k; ++t) yk = mul(yk, Y);

    auto cs = solve(mul(xn, yk));
    auto ds = solve(mul(yk, xn));
    StraightenConstants out;
    out.leading_c = cs[0];
    out.leading_d = ds[0];
    out.c.assign(cs.begin() + 1, cs.end());
    out.d.assign(ds.begin() + 1, ds.end());
    return out;
}

} // namespace hopfact
