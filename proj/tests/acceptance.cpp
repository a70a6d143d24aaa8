// Acceptance suite: one line per criterion, exact checks, wall-clock limits
// where stated.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hopfact/action.hpp"
#include "hopfact/cokertab.hpp"
#include "hopfact/nilrep.hpp"
#include "hopfact/pbw.hpp"
#include "hopfact/symfunc.hpp"
#include "hopfact/verify.hpp"

using namespace hopfact;

namespace {

int failures = 0;

void criterion(int num, const std::string& name, double limit_seconds,
               const std::function<std::pair<bool, std::string>()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        auto [pass, msg] = fn();
        ok = pass;
        detail = msg;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    std::printf("%s  criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::pair<bool, std::string> from_suite(const std::string& name, VerifyOptions opt) {
    VerifyReport rep = run_suite(name, opt);
    std::string detail;
    for (const auto& c : rep.checks)
        if (!c.pass) detail += c.name + (c.detail.empty() ? "" : " [" + c.detail + "]") + "; ";
    return {rep.all_pass(), detail};
}

AlgebraElement word_el(const HopfDescriptor& d, const std::vector<int>& letters) {
    AlgebraElement a(d);
    BasisWord w;
    w.data = letters;
    a.add_term(w, Rational(1));
    return a;
}

// independent oracle for criterion 2: iterated binary order-preserving
// splits assemble the target Sweedler expression literally
using OWord = std::vector<int>;
std::map<std::vector<OWord>, long> iterate_delta(const OWord& w, int slots) {
    std::map<std::vector<OWord>, long> cur;
    cur[{w}] = 1;
    for (int s = 1; s < slots; ++s) {
        std::map<std::vector<OWord>, long> next;
        for (const auto& [ws, c] : cur) {
            const OWord& last = ws.back();
            int n = (int)last.size();
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                OWord a, b;
                for (int i = 0; i < n; ++i)
                    (mask >> i & 1 ? a : b).push_back(last[i]);
                std::vector<OWord> nw(ws.begin(), ws.end() - 1);
                nw.push_back(a);
                nw.push_back(b);
                next[nw] += c;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace

int main() {
    criterion(1, "Hopf axiom suite, T(V) and U(L2), dim 2, degree <= 5", 60.0, [] {
        VerifyOptions opt;
        opt.dim = 2;
        opt.max_degree = 5;
        return from_suite("hopf-axioms", opt);
    });

    criterion(2, "worked action example phi_2(x2^2 x3, x2 x3^-1 x1) vs Sweedler oracle", 0, [] {
        HopfDescriptor TV3{HopfKind::TensorAlgebra, 3, 8};
        TensorElement h =
            tensor_of({word_el(TV3, {0}), word_el(TV3, {1}), word_el(TV3, {0, 1})});
        TensorElement got =
            hom_extend(h, {parse_word("x2 x2 x3"), parse_word("x2 x3^-1 x1")});
        TensorElement expect(TV3, 2);
        OWord h1{0}, h2{1}, h3{0, 1};
        for (const auto& [c2s, c2] : iterate_delta(h2, 3))
            for (const auto& [c3s, c3] : iterate_delta(h3, 2)) {
                OWord s3(c3s[1].rbegin(), c3s[1].rend());
                long sgn = c3s[1].size() % 2 ? -1 : 1;
                OWord w1 = c2s[0];
                w1.insert(w1.end(), c2s[1].begin(), c2s[1].end());
                w1.insert(w1.end(), c3s[0].begin(), c3s[0].end());
                OWord w2 = c2s[2];
                w2.insert(w2.end(), s3.begin(), s3.end());
                w2.insert(w2.end(), h1.begin(), h1.end());
                BasisWord b1, b2;
                b1.data = w1;
                b2.data = w2;
                expect.add_term({b1, b2}, Rational(sgn * c2 * c3));
            }
        bool ok = got == expect && !got.is_zero();
        return std::pair{ok, std::string(ok ? "" : "expansion mismatch")};
    });

    criterion(3, "Aut/Out relation suite on degree <= 4 tensors", 120.0, [] {
        VerifyOptions opt;
        opt.dim = 2;
        opt.max_degree = 4;
        return from_suite("relations-outf2", opt);
    });

    criterion(4, "inner automorphisms act trivially on the quotient", 0, [] {
        HopfDescriptor desc{HopfKind::TensorAlgebra, 2, 5};
        QuotientModule qm(ActionContext{desc, 2});
        for (const GroupWord& g : {GroupWord{1}, GroupWord{2}, GroupWord{-1}, GroupWord{-2}}) {
            FreeGroupMap conj = inner(g, 2);
            for (int deg = 0; deg <= 4; ++deg) {
                auto basis = tensor_basis(desc, 2, deg);
                for (const auto& tuple : basis->tuples) {
                    TensorElement t(desc, 2);
                    t.add_term(tuple, Rational(1));
                    TensorElement diff =
                        tensor_add(hom_extend(t, conj.images), tensor_scale(t, Rational(-1)));
                    if (!qm.quotient_reduce(diff).is_zero())
                        return std::pair{false, "g = " + format_word(g)};
                }
            }
        }
        return std::pair{true, std::string{}};
    });

    criterion(5, "associated graded equals the GL_2(Z) action, i <= 4", 0, [] {
        HopfDescriptor desc{HopfKind::EnvelopingNil2, 2, 10};
        ActionContext ctx{desc, 2};
        std::vector<std::pair<std::string, NielsenSeq>> gens = {
            {"swap12", {NielsenGen::swap(1, 2)}},
            {"invert1", {NielsenGen::invert(1)}},
            {"eta", eta_sequence()}};
        for (const auto& [name, g] : gens)
            for (int i = 1; i <= 4; ++i) {
                auto [lhs, rhs] = assoc_graded_matrix(ctx, g, i);
                if (!(lhs == rhs))
                    return std::pair{false, name + " at i = " + std::to_string(i)};
            }
        return std::pair{true, std::string{}};
    });

    criterion(6, "class-2 binomial formula for eta, i+j <= 5", 0, [] {
        VerifyOptions opt;
        opt.max_degree = 4; // checks all i + j <= max_degree + 1
        return from_suite("class2", opt);
    });

    criterion(7, "E/F defect equals 24 [[x,y],y][[x,y],x] mod commutators", 300.0, [] {
        // Faithful check of the stated criterion for both lift conventions.
        // The structural parts (proportionality to the commutator element and
        // nonvanishing in the quotient) hold; the measured constants are
        // reported when the stated value 24 is not reproduced.
        std::string detail;
        bool ok = true;
        for (auto [conv, name] : {std::pair{EfConvention::LiftA, "lift-a"},
                                  std::pair{EfConvention::LiftB, "lift-b"},
                                  std::pair{EfConvention::GrMatched, "gr-matched"}}) {
            EfDefectResult r = ef_defect(conv);
            QuotientModule qm(ActionContext{r.u.desc, 1});
            bool matches24 =
                qm.quotient_reduce(as_tensor(add(r.u, scale(r.r, Rational(-1))))).is_zero();
            bool structural = r.proportional && r.u_nonzero_in_quotient;
            if (!(matches24 && structural)) ok = false;
            detail += std::string(name) + ": u = " + rat_str(r.scalar) +
                      " * [[x,y],y][[x,y],x] mod [H,H]" + (structural ? "" : " (degenerate)") +
                      "; ";
        }
        if (!ok) detail += "no convention reproduces the constant 24";
        return std::pair{ok, detail};
    });

    criterion(8, "PBW inverse, coalgebra morphism, straightening constants", 0, [] {
        return from_suite("pbw", {});
    });

    criterion(9, "symmetric function goldens", 0, [] {
        if (!(sym_of_wedge2(2) == sp_add(schur({2, 2}), schur({1, 1, 1, 1}))))
            return std::pair{false, std::string("Sym^2(wedge^2 V)")};
        if (!(schur_of_wedge2({1, 1}) == schur({2, 1, 1})))
            return std::pair{false, std::string("S_(1,1)(wedge^2 V)")};
        SchurPoly w21;
        w21.add({3, 2, 1}, 1);
        w21.add({2, 2, 1, 1}, 1);
        w21.add({2, 1, 1, 1, 1}, 1);
        if (!(schur_of_wedge2({2, 1}) == w21))
            return std::pair{false, std::string("S_(2,1)(wedge^2 V)")};
        SchurPoly total;
        for (const auto& [deg, poly] : schur_of_L2({2, 1})) total = sp_add(total, poly);
        SchurPoly expect;
        expect.add({1, 1, 1, 1, 1}, 1);
        expect.add({2, 1, 1, 1}, 2);
        expect.add({3, 2}, 1);
        expect.add({2, 2, 1}, 2);
        expect.add({3, 1}, 1);
        expect.add({2, 1, 1}, 2);
        expect.add({3, 1, 1}, 1);
        expect.add({1, 1, 1, 1}, 1);
        expect.add({2, 2}, 1);
        expect.add({2, 1}, 1);
        expect.add({3, 2, 1}, 1);
        expect.add({2, 2, 1, 1}, 1);
        expect.add({2, 1, 1, 1, 1}, 1);
        if (!(total == expect))
            return std::pair{false, std::string("S_(2,1)(V + wedge^2 V) 13-term list")};
        return std::pair{true, std::string{}};
    });

    criterion(10, "adjoint-map kernels (lem:ad) at rank 5", 0, [] {
        for (const Partition& lam : {Partition{1, 1}, Partition{2, 1}, Partition{2, 2}})
            if (!ad_kernel_character(lam, part_size(lam), 5).is_zero())
                return std::pair{false, "not injective on " + format_partition(lam)};
        for (int n = 1; n <= 4; ++n)
            if (!(ad_kernel_character({n}, n, 5) == schur({n + 1})))
                return std::pair{false, "kernel at (n) = (" + std::to_string(n) + ")"};
        return std::pair{true, std::string{}};
    });

    criterion(11, "five-part degree lemma by explicit quotient characters", 900.0, [] {
        bool ok = true;
        std::string detail;
        auto expect_eq = [&](const std::string& part, const Partition& lam, int deg, int d,
                             const SchurPoly& want) {
            SchurPoly got = quotient_character(lam, deg, d);
            if (got == want) return;
            ok = false;
            detail += part + " at " + format_partition(lam) + " degree " + std::to_string(deg) +
                      ": computed " + format_schur(got) + "; ";
        };
        // (a)
        for (int p : {2, 3, 4}) expect_eq("(a)", {p}, p + 1, 5, schur({p - 1, 1, 1}));
        // (b)
        for (int p : {3, 4}) {
            SchurPoly want;
            want.add({p, 1, 1}, 1);
            want.add({p - 1, 2, 1}, 1);
            want.add({p - 1, 1, 1, 1}, 1);
            expect_eq("(b)", {p, 1}, p + 2, 6, want);
        }
        // (c)
        {
            SchurPoly want42;
            want42.add({5, 1, 1}, 1);
            want42.add({4, 2, 1}, 1);
            want42.add({3, 3, 1}, 1);
            want42.add({4, 1, 1, 1}, 1);
            want42.add({3, 2, 1, 1}, 1);
            expect_eq("(c)", {4, 2}, 7, 5, want42);
            SchurPoly want53;
            want53.add({6, 2, 1}, 1);
            want53.add({5, 3, 1}, 1);
            want53.add({4, 4, 1}, 1);
            want53.add({5, 2, 1, 1}, 1);
            want53.add({4, 3, 1, 1}, 1);
            expect_eq("(c)", {5, 3}, 9, 5, want53);
        }
        // (d)
        for (int p : {2, 3}) expect_eq("(d)", {p, p}, 2 * p + 1, 5, schur({p + 1, p - 1, 1}));
        // (e)
        for (int p : {2, 3}) {
            SchurPoly want;
            want.add({p + 1, p - 1}, 1);
            want.add({p + 1, p - 2, 1}, 1);
            want.add({p, p - 1, 1}, 1);
            expect_eq("(e)", {p, p - 1}, 2 * p, 6, want);
        }
        if (!ok) detail += "parts (a)-(c) as stated; (d),(e) differ from the stated formulas";
        return std::pair{ok, detail};
    });

    criterion(12, "obstruction table landmarks and corollary closed forms", 900.0, [] {
        auto table = h1_table(12);
        int count_911 = 0;
        for (const auto& e : table) {
            if (e.cokernel_degree != e.module_degree + 4)
                return std::pair{false, std::string("degree shift broken")};
            if (e.lambda == Partition{9, 1, 1} && e.form_kind == "cusp") {
                ++count_911;
                if (!(e.weight == 12 && e.multiplicity == 1 && e.cokernel_degree == 15))
                    return std::pair{false, std::string("[9,1,1] cusp entry malformed")};
            }
            if (e.weight < 4) return std::pair{false, std::string("entry with weight < 4")};
        }
        if (count_911 != 1) return std::pair{false, std::string("[9,1,1] cusp multiplicity wrong")};
        // lowest cusp entry among the corollary-(1) shapes [m,1,1]
        int lowest_cusp_311 = 1 << 20;
        for (const auto& e : table)
            if (e.form_kind == "cusp" && e.lambda.size() == 3 && e.lambda[1] == 1 &&
                e.lambda[2] == 1)
                lowest_cusp_311 = std::min(lowest_cusp_311, e.cokernel_degree);
        if (lowest_cusp_311 != 15)
            return std::pair{false, std::string("lowest [m,1,1] cusp entry is not degree 15")};
        // the weight-4 modular triple at cokernel degree 9
        for (const Partition& lam :
             {Partition{3, 1, 1}, Partition{2, 2, 1}, Partition{2, 1, 1, 1}}) {
            bool found = false;
            for (const auto& e : table)
                if (e.lambda == lam && e.form_kind == "modular" && e.weight == 4 &&
                    e.cokernel_degree == 9 && e.multiplicity == 1)
                    found = true;
            if (!found)
                return std::pair{false, "missing weight-4 entry " + format_partition(lam)};
        }
        // corollary closed forms for all weights <= 16
        for (int k = 1; 2 * k + 2 <= 16; ++k) {
            auto [mdim, sdim] = modular_dims(2 * k + 2);
            if (sdim > 0) {
                // [2k-1, 1, 1] (x) S_{2k+2} from (2k, 0) at module degree 2k+1
                Partition lam{2 * k};
                SchurPoly got = quotient_character(lam, 2 * k + 1, required_rank(lam, 2 * k + 1));
                if (!(got == schur({2 * k - 1, 1, 1})))
                    return std::pair{false, "corollary (1) fails at k = " + std::to_string(k)};
            }
            if (mdim > 0) {
                Partition lam{2 * k + 1, 1};
                SchurPoly got = quotient_character(lam, 2 * k + 3, required_rank(lam, 2 * k + 3));
                SchurPoly want;
                want.add({2 * k + 1, 1, 1}, 1);
                want.add({2 * k, 2, 1}, 1);
                want.add({2 * k, 1, 1, 1}, 1);
                if (!(got == want))
                    return std::pair{false, "corollary (2) fails at k = " + std::to_string(k)};
            }
        }
        return std::pair{true, std::string{}};
    });

    criterion(13, "dimension utilities", 0, [] {
        if (witt_dim(2, 3) != 2) return std::pair{false, std::string("witt(2,3)")};
        if (witt_dim(4, 3) != 20) return std::pair{false, std::string("witt(4,3)")};
        if (d_space_dim(4, 1) != 4) return std::pair{false, std::string("dspace(4,1)")};
        auto r = d_space_check(4, 1);
        if (r.dim_explicit != 4 || !r.bracketing_surjective)
            return std::pair{false, std::string("dspace(4,1) explicit")};
        if (cyclic_word_dims(2, 3).cyclic != 4)
            return std::pair{false, std::string("cyclic(2,3)")};
        for (int d = 1; d <= 3; ++d)
            for (int k = 1; k <= 6; ++k) {
                auto c = cyclic_word_dims(d, k);
                if (c.cyclic != c.cyclic_explicit)
                    return std::pair{false, "cyclic formula/explicit disagree at d = " +
                                                std::to_string(d) + ", k = " + std::to_string(k)};
            }
        if (modular_dims(12) != std::pair{2, 1})
            return std::pair{false, std::string("modular(12)")};
        return std::pair{true, std::string{}};
    });

    criterion(14, "cross-pipeline: explicit model vs symmetric functions", 0, [] {
        return from_suite("cross-pipeline", {});
    });

    std::printf("%d of 14 criteria passed\n", 14 - failures);
    return failures == 0 ? 0 : 1;
}
