#include "hopfact/cokertab.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "hopfact/action.hpp"
#include "hopfact/nilrep.hpp"

namespace hopfact {

std::pair<int, int> modular_dims(int weight) {
    if (weight < 0 || weight % 2 != 0) return {0, 0};
    if (weight == 0) return {1, 0};
    if (weight == 2) return {0, 0};
    int m = weight / 12 + (weight % 12 != 2 ? 1 : 0);
    return {m, m - 1};
}

namespace {

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int e = 1; e <= n; ++e)
        if (n % e == 0) out.push_back(e);
    return out;
}

int moebius(int n) {
    int out = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        out = -out;
    }
    if (n > 1) out = -out;
    return out;
}

int euler_phi(int n) {
    int out = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        out -= out / p;
    }
    if (n > 1) out -= out / n;
    return out;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

std::int64_t witt_dim(int d, int k) {
    if (k < 1) throw std::invalid_argument("witt_dim: k >= 1 required");
    std::int64_t sum = 0;
    for (int e : divisors(k)) sum += moebius(e) * ipow(d, k / e);
    return sum / k;
}

namespace {

// standard bracketing of a Lyndon word: w = uv with v the longest proper
// Lyndon suffix; [w] = [[u],[v]]
std::map<std::vector<int>, std::int64_t> bracket_expand(const std::vector<int>& w) {
    if (w.size() == 1) return {{w, 1}};
    // longest proper suffix that is Lyndon = smallest proper suffix
    size_t split = 1;
    for (size_t i = 1; i < w.size(); ++i) {
        std::vector<int> suf(w.begin() + i, w.end());
        std::vector<int> best(w.begin() + split, w.end());
        if (suf < best) split = i;
    }
    auto left = bracket_expand({w.begin(), w.begin() + split});
    auto right = bracket_expand({w.begin() + split, w.end()});
    std::map<std::vector<int>, std::int64_t> out;
    for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right) {
            std::vector<int> ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            std::vector<int> ba = b;
            ba.insert(ba.end(), a.begin(), a.end());
            out[ab] += ca * cb;
            if ((out[ab]) == 0) out.erase(ab);
            out[ba] -= ca * cb;
            if (out[ba] == 0) out.erase(ba);
        }
    return out;
}

} // namespace

std::vector<HallElement> hall_basis(int d, int k) {
    // Duval's algorithm for Lyndon words of length exactly k
    std::vector<HallElement> out;
    std::vector<int> w{0};
    while (!w.empty()) {
        if ((int)w.size() == k) {
            HallElement h;
            h.lyndon = w;
            h.words = bracket_expand(w);
            out.push_back(std::move(h));
        }
        int n = (int)w.size();
        while ((int)w.size() < k) w.push_back(w[(int)w.size() - n]);
        while (!w.empty() && w.back() == d - 1) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    std::sort(out.begin(), out.end(),
              [](const HallElement& a, const HallElement& b) { return a.lyndon < b.lyndon; });
    return out;
}

std::int64_t d_space_dim(int d, int s) {
    if (s < 0) throw std::invalid_argument("d_space_dim: s >= 0 required");
    return (std::int64_t)d * witt_dim(d, s + 1) - witt_dim(d, s + 2);
}

DSpaceResult d_space_check(int d, int s) {
    DSpaceResult res;
    res.dim_formula = d_space_dim(d, s);
    auto basis = hall_basis(d, s + 1);
    // bracketing V (x) L_{s+1} -> L_{s+2} in word coordinates
    std::map<std::vector<int>, int> word_index;
    auto widx = [&](const std::vector<int>& w) {
        auto it = word_index.find(w);
        if (it == word_index.end())
            it = word_index.emplace(w, (int)word_index.size()).first;
        return it->second;
    };
    std::vector<SparseVec> cols;
    for (int v = 0; v < d; ++v) {
        for (const auto& h : basis) {
            std::map<int, Rational> col;
            for (const auto& [w, c] : h.words) {
                std::vector<int> vw{v};
                vw.insert(vw.end(), w.begin(), w.end());
                std::vector<int> wv = w;
                wv.push_back(v);
                col[widx(vw)] += Rational((long)c);
                col[widx(wv)] -= Rational((long)c);
            }
            SparseVec sv;
            for (const auto& [i, c] : col)
                if (c != 0) sv.emplace_back(i, c);
            cols.push_back(std::move(sv));
        }
    }
    SparseMatrix m((int)cols.size(), (int)word_index.size());
    m.row_data = std::move(cols); // rank(M) = rank(M^T)
    auto ech = row_echelon(m);
    res.bracketing_surjective = ech.rank == witt_dim(d, s + 2);
    res.dim_explicit = (std::int64_t)d * witt_dim(d, s + 1) - ech.rank;
    return res;
}

CyclicWordDims cyclic_word_dims(int d, int k) {
    if (k < 1) throw std::invalid_argument("cyclic_word_dims: k >= 1 required");
    CyclicWordDims res;
    std::int64_t sum = 0;
    for (int e : divisors(k)) sum += (std::int64_t)euler_phi(e) * ipow(d, k / e);
    res.cyclic = sum / k;

    HopfDescriptor desc{HopfKind::TensorAlgebra, d, k};
    QuotientModule qm(ActionContext{desc, 1});
    res.cyclic_explicit = qm.quotient_dim(k);

    // image of (id - S) on the cyclic-word quotient, by explicit rank
    auto data = qm.degree_data(k);
    std::vector<SparseVec> rows;
    for (const auto& tuple : data->basis->tuples) {
        TensorElement t(desc, 1);
        t.add_term(tuple, Rational(1));
        TensorElement diff = tensor_add(t, tensor_scale(tensor_antipode_slot(t, 0), Rational(-1)));
        SparseVec v = tensor_to_coords(qm.quotient_reduce(diff), *data->basis);
        if (!v.empty()) rows.push_back(std::move(v));
    }
    SparseMatrix m((int)rows.size(), (int)data->basis->tuples.size());
    m.row_data = std::move(rows);
    res.antisymmetric = row_echelon(m).rank;
    return res;
}

std::vector<ObstructionEntry> h1_table(int max_module_degree, int degree_span) {
    std::vector<ObstructionEntry> out;
    struct Family {
        Partition lambda;
        std::string kind;
        int weight;
        int form_dim;
    };
    std::vector<Family> families;
    for (int k = 0;; ++k) {
        // even pairs (2k, 2l), cusp forms; odd pairs (2k+1, 2l+1), modular forms
        if (2 * k > max_module_degree && 2 * k + 2 > max_module_degree) break;
        for (int l = 0; l < k; ++l) {
            int weight = 2 * k - 2 * l + 2;
            auto [mdim, sdim] = modular_dims(weight);
            if (2 * k + 2 * l <= max_module_degree && sdim > 0) {
                Partition lam{2 * k};
                if (l > 0) lam.push_back(2 * l);
                families.push_back({lam, "cusp", weight, sdim});
            }
            if (2 * k + 1 + 2 * l + 1 <= max_module_degree && mdim > 0)
                families.push_back({{2 * k + 1, 2 * l + 1}, "modular", weight, mdim});
        }
    }
    for (const auto& fam : families) {
        int base = part_size(fam.lambda);
        int hi = std::min({base + degree_span, 2 * base, max_module_degree});
        for (int deg = base; deg <= hi; ++deg) {
            int d = required_rank(fam.lambda, deg);
            SchurPoly ch = quotient_character(fam.lambda, deg, d);
            for (const auto& [p, m] : ch.terms) {
                ObstructionEntry e;
                e.cokernel_degree = deg + 4;
                e.lambda = p;
                e.form_kind = fam.kind;
                e.weight = fam.weight;
                e.multiplicity = m * fam.form_dim;
                e.module_degree = deg;
                out.push_back(std::move(e));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ObstructionEntry& a, const ObstructionEntry& b) {
        if (a.cokernel_degree != b.cokernel_degree) return a.cokernel_degree < b.cokernel_degree;
        if (PartitionOrder{}(a.lambda, b.lambda)) return true;
        if (PartitionOrder{}(b.lambda, a.lambda)) return false;
        return a.form_kind < b.form_kind;
    });
    return out;
}

std::string table_to_tsv(const std::vector<ObstructionEntry>& entries) {
    std::string out = "cokernel_degree\tlambda\tform_kind\tweight\tmultiplicity\tmodule_degree\n";
    for (const auto& e : entries) {
        out += std::to_string(e.cokernel_degree) + "\t" + format_partition(e.lambda) + "\t" +
               e.form_kind + "\t" + std::to_string(e.weight) + "\t" +
               std::to_string(e.multiplicity) + "\t" + std::to_string(e.module_degree) + "\n";
    }
    return out;
}

std::string table_to_json(const std::vector<ObstructionEntry>& entries, int indent) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries)
        arr.push_back(nlohmann::json{{"cokernel_degree", e.cokernel_degree},
                                     {"lambda", e.lambda},
                                     {"form_kind", e.form_kind},
                                     {"weight", e.weight},
                                     {"multiplicity", e.multiplicity},
                                     {"module_degree", e.module_degree}});
    return arr.dump(indent);
}

} // namespace hopfact
