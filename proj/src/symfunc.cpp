#include "hopfact/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hopfact {

int part_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    for (int col = 0; col < p[0]; ++col) {
        int len = 0;
        for (int r : p)
            if (r > col) ++len;
        out.push_back(len);
    }
    return out;
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

Partition normalize_partition(std::vector<int> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (!is_partition(p)) throw std::invalid_argument("not a partition");
    return p;
}

std::vector<Partition> partitions_of(int n, int max_parts) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (max_parts >= 0 && (int)cur.size() >= max_parts) return;
        for (int next = std::min(rem, maxpart); next >= 1; --next) {
            cur.push_back(next);
            rec(rem - next, next);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition parse_partition(const std::string& s) {
    Partition p;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        p.push_back(std::stoi(tok));
    }
    return normalize_partition(p);
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out.empty() ? std::string("0") : out;
}

void SchurPoly::add(const Partition& p, std::int64_t mult) {
    if (mult == 0) return;
    auto it = terms.find(p);
    if (it == terms.end()) terms.emplace(p, mult);
    else {
        it->second += mult;
        if (it->second == 0) terms.erase(it);
    }
}

bool SchurPoly::nonnegative() const {
    for (const auto& [p, m] : terms)
        if (m < 0) return false;
    return true;
}

std::int64_t SchurPoly::coeff(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? 0 : it->second;
}

SchurPoly schur(const Partition& p, std::int64_t mult) {
    SchurPoly s;
    s.add(p, mult);
    return s;
}

SchurPoly sp_add(const SchurPoly& a, const SchurPoly& b) {
    SchurPoly out = a;
    for (const auto& [p, m] : b.terms) out.add(p, m);
    return out;
}

SchurPoly sp_sub(const SchurPoly& a, const SchurPoly& b) {
    SchurPoly out = a;
    for (const auto& [p, m] : b.terms) out.add(p, -m);
    return out;
}

std::string format_schur(const SchurPoly& s) {
    if (s.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, m] : s.terms) {
        if (!first) out += " + ";
        first = false;
        if (m != 1) out += std::to_string(m) + "*";
        out += "[" + format_partition(p) + "]";
    }
    return out;
}

std::string schur_to_json(const SchurPoly& s, int indent) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, m] : s.terms)
        terms.push_back(nlohmann::json{{"lambda", p}, {"mult", m}});
    return nlohmann::json{{"terms", terms}}.dump(indent);
}

SchurPoly pieri_h(const SchurPoly& a, int k) {
    if (k == 0) return a;
    SchurPoly out;
    for (const auto& [lam, mult] : a.terms) {
        // horizontal strips: mu_i in [lam_i, lam_{i-1}], one extra row allowed
        int rows = (int)lam.size();
        Partition mu(rows + 1, 0);
        std::function<void(int, int)> rec = [&](int row, int rem) {
            if (row == rows + 1) {
                if (rem == 0) {
                    Partition m = mu;
                    while (!m.empty() && m.back() == 0) m.pop_back();
                    out.add(m, mult);
                }
                return;
            }
            int lo = row < rows ? lam[row] : 0;
            int hi = row == 0 ? (rows ? lam[0] : 0) + rem : lam[row - 1];
            for (int v = lo; v <= std::min(hi, lo + rem); ++v) {
                mu[row] = v;
                rec(row + 1, rem - (v - lo));
                mu[row] = 0;
            }
        };
        rec(0, k);
    }
    return out;
}

namespace {

// signed h-monomials of the Jacobi-Trudi expansion of s_nu
std::vector<std::pair<std::vector<int>, int>> jacobi_trudi_h(const Partition& nu) {
    std::vector<std::pair<std::vector<int>, int>> out;
    int r = (int)nu.size();
    if (r == 0) {
        out.push_back({{}, 1});
        return out;
    }
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // sign of the permutation
        int sign = 1;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        std::vector<int> hs;
        bool dead = false;
        for (int i = 0; i < r; ++i) {
            int m = nu[i] - i + perm[i]; // h_{nu_i - i + j}, zero-based i and j
            if (m < 0) { dead = true; break; }
            if (m > 0) hs.push_back(m);
        }
        if (!dead) out.push_back({std::move(hs), sign});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

SchurPoly lr_mult(const SchurPoly& a, const SchurPoly& b) {
    SchurPoly out;
    for (const auto& [nu, bm] : b.terms) {
        SchurPoly acc;
        for (const auto& [hs, sign] : jacobi_trudi_h(nu)) {
            SchurPoly cur = a;
            for (int m : hs) cur = pieri_h(cur, m);
            for (const auto& [p, c] : cur.terms) acc.add(p, c * sign);
        }
        for (const auto& [p, c] : acc.terms) out.add(p, c * bm);
    }
    return out;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return lr_mult(schur(mu), schur(nu)).coeff(lambda);
}

std::vector<Partition> even_column_partitions(int k) {
    std::vector<Partition> out;
    for (const auto& p : partitions_of(2 * k)) {
        Partition conj = conjugate(p);
        bool even = std::all_of(conj.begin(), conj.end(), [](int c) { return c % 2 == 0; });
        if (even) out.push_back(p);
    }
    return out;
}

SchurPoly sym_of_wedge2(int k) {
    if (k < 0) throw std::invalid_argument("sym_of_wedge2: negative degree");
    SchurPoly out;
    if (k == 0) {
        out.add({}, 1);
        return out;
    }
    for (const auto& p : even_column_partitions(k)) out.add(p, 1);
    return out;
}

SchurPoly schur_of_wedge2(const Partition& nu) {
    SchurPoly out;
    for (const auto& [hs, sign] : jacobi_trudi_h(nu)) {
        SchurPoly cur = schur(Partition{});
        for (int m : hs) cur = lr_mult(cur, sym_of_wedge2(m));
        for (const auto& [p, c] : cur.terms) out.add(p, c * sign);
    }
    return out;
}

std::vector<std::tuple<Partition, Partition, std::int64_t>> schur_of_sum(const Partition& lambda) {
    std::vector<std::tuple<Partition, Partition, std::int64_t>> out;
    int n = part_size(lambda);
    // mu must fit inside lambda
    std::vector<Partition> mus;
    Partition cur;
    std::function<void(int)> rec = [&](int row) {
        if (row == (int)lambda.size()) {
            mus.push_back(normalize_partition(cur));
            return;
        }
        int hi = std::min(lambda[row], row > 0 && !cur.empty() ? cur[row - 1] : lambda[row]);
        // allow stopping early: entries may be zero
        for (int v = 0; v <= hi; ++v) {
            cur.push_back(v);
            rec(row + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(mus.begin(), mus.end());
    mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
    for (const auto& mu : mus) {
        for (const auto& nu : partitions_of(n - part_size(mu))) {
            std::int64_t c = lr_coefficient(lambda, mu, nu);
            if (c > 0) out.emplace_back(mu, nu, c);
        }
    }
    return out;
}

GradedCharacter schur_of_L2(const Partition& lambda) {
    GradedCharacter out;
    for (const auto& [mu, nu, c] : schur_of_sum(lambda)) {
        SchurPoly piece = lr_mult(schur(mu), schur_of_wedge2(nu));
        int deg = part_size(mu) + 2 * part_size(nu);
        for (const auto& [p, m] : piece.terms) out[deg].add(p, m * c);
    }
    return out;
}

std::vector<Partition> enumerate_Bm(int m) {
    if (m < 1) throw std::invalid_argument("enumerate_Bm: m >= 1 required");
    std::vector<Partition> out;
    for (int a = 1; a <= m; ++a) {
        for (const auto& mu : even_column_partitions(m - a)) {
            if (!mu.empty() && mu[0] > a) continue; // illegal stacking
            Partition p;
            p.push_back(a);
            p.insert(p.end(), mu.begin(), mu.end());
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), PartitionOrder{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

mpz_class weyl_dim(const Partition& lambda, int d) {
    if ((int)lambda.size() > d) return 0;
    std::vector<long> l(d, 0);
    for (size_t i = 0; i < lambda.size(); ++i) l[i] = lambda[i];
    mpz_class num(1), den(1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            num *= l[i] - l[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

std::int64_t kostka(const Partition& lambda, const std::vector<int>& mu) {
    // SSYT of shape lambda with content mu: fill row by row; state = previous
    // row's column values, rows weakly increase, columns strictly increase
    int rows = (int)lambda.size();
    if (std::accumulate(mu.begin(), mu.end(), 0) != part_size(lambda)) return 0;
    if (rows == 0) return 1;
    int maxe = (int)mu.size();
    std::vector<int> rem(mu);
    std::int64_t count = 0;
    // prev[c] = entry above the cell in column c (0 for the first row)
    std::vector<std::vector<int>> tableau(rows);
    std::function<void(int)> fill_row = [&](int row) {
        if (row == rows) {
            ++count;
            return;
        }
        int len = lambda[row];
        tableau[row].assign(len, 0);
        std::function<void(int, int)> cell = [&](int col, int min_entry) {
            if (col == len) {
                fill_row(row + 1);
                return;
            }
            int above = row > 0 ? tableau[row - 1][col] : 0;
            int lo = std::max(min_entry, above + 1);
            for (int e = lo; e <= maxe; ++e) {
                if (rem[e - 1] == 0) continue;
                --rem[e - 1];
                tableau[row][col] = e;
                cell(col + 1, e);
                ++rem[e - 1];
            }
        };
        cell(0, 1);
    };
    fill_row(0);
    return count;
}

SchurPoly char_to_schur(const std::map<std::vector<int>, std::int64_t>& dominant_weights, int d) {
    // working copy keyed lexicographically (largest last)
    std::map<std::vector<int>, std::int64_t> work;
    for (const auto& [w, m] : dominant_weights) {
        if ((int)w.size() > d) throw std::invalid_argument("weight longer than rank");
        std::vector<int> key(w);
        key.resize(d, 0);
        if (!std::is_sorted(key.rbegin(), key.rend()))
            throw std::invalid_argument("char_to_schur: weight not dominant");
        if (m != 0) work[key] += m;
    }
    SchurPoly out;
    while (!work.empty()) {
        auto it = std::prev(work.end()); // lex-largest = a highest weight
        std::vector<int> hw = it->first;
        std::int64_t mult = it->second;
        if (mult < 0) throw std::runtime_error("char_to_schur: negative multiplicity at weight " +
                                               format_partition(Partition(hw.begin(), hw.end())));
        for (int v : hw)
            if (v < 0) throw std::invalid_argument("char_to_schur: negative weight entry");
        Partition lambda(hw.begin(), hw.end());
        while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
        out.add(lambda, mult);
        // subtract mult * (dominant weights of s_lambda)
        for (const auto& mu : partitions_of(part_size(lambda), d)) {
            std::int64_t kk = kostka(lambda, mu);
            if (kk == 0) continue;
            std::vector<int> key(mu);
            key.resize(d, 0);
            auto jt = work.find(key);
            std::int64_t cur = jt == work.end() ? 0 : jt->second;
            cur -= mult * kk;
            if (cur == 0) {
                if (jt != work.end()) work.erase(jt);
            } else {
                work[key] = cur;
            }
        }
    }
    return out;
}

SchurPoly char_to_schur_full(const std::map<std::vector<int>, std::int64_t>& weights, int d) {
    std::map<std::vector<int>, std::int64_t> dom;
    for (const auto& [w, m] : weights) {
        std::vector<int> s(w);
        std::sort(s.rbegin(), s.rend());
        auto it = weights.find(s);
        if (it == weights.end() || it->second != m)
            throw std::invalid_argument("char_to_schur: weights not permutation-symmetric");
        if (s == w && m != 0) dom[s] = m;
    }
    return char_to_schur(dom, d);
}

} // namespace hopfact
